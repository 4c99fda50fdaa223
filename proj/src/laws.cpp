#include "polymf/laws.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "polymf/errors.hpp"

namespace polymf::laws {

std::uint64_t case_seed(std::uint64_t seed, std::size_t case_index) {
    // splitmix64 of the pair
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(case_index) + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

ContextPtr side_context(const std::string& prefix, std::size_t variables) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= variables; ++i) names.push_back(prefix + std::to_string(i));
    return VariableContext::make(std::move(names));
}

namespace {

Monomial random_monomial(Rng& rng, std::size_t nvars, unsigned degree) {
    std::vector<std::uint32_t> e(nvars, 0);
    for (unsigned d = 0; d < degree; ++d) ++e[rng.below(nvars)];
    return Monomial(std::move(e));
}

Rational random_coefficient(Rng& rng) {
    long c = rng.range(1, 3);
    return Rational(rng.coin() ? c : -c);
}

RationalFunction small_entry(Rng& rng, const ContextPtr& ctx) {
    switch (rng.below(6)) {
        case 0:
        case 1: return RationalFunction(0L);
        case 2: return RationalFunction(1L);
        case 3: return RationalFunction(rng.coin() ? 2L : -1L);
        default: {
            Polynomial v = Polynomial::variable(ctx, rng.below(ctx->size()));
            return RationalFunction(rng.coin() ? v : -v);
        }
    }
}

MF3 arrange(Rng& rng, const MF2& x) {
    const RatMatrix id = RatMatrix::identity(x.size());
    switch (rng.below(7)) {
        case 0: return MF3::certify(x.p(), x.q(), id, x.target());
        case 1: return MF3::certify(id, x.p(), x.q(), x.target());
        case 2: return MF3::certify(x.p(), id, x.q(), x.target());
        case 3: return promote(x, Factor::First, LUMethod::Doolittle, true);
        case 4: return promote(x, Factor::Second, LUMethod::Doolittle, true);
        case 5: return promote(x, Factor::First, LUMethod::Crout, true);
        default: return promote(x, Factor::Second, LUMethod::Crout, true);
    }
}

Polynomial sum_of(const std::vector<TermSplit>& splits) {
    Polynomial f;
    for (const auto& s : splits) f += s.product();
    return f;
}

}  // namespace

Polynomial random_polynomial(Rng& rng, const ContextPtr& ctx, std::size_t max_terms, unsigned max_degree) {
    for (;;) {
        Polynomial p;
        const std::size_t terms = 1 + rng.below(max_terms);
        for (std::size_t t = 0; t < terms; ++t) {
            const auto deg = static_cast<unsigned>(rng.below(max_degree + 1));
            p += Polynomial::term(ctx, random_monomial(rng, ctx->size(), deg), random_coefficient(rng));
        }
        if (!p.is_zero()) return p.embed(ctx);
    }
}

std::vector<TermSplit> random_splits(Rng& rng, const ContextPtr& ctx, std::size_t summands) {
    for (;;) {
        std::vector<TermSplit> out;
        for (std::size_t k = 0; k < summands; ++k) {
            const auto ldeg = static_cast<unsigned>(1 + rng.below(2));
            Polynomial left = Polynomial::term(ctx, random_monomial(rng, ctx->size(), ldeg), random_coefficient(rng));
            Polynomial right = random_polynomial(rng, ctx, 2, 3 - ldeg);
            out.push_back({std::move(left), std::move(right)});
        }
        if (!sum_of(out).is_zero()) return out;
    }
}

MF3 random_mf3_of(Rng& rng, const std::vector<TermSplit>& splits, std::size_t size) {
    const Polynomial f = sum_of(splits);
    const ContextPtr ctx = f.context();
    if (size == 1) {
        MF2 x = splits.size() == 1 ? standard_method(f, splits)
                                   : MF2::certify(RatMatrix{{RationalFunction(f)}}, RatMatrix{{RationalFunction(1L)}}, f);
        return arrange(rng, x);
    }
    if (size == 2) {
        std::vector<TermSplit> two = splits;
        if (two.size() == 1) two.push_back({Polynomial(0L).embed(ctx), Polynomial(1L).embed(ctx)});
        if (two.size() > 2) {
            two.resize(1);
            two.front() = {f, Polynomial(1L).embed(ctx)};
            two.push_back({Polynomial(0L).embed(ctx), Polynomial(1L).embed(ctx)});
        }
        if (rng.coin()) std::swap(two[0], two[1]);
        return arrange(rng, standard_method(f, two));
    }
    MF3 big = random_mf3_of(rng, splits, 2);
    MF3 small = random_mf3_of(rng, splits, size - 2);
    return rng.coin() ? mf3_direct_sum(big, small) : mf3_direct_sum(small, big);
}

MF3 random_mf3(Rng& rng, const ContextPtr& ctx, std::size_t max_size) {
    const std::size_t size = 1 + rng.below(max_size);
    return random_mf3_of(rng, random_splits(rng, ctx, size == 1 ? 1 : 2), size);
}

RatMatrix random_invertible(Rng& rng, const ContextPtr& ctx, std::size_t n) {
    RatMatrix lower = RatMatrix::identity(n);
    RatMatrix upper = RatMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            lower(i, j) = small_entry(rng, ctx);
            upper(j, i) = small_entry(rng, ctx);
        }
    }
    return lower * upper;
}

Morphism3 random_morphism(Rng& rng, const MF3& source, bool allow_resize) {
    const std::size_t n = source.size();
    ContextPtr ctx = context_of(source);
    if (!ctx) ctx = side_context("t", 1);
    switch (rng.below(allow_resize ? 3 : 2)) {
        case 0: {
            const RatMatrix c = RatMatrix::scalar(n, RationalFunction(random_polynomial(rng, ctx, 2, 1)));
            return morphism_check(c, c, c, source, source);
        }
        case 1: {
            const RatMatrix a = random_invertible(rng, ctx, n);
            const RatMatrix b = random_invertible(rng, ctx, n);
            const RatMatrix d = random_invertible(rng, ctx, n);
            const MF3 target = MF3::certify(a * source.a1() * inverse(b), b * source.a2() * inverse(d),
                                            d * source.a3() * inverse(a), source.target());
            return morphism_check(a, b, d, source, target);
        }
        default: {
            const RatMatrix one = RatMatrix::identity(1);
            const RatMatrix f{{RationalFunction(source.target())}};
            const MF3 extra = rng.coin() ? MF3::certify(f, one, one, source.target())
                                         : MF3::certify(one, one, f, source.target());
            const MF3 target = mf3_direct_sum(source, extra);
            RatMatrix inclusion(n + 1, n);
            for (std::size_t i = 0; i < n; ++i) inclusion(i, i) = RationalFunction(1L);
            return morphism_check(inclusion, inclusion, inclusion, source, target);
        }
    }
}

// ------------------------------------------------------------------ runner

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "certificate",        "associativity",         "commutativity",    "distributivity",
        "bifunctor-identity", "bifunctor-composition", "morphism-closure",
    };
    return names;
}

namespace {

enum Suite : std::size_t {
    kCertificate,
    kAssociativity,
    kCommutativity,
    kDistributivity,
    kIdentity,
    kComposition,
    kClosure,
    kSuiteCount
};

struct Outcome {
    bool ok = true;
    std::string detail;
};

using CaseOutcome = std::vector<Outcome>;

template <class F>
void run_suite(CaseOutcome& out, Suite s, F&& body) {
    try {
        std::string why;
        if (!body(why)) {
            out[s].ok = false;
            out[s].detail = why.empty() ? "law violated" : why;
        }
    } catch (const std::exception& e) {
        out[s].ok = false;
        out[s].detail = std::string("exception: ") + e.what();
    }
}

bool same_components(const MF3& a, const MF3& b, std::string& why) {
    if (a.target() != b.target()) {
        why = "targets differ: " + a.target().to_string() + " vs " + b.target().to_string();
        return false;
    }
    for (int k = 1; k <= 3; ++k) {
        if (auto d = a.component(k).first_difference(b.component(k))) {
            why = "component " + std::to_string(k) + " differs at (" + std::to_string(d->first) + ", " +
                  std::to_string(d->second) + ")";
            return false;
        }
    }
    return true;
}

CaseOutcome run_case(std::uint64_t seed, std::size_t index, Fault fault) {
    CaseOutcome out(kSuiteCount);
    Rng rng(case_seed(seed, index));
    const ContextPtr cx = side_context("x", 1 + rng.below(3));
    const ContextPtr cy = side_context("y", 1 + rng.below(3));
    const ContextPtr cz = side_context("z", 1 + rng.below(3));

    std::optional<MF3> x, y, z;
    try {
        x = random_mf3(rng, cx, 3);
        y = random_mf3(rng, cy, 3);
        z = random_mf3(rng, cz, 2);
    } catch (const std::exception& e) {
        for (auto& o : out) o = {false, std::string("generator failed: ") + e.what()};
        return out;
    }

    run_suite(out, kCertificate, [&](std::string& why) {
        const MF3 t = mtp3(*x, *y);
        const Polynomial fg = x->target().embed(context_of(t)) * y->target().embed(context_of(t));
        if (t.target() != fg) {
            why = "target is " + t.target().to_string();
            return false;
        }
        if (t.size() != x->size() * y->size()) {
            why = "size " + std::to_string(t.size());
            return false;
        }
        const CertificateReport r = check_triple(t.a1(), t.a2(), t.a3(), fg);
        why = r.describe();
        return r.ok;
    });

    run_suite(out, kAssociativity, [&](std::string& why) {
        MF3 lhs = mtp3(mtp3(*x, *y), *z);
        const MF3 rhs = mtp3(*x, mtp3(*y, *z));
        if (fault == Fault::BreakAssociativity) {
            RatMatrix a1 = lhs.a1();
            a1(0, 0) += RationalFunction(1L);
            return a1 == rhs.a1() ? same_components(lhs, rhs, why) : (why = "component 1 differs at (0, 0)", false);
        }
        return same_components(lhs, rhs, why);
    });

    run_suite(out, kCommutativity, [&](std::string& why) {
        const MF3 xy = mtp3(*x, *y);
        const MF3 yx = mtp3(*y, *x).embed(context_of(xy));
        PermutationMatrix s = commutativity_witness(*x, *y);
        if (fault == Fault::WrongShuffle) s = perfect_shuffle(y->size(), x->size());
        if (yx.target() != xy.target()) {
            why = "targets differ";
            return false;
        }
        for (int k = 1; k <= 3; ++k) {
            if (auto d = yx.component(k).first_difference(s.conjugate(xy.component(k)))) {
                why = "component " + std::to_string(k) + " not S-conjugate at (" + std::to_string(d->first) + ", " +
                      std::to_string(d->second) + ")";
                return false;
            }
        }
        return true;
    });

    run_suite(out, kDistributivity, [&](std::string& why) {
        const auto splits = random_splits(rng, cx, 2);
        const MF3 x1 = random_mf3_of(rng, splits, 1 + rng.below(2));
        const MF3 x2 = random_mf3_of(rng, splits, 1 + rng.below(2));
        const MF3 w = random_mf3(rng, cy, 2);
        const MF3 sum = mf3_direct_sum(x1, x2);
        if (!same_components(mtp3(sum, w), mf3_direct_sum(mtp3(x1, w), mtp3(x2, w)), why)) {
            why = "left: " + why;
            return false;
        }
        // Right-hand side: exact after the explicit block-interleaving permutation.
        const MF3 lhs = mtp3(w, sum);
        const MF3 rhs = mf3_direct_sum(mtp3(w, x1), mtp3(w, x2));
        if (lhs.target() != rhs.target()) {
            why = "right: targets differ";
            return false;
        }
        const PermutationMatrix s = right_distributivity_witness(w.size(), x1.size(), x2.size());
        for (int k = 1; k <= 3; ++k) {
            if (auto d = rhs.component(k).first_difference(s.conjugate(lhs.component(k)))) {
                why = "right: component " + std::to_string(k) + " not S-conjugate at (" + std::to_string(d->first) +
                      ", " + std::to_string(d->second) + ")";
                return false;
            }
        }
        return true;
    });

    std::vector<Morphism3> produced;

    run_suite(out, kIdentity, [&](std::string& why) {
        const Morphism3 lhs = mtp3_morphism(identity_morphism(*x), identity_morphism(*y));
        produced.push_back(lhs);
        if (lhs != identity_morphism(mtp3(*x, *y))) {
            why = "identity maps do not tensor to the identity";
            return false;
        }
        return true;
    });

    run_suite(out, kComposition, [&](std::string& why) {
        const MF3 xs = random_mf3(rng, cx, 2);
        const MF3 ys = random_mf3(rng, cy, 2);
        const Morphism3 phi = random_morphism(rng, xs);
        const Morphism3 phi2 = random_morphism(rng, phi.target(), false);
        const Morphism3 psi = random_morphism(rng, ys, false);
        const Morphism3 psi2 = random_morphism(rng, psi.target(), phi.target().size() == xs.size());
        const Morphism3 lhs = mtp3_morphism(morphism_compose(phi2, phi), morphism_compose(psi2, psi));
        const Morphism3 first = mtp3_morphism(phi, psi);
        const Morphism3 second = mtp3_morphism(phi2, psi2);
        const Morphism3 rhs = morphism_compose(second, first);
        produced.push_back(lhs);
        produced.push_back(first);
        produced.push_back(second);
        if (lhs != rhs) {
            why = "F(g'g, h'h) differs from F(g', h') F(g, h)";
            return false;
        }
        return true;
    });

    run_suite(out, kClosure, [&](std::string& why) {
        produced.push_back(mtp3_morphism(random_morphism(rng, *z), random_morphism(rng, random_mf3(rng, cy, 2))));
        for (const auto& m : produced) {
            const MorphismReport r = check_morphism_equations(m.alpha(), m.beta(), m.delta(), m.source(), m.target());
            if (!r.ok) {
                why = r.message;
                return false;
            }
        }
        return true;
    });

    return out;
}

}  // namespace

bool LawReport::ok() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.failed == 0; });
}

std::string LawReport::to_text() const {
    std::ostringstream os;
    os << "laws: seed=" << seed << " cases=" << cases;
    if (only_case) os << " case=" << *only_case;
    os << '\n';
    for (const auto& s : suites) {
        std::string name = s.name;
        name.resize(std::max<std::size_t>(name.size(), 22), ' ');
        os << "  " << (s.failed == 0 ? "PASS" : "FAIL") << "  " << name << s.passed << '/' << (s.passed + s.failed);
        if (s.first_failure) {
            os << "  first failure: case " << *s.first_failure << ": " << s.detail
               << "  (reproduce: polymf3 laws --seed " << seed << " --cases " << cases << " --case "
               << *s.first_failure << ")";
        }
        os << '\n';
    }
    os << "result: " << (ok() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

LawReport run_laws(const LawOptions& options) {
    LawReport report;
    report.seed = options.seed;
    report.cases = options.cases;
    report.only_case = options.only_case;

    std::vector<std::size_t> indices;
    if (options.only_case) {
        indices.push_back(*options.only_case);
    } else {
        for (std::size_t i = 0; i < options.cases; ++i) indices.push_back(i);
    }

    std::vector<CaseOutcome> outcomes(indices.size());
    unsigned threads = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, indices.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < indices.size(); k = next++) {
            outcomes[k] = run_case(options.seed, indices[k], options.fault);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (std::size_t s = 0; s < kSuiteCount; ++s) {
        SuiteResult r;
        r.name = suite_names()[s];
        for (std::size_t k = 0; k < indices.size(); ++k) {
            if (outcomes[k][s].ok) {
                ++r.passed;
            } else {
                ++r.failed;
                if (!r.first_failure) {
                    r.first_failure = indices[k];
                    r.detail = outcomes[k][s].detail;
                }
            }
        }
        report.suites.push_back(std::move(r));
    }
    return report;
}

}  // namespace polymf::laws
