// Acceptance run: one PASS/FAIL line per criterion, exact equality throughout.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "polymf/category.hpp"
#include "polymf/cli.hpp"
#include "polymf/errors.hpp"
#include "polymf/laws.hpp"
#include "polymf/mf2.hpp"
#include "polymf/mf3.hpp"
#include "polymf/parse.hpp"
#include "polymf/serialize.hpp"

using namespace polymf;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

ContextPtr vars(std::vector<std::string> names) { return VariableContext::make(std::move(names)); }

Polynomial poly(const std::string& text, const ContextPtr& c) { return parse_polynomial(text, c); }

RatMatrix mat(const std::vector<std::vector<std::string>>& rows, const ContextPtr& c) {
    RatMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = parse_rational_function(rows[i][j], c);
    }
    return m;
}

// Schoolbook product, kept apart from the library's operator*.
RatMatrix product(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            RationalFunction s;
            for (std::size_t k = 0; k < a.cols(); ++k) s = s + a(i, k) * b(k, j);
            c(i, j) = s;
        }
    }
    return c;
}

std::string show(const RatMatrix& m) {
    std::string s = "[";
    for (const auto& row : m.to_strings()) {
        s += "[";
        for (std::size_t j = 0; j < row.size(); ++j) s += (j ? ", " : "") + row[j];
        s += "]";
    }
    return s + "]";
}

RatMatrix f_identity(std::size_t n, const Polynomial& f) { return RatMatrix::scalar(n, RationalFunction(f)); }

bool certified2(const MF2& x) { return product(x.p(), x.q()) == f_identity(x.size(), x.target()); }

bool two_sided(const MF2& x) { return product(x.q(), x.p()) == f_identity(x.size(), x.target()); }

bool certified3(const MF3& t) {
    return product(product(t.a1(), t.a2()), t.a3()) == f_identity(t.size(), t.target());
}

// MF2s built by the first two criteria, reused for two-sidedness.
std::vector<MF2>& produced() {
    static std::vector<MF2> all;
    return all;
}

Outcome ac1() {
    Outcome o;
    auto c = vars({"x", "y"});
    const Polynomial f = poly("x^3 + y^2", c);
    const MF2 x = mf2_from_pair(mat({{"x", "-y"}, {"y", "x^2"}}, c), mat({{"x^2", "y"}, {"-y", "x"}}, c), f);
    o.require(certified2(x), "P*Q is not (x^3 + y^2)*I2");
    produced().push_back(x);
    return o;
}

Outcome ac2() {
    Outcome o;
    auto c = vars({"x", "y", "z"});
    const Polynomial l = poly("x*y + (x^2 + y*z)*z", c);
    const MF2 two = standard_method(l, std::vector<TermSplit>{{poly("x", c), poly("y", c)},
                                                              {poly("x^2 + y*z", c), poly("z", c)}});
    o.require(two.size() == 2, "first example is not 2x2");
    o.require(certified2(two), "first example fails P*Q = f*I");

    const Polynomial h = poly("x*y + x^2*z + y*z^2", c);
    const MF2 four = standard_method(h, std::vector<TermSplit>{{poly("x", c), poly("y", c)},
                                                               {poly("x^2", c), poly("z", c)},
                                                               {poly("y", c), poly("z^2", c)}});
    o.require(four.size() == 4, "second example is not 4x4");
    o.require(certified2(four), "second example fails P*Q = f*I");
    produced().push_back(two);
    produced().push_back(four);
    return o;
}

Outcome ac3() {
    Outcome o;
    auto c = vars({"x", "y"});
    const Polynomial f = poly("x^2 + y^2", c);
    const LUResult r = lu_decompose(mat({{"x", "-y"}, {"y", "x"}}, c), LUMethod::Doolittle);
    o.require(r.lower == mat({{"1", "0"}, {"y/x", "1"}}, c), "L = " + show(r.lower));
    o.require(r.upper == mat({{"x", "-y"}, {"0", "x + y^2/x"}}, c), "U = " + show(r.upper));
    const MF2 x = mf2_from_pair(mat({{"x", "-y"}, {"y", "x"}}, c), mat({{"x", "y"}, {"-y", "x"}}, c), f);
    const MF3 t = promote(x, Factor::First, LUMethod::Doolittle);
    o.require(t.a1() == r.lower && t.a2() == r.upper && t.a3() == x.q(), "promoted triple is not (L, U, Q)");
    o.require(certified3(t), "A1*A2*A3 is not (x^2 + y^2)*I2");
    produced().push_back(x);
    return o;
}

Outcome ac4() {
    Outcome o;
    auto c = vars({"x", "y", "z"});
    const Polynomial g = poly("x*y*z + z*x^2", c);
    const RatMatrix p = mat({{"x*y", "-z"}, {"x^2", "z"}}, c);
    const LUResult r = lu_decompose(p, LUMethod::Doolittle);
    o.require(r.lower == mat({{"1", "0"}, {"x/y", "1"}}, c), "L = " + show(r.lower));
    o.require(r.upper == mat({{"x*y", "-z"}, {"0", "z + z*x/y"}}, c), "U = " + show(r.upper));
    const MF2 x = mf2_from_pair(p, mat({{"z", "z"}, {"-x^2", "x*y"}}, c), g);
    const MF3 t = promote(x, Factor::First, LUMethod::Doolittle);
    o.require(certified3(t), "A1*A2*A3 is not g*I2");
    produced().push_back(x);
    return o;
}

Outcome ac5() {
    Outcome o;
    auto cf = vars({"x", "y"});
    auto cg = vars({"x", "y", "z"});
    const Polynomial f = poly("x^2 + y^2", cf);
    const Polynomial g = poly("x*y*z + z*x^2", cg);
    const MF3 x = mf3_from_triplet(mat({{"1", "0"}, {"y/x", "1"}}, cf), mat({{"x", "-y"}, {"0", "x + y^2/x"}}, cf),
                                   mat({{"x", "y"}, {"-y", "x"}}, cf), f);
    const MF3 y = mf3_from_triplet(mat({{"1", "0"}, {"x/y", "1"}}, cg), mat({{"x*y", "-z"}, {"0", "z + z*x/y"}}, cg),
                                   mat({{"z", "z"}, {"-x^2", "x*y"}}, cg), g);
    const MF3 t = mtp3(x, y);
    o.require(t.a1() == mat({{"1", "0", "0", "0"}, {"x/y", "1", "0", "0"}, {"y/x", "0", "1", "0"}, {"1", "y/x", "x/y", "1"}}, cg),
              "first component differs");
    o.require(t.a2() == mat({{"x^2*y", "-x*z", "-x*y^2", "y*z"},
                             {"0", "x*z + z*x^2/y", "0", "-z*y - z*x"},
                             {"0", "0", "x^2*y + y^3", "-z*x - z*y^2/x"},
                             {"0", "0", "0", "x*z + z*x^2/y + y^2*z/x + z*y"}},
                            cg),
              "second component differs");
    o.require(t.a3() == mat({{"x*z", "x*z", "y*z", "y*z"},
                             {"-x^3", "x^2*y", "-x^2*y", "x*y^2"},
                             {"-y*z", "-y*z", "x*z", "x*z"},
                             {"y*x^2", "-x*y^2", "-x^3", "x^2*y"}},
                            cg),
              "third component differs");
    const Polynomial fg = f.embed(cg) * g;
    o.require(t.target() == fg, "target is " + t.target().to_string());
    o.require(product(product(t.a1(), t.a2()), t.a3()) == f_identity(4, fg), "product is not fg*I4");
    return o;
}

Outcome ac6() {
    Outcome o;
    laws::LawOptions opts;
    opts.seed = 20240601;
    opts.cases = 25;
    const laws::LawReport report = laws::run_laws(opts);
    for (const auto& s : report.suites) {
        o.require(s.failed == 0 && s.passed == opts.cases,
                  s.name + " " + std::to_string(s.passed) + "/" + std::to_string(s.passed + s.failed) +
                      (s.detail.empty() ? "" : ": " + s.detail));
    }
    o.require(report.suites.size() == laws::suite_names().size(), "missing suites");
    return o;
}

struct Gen {
    explicit Gen(std::uint64_t seed) : engine(seed) {}
    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine); }

    Polynomial polynomial(const ContextPtr& c, int terms, int degree) {
        Polynomial p = Polynomial(0L).embed(c);
        for (int t = 0; t < terms; ++t) {
            std::vector<std::uint32_t> e(c->size(), 0);
            const long d = integer(0, degree);
            for (long k = 0; k < d; ++k) ++e[static_cast<std::size_t>(integer(0, static_cast<long>(c->size()) - 1))];
            long a = integer(-3, 3);
            if (a == 0) a = 1;
            p += Polynomial::term(c, Monomial(e), Rational(a));
        }
        return p;
    }

    Polynomial nonzero(const ContextPtr& c, int terms, int degree) {
        for (;;) {
            Polynomial p = polynomial(c, terms, degree);
            if (!p.is_zero()) return p;
        }
    }

    RationalFunction entry(const ContextPtr& c) {
        if (integer(0, 3) == 0) return RationalFunction();
        return RationalFunction::make(polynomial(c, 2, 2), nonzero(c, 1, 1));
    }

    std::mt19937_64 engine;
};

bool nonsingular(const RatMatrix& a) {
    try {
        inverse(a);
        return true;
    } catch (const StructurallySingularError&) {
        return false;
    }
}

bool lu_holds(const RatMatrix& a, const LUResult& r) {
    if (!r.lower.is_lower_triangular() || !r.upper.is_upper_triangular()) return false;
    const bool unit = r.method == LUMethod::Doolittle ? r.lower.has_unit_diagonal() : r.upper.has_unit_diagonal();
    return unit && product(r.lower, r.upper) == r.permutation.apply_rows(a);
}

Outcome ac7() {
    Outcome o;
    auto c = vars({"x", "y", "z"});
    Gen gen(7);
    int tested = 0;
    while (tested < 30) {
        const std::size_t n = static_cast<std::size_t>(gen.integer(1, 4));
        RatMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) a(i, j) = gen.entry(c);
        }
        if (!nonsingular(a)) continue;
        ++tested;
        for (auto m : {LUMethod::Doolittle, LUMethod::Crout}) {
            const LUResult r = lu_decompose(a, m, true);
            o.require(lu_holds(a, r), "L*U != Pi*A for " + to_string(m) + " on " + show(a));
        }
    }

    // A zero leading principal minor of order 1 or 2.
    int zero_minor = 0;
    while (zero_minor < 10) {
        const std::size_t n = static_cast<std::size_t>(gen.integer(2, 4));
        RatMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) a(i, j) = gen.entry(c);
        }
        if (n == 2 || gen.integer(0, 1) == 0) {
            a(0, 0) = RationalFunction();
        } else {
            for (std::size_t j = 0; j < n; ++j) a(1, j) = a(0, j) * RationalFunction(gen.nonzero(c, 1, 1));
            a(1, n - 1) = a(1, n - 1) + RationalFunction(Polynomial(1L));  // leaves the order-2 minor at zero
        }
        if (!nonsingular(a)) continue;
        ++zero_minor;
        for (auto m : {LUMethod::Doolittle, LUMethod::Crout}) {
            bool threw = false;
            try {
                lu_decompose(a, m);
            } catch (const SingularPivotError&) {
                threw = true;
            }
            o.require(threw, "no zero pivot reported for " + show(a));
            const LUResult r = lu_decompose(a, m, true);
            o.require(r.pivoted && lu_holds(a, r), "pivoted " + to_string(m) + " failed on " + show(a));
        }
    }

    // Factorizations whose P has a zero corner: 0*r + a*b.
    for (int i = 0; i < 10; ++i) {
        const Polynomial r = gen.nonzero(c, 2, 1), a = gen.nonzero(c, 2, 1), b = gen.nonzero(c, 2, 1);
        const Polynomial zero = Polynomial(0L).embed(c);
        const MF2 x = standard_method(a * b, std::vector<TermSplit>{{zero, r}, {a, b}});
        bool threw = false;
        try {
            promote(x, Factor::First, LUMethod::Doolittle);
        } catch (const SingularPivotError&) {
            threw = true;
        }
        o.require(threw, "promotion without pivoting accepted a zero corner");
        for (auto w : {Factor::First, Factor::Second}) {
            for (auto m : {LUMethod::Doolittle, LUMethod::Crout}) {
                const MF3 t = promote(x, w, m, true);
                o.require(certified3(t), "pivoted promotion lost the certificate for " + (a * b).to_string());
            }
        }
    }
    return o;
}

Outcome ac8() {
    Outcome o;
    o.require(produced().size() >= 5, "earlier criteria did not produce their factorizations");
    for (const MF2& x : produced()) {
        if (x.target().is_zero()) continue;
        o.require(two_sided(x), "Q*P != f*I for f = " + x.target().to_string());
    }
    return o;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    return cli::run(args, out, err);
}

Outcome ac9() {
    Outcome o;
    const fs::path dir = fs::temp_directory_path() / ("polymf-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const auto file = [&](const std::string& name) { return (dir / name).string(); };

    struct Job {
        std::string name;
        std::vector<std::string> args;
    };
    const std::vector<Job> jobs = {
        {"a.json", {"factor2", "x*y + (x^2 + y*z)*z"}},
        {"b.json", {"factor2", "x*y + x^2*z + y*z^2"}},
        {"c.json", {"factor3", "x^2 + y^2", "--method", "doolittle"}},
        {"d.json", {"factor3", "x*y*z + z*x^2", "--method", "crout", "--which", "second"}},
        {"e.json", {"factor3", "x^3 + y^2", "--vars", "y,x"}},
        {"f.json", {"tensor3", file("c.json"), file("d.json")}},
    };
    for (const Job& job : jobs) {
        std::vector<std::string> args = job.args;
        args.insert(args.end(), {"--format", "json", "-o", file(job.name)});
        if (cli(args) != 0) {
            o.require(false, "CLI failed to write " + job.name);
            continue;
        }
        const std::string first = slurp(file(job.name));
        o.require(cli({"verify", file(job.name)}) == 0, job.name + " does not re-verify");

        const Json j = read_json_file(file(job.name));
        const std::string again =
            detect_kind(j) == ArtifactKind::MF2 ? dump_json(mf2_to_json(mf2_from_json(j))) : dump_json(mf3_to_json(mf3_from_json(j)));
        o.require(again == first, job.name + " changes after a read/write cycle");

        write_text_file(file("copy-" + job.name), again);
        o.require(cli({"verify", file("copy-" + job.name)}) == 0, "copy of " + job.name + " does not re-verify");

        args.back() = file("rerun-" + job.name);
        o.require(cli(args) == 0 && slurp(file("rerun-" + job.name)) == first, job.name + " is not reproducible");
    }
    fs::remove_all(dir);
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* what;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"AC1", "pair factorization of x^3 + y^2", ac1},
        {"AC2", "standard method, 2x2 and 4x4 certificates", ac2},
        {"AC3", "Doolittle LU of [[x,-y],[y,x]] and promotion", ac3},
        {"AC4", "Doolittle LU for g = xyz + zx^2 and promotion", ac4},
        {"AC5", "tensor product triple, entry for entry, = fg*I4", ac5},
        {"AC6", "law suites, 25 cases each, fixed seed", ac6},
        {"AC7", "LU property suite and zero pivots", ac7},
        {"AC8", "Q*P = f*I for every pair above", ac8},
        {"AC9", "CLI artifacts re-verify and round-trip byte for byte", ac9},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::cout << c.id << ' ' << (o.ok ? "PASS" : "FAIL") << "  " << c.what;
        if (!o.ok) std::cout << "  (" << o.detail << ")";
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        std::cout << "  [" << ms.count() << " ms]\n";
        if (!o.ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
