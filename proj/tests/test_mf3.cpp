#include <doctest.h>

#include "polymf/errors.hpp"
#include "polymf/mf3.hpp"
#include "support.hpp"

using namespace testing;

namespace {

RatMatrix random_nonsingular(Random& rng, const ContextPtr& c, std::size_t n) {
    for (;;) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (rng.integer(0, 3) == 0) continue;
                m(i, j) = RationalFunction::make(rng.polynomial(c, 2, 2), rng.nonzero_polynomial(c, 1, 1));
            }
        }
        try {
            inverse(m);
            return m;
        } catch (const StructurallySingularError&) {
        }
    }
}

void check_lu(const RatMatrix& a, const LUResult& r) {
    CHECK(r.lower.is_lower_triangular());
    CHECK(r.upper.is_upper_triangular());
    if (r.method == LUMethod::Doolittle) {
        CHECK(r.lower.has_unit_diagonal());
    } else {
        CHECK(r.upper.has_unit_diagonal());
    }
    CHECK(naive_product(r.lower, r.upper) == r.permutation.apply_rows(a));
    CHECK(r.pivoted == !r.permutation.is_identity());
}

}  // namespace

TEST_CASE("Doolittle on the worked examples") {
    auto c = vars({"x", "y", "z"});
    const LUResult r = lu_decompose(mat({{"x", "-y"}, {"y", "x"}}, c), LUMethod::Doolittle);
    CHECK(r.lower == mat({{"1", "0"}, {"y/x", "1"}}, c));
    CHECK(r.upper == mat({{"x", "-y"}, {"0", "x + y^2/x"}}, c));
    CHECK_FALSE(r.pivoted);

    const LUResult g = lu_decompose(mat({{"x*y", "-z"}, {"x^2", "z"}}, c), LUMethod::Doolittle);
    CHECK(g.lower == mat({{"1", "0"}, {"x/y", "1"}}, c));
    CHECK(g.upper == mat({{"x*y", "-z"}, {"0", "z + z*x/y"}}, c));
}

TEST_CASE("identity input") {
    for (auto m : {LUMethod::Doolittle, LUMethod::Crout}) {
        const LUResult r = lu_decompose(RatMatrix::identity(3), m);
        CHECK(r.lower == RatMatrix::identity(3));
        CHECK(r.upper == RatMatrix::identity(3));
    }
}

TEST_CASE("Crout is Doolittle of the transpose, transposed") {
    auto c = vars({"x", "y"});
    Random rng(59);
    for (int i = 0; i < 15; ++i) {
        const RatMatrix a = random_nonsingular(rng, c, 3);
        std::optional<LUResult> d, cr;
        try {
            d = lu_decompose(a.transpose(), LUMethod::Doolittle);
            cr = lu_decompose(a, LUMethod::Crout);
        } catch (const SingularPivotError&) {
            continue;
        }
        CHECK(cr->lower == d->upper.transpose());
        CHECK(cr->upper == d->lower.transpose());
    }
}

TEST_CASE("random nonsingular matrices decompose exactly") {
    auto c = vars({"x", "y", "z"});
    Random rng(61);
    for (int i = 0; i < 30; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.integer(0, 3));
        const RatMatrix a = random_nonsingular(rng, c, n);
        for (auto m : {LUMethod::Doolittle, LUMethod::Crout}) check_lu(a, lu_decompose(a, m, true));
    }
}

TEST_CASE("zero pivots") {
    auto c = vars({"x", "y"});
    const RatMatrix a = mat({{"0", "x"}, {"y", "1"}}, c);
    try {
        lu_decompose(a, LUMethod::Doolittle);
        FAIL("expected a zero pivot");
    } catch (const SingularPivotError& e) {
        CHECK(e.order() == 1);
    }
    const RatMatrix b = mat({{"x", "y", "1"}, {"x", "y", "2"}, {"1", "0", "x"}}, c);
    try {
        lu_decompose(b, LUMethod::Crout);
        FAIL("expected a zero pivot");
    } catch (const SingularPivotError& e) {
        CHECK(e.order() == 2);
    }
    for (auto m : {LUMethod::Doolittle, LUMethod::Crout}) {
        const LUResult r = lu_decompose(a, m, true);
        CHECK(r.pivoted);
        check_lu(a, r);
        check_lu(b, lu_decompose(b, m, true));
    }
    CHECK_THROWS_AS(lu_decompose(mat({{"0", "x"}, {"0", "y"}}, c), LUMethod::Doolittle, true),
                    StructurallySingularError);
}

TEST_CASE("promotion") {
    auto c = vars({"x", "y"});
    const Polynomial f = poly("x^2 + y^2", c);
    const MF2 x = mf2_from_pair(mat({{"x", "-y"}, {"y", "x"}}, c), mat({{"x", "y"}, {"-y", "x"}}, c), f);
    const MF3 t = promote(x, Factor::First, LUMethod::Doolittle);
    CHECK(t.a1() == mat({{"1", "0"}, {"y/x", "1"}}, c));
    CHECK(t.a2() == mat({{"x", "-y"}, {"0", "x + y^2/x"}}, c));
    CHECK(t.a3() == mat({{"x", "y"}, {"-y", "x"}}, c));
    REQUIRE(t.provenance().has_value());
    CHECK(t.provenance()->method == LUMethod::Doolittle);
    CHECK(t.provenance()->decomposed == Factor::First);
    CHECK_FALSE(t.provenance()->pivoted);

    for (auto w : {Factor::First, Factor::Second}) {
        for (auto m : {LUMethod::Doolittle, LUMethod::Crout}) {
            const MF3 p = promote(x, w, m);
            CHECK(naive_product(naive_product(p.a1(), p.a2()), p.a3()) == scalar_identity(2, f));
        }
    }

    const MF3 trivial = promote(mf2_from_pair(mat({{"x^2 + y^2"}}, c), mat({{"1"}}, c), f));
    CHECK(trivial.a1() == mat({{"1"}}, c));
    CHECK(trivial.a2() == mat({{"x^2 + y^2"}}, c));
    CHECK(trivial.a3() == mat({{"1"}}, c));
}

TEST_CASE("promotion with a zero pivot keeps the certificate") {
    auto c = vars({"x", "y"});
    const Polynomial f = poly("x*y", c);
    const MF2 x = mf2_from_pair(mat({{"0", "x"}, {"y", "0"}}, c), mat({{"0", "x"}, {"y", "0"}}, c), f);
    CHECK_THROWS_AS(promote(x, Factor::First, LUMethod::Doolittle), SingularPivotError);
    for (auto w : {Factor::First, Factor::Second}) {
        for (auto m : {LUMethod::Doolittle, LUMethod::Crout}) {
            const MF3 t = promote(x, w, m, true);
            CHECK(t.provenance()->pivoted);
            CHECK(naive_product(naive_product(t.a1(), t.a2()), t.a3()) == scalar_identity(2, f));
        }
    }
}

TEST_CASE("certified triples") {
    auto c = vars({"x", "y", "z"});
    const Polynomial f = poly("x^2 + y^2", c);
    CHECK(mf3_from_triplet(RatMatrix::identity(3), RatMatrix::identity(3), scalar_identity(3, f), f).size() == 3);
    CHECK(mf3_from_triplet(mat({{"x"}}, c), mat({{"y"}}, c), mat({{"z"}}, c), poly("x*y*z", c)).size() == 1);
    CHECK_THROWS_AS(mf3_from_triplet(mat({{"x"}}, c), mat({{"y"}}, c), mat({{"z"}}, c), poly("x*y", c)),
                    CertificateError);
    CHECK_THROWS_AS(mf3_from_triplet(mat({{"x"}}, c), RatMatrix::identity(2), mat({{"z"}}, c), poly("x*z", c)),
                    DimensionError);
}

TEST_CASE("direct sum of triples") {
    auto c = vars({"x", "y"});
    const Polynomial f = poly("x^2 + y^2", c);
    const MF3 t = promote(standard_method(f), Factor::First, LUMethod::Doolittle);
    const MF3 tt = mf3_direct_sum(t, t);
    CHECK(tt.size() == 4);
    CHECK(naive_product(naive_product(tt.a1(), tt.a2()), tt.a3()) == scalar_identity(4, f));

    const MF3 one = mf3_from_triplet(mat({{"1"}}, c), mat({{"1"}}, c), mat({{"x^2 + y^2"}}, c), f);
    const MF3 mixed = mf3_direct_sum(one, t);
    CHECK(mixed.size() == 3);
    CHECK(naive_product(naive_product(mixed.a1(), mixed.a2()), mixed.a3()) == scalar_identity(3, f));

    const MF3 ii = mf3_direct_sum(one, one);
    CHECK(ii.a1() == RatMatrix::identity(2));
    CHECK(ii.a3() == scalar_identity(2, f));

    const MF3 other = mf3_from_triplet(mat({{"x"}}, c), mat({{"1"}}, c), mat({{"1"}}, c), poly("x", c));
    CHECK_THROWS_AS(mf3_direct_sum(one, other), TargetMismatchError);
}
