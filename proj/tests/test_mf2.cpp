#include <doctest.h>

#include "polymf/errors.hpp"
#include "polymf/mf2.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("certified pairs") {
    auto c = vars({"x", "y"});
    const Polynomial f = poly("x^3 + y^2", c);
    const MF2 x = mf2_from_pair(mat({{"x", "-y"}, {"y", "x^2"}}, c), mat({{"x^2", "y"}, {"-y", "x"}}, c), f);
    CHECK(x.size() == 2);
    CHECK(x.q() * x.p() == scalar_identity(2, f));
    CHECK(mf2_from_pair(mat({{"x^3 + y^2"}}, c), mat({{"1"}}, c), f).size() == 1);
    try {
        mf2_from_pair(mat({{"x", "0"}, {"0", "x"}}, c), mat({{"y", "0"}, {"0", "y"}}, c), poly("x", c));
        FAIL("expected a certificate failure");
    } catch (const CertificateError& e) {
        CHECK(e.row() == 0);
        CHECK(e.col() == 0);
    }
    CHECK_THROWS_AS(mf2_from_pair(mat({{"x"}}, c), RatMatrix::identity(2), poly("x", c)), DimensionError);
}

TEST_CASE("block sum of two factorizations") {
    auto c = vars({"x", "y", "z"});
    const MF2 a = mf2_from_pair(mat({{"x"}}, c), mat({{"y"}}, c), poly("x*y", c));
    const MF2 b = mf2_from_pair(mat({{"x^2 + y*z"}}, c), mat({{"z"}}, c), poly("x^2*z + y*z^2", c));
    const MF2 s = yoshino_add(a, b);
    const Polynomial l = poly("x*y + (x^2 + y*z)*z", c);
    CHECK(s.target() == l);
    CHECK(s.p() * s.q() == scalar_identity(2, l));
    CHECK(s.p() == mat({{"x", "-(x^2 + y*z)"}, {"z", "y"}}, c));
    CHECK(s.q() == mat({{"y", "x^2 + y*z"}, {"-z", "x"}}, c));

    const MF2 zero = mf2_from_pair(mat({{"0"}}, c), mat({{"1"}}, c), Polynomial(0L).embed(c));
    const MF2 xy = yoshino_add(a, zero);
    CHECK(xy.target() == poly("x*y", c));
    CHECK(xy.size() == 2);
}

TEST_CASE("block sum of random scalar factorizations") {
    auto c = vars({"x", "y", "z"});
    Random rng(53);
    for (int i = 0; i < 20; ++i) {
        const Polynomial a = rng.nonzero_polynomial(c, 2, 2), b = rng.nonzero_polynomial(c, 2, 2);
        const Polynomial d = rng.nonzero_polynomial(c, 2, 2), e = rng.nonzero_polynomial(c, 2, 2);
        const MF2 s = yoshino_add(mf2_from_pair(RatMatrix{{RationalFunction(a)}}, RatMatrix{{RationalFunction(b)}}, a * b),
                                  mf2_from_pair(RatMatrix{{RationalFunction(d)}}, RatMatrix{{RationalFunction(e)}}, d * e));
        CHECK(naive_product(s.p(), s.q()) == scalar_identity(2, a * b + d * e));
        CHECK(naive_product(s.q(), s.p()) == scalar_identity(2, a * b + d * e));
    }
}

TEST_CASE("standard method") {
    auto c = vars({"x", "y", "z"});
    const Polynomial h = poly("x*y + x^2*z + y*z^2", c);
    const MF2 x4 = standard_method(h);
    CHECK(x4.size() == 4);
    CHECK(naive_product(x4.p(), x4.q()) == scalar_identity(4, h));
    CHECK(naive_product(x4.q(), x4.p()) == scalar_identity(4, h));

    // With the splits x*y, x^2*z, y*z^2 taken as written.
    const MF2 y4 = standard_method(h, std::vector<TermSplit>{{poly("x", c), poly("y", c)},
                                                             {poly("x^2", c), poly("z", c)},
                                                             {poly("y", c), poly("z^2", c)}});
    CHECK(y4.p() == mat({{"x", "-x^2", "-y", "0"},
                         {"z", "y", "0", "-y"},
                         {"z^2", "0", "y", "x^2"},
                         {"0", "z^2", "-z", "x"}},
                        c));
    CHECK(y4.q() == mat({{"y", "x^2", "y", "0"},
                         {"-z", "x", "0", "y"},
                         {"-z^2", "0", "x", "-x^2"},
                         {"0", "-z^2", "z", "y"}},
                        c));

    auto xy = vars({"x", "y"});
    const Polynomial g = poly("x^3 + y^2", xy);
    const MF2 x2 = standard_method(g, std::vector<TermSplit>{{poly("x", xy), poly("x^2", xy)},
                                                             {poly("y", xy), poly("y", xy)}});
    CHECK(x2.p() * x2.q() == scalar_identity(2, g));

    const MF2 one = standard_method(poly("x^2*y", xy));
    CHECK(one.p() == mat({{"x^2"}}, xy));
    CHECK(one.q() == mat({{"y"}}, xy));

    CHECK_THROWS_AS(standard_method(g, std::vector<TermSplit>{{poly("x", xy), poly("x", xy)}}), TargetMismatchError);
}

TEST_CASE("default split") {
    auto c = vars({"x", "y", "z"});
    auto check = [&](const char* term, const char* left, const char* right) {
        const TermSplit s = default_split(poly(term, c));
        CHECK(s.left == poly(left, c));
        CHECK(s.right == poly(right, c));
    };
    check("x*y", "x", "y");
    check("-3*x^2*z", "-3*x^2", "z");
    check("y*z^2", "y", "z^2");
    check("x^3", "x", "x^2");
    check("2*y", "2*y", "1");
    check("5", "5", "1");
}

TEST_CASE("splits read from the written expression") {
    auto c = vars({"x", "y", "z"});
    auto splits = splits_from_expression("x*y + (x^2+y*z)*z", c);
    REQUIRE(splits.size() == 2);
    CHECK(splits[0].left == poly("x", c));
    CHECK(splits[0].right == poly("y", c));
    CHECK(splits[1].left == poly("x^2 + y*z", c));
    CHECK(splits[1].right == poly("z", c));

    splits = splits_from_expression("x*y*z + z*x^2", c);
    REQUIRE(splits.size() == 2);
    CHECK(splits[0].left == poly("x*y", c));
    CHECK(splits[0].right == poly("z", c));
    CHECK(splits[1].left == poly("z", c));
    CHECK(splits[1].right == poly("x^2", c));

    splits = splits_from_expression("x^2 - y^2 + 3", c);
    REQUIRE(splits.size() == 3);
    CHECK(splits[1].left == poly("-y", c));
    CHECK(splits[1].right == poly("y", c));
    CHECK(splits[2].left == poly("3", c));
    CHECK(splits[2].right == poly("1", c));
}
