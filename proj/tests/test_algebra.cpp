#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrc/brieskorn.hpp"
#include "lrc/module.hpp"
#include "lrc/poly.hpp"
#include "test_util.hpp"

using namespace lrc;
using lrctest::P;

TEST_CASE("normal form in the quotient ring") {
    RingPtr A32 = brieskorn_ring(3, 2);
    CHECK(A32->nf(P(A32, "x^3 + y^2 + z^2")).is_zero());
    CHECK(A32->nf(P(A32, "x")) == P(A32, "x"));

    RingPtr A22 = brieskorn_ring(2, 2);
    // z^2 = -x^2 - y^2, so z^3 reduces by one long-division step
    CHECK(A22->nf(P(A22, "z^3")) == P(A22, "-x^2*z - y^2*z"));

    // divmod reassembles the input
    Polynomial p = P(A22, "z^5 + x*z^2 + y");
    auto [q, r] = A22->divmod(p);
    CHECK(q * A22->relation_poly() + r == p);
    CHECK(A22->nf(r) == r);
}

TEST_CASE("normal form is the identity without a relation") {
    RingPtr B = Ring::free_ring({"x", "y"}, {1, 1});
    Polynomial p = P(B, "x^5 - 2*y^3 + 1/2");
    CHECK(B->nf(p) == p);
}

TEST_CASE("variable-count mismatch is rejected") {
    RingPtr B = Ring::free_ring({"x", "y"}, {1, 1});
    RingPtr C = Ring::free_ring({"x", "y", "z"}, {1, 1, 1});
    CHECK_THROWS_AS(B->nf(P(C, "z")), std::invalid_argument);
}

TEST_CASE("partial derivatives") {
    RingPtr B = Ring::free_ring({"x", "y"}, {1, 1});
    CHECK(P(B, "x^3").diff("x") == P(B, "3*x^2"));
    CHECK(P(B, "1").diff("x").is_zero());
    RingPtr A = brieskorn_ring(4, 3);
    CHECK(P(A, "x^4 + y^3 + z^2").diff("z") == P(A, "2*z"));
    CHECK_THROWS_AS(P(B, "x").diff("w"), std::invalid_argument);
}

TEST_CASE("weighted degree") {
    // weights (2n, 2m, mn) make x^m + y^n + z^2 homogeneous of degree 2mn
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            RingPtr A = brieskorn_ring(m, n);
            WeightedDegree wd = A->relation_poly().weighted_degree();
            REQUIRE(wd.is_homogeneous());
            CHECK(wd.value == 2 * static_cast<Degree>(m) * n);
        }

    RingPtr B = Ring::free_ring({"x", "y"}, {1, 2});
    CHECK(P(B, "x + y").weighted_degree().kind == WeightedDegree::Kind::inhomogeneous);
    CHECK(P(B, "0").weighted_degree().is_bottom());
    CHECK(Polynomial::zero(B).weighted_degree().is_bottom());
}

TEST_CASE("graded slice bases") {
    SUBCASE("free rank-2 module, degree 0") {
        RingPtr B = Ring::free_ring({"x", "y"}, {1, 1});
        Module E = Module::free_module(B, {0, 0});
        auto basis = E.slice_basis(0);
        REQUIRE(basis.size() == 2);
        CHECK(basis[0] == E.unit_element(0));
        CHECK(basis[1] == E.unit_element(1));
    }
    SUBCASE("ring slice of A at m=n=2") {
        RingPtr A = brieskorn_ring(2, 2);  // weights (4,4,4)
        Module R = Module::free_module(A, {0});
        CHECK(R.slice_dim(4) == 3);  // x, y, z
        auto basis = R.slice_basis(4);
        REQUIRE(basis.size() == 3);
        CHECK(basis[0][0] == P(A, "x"));
        CHECK(basis[1][0] == P(A, "y"));
        CHECK(basis[2][0] == P(A, "z"));
    }
    SUBCASE("shifted ideal (x^2 - y^3) in weights (3,2)") {
        RingPtr B = Ring::free_ring({"x", "y"}, {3, 2});
        Module I = Module::free_module(B, {0}, 6);
        CHECK(I.slice_dim(6) == 1);
        CHECK(I.slice_dim(5) == 0);
        CHECK(I.slice_dim(8) == 1);  // f * y
    }
}

TEST_CASE("slice dimensions match the closed-form monomial count") {
    RingPtr A = brieskorn_ring(2, 3);  // weights (6,4,6), z-exponent < 2
    Module R = Module::free_module(A, {0});
    for (Degree d = 0; d <= 40; ++d) {
        int count = 0;
        for (int a = 0; 6 * a <= d; ++a)
            for (int b = 0; 6 * a + 4 * b <= d; ++b)
                for (int c = 0; c <= 1; ++c)
                    if (6 * a + 4 * b + 6 * c == d) ++count;
        CHECK(R.slice_dim(d) == count);
    }
}

TEST_CASE("slice basis is deterministic") {
    RingPtr A = brieskorn_ring(3, 2);
    Module R = Module::free_module(A, {0});
    auto b1 = R.slice_basis(12);
    Module R2 = Module::free_module(A, {0});
    auto b2 = R2.slice_basis(12);
    REQUIRE(b1.size() == b2.size());
    for (std::size_t i = 0; i < b1.size(); ++i) CHECK(b1[i] == b2[i]);
}

TEST_CASE("nf is idempotent and a ring map (randomized)") {
    RingPtr A = brieskorn_ring(2, 2);
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial p = lrctest::random_poly(A, rng);
        Polynomial q = lrctest::random_poly(A, rng);
        Polynomial np = A->nf(p);
        CHECK(A->nf(np) == np);
        CHECK(A->nf(p + q) == A->nf(p) + A->nf(q));
        CHECK(A->nf(p * q) == A->nf(A->nf(p) * A->nf(q)));
    }
}

TEST_CASE("diff satisfies the Leibniz rule (randomized)") {
    RingPtr B = Ring::free_ring({"x", "y", "z"}, {1, 1, 1});
    std::mt19937 rng(777);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial p = lrctest::random_poly(B, rng);
        Polynomial q = lrctest::random_poly(B, rng);
        for (int v = 0; v < 3; ++v)
            CHECK((p * q).diff(v) == p.diff(v) * q + p * q.diff(v));
    }
}

TEST_CASE("weighted degree is additive on homogeneous products") {
    RingPtr B = Ring::free_ring({"x", "y"}, {3, 2});
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial p = lrctest::random_homogeneous(B, rng, 6 + (trial % 5));
        Polynomial q = lrctest::random_homogeneous(B, rng, 4 + (trial % 7));
        if (p.is_zero() || q.is_zero()) continue;
        WeightedDegree wd = (p * q).weighted_degree();
        REQUIRE(wd.is_homogeneous());
        CHECK(wd.value == p.weighted_degree().value + q.weighted_degree().value);
    }
}

TEST_CASE("polynomial parsing and printing round-trip") {
    RingPtr B = Ring::free_ring({"x", "y"}, {1, 1});
    for (const char* text : {"x^2 - 1/2*x*y + 3", "0", "-x", "x*y", "2/3", "x^10 - y^10"}) {
        Polynomial p = P(B, text);
        CHECK(P(B, p.str()) == p);
    }
    // printed form uses the same grammar
    CHECK(P(B, "x^2 - 1/2*x*y + 3").str() == "x^2 - 1/2*x*y + 3");
    CHECK(P(B, "(x + y)*(x - y)").str() == "x^2 - y^2");
}

TEST_CASE("parse errors carry positions") {
    RingPtr B = Ring::free_ring({"x", "y"}, {1, 1});
    try {
        P(B, "x + w");
        FAIL("expected parse error");
    } catch (const parse_error& e) {
        CHECK(e.pos.line == 1);
        CHECK(e.pos.col == 5);
    }
    CHECK_THROWS_AS(P(B, "x ^ -2"), parse_error);
    CHECK_THROWS_AS(P(B, "x +"), parse_error);
    CHECK_THROWS_AS(P(B, "x^m"), parse_error);  // no parameters bound
}

TEST_CASE("parameter substitution in coefficients and exponents") {
    RingPtr B = Ring::free_ring({"x", "y"}, {1, 1});
    ParamEnv env{{"m", 3}, {"n", 2}};
    CHECK(parse_polynomial("x^m + y^n", B, &env) == P(B, "x^3 + y^2"));
    CHECK(parse_polynomial("m*n*x^(m-1)", B, &env) == P(B, "6*x^2"));
    CHECK_THROWS_AS(parse_polynomial("x^(m-5)", B, &env), parse_error);
}

TEST_CASE("quotient ring construction rejects bad relations") {
    RingPtr base = Ring::free_ring({"x", "y", "z"}, {1, 1, 1});
    // inhomogeneous relation
    CHECK_THROWS_AS(Ring::quotient(base, P(base, "x^2 + y"), "x", 2), std::invalid_argument);
    // reduction monomial absent
    CHECK_THROWS_AS(Ring::quotient(base, P(base, "x^2 + y^2"), "z", 2), std::invalid_argument);
    // non-pure-power reduction monomial (x^2*y present, not x^3)
    CHECK_THROWS_AS(Ring::quotient(base, P(base, "x^2*y + y^3"), "x", 3), std::invalid_argument);
}
