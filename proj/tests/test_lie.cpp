#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrc/brieskorn.hpp"
#include "lrc/lie.hpp"
#include "test_util.hpp"

using namespace lrc;
using lrctest::P;

TEST_CASE("derivations validate relation preservation") {
    RingPtr A = brieskorn_ring(2, 2);
    // d/dx alone does not preserve (x^2 + y^2 + z^2)
    CHECK_THROWS_AS(Derivation(A, {P(A, "1"), P(A, "0"), P(A, "0")}), std::invalid_argument);
    // the Euler derivation does
    CHECK_NOTHROW(Derivation(A, {P(A, "4*x"), P(A, "4*y"), P(A, "4*z")}));
}

TEST_CASE("apply_derivation") {
    for (int m = 2; m <= 4; ++m)
        for (int n = 2; n <= 3; ++n) {
            auto gens = der_generators(m, n);
            RingPtr A = gens[0].ring();
            // delta_0(x) = 2n x
            CHECK(gens[0](P(A, "x")) == P(A, std::to_string(2 * n) + "*x"));
            // delta_0(f) = 2mn f reduces to zero in the quotient
            CHECK(gens[0](A->relation_poly()).is_zero());
        }
    RingPtr B = Ring::free_ring({"x", "y"}, {1, 1});
    CHECK(partial(B, 0)(P(B, "1")).is_zero());
    RingPtr C = Ring::free_ring({"u"}, {1});
    CHECK_THROWS_AS(partial(B, 0)(P(C, "u")), std::invalid_argument);
}

TEST_CASE("brackets: coordinate fields commute, antisymmetry, cusp relation") {
    RingPtr B = Ring::free_ring({"x", "y"}, {1, 1});
    Derivation dx = partial(B, 0), dy = partial(B, 1);
    CHECK(dx.bracket(dy).is_zero());

    // cusp: [E, T] = (mn - m - n) T, checked against a composition oracle
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 4}}) {
        RingPtr R = Ring::free_ring({"x", "y"}, {n, m});
        Derivation E(R, {P(R, std::to_string(n) + "*x"), P(R, std::to_string(m) + "*y")});
        Derivation T(R, {P(R, std::to_string(n) + "*y^" + std::to_string(n - 1)),
                         P(R, std::to_string(m) + "*x^" + std::to_string(m - 1))});
        Derivation br = E.bracket(T);
        Derivation want = T.scaled(rat(m * n - m - n));
        CHECK(br == want);
        // composition oracle on sample inputs
        std::mt19937 rng(42);
        for (int trial = 0; trial < 20; ++trial) {
            Polynomial p = lrctest::random_poly(R, rng);
            CHECK(E(T(p)) - T(E(p)) == want(p));
        }
        // antisymmetry
        CHECK(T.bracket(E) == br.scaled(rat(-1)));
    }

    auto gens = der_generators(3, 2);
    CHECK(gens[0].bracket(gens[0]).is_zero());
}

TEST_CASE("bracket antisymmetry on randomized derivation pairs") {
    RingPtr B = Ring::free_ring({"x", "y"}, {1, 1});
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        Derivation a(B, {lrctest::random_poly(B, rng), lrctest::random_poly(B, rng)});
        Derivation b(B, {lrctest::random_poly(B, rng), lrctest::random_poly(B, rng)});
        CHECK(a.bracket(b) == b.bracket(a).scaled(rat(-1)));
    }
}

TEST_CASE("Jacobi identity on the generator family") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}}) {
        auto g = der_generators(m, n);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k) {
                    Derivation s = g[i].bracket(g[j].bracket(g[k])) +
                                   g[j].bracket(g[k].bracket(g[i])) +
                                   g[k].bracket(g[i].bracket(g[j]));
                    CHECK(s.is_zero());
                }
    }
}

TEST_CASE("bracket is a module pairing through the anchor") {
    // [delta, a eta] = a [delta, eta] + delta(a) eta
    RingPtr B = Ring::free_ring({"x", "y"}, {1, 1});
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 25; ++trial) {
        Derivation d(B, {lrctest::random_poly(B, rng), lrctest::random_poly(B, rng)});
        Derivation e(B, {lrctest::random_poly(B, rng), lrctest::random_poly(B, rng)});
        Polynomial a = lrctest::random_poly(B, rng);
        Derivation lhs = d.bracket(e.scaled(a));
        Derivation rhs = d.bracket(e).scaled(a) + e.scaled(d(a));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("derivation operator degrees") {
    auto g = der_generators(3, 2);  // weights (4, 6, 6)
    CHECK(g[0].degree() == WeightedDegree::of(0));
    CHECK(g[1].degree() == WeightedDegree::of(2 * 3 * 2 - 2 * 3 - 2 * 2));
    CHECK(g[2].degree() == WeightedDegree::of(3 * 2 - 2 * 2));
    CHECK(g[3].degree() == WeightedDegree::of(3 * 2 - 2 * 3));
    RingPtr B = Ring::free_ring({"x", "y"}, {1, 1});
    Derivation mixed(B, {P(B, "x^2 + 1"), P(B, "0")});
    CHECK(mixed.degree().kind == WeightedDegree::Kind::inhomogeneous);
}

TEST_CASE("express_in_generators") {
    SUBCASE("a generator expresses as itself") {
        auto g = der_generators(2, 2);
        LieAlgebra L(g[0].ring(), {g[0]});
        auto expr = express_in_generators(g[0], L, 10);
        REQUIRE(expr.has_value());
        CHECK((*expr)[0] == P(g[0].ring(), "1"));
    }
    SUBCASE("cusp bracket expresses in the tangent generator") {
        CuspSetup c = cusp_setup(2, 3);
        LieAlgebra Ldd(c.ring, {c.tangent});
        Derivation br = c.euler.bracket(c.tangent);
        auto expr = express_in_generators(br, Ldd, 20);
        REQUIRE(expr.has_value());
        CHECK((*expr)[0] == P(c.ring, "1"));  // [E, T] = (mn-m-n) T = 1*T for (2,3)
    }
    SUBCASE("not in span reports nullopt") {
        auto g = der_generators(2, 2);
        LieAlgebra L(g[0].ring(), {g[0]});
        CHECK_FALSE(express_in_generators(g[1], L, 20).has_value());

        // degree mismatch: the coefficient slice is empty
        auto h = der_generators(3, 2);
        LieAlgebra L0(h[0].ring(), {h[0]});
        CHECK_FALSE(express_in_generators(h[2], L0, 20).has_value());
    }
    SUBCASE("polynomial coefficients are found") {
        auto g = der_generators(3, 2);
        RingPtr A = g[0].ring();
        LieAlgebra L(A, {g[0], g[1], g[2], g[3]});
        // [g1, g2] = -m(m-1) x^(m-2) g3 for these generators
        Derivation br = g[1].bracket(g[2]);
        auto expr = express_in_generators(br, L, 40);
        REQUIRE(expr.has_value());
        CHECK((*expr)[0].is_zero());
        CHECK((*expr)[1].is_zero());
        CHECK((*expr)[2].is_zero());
        CHECK((*expr)[3] == P(A, "-6*x"));
        // reassemble and compare exactly
        Derivation sum = g[0].scaled((*expr)[0]) + g[1].scaled((*expr)[1]) +
                         g[2].scaled((*expr)[2]) + g[3].scaled((*expr)[3]);
        CHECK(sum == br);
    }
    SUBCASE("inhomogeneous input is rejected") {
        RingPtr B = Ring::free_ring({"x", "y"}, {1, 1});
        LieAlgebra L(B, {partial(B, 0)});
        Derivation mixed(B, {P(B, "x^2 + 1"), P(B, "0")});
        CHECK_THROWS_AS(express_in_generators(mixed, L, 10), std::invalid_argument);
    }
}

TEST_CASE("lie algebra generator degrees recorded") {
    auto g = der_generators(2, 2);
    LieAlgebra L(g[0].ring(), {g[0], g[1], g[2], g[3]}, syzygy_matrix(2, 2));
    CHECK(L.rank() == 4);
    CHECK(L.degree(0) == 0);
    CHECK(L.syzygies().has_value());
}
