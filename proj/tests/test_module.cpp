#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrc/brieskorn.hpp"
#include "lrc/module.hpp"
#include "test_util.hpp"

using namespace lrc;
using lrctest::P;

namespace {

Module w_phi_psi(int m, int n, int k, int l) {
    MatrixFactorization mf = phi_psi(m, n, k, l);
    std::vector<std::vector<Polynomial>> cols;
    for (std::size_t j = 0; j < 4; ++j) {
        std::vector<Polynomial> col;
        for (std::size_t i = 0; i < 4; ++i) col.push_back(mf.phi[i][j]);
        cols.push_back(col);
    }
    return Module::presented(mf.ring, generator_degrees(mf.phi, mf.ring), cols);
}

}  // namespace

TEST_CASE("generator degrees are solved from homogeneity constraints") {
    for (int m = 2; m <= 4; ++m)
        for (int n = 2; n <= 4; ++n)
            for (int k = 1; k <= m; ++k)
                for (int l = 1; l <= n; ++l) {
                    MatrixFactorization mf = phi_psi(m, n, k, l);
                    auto deg = generator_degrees(mf.phi, mf.ring);
                    REQUIRE(deg.size() == 4);
                    Degree mn = static_cast<Degree>(m) * n;
                    CHECK(deg[0] == 0);
                    CHECK(deg[1] == 2 * mn - 2 * static_cast<Degree>(n) * k -
                                        2 * static_cast<Degree>(m) * l);
                    CHECK(deg[2] == mn - 2 * static_cast<Degree>(n) * k);
                    CHECK(deg[3] == mn - 2 * static_cast<Degree>(m) * l);
                }
}

TEST_CASE("inconsistent presentation degrees are rejected") {
    RingPtr B = Ring::free_ring({"x", "y"}, {1, 1});
    // column (x, x^3) forces gdeg_2 = gdeg_1 - 2; column (y, y^2) forces -1
    CHECK_THROWS_AS(Module::presented(B, {0, 0},
                                      {{P(B, "x"), P(B, "x^3")}, {P(B, "y"), P(B, "y^2")}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(generator_degrees({{P(B, "x"), P(B, "y")},
                                       {P(B, "x^3"), P(B, "y^2")}},
                                      B),
                    std::invalid_argument);
}

TEST_CASE("presented module slices reduce modulo the relations") {
    // coker(phi) for (2,2,1,1): generator degrees all 0, relations in degree 4
    Module W = w_phi_psi(2, 2, 1, 1);
    CHECK(W.slice_dim(0) == 4);
    // degree 4: 12 monomial-generator pairs, minus 4 independent relation columns
    CHECK(W.slice_dim(4) == 8);

    // a relation column reduces to zero
    ModuleElement col = {P(W.ring(), "x"), P(W.ring(), "y"), P(W.ring(), "z"),
                         P(W.ring(), "0")};
    CHECK(W.element_is_zero(col, 4));
    // a unit generator does not
    CHECK_FALSE(W.element_is_zero(W.unit_element(0), 0));
}

TEST_CASE("coordinates round-trip through slice bases") {
    Module W = w_phi_psi(3, 2, 1, 1);
    for (Degree d : {0, 2, 4, 6, 8}) {
        auto basis = W.slice_basis(d);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            auto coords = W.coords(basis[i], d);
            for (std::size_t j = 0; j < coords.size(); ++j)
                CHECK(coords[j] == Rational(i == j ? 1 : 0));
            CHECK(W.element_from_coords(coords, d) == basis[i]);
        }
    }
}

TEST_CASE("coords rejects inhomogeneous elements") {
    RingPtr B = Ring::free_ring({"x", "y"}, {1, 1});
    Module E = Module::free_module(B, {0, 0});
    ModuleElement e = {P(B, "x + x^2"), P(B, "0")};
    CHECK_THROWS_AS(E.coords(e, 1), std::invalid_argument);
}

TEST_CASE("element degrees") {
    RingPtr B = Ring::free_ring({"x", "y"}, {1, 1});
    Module E = Module::free_module(B, {0, 3});
    ModuleElement e = {P(B, "x^4"), P(B, "x*y")};  // degrees 4 and 2+3
    CHECK(E.element_degree(e) == WeightedDegree::inhomogeneous());
    ModuleElement h = {P(B, "x^5"), P(B, "x*y")};
    CHECK(E.element_degree(h) == WeightedDegree::of(5));
    CHECK(E.element_degree(E.zero_element()).is_bottom());
}

TEST_CASE("direct sums add slice dimensions") {
    RingPtr B = Ring::free_ring({"x", "y"}, {1, 1});
    Module E1 = Module::free_module(B, {0, 1});
    Module E2 = Module::free_module(B, {2});
    Module S = direct_sum(E1, E2);
    for (Degree d = 0; d <= 8; ++d) CHECK(S.slice_dim(d) == E1.slice_dim(d) + E2.slice_dim(d));

    Module W = w_phi_psi(2, 2, 1, 1);
    Module SW = direct_sum(W, W);
    for (Degree d = 0; d <= 8; ++d) CHECK(SW.slice_dim(d) == 2 * W.slice_dim(d));
}
