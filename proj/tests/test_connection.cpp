#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrc/brieskorn.hpp"
#include "lrc/connection.hpp"
#include "test_util.hpp"

using namespace lrc;
using lrctest::P;

namespace {

// rank-2 free module with a flat nilpotent connection over <d/dx, d/dy>
Connection nilpotent_example(const RingPtr& B, const Polynomial& potential) {
    Degree e = potential.weighted_degree().value;
    Module W = Module::free_module(B, {0, e});
    LieAlgebra L(B, {partial(B, 0), partial(B, 1)});
    PolyMatrix Ax = poly_matrix_zero(B, 2, 2), Ay = poly_matrix_zero(B, 2, 2);
    Ax[0][1] = potential.diff(0);
    Ay[0][1] = potential.diff(1);
    return Connection(L, W, {Ax, Ay});
}

}  // namespace

TEST_CASE("connection matrices must be homogeneous of the generator degree") {
    RingPtr B = Ring::free_ring({"x", "y"}, {1, 1});
    Module W = Module::free_module(B, {0, 0});
    LieAlgebra L(B, {partial(B, 0)});
    PolyMatrix bad = poly_matrix_zero(B, 2, 2);
    bad[0][1] = P(B, "1");  // degree 0 entry for a degree -1 operator
    CHECK_THROWS_AS(Connection(L, W, {bad}), std::invalid_argument);
}

TEST_CASE("connection_apply on the matrix-factorization family") {
    ConnectionFamily fam = connection_family(2, 2, 1, 1);
    const Module& W = fam.module;
    // A_0 = 2 * identity, so the action on e_1 is 2 e_1
    ModuleElement v = fam.connection.apply(0, W.unit_element(0));
    CHECK(v[0] == P(fam.ring, "2"));
    CHECK(v[1].is_zero());
    CHECK(v[2].is_zero());
    CHECK(v[3].is_zero());

    // Leibniz: nabla(x e_1) = delta_0(x) e_1 + x A_0 e_1 = (2n + 2) x e_1
    ModuleElement xe = W.zero_element();
    xe[0] = P(fam.ring, "x");
    ModuleElement w = fam.connection.apply(0, xe);
    CHECK(w[0] == P(fam.ring, "6*x"));
}

TEST_CASE("zero matrices act componentwise by the derivation") {
    RingPtr B = Ring::free_ring({"x", "y"}, {1, 1});
    Module W = Module::free_module(B, {0, 0});
    LieAlgebra L(B, {partial(B, 0), partial(B, 1)});
    Connection conn(L, W, {poly_matrix_zero(B, 2, 2), poly_matrix_zero(B, 2, 2)});
    ModuleElement v = {P(B, "x^2*y"), P(B, "y^3")};
    ModuleElement got = conn.apply(0, v);
    CHECK(got[0] == P(B, "2*x*y"));
    CHECK(got[1].is_zero());
}

TEST_CASE("connection Leibniz rule (randomized)") {
    ConnectionFamily fam = connection_family(3, 2, 2, 1);
    const Module& W = fam.module;
    const RingPtr& A = fam.ring;
    std::mt19937 rng(5150);
    for (int g = 0; g < 4; ++g) {
        for (int trial = 0; trial < 8; ++trial) {
            Polynomial a = A->nf(lrctest::random_poly(A, rng));
            ModuleElement w;
            for (int i = 0; i < 4; ++i) w.push_back(A->nf(lrctest::random_poly(A, rng, 3, 2)));
            // nabla_g(a w) = a nabla_g(w) + g(a) w
            ModuleElement aw;
            for (const Polynomial& c : w) aw.push_back(A->nf(a * c));
            ModuleElement lhs = fam.connection.apply(g, aw);
            ModuleElement rhs = fam.connection.apply(g, w);
            Polynomial ga = fam.algebra.generator(g)(a);
            for (int i = 0; i < 4; ++i) {
                Polynomial want = A->nf(a * rhs[static_cast<std::size_t>(i)] +
                                        ga * w[static_cast<std::size_t>(i)]);
                CHECK(lhs[static_cast<std::size_t>(i)] == want);
            }
        }
    }
}

TEST_CASE("curvaturevanishes for rank-1 algebras and flat coordinate connections") {
    ConnectionFamily fam = connection_family(2, 2, 1, 1);
    LieAlgebra L0(fam.ring, {fam.algebra.generator(0)});
    Connection c0(L0, fam.module, {fam.connection.matrix(0)});
    CHECK(poly_matrix_is_zero(curvature(c0, 0, 0, 20)));

    RingPtr B = Ring::free_ring({"x", "y"}, {1, 1});
    Module W = Module::free_module(B, {0, 0});
    LieAlgebra L(B, {partial(B, 0), partial(B, 1)});
    Connection flat(L, W, {poly_matrix_zero(B, 2, 2), poly_matrix_zero(B, 2, 2)});
    CHECK(poly_matrix_is_zero(curvature(flat, 0, 1, 10)));
}

TEST_CASE("nilpotent potential connections are flat; mutations are not") {
    RingPtr B = Ring::free_ring({"x", "y"}, {1, 1});
    Connection conn = nilpotent_example(B, P(B, "x^3 - 2*x*y^2"));
    CHECK(poly_matrix_is_zero(curvature(conn, 0, 1, 10)));
    CHECK(curvature_zero_on_module(conn, curvature(conn, 0, 1, 10)));

    // perturb A_x by x * E_12: curvature becomes nonzero
    PolyMatrix Ax = conn.matrix(0);
    Ax[0][1] = Ax[0][1] + P(B, "x^2");
    Connection mutant(conn.algebra(), conn.module(), {Ax, conn.matrix(1)});
    PolyMatrix R = curvature(mutant, 0, 1, 10);
    CHECK_FALSE(poly_matrix_is_zero(R));
    CHECK_FALSE(curvature_zero_on_module(mutant, R));
}

TEST_CASE("curvature is A-linear in each slot (composite endomorphism)") {
    RingPtr B = Ring::free_ring({"x", "y"}, {1, 1});
    Polynomial pot = P(B, "x^2*y");
    Connection conn = nilpotent_example(B, pot);
    // mutate to a non-flat connection so curvature is interesting
    PolyMatrix Ax = conn.matrix(0);
    Ax[0][1] = Ax[0][1] + P(B, "y^2");
    Connection c(conn.algebra(), conn.module(), {Ax, conn.matrix(1)});

    std::mt19937 rng(808);
    Polynomial a = lrctest::random_homogeneous(B, rng, 2);
    // scaled generator a * d/dx (valid derivation over a free ring)
    Derivation ax = partial(B, 0).scaled(a);
    LieAlgebra L2(B, {ax, partial(B, 1)});
    PolyMatrix Ax_scaled = poly_matrix_zero(B, 2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) Ax_scaled[i][j] = a * Ax[i][j];
    Connection c2(L2, c.module(), {Ax_scaled, c.matrix(1)});

    PolyMatrix R = curvature(c, 0, 1, 12);
    PolyMatrix R2 = curvature(c2, 0, 1, 12);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(R2[i][j] == a * R[i][j]);
}

TEST_CASE("descent witnesses for the matrix-factorization family") {
    SUBCASE("(2,2,1,1), Euler generator: witness is 6 * identity") {
        ConnectionFamily fam = connection_family(2, 2, 1, 1);
        DescentResult r = check_connection_well_defined(fam.connection, fam.mf);
        REQUIRE(r.ok);
        REQUIRE(r.witnesses.size() == 4);
        const PolyMatrix& B0 = r.witnesses[0];
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                Polynomial want = (i == j) ? P(fam.ring, "6") : P(fam.ring, "0");
                CHECK(B0[i][j] == want);
            }
        // witness identity: delta(phi) + A phi = phi B for every generator
        for (int g = 0; g < 4; ++g) {
            PolyMatrix lhs = poly_matrix_zero(fam.ring, 4, 4);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j)
                    lhs[i][j] = fam.algebra.generator(g)(fam.mf.phi[i][j]);
            lhs = poly_matrix_add(lhs, poly_matrix_mul(fam.connection.matrix(g), fam.mf.phi));
            PolyMatrix rhs = poly_matrix_mul(fam.mf.phi, r.witnesses[static_cast<std::size_t>(g)]);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j)
                    CHECK(fam.ring->nf(lhs[i][j] - rhs[i][j]).is_zero());
        }
    }
    SUBCASE("(3,2,1,1): all four generators descend") {
        ConnectionFamily fam = connection_family(3, 2, 1, 1);
        DescentResult r = check_connection_well_defined(fam.connection, fam.mf);
        CHECK(r.ok);
        CHECK(r.witnesses.size() == 4);
    }
    SUBCASE("mutating b_2 by +1 breaks descent with a reported entry") {
        ConnectionFamily fam = connection_family(3, 2, 1, 1);
        std::vector<PolyMatrix> mats;
        for (int g = 0; g < 4; ++g) mats.push_back(fam.connection.matrix(g));
        mats[1][0][1] = mats[1][0][1] + P(fam.ring, "1");  // b_2 slot
        // the mutated matrix is inhomogeneous, so bypass the Connection
        // constructor and exercise the low-level check through a fresh
        // factorization paired with raw matrices via a synthetic connection
        // on a module with zero-degree generators: use the direct identity.
        const PolyMatrix& phi = fam.mf.phi;
        const PolyMatrix& psi = fam.mf.psi;
        bool failed = false;
        for (int g = 1; g < 2 && !failed; ++g) {
            PolyMatrix M = poly_matrix_zero(fam.ring, 4, 4);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) {
                    Polynomial acc = fam.algebra.generator(g)(phi[i][j]);
                    for (std::size_t t = 0; t < 4; ++t)
                        acc = acc + mats[static_cast<std::size_t>(g)][i][t] * phi[t][j];
                    M[i][j] = acc;
                }
            PolyMatrix N = poly_matrix_mul(psi, M);
            for (std::size_t i = 0; i < 4 && !failed; ++i)
                for (std::size_t j = 0; j < 4 && !failed; ++j)
                    if (!fam.ring->nf(N[i][j]).is_zero()) failed = true;
        }
        CHECK(failed);
    }
}

TEST_CASE("descent check on a small grid, all generators") {
    for (int m = 2; m <= 3; ++m)
        for (int n = 2; n <= 3; ++n)
            for (int k = 1; k <= m; ++k)
                for (int l = 1; l <= n; ++l) {
                    if (!closed_form_undefined(m, n, k, l).empty()) continue;
                    ConnectionFamily fam = connection_family(m, n, k, l);
                    DescentResult r = check_connection_well_defined(fam.connection, fam.mf);
                    CHECK(r.ok);
                }
}

TEST_CASE("restriction combines matrices A-linearly") {
    ConnectionFamily fam = connection_family(2, 2, 1, 1);
    LieAlgebra L0(fam.ring, {fam.algebra.generator(0)});
    Connection c0 = restrict_connection(fam.connection, L0, 10);
    CHECK(c0.algebra().rank() == 1);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(c0.matrix(0)[i][j] == fam.connection.matrix(0)[i][j]);
}

TEST_CASE("direct sums act blockwise") {
    RingPtr B = Ring::free_ring({"x", "y"}, {1, 1});
    Connection a = nilpotent_example(B, P(B, "x^2"));
    Connection b = nilpotent_example(B, P(B, "y^3"));
    Connection s = direct_sum(a, b);
    CHECK(s.module().rank() == 4);
    ModuleElement v = s.module().zero_element();
    v[1] = P(B, "1");
    ModuleElement got = s.apply(0, v);
    ModuleElement got_a = a.apply(0, {Polynomial::zero(B), P(B, "1")});
    CHECK(got[0] == got_a[0]);
    CHECK(got[1] == got_a[1]);
    CHECK(got[2].is_zero());
    CHECK(got[3].is_zero());
}
