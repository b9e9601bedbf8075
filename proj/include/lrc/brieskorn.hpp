#pragma once

#include "lrc/connection.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace lrc {

// Explicit data for the weighted-homogeneous surface ring
// A = Q[x,y,z]/(x^m + y^n + z^2), weights (2n, 2m, mn), and for the plane
// curve family x^m - y^n over Q[x,y], weights (n, m).

// quotient ring A with reduction monomial z^2
RingPtr brieskorn_ring(int m, int n);

// 4x4 matrix factorization of f = x^m + y^n + z^2, for 1<=k<=m, 1<=l<=n
MatrixFactorization phi_psi(int m, int n, int k, int l);

struct MfCheck {
    bool ok = true;
    int which = 0;  // 0: phi*psi, 1: psi*phi
    int row = -1, col = -1;
    Polynomial difference;  // failing entry minus expected value
};
MfCheck verify_mf(const MatrixFactorization& mf);

// the four derivation generators of Der(A)
std::array<Derivation, 4> der_generators(int m, int n);

// the 4x4 syzygy matrix among the generators
PolyMatrix syzygy_matrix(int m, int n);

struct SyzygyReport {
    enum class Orientation { rows, columns, both, neither };
    Orientation orientation = Orientation::neither;
    // residual coefficient vectors (per variable) for each combination
    std::vector<std::vector<Polynomial>> row_residuals;  // [i][var]
    std::vector<std::vector<Polynomial>> col_residuals;  // [j][var]
    bool rows_ok = false, cols_ok = false;
};
// Tests sum_j rho[i][j] delta_j = 0 (rows) and sum_i rho[i][j] delta_i = 0
// (columns) in Der of the quotient ring, and reports which holds.
SyzygyReport verify_syzygies(int m, int n);

// Generator degrees of coker(phi) solved from the homogeneity constraints
// deg phi_ij = coldeg_j - rowdeg_i, anchored at rowdeg_1 = 0.
std::vector<Degree> generator_degrees(const PolyMatrix& phi, const RingPtr& ring);

// Raised when a closed-form coefficient of the connection family calls for a
// negative exponent with a nonzero scalar, which happens on the k = m / l = n
// boundary; no matrix entry exists there in the stated form.
class closed_form_error : public std::runtime_error {
public:
    closed_form_error(std::string coefficient_name, const std::string& detail)
        : std::runtime_error(detail), coefficient(std::move(coefficient_name)) {}
    std::string coefficient;
};

// Names of closed-form coefficients that are undefined at this parameter
// point (empty means the family is well-formed there).
std::vector<std::string> closed_form_undefined(int m, int n, int k, int l);

struct ConnectionFamily {
    int m, n, k, l;
    RingPtr ring;
    MatrixFactorization mf;
    Module module;          // coker(phi) with solved generator degrees
    LieAlgebra algebra;     // <delta_0..delta_3> with the syzygy matrix attached
    Connection connection;  // matrices A_0..A_3
};
// Throws closed_form_error on the undefined boundary points.
ConnectionFamily connection_family(int m, int n, int k, int l);

struct CuspSetup {
    int m, n;
    RingPtr ring;            // Q[x,y], weights (n, m)
    Polynomial f;            // x^m - y^n
    Derivation tangent;      // generator of {delta : delta(f) = 0}, computed
    Derivation euler;        // n x d/dx + m y d/dy
    LieAlgebra kernel_algebra;  // <tangent>
    LieAlgebra total_algebra;   // <tangent, euler>
    Module ideal;            // (f) as a shifted free rank-1 module
    Connection connection;   // delta(b f) = delta(b) f over the total algebra
    // gradient-style candidate m x^(m-1) d/dx + n y^(n-1) d/dy and its
    // (nonzero) value on f; recorded because it fails the defining property
    std::vector<Polynomial> naive_candidate;
    Polynomial naive_candidate_value;
};
CuspSetup cusp_setup(int m, int n);

// Independent slice-wise cokernel of the tangent action on (f): uses only
// raw differentiation and monomial enumeration, no complex machinery.
std::map<Degree, int> cusp_h1_oracle(int m, int n, Degree max_degree);

}  // namespace lrc
