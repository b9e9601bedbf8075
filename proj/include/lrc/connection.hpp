#pragma once

#include "lrc/lie.hpp"
#include "lrc/module.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lrc {

// Connection on a presented module: per algebra generator g, an endomorphism
// matrix A_g on the module generators. The action is
//   nabla_g(sum a_i e_i) = sum g(a_i) e_i + A_g (a_i),
// which satisfies the Leibniz rule by construction. Each A_g is homogeneous
// of the operator degree of g: deg (A_g)_{ij} = deg g + gdeg_j - gdeg_i.
class Connection {
public:
    Connection(LieAlgebra algebra, Module module, std::vector<PolyMatrix> matrices);

    const LieAlgebra& algebra() const { return algebra_; }
    const Module& module() const { return module_; }
    const PolyMatrix& matrix(int g) const { return matrices_[static_cast<std::size_t>(g)]; }
    const std::vector<PolyMatrix>& matrices() const { return matrices_; }

    // nabla_g(w); components normal-formed, not reduced modulo the presentation
    ModuleElement apply(int g, const ModuleElement& w) const;

    // nabla for sum_k coeffs[k] * g_k (A-linear in the algebra slot)
    ModuleElement apply_combination(const std::vector<Polynomial>& coeffs,
                                    const ModuleElement& w) const;

private:
    LieAlgebra algebra_;
    Module module_;
    std::vector<PolyMatrix> matrices_;
};

// R(g_i, g_j) = [nabla_i, nabla_j] - nabla_{[g_i,g_j]} as a module
// endomorphism matrix on generators (curvature is A-linear, so the columns
// determine it). Throws if [g_i,g_j] is not expressible in the generators
// within the degree bound.
PolyMatrix curvature(const Connection& conn, int i, int j, Degree degree_bound);

// True when the curvature matrix columns vanish in the module (reduced
// against the presentation, slice by slice).
bool curvature_zero_on_module(const Connection& conn, const PolyMatrix& curv);

// Connection on the same module over a subalgebra whose generators are
// expressible in conn's algebra within the degree bound.
Connection restrict_connection(const Connection& conn, const LieAlgebra& sub, Degree degree_bound);

// Block sum on the direct sum module (same algebra).
Connection direct_sum(const Connection& a, const Connection& b);

// phi * psi = psi * phi = f * identity over the ambient ring (verified by
// verify_mf, assumed by the descent check).
struct MatrixFactorization {
    RingPtr ring;
    Polynomial f;
    PolyMatrix phi, psi;
};

struct DescentFailure {
    int generator = -1;
    int row = -1, col = -1;
    Polynomial remainder;  // nonzero normal form of the offending entry
};

struct DescentResult {
    bool ok = false;
    std::vector<PolyMatrix> witnesses;  // B_g per generator, when ok
    std::optional<DescentFailure> failure;
};

// Checks that every nabla_g maps im(phi) into im(phi): computes
// B_g = psi (g(phi) + A_g phi) / f entrywise and demands exact divisibility.
// On success g(phi) + A_g phi = phi B_g.
DescentResult check_connection_well_defined(const Connection& conn,
                                            const MatrixFactorization& mf);

// helpers for polynomial matrices
PolyMatrix poly_matrix_zero(const RingPtr& ring, std::size_t rows, std::size_t cols);
PolyMatrix poly_matrix_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix poly_matrix_add(const PolyMatrix& a, const PolyMatrix& b);
bool poly_matrix_is_zero(const PolyMatrix& m);

}  // namespace lrc
