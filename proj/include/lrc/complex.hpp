#pragma once

#include "lrc/connection.hpp"
#include "lrc/qmatrix.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace lrc {

// Basis of the degree-d slice of C^p(L,W) = Hom_A(Lambda^p L, W): a hom of
// degree d sends the wedge g_{i_1} ^ ... ^ g_{i_p} (indices strictly
// increasing) to a module element of degree d + sum deg g_{i_k}.
struct CochainBasis {
    int p = 0;
    Degree degree = 0;
    struct Element {
        std::vector<int> wedge;      // strictly increasing generator indices
        Degree module_degree = 0;    // degree of the target slice
        std::size_t slice_index = 0; // index into the module slice basis
    };
    std::vector<Element> elements;
};

// Graded slices of the standard complex of a connection whose algebra is
// free on its listed generators. Differentials follow the classical
// alternating-sum formula; brackets of generators are expressed in the
// generators once, at construction.
class StandardComplex {
public:
    StandardComplex(Connection conn, Degree bracket_degree_bound);

    const Connection& connection() const { return conn_; }
    const Module& module() const { return conn_.module(); }
    const LieAlgebra& algebra() const { return conn_.algebra(); }

    // [g_i, g_j] = sum_k expr[k] g_k for i < j
    const std::vector<Polynomial>& bracket_expression(int i, int j) const;

    const CochainBasis& basis(int p, Degree d) const;
    int cochain_dim(int p, Degree d) const;

    // matrix of d^p from the degree-d slice of C^p to the degree-d slice of C^{p+1}
    const QMatrix& differential(int p, Degree d) const;

    // interpret a coordinate vector: value on one basis wedge
    ModuleElement value_on_wedge(int p, Degree d, const std::vector<Rational>& coords,
                                 const std::vector<int>& wedge) const;

    // lowest degree at which any cochain slice can be nonzero
    Degree report_floor() const;

    struct VerifyReport {
        bool ok = true;
        int p = -1;       // first failure, when !ok
        Degree degree = 0;
    };
    VerifyReport verify(Degree max_degree) const;

    static std::vector<std::vector<int>> wedges(int rank, int p);
    Degree wedge_degree(const std::vector<int>& wedge) const;

private:
    Connection conn_;
    std::vector<std::vector<std::vector<Polynomial>>> bracket_exprs_;  // [i][j-i-1]

    mutable std::mutex mu_;
    mutable std::map<std::pair<int, Degree>, CochainBasis> basis_cache_;
    mutable std::map<std::pair<int, Degree>, QMatrix> diff_cache_;

    CochainBasis build_basis(int p, Degree d) const;
    QMatrix build_differential(int p, Degree d) const;
};

struct CohomologySlice {
    int dim = 0;
    std::vector<std::vector<Rational>> representatives;  // cocycle coordinate vectors
};

// Graded Lie-Rinehart cohomology per index and degree, with representative
// cocycles chosen as echelon-reduced kernel vectors not in the image.
struct GradedCohomology {
    Degree lo = 0, hi = 0;
    std::vector<std::map<Degree, CohomologySlice>> by_index;  // [p]

    int dim(int p, Degree d) const {
        if (p < 0 || p >= static_cast<int>(by_index.size())) return 0;
        auto it = by_index[static_cast<std::size_t>(p)].find(d);
        return it == by_index[static_cast<std::size_t>(p)].end() ? 0 : it->second.dim;
    }
};

// Runs verify() first and rejects non-complex input.
GradedCohomology cohomology(const StandardComplex& cx, Degree max_degree);

}  // namespace lrc
