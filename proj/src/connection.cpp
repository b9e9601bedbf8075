#include "lrc/connection.hpp"

#include <stdexcept>

namespace lrc {

Connection::Connection(LieAlgebra algebra, Module module, std::vector<PolyMatrix> matrices)
    : algebra_(std::move(algebra)), module_(std::move(module)), matrices_(std::move(matrices)) {
    if (!algebra_.ring()->same_variables(*module_.ring()))
        throw std::invalid_argument("Connection: algebra and module over different rings");
    if (matrices_.size() != static_cast<std::size_t>(algebra_.rank()))
        throw std::invalid_argument("Connection: one matrix per algebra generator required");
    const std::size_t r = static_cast<std::size_t>(module_.rank());
    for (int g = 0; g < algebra_.rank(); ++g) {
        PolyMatrix& m = matrices_[static_cast<std::size_t>(g)];
        if (m.size() != r) throw std::invalid_argument("Connection: matrix row count mismatch");
        for (std::size_t i = 0; i < r; ++i) {
            if (m[i].size() != r) throw std::invalid_argument("Connection: matrix column count mismatch");
            for (std::size_t j = 0; j < r; ++j) {
                m[i][j] = module_.ring()->nf(m[i][j]);
                if (m[i][j].is_zero()) continue;
                WeightedDegree wd = m[i][j].weighted_degree();
                Degree want = algebra_.degree(g) + module_.effective_degree(static_cast<int>(j)) -
                              module_.effective_degree(static_cast<int>(i));
                if (!wd.is_homogeneous() || wd.value != want)
                    throw std::invalid_argument(
                        "Connection: matrix entry (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + ") for generator " + std::to_string(g + 1) +
                        " is not homogeneous of degree " + std::to_string(want));
            }
        }
    }
}

ModuleElement Connection::apply(int g, const ModuleElement& w) const {
    if (g < 0 || g >= algebra_.rank())
        throw std::out_of_range("Connection::apply: generator index out of range");
    if (w.size() != static_cast<std::size_t>(module_.rank()))
        throw std::invalid_argument("Connection::apply: element length mismatch");
    const Derivation& delta = algebra_.generator(g);
    const PolyMatrix& A = matrices_[static_cast<std::size_t>(g)];
    const RingPtr& ring = module_.ring();
    ModuleElement out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        Polynomial acc = delta(w[i]);
        for (std::size_t j = 0; j < w.size(); ++j) {
            if (A[i][j].is_zero() || w[j].is_zero()) continue;
            acc = acc + A[i][j] * w[j];
        }
        out.push_back(ring->nf(acc));
    }
    return out;
}

ModuleElement Connection::apply_combination(const std::vector<Polynomial>& coeffs,
                                            const ModuleElement& w) const {
    if (coeffs.size() != static_cast<std::size_t>(algebra_.rank()))
        throw std::invalid_argument("Connection::apply_combination: coefficient count mismatch");
    const RingPtr& ring = module_.ring();
    ModuleElement out = module_.zero_element();
    for (int k = 0; k < algebra_.rank(); ++k) {
        const Polynomial& a = coeffs[static_cast<std::size_t>(k)];
        if (a.is_zero()) continue;
        ModuleElement part = apply(k, w);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = ring->nf(out[i] + a * part[i]);
    }
    return out;
}

PolyMatrix curvature(const Connection& conn, int i, int j, Degree degree_bound) {
    const LieAlgebra& L = conn.algebra();
    Derivation br = L.generator(i).bracket(L.generator(j));
    auto expr = express_in_generators(br, L, degree_bound);
    if (!expr)
        throw std::runtime_error("curvature: bracket [g_" + std::to_string(i + 1) + ", g_" +
                                 std::to_string(j + 1) +
                                 "] not expressible in the generators within the degree bound");
    const Module& W = conn.module();
    const RingPtr& ring = W.ring();
    PolyMatrix out = poly_matrix_zero(ring, static_cast<std::size_t>(W.rank()),
                                      static_cast<std::size_t>(W.rank()));
    for (int t = 0; t < W.rank(); ++t) {
        ModuleElement e = W.unit_element(t);
        ModuleElement a = conn.apply(i, conn.apply(j, e));
        ModuleElement b = conn.apply(j, conn.apply(i, e));
        ModuleElement c = conn.apply_combination(*expr, e);
        for (int s = 0; s < W.rank(); ++s) {
            std::size_t si = static_cast<std::size_t>(s);
            out[si][static_cast<std::size_t>(t)] = ring->nf(a[si] - b[si] - c[si]);
        }
    }
    return out;
}

bool curvature_zero_on_module(const Connection& conn, const PolyMatrix& curv) {
    const Module& W = conn.module();
    for (int t = 0; t < W.rank(); ++t) {
        ModuleElement col;
        col.reserve(curv.size());
        for (std::size_t s = 0; s < curv.size(); ++s) col.push_back(curv[s][static_cast<std::size_t>(t)]);
        WeightedDegree wd = W.element_degree(col);
        if (wd.is_bottom()) continue;
        if (!wd.is_homogeneous()) return false;
        if (!W.element_is_zero(col, wd.value)) return false;
    }
    return true;
}

Connection restrict_connection(const Connection& conn, const LieAlgebra& sub, Degree degree_bound) {
    const RingPtr& ring = conn.module().ring();
    std::vector<PolyMatrix> mats;
    mats.reserve(static_cast<std::size_t>(sub.rank()));
    for (int k = 0; k < sub.rank(); ++k) {
        auto expr = express_in_generators(sub.generator(k), conn.algebra(), degree_bound);
        if (!expr)
            throw std::runtime_error(
                "restrict_connection: subalgebra generator " + std::to_string(k + 1) +
                " not expressible in the connection's algebra");
        std::size_t r = static_cast<std::size_t>(conn.module().rank());
        PolyMatrix m = poly_matrix_zero(ring, r, r);
        for (int g = 0; g < conn.algebra().rank(); ++g) {
            const Polynomial& a = (*expr)[static_cast<std::size_t>(g)];
            if (a.is_zero()) continue;
            const PolyMatrix& Ag = conn.matrix(g);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j)
                    if (!Ag[i][j].is_zero()) m[i][j] = ring->nf(m[i][j] + a * Ag[i][j]);
        }
        mats.push_back(std::move(m));
    }
    return Connection(sub, conn.module(), std::move(mats));
}

Connection direct_sum(const Connection& a, const Connection& b) {
    if (a.algebra().rank() != b.algebra().rank())
        throw std::invalid_argument("direct_sum: algebras differ");
    for (int g = 0; g < a.algebra().rank(); ++g)
        if (!(a.algebra().generator(g) == b.algebra().generator(g)))
            throw std::invalid_argument("direct_sum: algebras differ");
    Module m = direct_sum(a.module(), b.module());
    const RingPtr& ring = m.ring();
    std::size_t ra = static_cast<std::size_t>(a.module().rank());
    std::size_t r = static_cast<std::size_t>(m.rank());
    std::vector<PolyMatrix> mats;
    for (int g = 0; g < a.algebra().rank(); ++g) {
        PolyMatrix out = poly_matrix_zero(ring, r, r);
        for (std::size_t i = 0; i < ra; ++i)
            for (std::size_t j = 0; j < ra; ++j) out[i][j] = a.matrix(g)[i][j];
        for (std::size_t i = ra; i < r; ++i)
            for (std::size_t j = ra; j < r; ++j) out[i][j] = b.matrix(g)[i - ra][j - ra];
        mats.push_back(std::move(out));
    }
    return Connection(a.algebra(), std::move(m), std::move(mats));
}

DescentResult check_connection_well_defined(const Connection& conn, const MatrixFactorization& mf) {
    const LieAlgebra& L = conn.algebra();
    const RingPtr& ring = conn.module().ring();
    if (!ring->has_relation())
        throw std::invalid_argument("check_connection_well_defined: module ring has no relation");
    const std::size_t r = mf.phi.size();
    if (static_cast<std::size_t>(conn.module().rank()) != r)
        throw std::invalid_argument("check_connection_well_defined: rank mismatch with phi");

    DescentResult result;
    result.ok = true;
    for (int g = 0; g < L.rank(); ++g) {
        const Derivation& delta = L.generator(g);
        // M = delta(phi) + A_g * phi, entrywise over the ambient ring
        PolyMatrix M = poly_matrix_zero(ring, r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                Polynomial acc = delta(mf.phi[i][j]);
                for (std::size_t t = 0; t < r; ++t) {
                    const Polynomial& a = conn.matrix(g)[i][t];
                    if (a.is_zero() || mf.phi[t][j].is_zero()) continue;
                    acc = acc + a * mf.phi[t][j];
                }
                M[i][j] = acc;
            }
        PolyMatrix N = poly_matrix_mul(mf.psi, M);
        PolyMatrix B = poly_matrix_zero(ring, r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                auto [q, rem] = ring->divmod(N[i][j]);
                if (!rem.is_zero()) {
                    result.ok = false;
                    result.failure = DescentFailure{g, static_cast<int>(i), static_cast<int>(j),
                                                    rem};
                    result.witnesses.clear();
                    return result;
                }
                B[i][j] = ring->nf(q);
            }
        result.witnesses.push_back(std::move(B));
    }
    return result;
}

PolyMatrix poly_matrix_zero(const RingPtr& ring, std::size_t rows, std::size_t cols) {
    PolyMatrix m(rows);
    for (auto& row : m) row.assign(cols, Polynomial::zero(ring));
    return m;
}

PolyMatrix poly_matrix_mul(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t n = a.size(), k = b.size(), m = b[0].size();
    const RingPtr& ring = a[0][0].ring();
    PolyMatrix out = poly_matrix_zero(ring, n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) {
                if (b[t][j].is_zero()) continue;
                out[i][j] = out[i][j] + a[i][t] * b[t][j];
            }
        }
    return out;
}

PolyMatrix poly_matrix_add(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix out = a;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < out[i].size(); ++j) out[i][j] = out[i][j] + b[i][j];
    return out;
}

bool poly_matrix_is_zero(const PolyMatrix& m) {
    for (const auto& row : m)
        for (const auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

}  // namespace lrc
