#include "lrc/lie.hpp"

#include "lrc/qmatrix.hpp"

#include <map>
#include <stdexcept>

namespace lrc {

LieAlgebra::LieAlgebra(RingPtr ring, std::vector<Derivation> generators,
                       std::optional<PolyMatrix> syzygies)
    : ring_(std::move(ring)), gens_(std::move(generators)), syzygies_(std::move(syzygies)) {
    degrees_.reserve(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (!gens_[i].ring()->same_variables(*ring_))
            throw std::invalid_argument("LieAlgebra: generator over different ring");
        WeightedDegree wd = gens_[i].degree();
        if (!wd.is_homogeneous())
            throw std::invalid_argument("LieAlgebra: generator " + std::to_string(i + 1) +
                                        " is not a homogeneous graded operator");
        degrees_.push_back(wd.value);
    }
}

std::optional<std::vector<Polynomial>> express_in_generators(const Derivation& delta,
                                                             const LieAlgebra& algebra,
                                                             Degree degree_bound) {
    const RingPtr& ring = algebra.ring();
    if (!delta.ring()->same_variables(*ring))
        throw std::invalid_argument("express_in_generators: ring mismatch");

    std::vector<Polynomial> zeros;
    for (int k = 0; k < algebra.rank(); ++k) zeros.push_back(Polynomial::zero(ring));
    if (delta.is_zero()) return zeros;

    WeightedDegree wd = delta.degree();
    if (!wd.is_homogeneous())
        throw std::invalid_argument("express_in_generators: inhomogeneous derivation");
    Degree e = wd.value;

    // unknowns: one per (generator, normal-form monomial of the coefficient slice)
    struct Unknown {
        int gen;
        Exponents mono;
    };
    std::vector<Unknown> unknowns;
    for (int k = 0; k < algebra.rank(); ++k) {
        Degree need = e - algebra.degree(k);
        if (need < 0 || need > degree_bound) continue;
        for (Exponents& mu : monomials_of_degree(*ring, need)) unknowns.push_back({k, std::move(mu)});
    }

    // equations: coefficient of d/dx_v, expanded in the degree-(e + w_v) slice
    std::vector<std::map<Exponents, std::size_t>> row_index(static_cast<std::size_t>(ring->nvars()));
    std::vector<std::size_t> row_offset(static_cast<std::size_t>(ring->nvars()) + 1, 0);
    for (int v = 0; v < ring->nvars(); ++v) {
        auto monos = monomials_of_degree(*ring, e + ring->weight(v));
        for (std::size_t i = 0; i < monos.size(); ++i)
            row_index[static_cast<std::size_t>(v)][monos[i]] = row_offset[static_cast<std::size_t>(v)] + i;
        row_offset[static_cast<std::size_t>(v) + 1] =
            row_offset[static_cast<std::size_t>(v)] + monos.size();
    }
    std::size_t nrows = row_offset.back();

    QMatrix A(nrows, unknowns.size());
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        Polynomial mono = Polynomial::monomial(ring, unknowns[u].mono, 1);
        for (int v = 0; v < ring->nvars(); ++v) {
            Polynomial prod = ring->nf(mono * algebra.generator(unknowns[u].gen).coeff(v));
            for (const Term& t : prod.terms()) {
                auto it = row_index[static_cast<std::size_t>(v)].find(t.exps);
                if (it == row_index[static_cast<std::size_t>(v)].end())
                    throw std::logic_error("express_in_generators: slice index failure");
                A.at(it->second, u) += t.coef;
            }
        }
    }
    std::vector<Rational> b(nrows, Rational(0));
    for (int v = 0; v < ring->nvars(); ++v) {
        const Polynomial& target = delta.coeff(v);
        for (const Term& t : target.terms()) {
            auto it = row_index[static_cast<std::size_t>(v)].find(t.exps);
            if (it == row_index[static_cast<std::size_t>(v)].end()) return std::nullopt;
            b[it->second] = t.coef;
        }
    }

    auto sol = A.solve(b);
    if (!sol) return std::nullopt;

    std::vector<Polynomial> out = zeros;
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        if (is_zero((*sol)[u])) continue;
        out[static_cast<std::size_t>(unknowns[u].gen)] =
            out[static_cast<std::size_t>(unknowns[u].gen)] +
            Polynomial::monomial(ring, unknowns[u].mono, (*sol)[u]);
    }
    return out;
}

}  // namespace lrc
