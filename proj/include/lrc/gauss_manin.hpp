#pragma once

#include "lrc/complex.hpp"

#include <map>
#include <string>
#include <vector>

namespace lrc {

// One generator of the quotient algebra H: its action on the distinguished
// invariants and a designated lift into the total algebra.
struct HGenerator {
    std::string name;
    std::vector<Polynomial> action;  // value on each invariant, in ambient coordinates
    Derivation lift;
};

// 0 -> K -> L -> H -> 0 presented operationally: K and L by generators, H by
// generators with invariant-ring actions and lifts. Construction validates
//   - every K generator annihilates every invariant,
//   - every K generator is expressible in L,
//   - each lift normalizes K ([lift, k] lands in K) and acts on the
//     invariants exactly as its H generator prescribes.
class LRSequence {
public:
    LRSequence(LieAlgebra kernel, LieAlgebra total, std::vector<Polynomial> invariants,
               std::vector<HGenerator> hgens, Degree expr_bound);

    const LieAlgebra& kernel() const { return kernel_; }
    const LieAlgebra& total() const { return total_; }
    const std::vector<Polynomial>& invariants() const { return invariants_; }
    const std::vector<HGenerator>& hgens() const { return hgens_; }
    const HGenerator& hgen(int h) const { return hgens_[static_cast<std::size_t>(h)]; }
    Degree expr_bound() const { return expr_bound_; }
    Degree lift_degree(int h) const;

    // lift of h expressed in the total algebra's generators
    const std::vector<Polynomial>& lift_in_total(int h) const {
        return lift_in_total_[static_cast<std::size_t>(h)];
    }
    // [lift_h, k_s] expressed in the kernel's generators
    const std::vector<Polynomial>& lift_bracket_in_kernel(int h, int s) const {
        return lift_brackets_[static_cast<std::size_t>(h)][static_cast<std::size_t>(s)];
    }

private:
    LieAlgebra kernel_, total_;
    std::vector<Polynomial> invariants_;
    std::vector<HGenerator> hgens_;
    Degree expr_bound_;
    std::vector<std::vector<Polynomial>> lift_in_total_;
    std::vector<std::vector<std::vector<Polynomial>>> lift_brackets_;
};

struct HorizontalSections {
    Degree lo = 0, hi = 0;
    std::map<Degree, std::vector<ModuleElement>> basis;  // echelon, per degree
    int dim(Degree d) const {
        auto it = basis.find(d);
        return it == basis.end() ? 0 : static_cast<int>(it->second.size());
    }
};

// Exact kernel of the stacked generator actions per degree. The connection
// must be over the kernel algebra and flat on its generator pairs (checked).
HorizontalSections horizontal_sections(const Connection& conn_over_kernel, Degree max_degree);

// nabla-bar(h)(w) = nabla(lift_h)(w) for horizontal w; verifies both that w is
// horizontal and that the result is again horizontal.
ModuleElement induced_connection_action(const LRSequence& seq, const Connection& conn_over_total,
                                        int h, const ModuleElement& w);

// Matrix of the lift action on the degree-d slice of C^p(K, W): the
// Lie-derivative-style formula
//   (y.phi)(k_1 ^ ... ^ k_p) = nabla_y(phi(k_1 ^ ...)) - sum_s phi(... [y,k_s] ...)
// restricting to nabla_y at p = 0. Maps C^p(d) to C^p(d + deg y).
QMatrix cochain_action_matrix(const LRSequence& seq, const Connection& conn_over_total,
                              const StandardComplex& cx_kernel, int h, int p, Degree d);

struct GmAction {
    int index = 0;          // cohomological index i
    Degree lo = 0, hi = 0;  // degree range of the source slices
    // per H generator: degree d -> matrix H^i(d) -> H^i(d + deg lift)
    std::vector<std::map<Degree, QMatrix>> matrices;
};

// Induced action on H^i(K, W); validates that cocycles map to cocycles and
// that the action commutes with the differential on every slice in range.
GmAction gm_matrices(const LRSequence& seq, const Connection& conn_over_total, int i,
                     Degree max_degree);

struct GysinClass {
    Degree lo = 0, hi = 0;
    std::map<Degree, long> chi;  // per-degree alternating sum of H^i dimensions
    long at(Degree d) const {
        auto it = chi.find(d);
        return it == chi.end() ? 0 : it->second;
    }
};

GysinClass gysin_class(const StandardComplex& cx_kernel, Degree max_degree);
GysinClass gysin_class(const LRSequence& seq, const Connection& conn_over_total, Degree max_degree);

}  // namespace lrc
