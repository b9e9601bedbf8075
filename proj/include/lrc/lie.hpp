#pragma once

#include "lrc/derivation.hpp"
#include "lrc/poly.hpp"

#include <optional>
#include <vector>

namespace lrc {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Lie-Rinehart algebra given by derivation generators, each homogeneous as a
// graded operator. The anchor is the inclusion into Der(ring).
class LieAlgebra {
public:
    LieAlgebra(RingPtr ring, std::vector<Derivation> generators,
               std::optional<PolyMatrix> syzygies = std::nullopt);

    const RingPtr& ring() const { return ring_; }
    int rank() const { return static_cast<int>(gens_.size()); }
    const std::vector<Derivation>& generators() const { return gens_; }
    const Derivation& generator(int i) const { return gens_[static_cast<std::size_t>(i)]; }
    Degree degree(int i) const { return degrees_[static_cast<std::size_t>(i)]; }
    const std::vector<Degree>& degrees() const { return degrees_; }
    const std::optional<PolyMatrix>& syzygies() const { return syzygies_; }

private:
    RingPtr ring_;
    std::vector<Derivation> gens_;
    std::vector<Degree> degrees_;
    std::optional<PolyMatrix> syzygies_;
};

// Solve delta = sum_i a_i g_i with homogeneous polynomial coefficients by
// exact slice linear algebra. Free coordinates are set to zero (deterministic
// tie-break). Returns nullopt if no solution exists within the degree bound.
std::optional<std::vector<Polynomial>> express_in_generators(const Derivation& delta,
                                                             const LieAlgebra& algebra,
                                                             Degree degree_bound);

}  // namespace lrc
