#pragma once

#include "lrc/poly.hpp"

#include <vector>

namespace lrc {

// Derivation of the ring: one coefficient polynomial per variable, acting by
// partial derivatives followed by normal form. Construction verifies that the
// derivation preserves the relation ideal, so it descends to the quotient.
class Derivation {
public:
    Derivation(RingPtr ring, std::vector<Polynomial> coeffs);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& coeffs() const { return coeffs_; }
    const Polynomial& coeff(int var) const { return coeffs_[static_cast<std::size_t>(var)]; }

    bool is_zero() const;

    // apply to a ring element, normal-formed
    Polynomial operator()(const Polynomial& a) const;

    Derivation bracket(const Derivation& other) const;

    Derivation operator+(const Derivation& o) const;
    Derivation operator-(const Derivation& o) const;
    Derivation scaled(const Polynomial& a) const;
    Derivation scaled(const Rational& c) const;
    bool operator==(const Derivation& o) const;

    // operator degree: a coefficient on d/dx_i of weighted degree w maps
    // degree-d elements to degree d + (w - weight(x_i))
    WeightedDegree degree() const;

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> coeffs_;
};

// coordinate derivation d/dx_v
Derivation partial(const RingPtr& ring, int var);

}  // namespace lrc
