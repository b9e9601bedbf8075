#pragma once

#include "lrc/poly.hpp"

#include <random>

namespace lrctest {

using namespace lrc;

inline Polynomial P(const RingPtr& ring, const std::string& text) {
    return parse_polynomial(text, ring);
}

// small random polynomial: up to max_terms terms, exponents <= max_exp,
// coefficients in [-6, 6] with denominators in {1, 2, 3}
inline Polynomial random_poly(const RingPtr& ring, std::mt19937& rng, int max_terms = 4,
                              int max_exp = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expd(0, max_exp);
    std::uniform_int_distribution<int> numd(-6, 6);
    std::uniform_int_distribution<int> dend(1, 3);
    std::vector<Term> terms;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Exponents e;
        for (int v = 0; v < ring->nvars(); ++v) e.push_back(expd(rng));
        terms.push_back({e, rat(numd(rng), dend(rng))});
    }
    return Polynomial::from_terms(ring, terms);
}

// random homogeneous polynomial of the given weighted degree (possibly zero)
inline Polynomial random_homogeneous(const RingPtr& ring, std::mt19937& rng, Degree degree) {
    std::uniform_int_distribution<int> numd(-5, 5);
    Polynomial out = Polynomial::zero(ring);
    for (const Exponents& e : monomials_of_degree(*ring, degree)) {
        int c = numd(rng);
        if (c == 0) continue;
        out = out + Polynomial::monomial(ring, e, Rational(c));
    }
    return out;
}

}  // namespace lrctest
