#include "lrc/derivation.hpp"

#include <sstream>
#include <stdexcept>

namespace lrc {

Derivation::Derivation(RingPtr ring, std::vector<Polynomial> coeffs) : ring_(std::move(ring)) {
    if (coeffs.size() != static_cast<std::size_t>(ring_->nvars()))
        throw std::invalid_argument("Derivation: coefficient count != variable count");
    coeffs_.reserve(coeffs.size());
    for (Polynomial& p : coeffs) {
        if (!p.ring()->same_variables(*ring_))
            throw std::invalid_argument("Derivation: coefficient over wrong ring");
        coeffs_.push_back(ring_->nf(p));
    }
    if (ring_->has_relation()) {
        // the derivation must map the relation into the ideal it generates
        Polynomial rel = ring_->relation_poly();
        Polynomial value = Polynomial::zero(ring_);
        for (int v = 0; v < ring_->nvars(); ++v) value = value + coeffs_[static_cast<std::size_t>(v)] * rel.diff(v);
        if (!ring_->nf(value).is_zero())
            throw std::invalid_argument("Derivation: does not preserve the relation ideal (delta(f) = " +
                                        ring_->nf(value).str() + " mod f)");
    }
}

bool Derivation::is_zero() const {
    for (const Polynomial& p : coeffs_)
        if (!p.is_zero()) return false;
    return true;
}

Polynomial Derivation::operator()(const Polynomial& a) const {
    if (!a.ring()->same_variables(*ring_))
        throw std::invalid_argument("Derivation: argument over different ring");
    Polynomial out = Polynomial::zero(ring_);
    for (int v = 0; v < ring_->nvars(); ++v) {
        if (coeffs_[static_cast<std::size_t>(v)].is_zero()) continue;
        out = out + coeffs_[static_cast<std::size_t>(v)] * a.diff(v);
    }
    return ring_->nf(out);
}

Derivation Derivation::bracket(const Derivation& other) const {
    if (!other.ring_->same_variables(*ring_))
        throw std::invalid_argument("Derivation::bracket: ring mismatch");
    std::vector<Polynomial> out;
    out.reserve(coeffs_.size());
    for (int v = 0; v < ring_->nvars(); ++v)
        out.push_back((*this)(other.coeffs_[static_cast<std::size_t>(v)]) -
                      other(coeffs_[static_cast<std::size_t>(v)]));
    return Derivation(ring_, std::move(out));
}

Derivation Derivation::operator+(const Derivation& o) const {
    std::vector<Polynomial> out;
    out.reserve(coeffs_.size());
    for (std::size_t v = 0; v < coeffs_.size(); ++v) out.push_back(coeffs_[v] + o.coeffs_[v]);
    return Derivation(ring_, std::move(out));
}

Derivation Derivation::operator-(const Derivation& o) const {
    std::vector<Polynomial> out;
    out.reserve(coeffs_.size());
    for (std::size_t v = 0; v < coeffs_.size(); ++v) out.push_back(coeffs_[v] - o.coeffs_[v]);
    return Derivation(ring_, std::move(out));
}

Derivation Derivation::scaled(const Polynomial& a) const {
    std::vector<Polynomial> out;
    out.reserve(coeffs_.size());
    for (const Polynomial& p : coeffs_) out.push_back(ring_->nf(a * p));
    return Derivation(ring_, std::move(out));
}

Derivation Derivation::scaled(const Rational& c) const {
    std::vector<Polynomial> out;
    out.reserve(coeffs_.size());
    for (const Polynomial& p : coeffs_) out.push_back(p.scaled(c));
    return Derivation(ring_, std::move(out));
}

bool Derivation::operator==(const Derivation& o) const {
    if (!ring_->same_variables(*o.ring_)) return false;
    for (std::size_t v = 0; v < coeffs_.size(); ++v)
        if (coeffs_[v] != o.coeffs_[v]) return false;
    return true;
}

WeightedDegree Derivation::degree() const {
    WeightedDegree out = WeightedDegree::bottom();
    for (int v = 0; v < ring_->nvars(); ++v) {
        const Polynomial& p = coeffs_[static_cast<std::size_t>(v)];
        if (p.is_zero()) continue;
        WeightedDegree wd = p.weighted_degree();
        if (!wd.is_homogeneous()) return WeightedDegree::inhomogeneous();
        Degree d = wd.value - ring_->weight(v);
        if (out.is_bottom()) out = WeightedDegree::of(d);
        else if (out.value != d) return WeightedDegree::inhomogeneous();
    }
    return out;
}

std::string Derivation::str() const {
    std::ostringstream os;
    bool first = true;
    for (int v = 0; v < ring_->nvars(); ++v) {
        const Polynomial& p = coeffs_[static_cast<std::size_t>(v)];
        if (p.is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << p.str() << ")*d/d" << ring_->name(v);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Derivation partial(const RingPtr& ring, int var) {
    std::vector<Polynomial> coeffs;
    coeffs.reserve(static_cast<std::size_t>(ring->nvars()));
    for (int v = 0; v < ring->nvars(); ++v)
        coeffs.push_back(v == var ? Polynomial::constant(ring, 1) : Polynomial::zero(ring));
    return Derivation(ring, std::move(coeffs));
}

}  // namespace lrc
