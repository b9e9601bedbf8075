#pragma once

#include "lrc/poly.hpp"
#include "lrc/qmatrix.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace lrc {

// Element of a presented module: one coefficient polynomial per generator.
using ModuleElement = std::vector<Polynomial>;

// Graded module presented by generators with degrees and a (possibly empty)
// list of homogeneous relations; each relation is one column vector over the
// generators. Graded slices are finite-dimensional because weights are >= 1.
class Module {
public:
    static Module free_module(const RingPtr& ring, std::vector<Degree> gen_degrees,
                              Degree shift = 0);
    static Module presented(const RingPtr& ring, std::vector<Degree> gen_degrees,
                            std::vector<std::vector<Polynomial>> relations, Degree shift = 0);

    const RingPtr& ring() const { return ring_; }
    int rank() const { return static_cast<int>(gen_degrees_.size()); }
    Degree shift() const { return shift_; }
    const std::vector<Degree>& gen_degrees() const { return gen_degrees_; }
    Degree effective_degree(int i) const { return gen_degrees_[static_cast<std::size_t>(i)] + shift_; }
    Degree min_degree() const;
    const std::vector<std::vector<Polynomial>>& relations() const { return relations_; }
    const std::vector<Degree>& relation_degrees() const { return relation_degrees_; }

    bool same_shape(const Module& other) const;

    ModuleElement zero_element() const;
    ModuleElement unit_element(int gen) const;

    // Degree-d slice data: free basis of (generator, normal-form monomial)
    // pairs, and the relation image in reduced echelon form.
    struct Slice {
        Degree degree = 0;
        std::vector<std::pair<int, Exponents>> pairs;  // canonical order
        RowSpace image;                                // relation image in pair coordinates
        std::vector<std::size_t> quotient_cols;        // non-pivot pair indices
    };

    const Slice& slice(Degree d) const;
    int slice_dim(Degree d) const;

    // Coset representatives: the unit generator x monomial vectors at the
    // non-pivot columns. Deterministic order.
    std::vector<ModuleElement> slice_basis(Degree d) const;

    // Coordinates of a homogeneous element in the degree-d quotient basis
    // (reduces modulo the relation image). Throws if a component's degree is
    // inconsistent with d.
    std::vector<Rational> coords(const ModuleElement& elem, Degree d) const;

    ModuleElement element_from_coords(const std::vector<Rational>& coords, Degree d) const;

    // True when every component reduces to zero in its slice.
    bool element_is_zero(const ModuleElement& elem, Degree d) const;

    // Weighted degree of an element (bottom if zero, throws if mixed).
    WeightedDegree element_degree(const ModuleElement& elem) const;

    // Normal form of every component.
    ModuleElement nf_element(const ModuleElement& elem) const;

private:
    Module() = default;
    RingPtr ring_;
    std::vector<Degree> gen_degrees_;
    Degree shift_ = 0;
    std::vector<std::vector<Polynomial>> relations_;
    std::vector<Degree> relation_degrees_;

    mutable std::mutex cache_mu_;
    mutable std::map<Degree, Slice> cache_;

    // copying keeps the presentation, not the cache
public:
    Module(const Module& o)
        : ring_(o.ring_), gen_degrees_(o.gen_degrees_), shift_(o.shift_),
          relations_(o.relations_), relation_degrees_(o.relation_degrees_) {}
    Module& operator=(const Module& o);
};

// Block direct sum of two modules over the same ring.
Module direct_sum(const Module& a, const Module& b);

}  // namespace lrc
