#include "lrc/module.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrc {

Module& Module::operator=(const Module& o) {
    if (this == &o) return *this;
    ring_ = o.ring_;
    gen_degrees_ = o.gen_degrees_;
    shift_ = o.shift_;
    relations_ = o.relations_;
    relation_degrees_ = o.relation_degrees_;
    std::lock_guard<std::mutex> lk(cache_mu_);
    cache_.clear();
    return *this;
}

Module Module::free_module(const RingPtr& ring, std::vector<Degree> gen_degrees, Degree shift) {
    Module m;
    m.ring_ = ring;
    m.gen_degrees_ = std::move(gen_degrees);
    m.shift_ = shift;
    return m;
}

Module Module::presented(const RingPtr& ring, std::vector<Degree> gen_degrees,
                         std::vector<std::vector<Polynomial>> relations, Degree shift) {
    Module m;
    m.ring_ = ring;
    m.gen_degrees_ = std::move(gen_degrees);
    m.shift_ = shift;
    for (std::size_t j = 0; j < relations.size(); ++j) {
        auto& col = relations[j];
        if (col.size() != m.gen_degrees_.size())
            throw std::invalid_argument("Module: relation length != generator count");
        bool any = false;
        Degree cdeg = 0;
        for (std::size_t i = 0; i < col.size(); ++i) {
            col[i] = ring->nf(col[i]);
            if (col[i].is_zero()) continue;
            WeightedDegree wd = col[i].weighted_degree();
            if (!wd.is_homogeneous())
                throw std::invalid_argument("Module: inhomogeneous presentation entry");
            Degree d = wd.value + m.effective_degree(static_cast<int>(i));
            if (!any) { cdeg = d; any = true; }
            else if (d != cdeg)
                throw std::invalid_argument(
                    "Module: inconsistent generator degrees (presentation column " +
                    std::to_string(j + 1) + " not homogeneous)");
        }
        if (!any) continue;  // zero column carries no information
        m.relations_.push_back(std::move(col));
        m.relation_degrees_.push_back(cdeg);
    }
    return m;
}

Degree Module::min_degree() const {
    if (rank() == 0) return 0;
    Degree d = effective_degree(0);
    for (int i = 1; i < rank(); ++i) d = std::min(d, effective_degree(i));
    return d;
}

bool Module::same_shape(const Module& other) const {
    if (!ring_->equivalent(*other.ring_)) return false;
    if (gen_degrees_ != other.gen_degrees_ || shift_ != other.shift_) return false;
    if (relations_.size() != other.relations_.size()) return false;
    for (std::size_t j = 0; j < relations_.size(); ++j)
        for (std::size_t i = 0; i < relations_[j].size(); ++i)
            if (relations_[j][i] != other.relations_[j][i]) return false;
    return true;
}

ModuleElement Module::zero_element() const {
    ModuleElement e;
    e.reserve(static_cast<std::size_t>(rank()));
    for (int i = 0; i < rank(); ++i) e.push_back(Polynomial::zero(ring_));
    return e;
}

ModuleElement Module::unit_element(int gen) const {
    ModuleElement e = zero_element();
    e[static_cast<std::size_t>(gen)] = Polynomial::constant(ring_, 1);
    return e;
}

const Module::Slice& Module::slice(Degree d) const {
    std::lock_guard<std::mutex> lk(cache_mu_);
    auto it = cache_.find(d);
    if (it != cache_.end()) return it->second;

    Slice s;
    s.degree = d;
    for (int g = 0; g < rank(); ++g) {
        Degree need = d - effective_degree(g);
        for (Exponents& e : monomials_of_degree(*ring_, need)) s.pairs.emplace_back(g, std::move(e));
    }
    s.image = RowSpace(s.pairs.size());

    // index pairs for expansion
    std::map<std::pair<int, Exponents>, std::size_t> index;
    for (std::size_t i = 0; i < s.pairs.size(); ++i) index[s.pairs[i]] = i;

    auto expand = [&](const ModuleElement& elem) {
        std::vector<Rational> v(s.pairs.size(), Rational(0));
        for (int g = 0; g < rank(); ++g) {
            const Polynomial& p = elem[static_cast<std::size_t>(g)];
            for (const Term& t : p.terms()) {
                auto found = index.find({g, t.exps});
                if (found == index.end())
                    throw std::logic_error("Module::slice: term outside slice basis");
                v[found->second] += t.coef;
            }
        }
        return v;
    };

    for (std::size_t j = 0; j < relations_.size(); ++j) {
        Degree need = d - relation_degrees_[j];
        for (const Exponents& mu : monomials_of_degree(*ring_, need)) {
            Polynomial mono = Polynomial::monomial(ring_, mu, 1);
            ModuleElement img;
            img.reserve(relations_[j].size());
            for (const Polynomial& p : relations_[j]) img.push_back(ring_->nf(mono * p));
            s.image.insert(expand(img));
        }
    }
    std::vector<bool> is_pivot(s.pairs.size(), false);
    for (std::size_t p : s.image.pivots()) is_pivot[p] = true;
    for (std::size_t i = 0; i < s.pairs.size(); ++i)
        if (!is_pivot[i]) s.quotient_cols.push_back(i);

    return cache_.emplace(d, std::move(s)).first->second;
}

int Module::slice_dim(Degree d) const {
    return static_cast<int>(slice(d).quotient_cols.size());
}

std::vector<ModuleElement> Module::slice_basis(Degree d) const {
    const Slice& s = slice(d);
    std::vector<ModuleElement> basis;
    basis.reserve(s.quotient_cols.size());
    for (std::size_t c : s.quotient_cols) {
        ModuleElement e = zero_element();
        const auto& [g, exps] = s.pairs[c];
        e[static_cast<std::size_t>(g)] = Polynomial::monomial(ring_, exps, 1);
        basis.push_back(std::move(e));
    }
    return basis;
}

std::vector<Rational> Module::coords(const ModuleElement& elem, Degree d) const {
    if (elem.size() != static_cast<std::size_t>(rank()))
        throw std::invalid_argument("Module::coords: element length mismatch");
    const Slice& s = slice(d);
    std::vector<Rational> v(s.pairs.size(), Rational(0));
    std::map<std::pair<int, Exponents>, std::size_t> index;
    for (std::size_t i = 0; i < s.pairs.size(); ++i) index[s.pairs[i]] = i;
    for (int g = 0; g < rank(); ++g) {
        Polynomial p = ring_->nf(elem[static_cast<std::size_t>(g)]);
        if (p.is_zero()) continue;
        WeightedDegree wd = p.weighted_degree();
        if (!wd.is_homogeneous() || wd.value != d - effective_degree(g))
            throw std::invalid_argument("Module::coords: component not homogeneous of slice degree");
        for (const Term& t : p.terms()) {
            auto found = index.find({g, t.exps});
            if (found == index.end()) throw std::logic_error("Module::coords: term outside slice");
            v[found->second] += t.coef;
        }
    }
    std::vector<Rational> reduced = s.image.reduce(std::move(v));
    std::vector<Rational> out;
    out.reserve(s.quotient_cols.size());
    for (std::size_t c : s.quotient_cols) out.push_back(reduced[c]);
    return out;
}

ModuleElement Module::element_from_coords(const std::vector<Rational>& coords, Degree d) const {
    const Slice& s = slice(d);
    if (coords.size() != s.quotient_cols.size())
        throw std::invalid_argument("Module::element_from_coords: coordinate count mismatch");
    ModuleElement e = zero_element();
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (is_zero(coords[i])) continue;
        const auto& [g, exps] = s.pairs[s.quotient_cols[i]];
        e[static_cast<std::size_t>(g)] =
            e[static_cast<std::size_t>(g)] + Polynomial::monomial(ring_, exps, coords[i]);
    }
    return e;
}

bool Module::element_is_zero(const ModuleElement& elem, Degree d) const {
    for (const Rational& c : coords(elem, d))
        if (!is_zero(c)) return false;
    return true;
}

WeightedDegree Module::element_degree(const ModuleElement& elem) const {
    WeightedDegree out = WeightedDegree::bottom();
    for (int g = 0; g < rank(); ++g) {
        const Polynomial& p = elem[static_cast<std::size_t>(g)];
        if (p.is_zero()) continue;
        WeightedDegree wd = p.weighted_degree();
        if (!wd.is_homogeneous()) return WeightedDegree::inhomogeneous();
        Degree d = wd.value + effective_degree(g);
        if (out.is_bottom()) out = WeightedDegree::of(d);
        else if (out.value != d) return WeightedDegree::inhomogeneous();
    }
    return out;
}

ModuleElement Module::nf_element(const ModuleElement& elem) const {
    ModuleElement out;
    out.reserve(elem.size());
    for (const Polynomial& p : elem) out.push_back(ring_->nf(p));
    return out;
}

Module direct_sum(const Module& a, const Module& b) {
    if (!a.ring()->equivalent(*b.ring()))
        throw std::invalid_argument("direct_sum: modules over different rings");
    std::vector<Degree> degrees;
    for (int i = 0; i < a.rank(); ++i) degrees.push_back(a.effective_degree(i));
    for (int i = 0; i < b.rank(); ++i) degrees.push_back(b.effective_degree(i));
    std::vector<std::vector<Polynomial>> rels;
    auto zero = Polynomial::zero(a.ring());
    for (const auto& col : a.relations()) {
        std::vector<Polynomial> c = col;
        c.resize(degrees.size(), zero);
        rels.push_back(std::move(c));
    }
    for (const auto& col : b.relations()) {
        std::vector<Polynomial> c(static_cast<std::size_t>(a.rank()), zero);
        c.insert(c.end(), col.begin(), col.end());
        rels.push_back(std::move(c));
    }
    return Module::presented(a.ring(), std::move(degrees), std::move(rels), 0);
}

}  // namespace lrc
