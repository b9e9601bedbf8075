#pragma once

#include "lrc/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lrc {

using Degree = std::int64_t;
using Exponents = std::vector<int>;

class Ring;
class Polynomial;
using RingPtr = std::shared_ptr<const Ring>;

// Weighted degree of a polynomial: a number for homogeneous ones, a marker
// otherwise. The zero polynomial gets a distinct bottom value, never -1 or 0.
struct WeightedDegree {
    enum class Kind { bottom, inhomogeneous, homogeneous };
    Kind kind = Kind::bottom;
    Degree value = 0;

    static WeightedDegree bottom() { return {Kind::bottom, 0}; }
    static WeightedDegree inhomogeneous() { return {Kind::inhomogeneous, 0}; }
    static WeightedDegree of(Degree d) { return {Kind::homogeneous, d}; }

    bool is_homogeneous() const { return kind == Kind::homogeneous; }
    bool is_bottom() const { return kind == Kind::bottom; }
    bool operator==(const WeightedDegree& o) const {
        return kind == o.kind && (kind != Kind::homogeneous || value == o.value);
    }
};

struct Term {
    Exponents exps;
    Rational coef;
};

// Single quasi-homogeneous relation with a designated pure-power reduction
// monomial var^exponent; every normal form keeps that variable's exponent
// below `exponent`.
struct Relation {
    std::vector<Term> terms;
    int var = 0;
    int exponent = 0;
    Rational lead_coef;
};

// Ambient variable list with per-variable positive weights, optionally
// modulo one hypersurface relation. Immutable; shared by polynomials.
class Ring : public std::enable_shared_from_this<Ring> {
public:
    static RingPtr free_ring(std::vector<std::string> names, std::vector<Degree> weights);
    static RingPtr quotient(const RingPtr& base, const Polynomial& relation,
                            const std::string& reduce_var, int reduce_exp);

    int nvars() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    const std::vector<Degree>& weights() const { return weights_; }
    Degree weight(int i) const { return weights_[static_cast<std::size_t>(i)]; }
    std::optional<int> var_index(const std::string& name) const;

    bool has_relation() const { return relation_.has_value(); }
    const Relation& relation() const { return *relation_; }
    Polynomial relation_poly() const;

    // Same variable names and weights (relation may differ).
    bool same_variables(const Ring& other) const;
    bool equivalent(const Ring& other) const;

    Degree exps_degree(const Exponents& e) const;
    bool exps_normal(const Exponents& e) const;

    // p = q * relation + r with r in normal form; (0, p) when no relation.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& p) const;
    Polynomial nf(const Polynomial& p) const;

private:
    Ring() = default;
    std::vector<std::string> names_;
    std::vector<Degree> weights_;
    std::optional<Relation> relation_;
};

// Sparse exact-coefficient polynomial over a Ring. Terms are kept sorted by
// (weighted degree, lexicographic exponents); no zero coefficient is stored.
// Arithmetic never reduces modulo the relation: nf is always explicit.
class Polynomial {
public:
    Polynomial() = default;  // null; only assignment and destruction allowed

    static Polynomial zero(const RingPtr& ring);
    static Polynomial constant(const RingPtr& ring, const Rational& c);
    static Polynomial variable(const RingPtr& ring, int var);
    static Polynomial monomial(const RingPtr& ring, Exponents exps, const Rational& c);
    static Polynomial from_terms(const RingPtr& ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    bool is_null() const { return ring_ == nullptr; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const std::vector<Term>& terms() const { return terms_; }
    Rational constant_value() const;  // coefficient of the constant term

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned e) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial diff(int var) const;
    Polynomial diff(const std::string& var) const;

    WeightedDegree weighted_degree() const;

    std::string str() const;

private:
    friend class Ring;
    RingPtr ring_;
    std::vector<Term> terms_;

    void check_ring(const Polynomial& o) const;
    void normalize();  // sort terms, merge duplicates, drop zeros
};

inline Polynomial nf(const Polynomial& p, const RingPtr& ring) { return ring->nf(p); }

// Normal-form monomials of the given weighted degree, in term order.
std::vector<Exponents> monomials_of_degree(const Ring& ring, Degree d);

struct SourcePos {
    int line = 1;
    int col = 1;
};

class parse_error : public std::runtime_error {
public:
    parse_error(SourcePos pos, const std::string& message);
    SourcePos pos;
};

// Integer parameters (task-section symbols) substituted at parse time in
// coefficient and exponent positions.
using ParamEnv = std::map<std::string, long>;

// Grammar: integers, rationals p/q, variable names, + - * ^, parentheses;
// exponents are nonnegative integers (or parenthesized integer expressions
// over ParamEnv names).
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring,
                            const ParamEnv* env = nullptr, SourcePos base = {1, 1});

}  // namespace lrc
