#include "lrc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lrc {

namespace {

bool term_exps_less(const Ring& ring, const Exponents& a, const Exponents& b) {
    Degree da = ring.exps_degree(a), db = ring.exps_degree(b);
    if (da != db) return da < db;
    return a < b;
}

}  // namespace

// ---------------------------------------------------------------------------
// Ring

RingPtr Ring::free_ring(std::vector<std::string> names, std::vector<Degree> weights) {
    if (names.size() != weights.size())
        throw std::invalid_argument("Ring: variable/weight count mismatch");
    for (Degree w : weights)
        if (w < 1) throw std::invalid_argument("Ring: weights must be >= 1");
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) throw std::invalid_argument("Ring: duplicate variable name");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->names_ = std::move(names);
    r->weights_ = std::move(weights);
    return r;
}

RingPtr Ring::quotient(const RingPtr& base, const Polynomial& relation,
                       const std::string& reduce_var, int reduce_exp) {
    if (!relation.ring()->same_variables(*base))
        throw std::invalid_argument("Ring::quotient: relation over different variables");
    auto vi = base->var_index(reduce_var);
    if (!vi) throw std::invalid_argument("Ring::quotient: unknown reduction variable " + reduce_var);
    if (reduce_exp < 1) throw std::invalid_argument("Ring::quotient: reduction exponent must be >= 1");
    if (!relation.weighted_degree().is_homogeneous())
        throw std::invalid_argument("Ring::quotient: relation is not quasi-homogeneous");

    Relation rel;
    rel.var = *vi;
    rel.exponent = reduce_exp;
    bool found = false;
    for (const Term& t : relation.terms()) {
        bool pure = true;
        for (int v = 0; v < base->nvars(); ++v) {
            int want = (v == rel.var) ? reduce_exp : 0;
            if (t.exps[static_cast<std::size_t>(v)] != want) { pure = false; break; }
        }
        if (pure) {
            rel.lead_coef = t.coef;
            found = true;
        } else if (t.exps[static_cast<std::size_t>(rel.var)] >= reduce_exp) {
            throw std::invalid_argument(
                "Ring::quotient: relation has a non-reducible term in the reduction variable");
        }
    }
    if (!found)
        throw std::invalid_argument("Ring::quotient: reduction monomial " + reduce_var + "^" +
                                    std::to_string(reduce_exp) + " absent from relation");
    rel.terms = relation.terms();

    auto r = std::shared_ptr<Ring>(new Ring());
    r->names_ = base->names();
    r->weights_ = base->weights();
    r->relation_ = std::move(rel);
    return r;
}

std::optional<int> Ring::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

Polynomial Ring::relation_poly() const {
    if (!relation_) throw std::logic_error("Ring::relation_poly: no relation");
    return Polynomial::from_terms(shared_from_this(), relation_->terms);
}

bool Ring::same_variables(const Ring& other) const {
    return names_ == other.names_ && weights_ == other.weights_;
}

bool Ring::equivalent(const Ring& other) const {
    if (!same_variables(other)) return false;
    if (relation_.has_value() != other.relation_.has_value()) return false;
    if (!relation_) return true;
    if (relation_->var != other.relation_->var || relation_->exponent != other.relation_->exponent)
        return false;
    if (relation_->terms.size() != other.relation_->terms.size()) return false;
    for (std::size_t i = 0; i < relation_->terms.size(); ++i) {
        if (relation_->terms[i].exps != other.relation_->terms[i].exps ||
            relation_->terms[i].coef != other.relation_->terms[i].coef)
            return false;
    }
    return true;
}

Degree Ring::exps_degree(const Exponents& e) const {
    Degree d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += weights_[i] * e[i];
    return d;
}

bool Ring::exps_normal(const Exponents& e) const {
    if (!relation_) return true;
    return e[static_cast<std::size_t>(relation_->var)] < relation_->exponent;
}

std::pair<Polynomial, Polynomial> Ring::divmod(const Polynomial& p) const {
    if (!p.ring()->same_variables(*this))
        throw std::invalid_argument("Ring::divmod: variable mismatch");
    RingPtr self = shared_from_this();
    if (!relation_) return {Polynomial::zero(self), Polynomial::from_terms(self, p.terms())};

    const Relation& rel = *relation_;
    Polynomial quotient = Polynomial::zero(self);
    Polynomial r = Polynomial::from_terms(self, p.terms());
    Polynomial relp = relation_poly();
    while (true) {
        // highest term with reducible exponent (terms are sorted ascending)
        const Term* top = nullptr;
        for (auto it = r.terms().rbegin(); it != r.terms().rend(); ++it) {
            if (it->exps[static_cast<std::size_t>(rel.var)] >= rel.exponent) { top = &*it; break; }
        }
        if (!top) break;
        Exponents mu = top->exps;
        mu[static_cast<std::size_t>(rel.var)] -= rel.exponent;
        Polynomial factor = Polynomial::monomial(self, mu, top->coef / rel.lead_coef);
        quotient = quotient + factor;
        r = r - factor * relp;
    }
    return {quotient, r};
}

Polynomial Ring::nf(const Polynomial& p) const { return divmod(p).second; }

std::vector<Exponents> monomials_of_degree(const Ring& ring, Degree d) {
    std::vector<Exponents> out;
    if (d < 0) return out;
    Exponents cur(static_cast<std::size_t>(ring.nvars()), 0);
    // depth-first over exponent vectors; weights >= 1 bound every exponent
    auto rec = [&](auto&& self, int var, Degree remaining) -> void {
        if (var == ring.nvars()) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        Degree w = ring.weight(var);
        int cap = static_cast<int>(remaining / w);
        if (ring.has_relation() && ring.relation().var == var)
            cap = std::min(cap, ring.relation().exponent - 1);
        for (int e = 0; e <= cap; ++e) {
            cur[static_cast<std::size_t>(var)] = e;
            self(self, var + 1, remaining - w * e);
        }
        cur[static_cast<std::size_t>(var)] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(),
              [&](const Exponents& a, const Exponents& b) { return term_exps_less(ring, a, b); });
    return out;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::zero(const RingPtr& ring) {
    Polynomial p;
    p.ring_ = ring;
    return p;
}

Polynomial Polynomial::constant(const RingPtr& ring, const Rational& c) {
    Polynomial p = zero(ring);
    if (!lrc::is_zero(c))
        p.terms_.push_back({Exponents(static_cast<std::size_t>(ring->nvars()), 0), c});
    return p;
}

Polynomial Polynomial::variable(const RingPtr& ring, int var) {
    if (var < 0 || var >= ring->nvars())
        throw std::invalid_argument("Polynomial::variable: index out of range");
    Exponents e(static_cast<std::size_t>(ring->nvars()), 0);
    e[static_cast<std::size_t>(var)] = 1;
    return monomial(ring, std::move(e), 1);
}

Polynomial Polynomial::monomial(const RingPtr& ring, Exponents exps, const Rational& c) {
    if (exps.size() != static_cast<std::size_t>(ring->nvars()))
        throw std::invalid_argument("Polynomial::monomial: exponent vector length mismatch");
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("Polynomial::monomial: negative exponent");
    Polynomial p = zero(ring);
    if (!lrc::is_zero(c)) p.terms_.push_back({std::move(exps), c});
    return p;
}

Polynomial Polynomial::from_terms(const RingPtr& ring, std::vector<Term> terms) {
    Polynomial p = zero(ring);
    for (const Term& t : terms)
        if (t.exps.size() != static_cast<std::size_t>(ring->nvars()))
            throw std::invalid_argument("Polynomial::from_terms: exponent vector length mismatch");
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    for (int e : terms_[0].exps)
        if (e != 0) return false;
    return true;
}

Rational Polynomial::constant_value() const {
    for (const Term& t : terms_) {
        bool is_const = true;
        for (int e : t.exps)
            if (e != 0) { is_const = false; break; }
        if (is_const) return t.coef;
    }
    return Rational(0);
}

void Polynomial::check_ring(const Polynomial& o) const {
    if (is_null() || o.is_null()) throw std::logic_error("Polynomial: null operand");
    if (ring_ != o.ring_ && !ring_->same_variables(*o.ring_))
        throw std::invalid_argument("Polynomial: variable-count mismatch between operands");
}

void Polynomial::normalize() {
    const Ring& ring = *ring_;
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
        return term_exps_less(ring, a.exps, b.exps);
    });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (Term& t : terms_) {
        if (!merged.empty() && merged.back().exps == t.exps)
            merged.back().coef += t.coef;
        else
            merged.push_back(std::move(t));
        if (!merged.empty() && lrc::is_zero(merged.back().coef)) merged.pop_back();
    }
    terms_ = std::move(merged);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_ring(o);
    Polynomial out = zero(ring_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    const Ring& ring = *ring_;
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() ||
            (i < terms_.size() && term_exps_less(ring, terms_[i].exps, o.terms_[j].exps))) {
            out.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || term_exps_less(ring, o.terms_[j].exps, terms_[i].exps)) {
            out.terms_.push_back(o.terms_[j++]);
        } else {
            Rational c = terms_[i].coef + o.terms_[j].coef;
            if (!lrc::is_zero(c)) out.terms_.push_back({terms_[i].exps, c});
            ++i;
            ++j;
        }
    }
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (Term& t : out.terms_) t.coef = -t.coef;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_ring(o);
    Polynomial out = zero(ring_);
    for (const Term& a : terms_)
        for (const Term& b : o.terms_) {
            Exponents e = a.exps;
            for (std::size_t v = 0; v < e.size(); ++v) e[v] += b.exps[v];
            out.terms_.push_back({std::move(e), a.coef * b.coef});
        }
    out.normalize();
    return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (lrc::is_zero(c)) return zero(ring_);
    Polynomial out = *this;
    for (Term& t : out.terms_) t.coef *= c;
    return out;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial out = constant(ring_, 1);
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (is_null() && o.is_null()) return true;
    if (is_null() || o.is_null()) return false;
    if (!ring_->same_variables(*o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exps != o.terms_[i].exps || terms_[i].coef != o.terms_[i].coef) return false;
    return true;
}

Polynomial Polynomial::diff(int var) const {
    if (is_null()) throw std::logic_error("Polynomial::diff: null");
    if (var < 0 || var >= ring_->nvars())
        throw std::invalid_argument("Polynomial::diff: unknown variable");
    Polynomial out = zero(ring_);
    for (const Term& t : terms_) {
        int e = t.exps[static_cast<std::size_t>(var)];
        if (e == 0) continue;
        Exponents ex = t.exps;
        ex[static_cast<std::size_t>(var)] = e - 1;
        out.terms_.push_back({std::move(ex), t.coef * e});
    }
    out.normalize();
    return out;
}

Polynomial Polynomial::diff(const std::string& var) const {
    auto vi = ring_->var_index(var);
    if (!vi) throw std::invalid_argument("Polynomial::diff: unknown variable " + var);
    return diff(*vi);
}

WeightedDegree Polynomial::weighted_degree() const {
    if (is_null()) throw std::logic_error("Polynomial::weighted_degree: null");
    if (terms_.empty()) return WeightedDegree::bottom();
    Degree d = ring_->exps_degree(terms_.front().exps);
    for (const Term& t : terms_)
        if (ring_->exps_degree(t.exps) != d) return WeightedDegree::inhomogeneous();
    return WeightedDegree::of(d);
}

std::string Polynomial::str() const {
    if (is_null()) return "<null>";
    if (terms_.empty()) return "0";
    std::ostringstream os;
    // highest-degree terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Term& t = *it;
        bool first = (it == terms_.rbegin());
        Rational c = t.coef;
        if (first) {
            if (sgn(c) < 0) { os << "-"; c = -c; }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
            if (sgn(c) < 0) c = -c;
        }
        std::vector<std::string> factors;
        bool any_var = false;
        for (std::size_t v = 0; v < t.exps.size(); ++v) {
            int e = t.exps[v];
            if (e == 0) continue;
            any_var = true;
            if (e == 1)
                factors.push_back(ring_->name(static_cast<int>(v)));
            else
                factors.push_back(ring_->name(static_cast<int>(v)) + "^" + std::to_string(e));
        }
        if (!any_var || c != Rational(1)) factors.insert(factors.begin(), rational_str(c));
        for (std::size_t f = 0; f < factors.size(); ++f) {
            if (f) os << "*";
            os << factors[f];
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Parser

parse_error::parse_error(SourcePos p, const std::string& message)
    : std::runtime_error("parse error at line " + std::to_string(p.line) + ", col " +
                         std::to_string(p.col) + ": " + message),
      pos(p) {}

namespace {

class PolyParser {
public:
    PolyParser(const std::string& text, const RingPtr& ring, const ParamEnv* env, SourcePos base)
        : text_(text), ring_(ring), env_(env), pos_(0), line_(base.line), col_(base.col) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    const std::string& text_;
    RingPtr ring_;
    const ParamEnv* env_;
    std::size_t pos_;
    int line_, col_;

    [[noreturn]] void fail(const std::string& msg) { throw parse_error({line_, col_}, msg); }

    void advance() {
        if (text_[pos_] == '\n') { ++line_; col_ = 1; }
        else ++col_;
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (peek_is(c)) { advance(); return true; }
        return false;
    }

    bool at_number() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    bool at_name() {
        skip_ws();
        return pos_ < text_.size() &&
               (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_');
    }

    std::string read_digits() {
        std::string s;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            s += text_[pos_];
            advance();
        }
        return s;
    }

    std::string read_name() {
        std::string s;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            s += text_[pos_];
            advance();
        }
        return s;
    }

    Rational number() {
        std::string num = read_digits();
        if (pos_ < text_.size() && text_[pos_] == '/' && pos_ + 1 < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            advance();
            std::string den = read_digits();
            Rational q{mpz_class(num), mpz_class(den)};
            q.canonicalize();
            return q;
        }
        return Rational(mpz_class(num));
    }

    // integer expressions for exponent positions: literals, env names, + - *
    long int_expr() {
        long v = int_term();
        while (true) {
            if (accept('+')) v += int_term();
            else if (accept('-')) v -= int_term();
            else return v;
        }
    }

    long int_term() {
        long v = int_factor();
        while (accept('*')) v *= int_factor();
        return v;
    }

    long int_factor() {
        skip_ws();
        if (accept('-')) return -int_factor();
        if (accept('(')) {
            long v = int_expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (at_number()) {
            std::string d = read_digits();
            return std::stol(d);
        }
        if (at_name()) {
            SourcePos here{line_, col_};
            std::string n = read_name();
            if (env_) {
                auto it = env_->find(n);
                if (it != env_->end()) return it->second;
            }
            throw parse_error(here, "unknown parameter '" + n + "' in integer expression");
        }
        fail("expected integer expression");
    }

    int exponent() {
        skip_ws();
        SourcePos here{line_, col_};
        long v;
        if (accept('(')) {
            v = int_expr();
            if (!accept(')')) fail("expected ')' after exponent expression");
        } else if (at_number()) {
            v = std::stol(read_digits());
        } else if (at_name()) {
            std::string n = read_name();
            if (!env_) throw parse_error(here, "symbolic exponent '" + n + "' without parameters");
            auto it = env_->find(n);
            if (it == env_->end()) throw parse_error(here, "unknown parameter '" + n + "'");
            v = it->second;
        } else {
            fail("expected exponent");
        }
        if (v < 0) throw parse_error(here, "negative exponent " + std::to_string(v));
        return static_cast<int>(v);
    }

    Polynomial expr() {
        Polynomial p = term();
        while (true) {
            if (accept('+')) p = p + term();
            else if (accept('-')) p = p - term();
            else return p;
        }
    }

    Polynomial term() {
        Polynomial p = factor();
        while (accept('*')) p = p * factor();
        return p;
    }

    Polynomial factor() {
        skip_ws();
        if (accept('-')) return -factor();
        Polynomial base = primary();
        if (accept('^')) {
            int e = exponent();
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        if (accept('(')) {
            Polynomial p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (at_number()) return Polynomial::constant(ring_, number());
        if (at_name()) {
            SourcePos here{line_, col_};
            std::string n = read_name();
            if (env_) {
                auto it = env_->find(n);
                if (it != env_->end()) return Polynomial::constant(ring_, Rational(it->second));
            }
            auto vi = ring_->var_index(n);
            if (!vi) throw parse_error(here, "unknown variable '" + n + "'");
            return Polynomial::variable(ring_, *vi);
        }
        fail(std::string("unexpected character '") + text_[pos_] + "'");
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring, const ParamEnv* env,
                            SourcePos base) {
    return PolyParser(text, ring, env, base).parse();
}

}  // namespace lrc
