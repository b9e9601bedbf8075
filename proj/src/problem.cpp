#include "lrc/problem.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lrc {

namespace {

struct Line {
    int number = 0;
    std::string text;
};

struct Entry {
    int line = 0;
    int value_col = 0;  // 1-based column where the value starts
    std::string key;
    std::string value;
};

struct Section {
    int line = 0;
    std::string kind;
    std::string name;
    std::vector<Entry> entries;
};

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<Section> split_sections(const std::string& text) {
    std::vector<Section> sections;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::string t = trim(line);
        if (t.empty()) continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw parse_error({lineno, 1}, "section header must end with ']'");
            std::string inner = trim(t.substr(1, t.size() - 2));
            std::istringstream hs(inner);
            Section s;
            s.line = lineno;
            hs >> s.kind;
            std::string rest;
            std::getline(hs, rest);
            s.name = trim(rest);
            if (s.kind.empty()) throw parse_error({lineno, 1}, "empty section header");
            sections.push_back(std::move(s));
            continue;
        }
        if (sections.empty())
            throw parse_error({lineno, 1}, "entry before any section header");
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw parse_error({lineno, 1}, "expected 'key = value'");
        Entry e;
        e.line = lineno;
        e.key = trim(line.substr(0, eq));
        std::size_t vstart = eq + 1;
        while (vstart < line.size() && std::isspace(static_cast<unsigned char>(line[vstart])))
            ++vstart;
        e.value_col = static_cast<int>(vstart) + 1;
        e.value = trim(line.substr(eq + 1));
        if (e.key.empty()) throw parse_error({lineno, 1}, "empty key");
        if (e.value.empty()) throw parse_error({lineno, e.value_col}, "empty value");
        sections.back().entries.push_back(std::move(e));
    }
    return sections;
}

// split at top-level commas (ignoring commas inside parentheses)
std::vector<std::pair<std::string, int>> split_commas(const std::string& s, int base_col) {
    std::vector<std::pair<std::string, int>> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i < s.size() && s[i] == '(') ++depth;
        if (i < s.size() && s[i] == ')') --depth;
        if (i == s.size() || (s[i] == ',' && depth == 0)) {
            std::size_t a = start;
            while (a < i && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
            out.emplace_back(trim(s.substr(start, i - start)), base_col + static_cast<int>(a));
            start = i + 1;
        }
    }
    return out;
}

// strip one layer of parentheses from a tuple "(a, b, c)"
std::pair<std::string, int> unwrap_tuple(const std::string& s, int line, int col) {
    std::string t = trim(s);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        throw parse_error({line, col}, "expected a parenthesized tuple");
    std::size_t lead = s.find('(');
    return {t.substr(1, t.size() - 2), col + static_cast<int>(lead) + 1};
}

long parse_long(const std::string& s, int line, int col, const ParamEnv* env) {
    // integer expression over parameters
    std::string t = trim(s);
    if (t.empty()) throw parse_error({line, col}, "expected integer");
    // reuse the polynomial parser over a dummy ring: constants only
    static const RingPtr dummy = Ring::free_ring({}, {});
    Polynomial p = parse_polynomial(t, dummy, env, {line, col});
    if (!p.is_constant()) throw parse_error({line, col}, "expected integer value");
    Rational v = p.constant_value();
    if (v.get_den() != 1) throw parse_error({line, col}, "expected integer, got " + rational_str(v));
    return static_cast<long>(v.get_num().get_si());
}

class ProblemBuilder {
public:
    explicit ProblemBuilder(const std::string& text) : sections_(split_sections(text)) {}

    ProblemFile build() {
        const Section* task = find_unique("task", true);
        parse_task(*task);

        if (const Section* ring = find_unique("ring", false)) parse_ring(*ring);
        for (const Section& s : sections_)
            if (s.kind == "lie") parse_lie(s);
        if (const Section* mod = find_unique("module", false)) parse_module(*mod);
        for (const Section& s : sections_)
            if (s.kind == "connection") parse_connection(s);
        if (const Section* inv = find_unique("invariant", false)) parse_invariants(*inv);
        for (const Section& s : sections_)
            if (s.kind == "hgen") parse_hgen(s);

        for (const Section& s : sections_) {
            static const std::vector<std::string> kinds = {"ring", "lie", "module", "connection",
                                                           "invariant", "hgen", "task"};
            if (std::find(kinds.begin(), kinds.end(), s.kind) == kinds.end())
                throw parse_error({s.line, 1}, "unknown section '" + s.kind + "'");
        }
        return std::move(out_);
    }

private:
    std::vector<Section> sections_;
    ProblemFile out_;
    ParamEnv env_;

    const Section* find_unique(const std::string& kind, bool required) {
        const Section* found = nullptr;
        for (const Section& s : sections_) {
            if (s.kind != kind) continue;
            if (found) throw parse_error({s.line, 1}, "duplicate [" + kind + "] section");
            found = &s;
        }
        if (!found && required) throw parse_error({1, 1}, "missing [" + kind + "] section");
        return found;
    }

    void reject_unknown(const Section& s, const std::vector<std::string>& allowed) {
        for (const Entry& e : s.entries)
            if (std::find(allowed.begin(), allowed.end(), e.key) == allowed.end())
                throw parse_error({e.line, 1},
                                  "unknown key '" + e.key + "' in [" + s.kind + "] section");
    }

    const Entry* find_entry(const Section& s, const std::string& key) {
        const Entry* found = nullptr;
        for (const Entry& e : s.entries) {
            if (e.key != key) continue;
            if (found) throw parse_error({e.line, 1}, "duplicate key '" + key + "'");
            found = &e;
        }
        return found;
    }

    const Entry& need_entry(const Section& s, const std::string& key) {
        const Entry* e = find_entry(s, key);
        if (!e) throw parse_error({s.line, 1}, "[" + s.kind + "] section needs '" + key + "'");
        return *e;
    }

    void parse_task(const Section& s) {
        reject_unknown(s, {"command", "params", "max_degree", "connection", "kernel", "index",
                           "grid"});
        out_.task.command = need_entry(s, "command").value;
        if (const Entry* e = find_entry(s, "params")) {
            for (auto& [item, col] : split_commas(e->value, e->value_col)) {
                std::size_t eq = item.find('=');
                if (eq == std::string::npos)
                    throw parse_error({e->line, col}, "expected name=value in params");
                std::string name = trim(item.substr(0, eq));
                long value = parse_long(item.substr(eq + 1), e->line, col, nullptr);
                out_.task.params.emplace_back(name, value);
                env_[name] = value;
            }
        }
        if (const Entry* e = find_entry(s, "max_degree"))
            out_.task.max_degree = parse_long(e->value, e->line, e->value_col, &env_);
        if (const Entry* e = find_entry(s, "connection")) out_.task.connection_name = e->value;
        if (const Entry* e = find_entry(s, "kernel")) out_.task.kernel_name = e->value;
        if (const Entry* e = find_entry(s, "index"))
            out_.task.index = static_cast<int>(parse_long(e->value, e->line, e->value_col, &env_));
        if (const Entry* e = find_entry(s, "grid")) {
            for (auto& [item, col] : split_commas(e->value, e->value_col)) {
                std::size_t eq = item.find('=');
                if (eq == std::string::npos)
                    throw parse_error({e->line, col}, "expected name=lo..hi in grid");
                std::string name = trim(item.substr(0, eq));
                std::string range = trim(item.substr(eq + 1));
                std::size_t dots = range.find("..");
                int lo, hi;
                if (dots == std::string::npos) {
                    lo = hi = static_cast<int>(parse_long(range, e->line, col, &env_));
                } else {
                    lo = static_cast<int>(parse_long(range.substr(0, dots), e->line, col, &env_));
                    hi = static_cast<int>(parse_long(range.substr(dots + 2), e->line, col, &env_));
                }
                if (lo > hi) throw parse_error({e->line, col}, "empty grid range for " + name);
                out_.task.grid.emplace_back(name, std::make_pair(lo, hi));
            }
        }
    }

    Polynomial parse_poly(const std::string& text, const RingPtr& ring, int line, int col) {
        return parse_polynomial(text, ring, &env_, {line, col});
    }

    void parse_ring(const Section& s) {
        reject_unknown(s, {"variables", "weights", "relation", "reduce"});
        const Entry& vars_e = need_entry(s, "variables");
        std::vector<std::string> names;
        for (auto& [item, col] : split_commas(vars_e.value, vars_e.value_col)) {
            if (item.empty()) throw parse_error({vars_e.line, col}, "empty variable name");
            names.push_back(item);
        }
        const Entry& w_e = need_entry(s, "weights");
        std::vector<Degree> weights;
        for (auto& [item, col] : split_commas(w_e.value, w_e.value_col))
            weights.push_back(parse_long(item, w_e.line, col, &env_));
        if (weights.size() != names.size())
            throw parse_error({w_e.line, w_e.value_col}, "weight count != variable count");
        for (Degree w : weights)
            if (w < 1) throw parse_error({w_e.line, w_e.value_col}, "weights must be >= 1");

        RingPtr base = Ring::free_ring(names, weights);
        ProblemFile::RingSection out;
        const Entry* rel = find_entry(s, "relation");
        const Entry* red = find_entry(s, "reduce");
        if (rel && !red)
            throw parse_error({rel->line, 1}, "relation requires a 'reduce = var^exp' entry");
        if (red && !rel)
            throw parse_error({red->line, 1}, "'reduce' without 'relation'");
        if (rel) {
            Polynomial relation = parse_poly(rel->value, base, rel->line, rel->value_col);
            std::string rv = red->value;
            std::size_t caret = rv.find('^');
            if (caret == std::string::npos)
                throw parse_error({red->line, red->value_col}, "expected 'reduce = var^exp'");
            std::string var = trim(rv.substr(0, caret));
            long exp = parse_long(rv.substr(caret + 1), red->line, red->value_col, &env_);
            try {
                out.ring = Ring::quotient(base, relation, var, static_cast<int>(exp));
            } catch (const std::invalid_argument& ex) {
                throw parse_error({rel->line, rel->value_col}, ex.what());
            }
            out.relation_text = relation.str();
            out.reduce_text = var + "^" + std::to_string(exp);
        } else {
            out.ring = base;
        }
        out_.ring = std::move(out);
    }

    RingPtr need_ring(const Section& s) {
        if (!out_.ring) throw parse_error({s.line, 1}, "[" + s.kind + "] requires a [ring] section");
        return out_.ring->ring;
    }

    std::vector<Polynomial> parse_poly_tuple(const std::string& value, const RingPtr& ring,
                                             int line, int col, std::size_t want = 0) {
        auto [inner, icol] = unwrap_tuple(value, line, col);
        std::vector<Polynomial> out;
        for (auto& [item, ccol] : split_commas(inner, icol))
            out.push_back(parse_poly(item, ring, line, ccol));
        if (want && out.size() != want)
            throw parse_error({line, col}, "expected a tuple of length " + std::to_string(want));
        return out;
    }

    void parse_lie(const Section& s) {
        reject_unknown(s, {"generator"});
        if (s.name.empty()) throw parse_error({s.line, 1}, "[lie] section needs a name");
        RingPtr ring = need_ring(s);
        std::vector<Derivation> gens;
        for (const Entry& e : s.entries) {
            auto coeffs = parse_poly_tuple(e.value, ring, e.line, e.value_col,
                                           static_cast<std::size_t>(ring->nvars()));
            try {
                gens.emplace_back(ring, std::move(coeffs));
            } catch (const std::invalid_argument& ex) {
                throw parse_error({e.line, e.value_col}, ex.what());
            }
        }
        if (gens.empty()) throw parse_error({s.line, 1}, "[lie] section needs generators");
        try {
            out_.lies.push_back({s.name, LieAlgebra(ring, std::move(gens))});
        } catch (const std::invalid_argument& ex) {
            throw parse_error({s.line, 1}, ex.what());
        }
    }

    void parse_module(const Section& s) {
        reject_unknown(s, {"degrees", "shift", "relation"});
        if (s.name.empty()) throw parse_error({s.line, 1}, "[module] section needs a name");
        RingPtr ring = need_ring(s);
        const Entry& deg_e = need_entry(s, "degrees");
        std::vector<Degree> degrees;
        for (auto& [item, col] : split_commas(deg_e.value, deg_e.value_col))
            degrees.push_back(parse_long(item, deg_e.line, col, &env_));
        Degree shift = 0;
        if (const Entry* e = find_entry(s, "shift"))
            shift = parse_long(e->value, e->line, e->value_col, &env_);
        std::vector<std::vector<Polynomial>> relations;
        for (const Entry& e : s.entries) {
            if (e.key != "relation") continue;
            relations.push_back(parse_poly_tuple(e.value, ring, e.line, e.value_col, degrees.size()));
        }
        try {
            out_.module = {s.name, relations.empty()
                                       ? Module::free_module(ring, std::move(degrees), shift)
                                       : Module::presented(ring, std::move(degrees),
                                                           std::move(relations), shift)};
        } catch (const std::invalid_argument& ex) {
            throw parse_error({s.line, 1}, ex.what());
        }
    }

    void parse_connection(const Section& s) {
        reject_unknown(s, {"algebra", "module", "matrix"});
        if (s.name.empty()) throw parse_error({s.line, 1}, "[connection] section needs a name");
        const std::string algebra_name = need_entry(s, "algebra").value;
        const std::string module_name = need_entry(s, "module").value;
        const LieAlgebra* L = out_.find_lie(algebra_name);
        if (!L) throw parse_error({s.line, 1}, "unknown lie section '" + algebra_name + "'");
        if (!out_.module || out_.module->name != module_name)
            throw parse_error({s.line, 1}, "unknown module section '" + module_name + "'");
        const Module& W = out_.module->module;
        RingPtr ring = W.ring();

        std::vector<PolyMatrix> matrices;
        bool explicit_matrices = false;
        for (const Entry& e : s.entries) {
            if (e.key != "matrix") continue;
            explicit_matrices = true;
            if (e.value == "zero") {
                matrices.push_back(poly_matrix_zero(ring, static_cast<std::size_t>(W.rank()),
                                                    static_cast<std::size_t>(W.rank())));
                continue;
            }
            auto [inner, icol] = unwrap_tuple(e.value, e.line, e.value_col);
            PolyMatrix m;
            for (auto& [row, rcol] : split_commas(inner, icol))
                m.push_back(parse_poly_tuple(row, ring, e.line, rcol,
                                             static_cast<std::size_t>(W.rank())));
            if (m.size() != static_cast<std::size_t>(W.rank()))
                throw parse_error({e.line, e.value_col}, "matrix must have one row per module generator");
            matrices.push_back(std::move(m));
        }
        if (!explicit_matrices)
            for (int g = 0; g < L->rank(); ++g)
                matrices.push_back(poly_matrix_zero(ring, static_cast<std::size_t>(W.rank()),
                                                    static_cast<std::size_t>(W.rank())));
        if (matrices.size() != static_cast<std::size_t>(L->rank()))
            throw parse_error({s.line, 1}, "need one matrix per algebra generator (or none for zero)");
        try {
            out_.connections.push_back(
                {s.name, algebra_name, module_name, explicit_matrices,
                 Connection(*L, W, std::move(matrices))});
        } catch (const std::invalid_argument& ex) {
            throw parse_error({s.line, 1}, ex.what());
        }
    }

    void parse_invariants(const Section& s) {
        reject_unknown(s, {"poly"});
        RingPtr ring = need_ring(s);
        for (const Entry& e : s.entries)
            out_.invariants.push_back(parse_poly(e.value, ring, e.line, e.value_col));
    }

    void parse_hgen(const Section& s) {
        reject_unknown(s, {"action", "lift"});
        if (s.name.empty()) throw parse_error({s.line, 1}, "[hgen] section needs a name");
        RingPtr ring = need_ring(s);
        const Entry& a = need_entry(s, "action");
        const Entry& l = need_entry(s, "lift");
        ProblemFile::HGenSection hg;
        hg.name = s.name;
        hg.action = parse_poly_tuple(a.value, ring, a.line, a.value_col, out_.invariants.size());
        hg.lift_coeffs = parse_poly_tuple(l.value, ring, l.line, l.value_col,
                                          static_cast<std::size_t>(ring->nvars()));
        out_.hgens.push_back(std::move(hg));
    }
};

std::string poly_tuple_str(const std::vector<Polynomial>& polys) {
    std::string out = "(";
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (i) out += ", ";
        out += polys[i].str();
    }
    return out + ")";
}

}  // namespace

const LieAlgebra* ProblemFile::find_lie(const std::string& name) const {
    for (const auto& l : lies)
        if (l.name == name) return &l.algebra;
    return nullptr;
}

const ProblemFile::ConnectionSection* ProblemFile::find_connection(const std::string& name) const {
    for (const auto& c : connections)
        if (c.name == name) return &c;
    return nullptr;
}

ProblemFile parse_problem(const std::string& text) { return ProblemBuilder(text).build(); }

std::string print_problem(const ProblemFile& p) {
    std::ostringstream os;
    if (p.ring) {
        const Ring& r = *p.ring->ring;
        os << "[ring]\n";
        os << "variables = ";
        for (int v = 0; v < r.nvars(); ++v) os << (v ? ", " : "") << r.name(v);
        os << "\nweights = ";
        for (int v = 0; v < r.nvars(); ++v) os << (v ? ", " : "") << r.weight(v);
        os << "\n";
        if (p.ring->relation_text) os << "relation = " << *p.ring->relation_text << "\n";
        if (p.ring->reduce_text) os << "reduce = " << *p.ring->reduce_text << "\n";
        os << "\n";
    }
    for (const auto& l : p.lies) {
        os << "[lie " << l.name << "]\n";
        for (const Derivation& g : l.algebra.generators())
            os << "generator = " << poly_tuple_str(g.coeffs()) << "\n";
        os << "\n";
    }
    if (p.module) {
        const Module& m = p.module->module;
        os << "[module " << p.module->name << "]\n";
        os << "degrees = ";
        for (int i = 0; i < m.rank(); ++i)
            os << (i ? ", " : "") << m.gen_degrees()[static_cast<std::size_t>(i)];
        os << "\n";
        if (m.shift() != 0) os << "shift = " << m.shift() << "\n";
        for (const auto& col : m.relations()) os << "relation = " << poly_tuple_str(col) << "\n";
        os << "\n";
    }
    for (const auto& c : p.connections) {
        os << "[connection " << c.name << "]\n";
        os << "algebra = " << c.algebra_name << "\n";
        os << "module = " << c.module_name << "\n";
        if (c.explicit_matrices) {
            for (int g = 0; g < c.connection.algebra().rank(); ++g) {
                const PolyMatrix& M = c.connection.matrix(g);
                if (poly_matrix_is_zero(M)) {
                    os << "matrix = zero\n";
                    continue;
                }
                os << "matrix = (";
                for (std::size_t i = 0; i < M.size(); ++i)
                    os << (i ? ", " : "") << poly_tuple_str(M[i]);
                os << ")\n";
            }
        }
        os << "\n";
    }
    if (!p.invariants.empty()) {
        os << "[invariant]\n";
        for (const Polynomial& t : p.invariants) os << "poly = " << t.str() << "\n";
        os << "\n";
    }
    for (const auto& h : p.hgens) {
        os << "[hgen " << h.name << "]\n";
        os << "action = " << poly_tuple_str(h.action) << "\n";
        os << "lift = " << poly_tuple_str(h.lift_coeffs) << "\n";
        os << "\n";
    }
    os << "[task]\n";
    os << "command = " << p.task.command << "\n";
    if (!p.task.params.empty()) {
        os << "params = ";
        for (std::size_t i = 0; i < p.task.params.size(); ++i)
            os << (i ? ", " : "") << p.task.params[i].first << "=" << p.task.params[i].second;
        os << "\n";
    }
    if (p.task.max_degree) os << "max_degree = " << *p.task.max_degree << "\n";
    if (p.task.connection_name) os << "connection = " << *p.task.connection_name << "\n";
    if (p.task.kernel_name) os << "kernel = " << *p.task.kernel_name << "\n";
    if (p.task.index) os << "index = " << *p.task.index << "\n";
    if (!p.task.grid.empty()) {
        os << "grid = ";
        for (std::size_t i = 0; i < p.task.grid.size(); ++i)
            os << (i ? ", " : "") << p.task.grid[i].first << "=" << p.task.grid[i].second.first
               << ".." << p.task.grid[i].second.second;
        os << "\n";
    }
    return os.str();
}

}  // namespace lrc
