#include "lrc/commands.hpp"

#include "lrc/brieskorn.hpp"
#include "lrc/complex.hpp"
#include "lrc/gauss_manin.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lrc {

namespace {

std::string range_str(Degree lo, Degree hi) {
    return std::to_string(lo) + ".." + std::to_string(hi);
}

std::string point_str(const GridPoint& p) {
    return "m=" + std::to_string(p.m) + " n=" + std::to_string(p.n) + " k=" + std::to_string(p.k) +
           " l=" + std::to_string(p.l);
}

std::string dims_row(const GradedCohomology& H, int p, Degree lo, Degree hi) {
    std::string out;
    for (Degree d = lo; d <= hi; ++d) {
        if (d > lo) out += " ";
        out += std::to_string(H.dim(p, d));
    }
    return out;
}

std::string element_str(const ModuleElement& e) {
    std::string out = "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) out += ", ";
        out += e[i].str();
    }
    return out + ")";
}

std::string wedge_str(const std::vector<int>& wedge) {
    std::string out = "(";
    for (std::size_t i = 0; i < wedge.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(wedge[i] + 1);
    }
    return out + ")";
}

std::string matrix_str(const QMatrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) out += "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += " ";
            out += rational_str(m.at(i, j));
        }
    }
    return out + "]";
}

int find_param(const ProblemFile::TaskSection& task, const std::string& name, int fallback,
               bool required) {
    for (const auto& [k, v] : task.params)
        if (k == name) return static_cast<int>(v);
    if (required) throw std::invalid_argument("task needs parameter '" + name + "'");
    return fallback;
}

Degree task_max_degree(const ProblemFile& p, Degree fallback) {
    return p.task.max_degree ? *p.task.max_degree : fallback;
}

const ProblemFile::ConnectionSection& need_connection(const ProblemFile& p) {
    if (p.task.connection_name) {
        const auto* c = p.find_connection(*p.task.connection_name);
        if (!c)
            throw std::invalid_argument("unknown connection '" + *p.task.connection_name + "'");
        return *c;
    }
    if (p.connections.size() != 1)
        throw std::invalid_argument("task needs a 'connection' entry naming a [connection] section");
    return p.connections.front();
}

Connection connection_for_task(const ProblemFile& p, Degree bound) {
    const auto& cs = need_connection(p);
    if (p.task.kernel_name) {
        const LieAlgebra* K = p.find_lie(*p.task.kernel_name);
        if (!K) throw std::invalid_argument("unknown lie section '" + *p.task.kernel_name + "'");
        return restrict_connection(cs.connection, *K, bound);
    }
    return cs.connection;
}

LRSequence sequence_for_task(const ProblemFile& p, Degree bound) {
    if (!p.task.kernel_name)
        throw std::invalid_argument("task needs a 'kernel' entry naming a [lie] section");
    const LieAlgebra* K = p.find_lie(*p.task.kernel_name);
    if (!K) throw std::invalid_argument("unknown lie section '" + *p.task.kernel_name + "'");
    const auto& cs = need_connection(p);
    if (!p.ring) throw std::invalid_argument("gauss-manin needs a [ring] section");
    if (p.invariants.empty())
        throw std::invalid_argument("gauss-manin needs an [invariant] section");
    if (p.hgens.empty()) throw std::invalid_argument("gauss-manin needs [hgen] sections");
    std::vector<HGenerator> hgens;
    for (const auto& hg : p.hgens)
        hgens.push_back(
            {hg.name, hg.action, Derivation(p.ring->ring, hg.lift_coeffs)});
    return LRSequence(*K, cs.connection.algebra(), p.invariants, std::move(hgens), bound);
}

// ---------------------------------------------------------------------------

Report run_verify_mf(const ProblemFile& p) {
    Report rep;
    rep.command = "verify-mf";
    auto& grid_node = rep.body.add("grid");
    int checked = 0;
    for (const GridPoint& pt : expand_grid(p.task, true)) {
        MfCheck c = verify_mf(phi_psi(pt.m, pt.n, pt.k, pt.l));
        ++checked;
        if (c.ok) {
            grid_node.add("point " + point_str(pt), "ok");
        } else {
            rep.ok = false;
            grid_node.add("point " + point_str(pt),
                          std::string("FAILED ") + (c.which == 0 ? "phi*psi" : "psi*phi") +
                              " entry (" + std::to_string(c.row + 1) + "," +
                              std::to_string(c.col + 1) + ") off by " + c.difference.str());
        }
    }
    rep.body.add("points_checked", std::to_string(checked));
    return rep;
}

Report run_verify_syzygies(const ProblemFile& p) {
    Report rep;
    rep.command = "verify-syzygies";
    auto& grid_node = rep.body.add("grid");
    std::string common;
    bool first = true;
    for (const GridPoint& pt : expand_grid(p.task, false)) {
        SyzygyReport s = verify_syzygies(pt.m, pt.n);
        std::string o;
        switch (s.orientation) {
            case SyzygyReport::Orientation::rows: o = "rows"; break;
            case SyzygyReport::Orientation::columns: o = "columns"; break;
            case SyzygyReport::Orientation::both: o = "both"; break;
            case SyzygyReport::Orientation::neither: o = "neither"; break;
        }
        auto& n = grid_node.add("point m=" + std::to_string(pt.m) + " n=" + std::to_string(pt.n), o);
        if (s.orientation != SyzygyReport::Orientation::rows &&
            s.orientation != SyzygyReport::Orientation::columns) {
            rep.ok = false;
            const auto& residuals = s.rows_ok ? s.col_residuals : s.row_residuals;
            for (std::size_t i = 0; i < residuals.size(); ++i) {
                std::string r;
                for (std::size_t v = 0; v < residuals[i].size(); ++v) {
                    if (v) r += ", ";
                    r += residuals[i][v].str();
                }
                n.add("residual " + std::to_string(i + 1), r);
            }
        }
        if (first) { common = o; first = false; }
        else if (common != o) rep.ok = false;
    }
    rep.body.add("orientation", first ? "none" : common);
    return rep;
}

Report run_check_connection(const ProblemFile& p) {
    Report rep;
    rep.command = "check-connection";
    auto& grid_node = rep.body.add("grid");
    int checked = 0, passed = 0, undefined = 0;
    for (const GridPoint& pt : expand_grid(p.task, true)) {
        ++checked;
        auto missing = closed_form_undefined(pt.m, pt.n, pt.k, pt.l);
        if (!missing.empty()) {
            ++undefined;
            std::string names;
            for (std::size_t i = 0; i < missing.size(); ++i) {
                if (i) names += ", ";
                names += missing[i];
            }
            grid_node.add("point " + point_str(pt), "closed form undefined (" + names + ")");
            continue;
        }
        ConnectionFamily fam = connection_family(pt.m, pt.n, pt.k, pt.l);
        DescentResult r = check_connection_well_defined(fam.connection, fam.mf);
        if (r.ok) {
            ++passed;
            grid_node.add("point " + point_str(pt), "ok");
        } else {
            rep.ok = false;
            grid_node.add("point " + point_str(pt),
                          "FAILED generator " + std::to_string(r.failure->generator + 1) +
                              " entry (" + std::to_string(r.failure->row + 1) + "," +
                              std::to_string(r.failure->col + 1) + ") remainder " +
                              r.failure->remainder.str());
        }
    }
    rep.body.add("points_checked", std::to_string(checked));
    rep.body.add("points_ok", std::to_string(passed));
    rep.body.add("closed_form_undefined_points", std::to_string(undefined));
    if (undefined > 0)
        rep.body.add("note",
                     "undefined points have a negative exponent with nonzero scalar in a "
                     "closed-form coefficient; they occur only on the k=m / l=n boundary");
    return rep;
}

void add_cohomology_tables(Report& rep, const StandardComplex& cx, const GradedCohomology& H,
                           bool with_reps) {
    auto& node = rep.body.add("cohomology");
    node.add("degrees", range_str(H.lo, H.hi));
    for (int p = 0; p <= cx.algebra().rank(); ++p)
        node.add("H^" + std::to_string(p), dims_row(H, p, H.lo, H.hi));
    if (!with_reps) return;
    auto& reps = rep.body.add("representatives");
    for (int p = 0; p <= cx.algebra().rank(); ++p) {
        for (const auto& [d, slice] : H.by_index[static_cast<std::size_t>(p)]) {
            for (std::size_t i = 0; i < slice.representatives.size(); ++i) {
                auto& r = reps.add("p=" + std::to_string(p) + " d=" + std::to_string(d) +
                                   " #" + std::to_string(i + 1));
                for (const auto& wedge : StandardComplex::wedges(cx.algebra().rank(), p)) {
                    ModuleElement v = cx.value_on_wedge(p, d, slice.representatives[i], wedge);
                    bool zero = true;
                    for (const Polynomial& q : v)
                        if (!q.is_zero()) zero = false;
                    if (!zero || p == 0) r.add("wedge " + wedge_str(wedge), element_str(v));
                }
            }
        }
    }
}

Report run_complex_check(const ProblemFile& p) {
    Report rep;
    rep.command = "complex-check";
    Degree bound = task_max_degree(p, 12);
    Connection conn = connection_for_task(p, bound + 1);
    StandardComplex cx(conn, bound + 1);
    auto v = cx.verify(bound);
    rep.body.add("max_degree", std::to_string(bound));
    if (v.ok) {
        rep.body.add("complex", "ok (d o d = 0 on every slice)");
    } else {
        rep.ok = false;
        rep.body.add("complex", "FAILED at p=" + std::to_string(v.p) + " degree " +
                                    std::to_string(v.degree));
    }
    return rep;
}

Report run_cohomology(const ProblemFile& p) {
    Report rep;
    rep.command = "cohomology";
    Degree bound = task_max_degree(p, 12);
    Connection conn = connection_for_task(p, bound + 1);
    StandardComplex cx(conn, bound + 1);
    GradedCohomology H = cohomology(cx, bound);
    add_cohomology_tables(rep, cx, H, true);
    return rep;
}

Report run_horizontal(const ProblemFile& p) {
    Report rep;
    rep.command = "horizontal";
    Degree bound = task_max_degree(p, 12);
    Connection conn = connection_for_task(p, bound + 1);
    HorizontalSections hs = horizontal_sections(conn, bound);
    auto& node = rep.body.add("horizontal_sections");
    node.add("degrees", range_str(hs.lo, hs.hi));
    std::string row;
    for (Degree d = hs.lo; d <= hs.hi; ++d) {
        if (d > hs.lo) row += " ";
        row += std::to_string(hs.dim(d));
    }
    node.add("dimensions", row);
    auto& basis = rep.body.add("basis");
    for (const auto& [d, elems] : hs.basis)
        for (std::size_t i = 0; i < elems.size(); ++i)
            basis.add("d=" + std::to_string(d) + " #" + std::to_string(i + 1),
                      element_str(elems[i]));
    return rep;
}

Report run_gauss_manin(const ProblemFile& p) {
    Report rep;
    rep.command = "gauss-manin";
    Degree bound = task_max_degree(p, 12);
    LRSequence seq = sequence_for_task(p, bound + 1);
    const auto& cs = need_connection(p);
    std::vector<int> indices;
    if (p.task.index) indices.push_back(*p.task.index);
    else
        for (int i = 0; i <= seq.kernel().rank(); ++i) indices.push_back(i);
    for (int i : indices) {
        GmAction act = gm_matrices(seq, cs.connection, i, bound);
        auto& node = rep.body.add("action on H^" + std::to_string(i));
        for (std::size_t h = 0; h < seq.hgens().size(); ++h) {
            auto& hnode = node.add("generator " + seq.hgen(static_cast<int>(h)).name);
            hnode.add("lift_degree", std::to_string(seq.lift_degree(static_cast<int>(h))));
            if (act.matrices[h].empty()) hnode.add("matrices", "none (cohomology vanishes)");
            for (const auto& [d, m] : act.matrices[h])
                hnode.add("d=" + std::to_string(d), matrix_str(m));
        }
    }
    return rep;
}

Report run_gysin(const ProblemFile& p) {
    Report rep;
    rep.command = "gysin";
    Degree bound = task_max_degree(p, 12);
    Connection conn = connection_for_task(p, bound + 1);
    StandardComplex cx(conn, bound + 1);
    GysinClass cls = gysin_class(cx, bound);
    auto& node = rep.body.add("gysin_class");
    node.add("degrees", range_str(cls.lo, cls.hi));
    std::string row, crow;
    bool all_match = true;
    for (Degree d = cls.lo; d <= cls.hi; ++d) {
        long chi = 0;
        for (int q = 0; q <= cx.algebra().rank(); ++q)
            chi += (q % 2 == 0 ? 1 : -1) * static_cast<long>(cx.cochain_dim(q, d));
        if (d > cls.lo) { row += " "; crow += " "; }
        row += std::to_string(cls.at(d));
        crow += std::to_string(chi);
        if (chi != cls.at(d)) all_match = false;
    }
    node.add("class", row);
    node.add("cochain_alternating_sum", crow);
    node.add("euler_identity", all_match ? "ok" : "FAILED");
    if (!all_match) rep.ok = false;
    return rep;
}

// multiplication by t as a map C^p(d) -> C^p(d + deg t) over the kernel complex
QMatrix multiplication_matrix(const StandardComplex& cx, int p, Degree d, const Polynomial& t) {
    const Module& W = cx.module();
    Degree dt = t.weighted_degree().value;
    const CochainBasis& src = cx.basis(p, d);
    const CochainBasis& dst = cx.basis(p, d + dt);
    std::map<std::vector<int>, std::size_t> dst_offset;
    std::size_t off = 0;
    for (std::size_t i = 0; i < dst.elements.size();) {
        std::size_t j = i;
        while (j < dst.elements.size() && dst.elements[j].wedge == dst.elements[i].wedge) ++j;
        dst_offset[dst.elements[i].wedge] = off;
        off += j - i;
        i = j;
    }
    QMatrix out(dst.elements.size(), src.elements.size());
    for (std::size_t col = 0; col < src.elements.size(); ++col) {
        const auto& el = src.elements[col];
        ModuleElement b = W.slice_basis(el.module_degree)[el.slice_index];
        ModuleElement tb;
        tb.reserve(b.size());
        for (const Polynomial& q : b) tb.push_back(W.ring()->nf(t * q));
        std::vector<Rational> coords = W.coords(tb, el.module_degree + dt);
        std::size_t o = dst_offset.at(el.wedge);
        for (std::size_t i = 0; i < coords.size(); ++i) out.at(o + i, col) += coords[i];
    }
    return out;
}

Report run_cusp(const ProblemFile& p) {
    Report rep;
    rep.command = "cusp";
    int m = find_param(p.task, "m", 0, true);
    int n = find_param(p.task, "n", 0, true);
    Degree mn = static_cast<Degree>(m) * n;
    Degree bound = task_max_degree(p, 6 * mn);

    CuspSetup cusp = cusp_setup(m, n);
    auto& par = rep.body.add("parameters");
    par.add("m", std::to_string(m));
    par.add("n", std::to_string(n));
    par.add("max_degree", std::to_string(bound));

    auto& ringn = rep.body.add("ring");
    ringn.add("variables", "x, y");
    ringn.add("weights", std::to_string(n) + ", " + std::to_string(m));
    ringn.add("f", cusp.f.str());

    auto& tan = rep.body.add("tangent");
    tan.add("kernel_generator", "(" + cusp.tangent.coeff(0).str() + ", " +
                                    cusp.tangent.coeff(1).str() + ")");
    tan.add("generator_applied_to_f", cusp.tangent(cusp.f).str());
    tan.add("gradient_candidate",
            "(" + cusp.naive_candidate[0].str() + ", " + cusp.naive_candidate[1].str() + ")");
    tan.add("gradient_candidate_applied_to_f", cusp.naive_candidate_value.str());
    tan.add("note", "the gradient-style candidate does not annihilate f; the kernel generator is used");

    auto& eul = rep.body.add("euler");
    eul.add("generator", "(" + cusp.euler.coeff(0).str() + ", " + cusp.euler.coeff(1).str() + ")");
    eul.add("applied_to_f", cusp.euler(cusp.f).str());

    LRSequence seq(cusp.kernel_algebra, cusp.total_algebra, {cusp.f},
                   {{"h", {cusp.euler(cusp.f)}, cusp.euler}}, bound + 1);

    Connection connK = restrict_connection(cusp.connection, cusp.kernel_algebra, bound + 1);
    StandardComplex cx(connK, bound + 1);
    GradedCohomology H = cohomology(cx, bound);
    add_cohomology_tables(rep, cx, H, false);

    // H^0 pattern: dimension 1 exactly at degrees mn*k, k >= 1
    bool h0_ok = true;
    for (Degree d = H.lo; d <= bound; ++d) {
        int want = (d >= mn && d % mn == 0) ? 1 : 0;
        if (H.dim(0, d) != want) h0_ok = false;
    }
    auto& h0 = rep.body.add("h0_pattern");
    h0.add("expected", "dimension 1 at degrees " + std::to_string(mn) + "*k (k >= 1), 0 elsewhere");
    h0.add("ok", h0_ok ? "yes" : "no");
    if (!h0_ok) rep.ok = false;

    // independent oracle for H^1
    auto oracle = cusp_h1_oracle(m, n, bound);
    auto& on = rep.body.add("oracle");
    std::string orow;
    bool agree = true;
    for (Degree d = H.lo; d <= bound; ++d) {
        int expect = 0;
        if (auto it = oracle.find(d); it != oracle.end()) expect = it->second;
        if (d > H.lo) orow += " ";
        orow += std::to_string(expect);
        if (expect != H.dim(1, d)) agree = false;
    }
    for (const auto& [d, v] : oracle)
        if (d < H.lo && v != 0) agree = false;
    on.add("degrees", range_str(H.lo, bound));
    on.add("H^1", orow);
    on.add("pipelines_agree", agree ? "yes" : "no");
    if (!agree) rep.ok = false;

    // Euler action on H^0 and H^1: degree * identity on every slice
    auto& gm = rep.body.add("gauss_manin");
    for (int idx = 0; idx <= 1; ++idx) {
        GmAction act = gm_matrices(seq, cusp.connection, idx, bound);
        bool eig = true;
        for (const auto& [d, mtx] : act.matrices[0]) {
            if (mtx.rows() != mtx.cols()) { eig = false; continue; }
            for (std::size_t i = 0; i < mtx.rows(); ++i)
                for (std::size_t j = 0; j < mtx.cols(); ++j) {
                    Rational want = (i == j) ? Rational(static_cast<long>(d)) : Rational(0);
                    if (mtx.at(i, j) != want) eig = false;
                }
        }
        gm.add("euler_action_on_H^" + std::to_string(idx),
               eig ? "degree * identity on every slice" : "NOT degree * identity");
        if (!eig) rep.ok = false;
    }

    // totals and generator count over the invariant ring
    long total = 0;
    for (Degree d = H.lo; d <= bound; ++d) total += H.dim(1, d);
    std::map<Degree, int> gen_counts;
    long generators = 0;
    for (Degree d = H.lo; d <= bound; ++d) {
        int dim = H.dim(1, d);
        if (dim == 0) continue;
        int old_rank = 0;
        if (H.dim(1, d - mn) > 0) {
            QMatrix T = multiplication_matrix(cx, 1, d - mn, cusp.f);
            // solve for components of t * rep in [reps | coboundaries]
            const auto& reps = H.by_index[1].at(d).representatives;
            std::vector<std::vector<Rational>> cols;
            for (const auto& r : reps) cols.push_back(r);
            std::size_t nreps = cols.size();
            const QMatrix& dprev = cx.differential(0, d);
            for (std::size_t c = 0; c < dprev.cols(); ++c) {
                std::vector<Rational> col;
                for (std::size_t rr = 0; rr < dprev.rows(); ++rr) col.push_back(dprev.at(rr, c));
                cols.push_back(std::move(col));
            }
            QMatrix solver(static_cast<std::size_t>(cx.cochain_dim(1, d)), cols.size());
            for (std::size_t c = 0; c < cols.size(); ++c)
                for (std::size_t rr = 0; rr < cols[c].size(); ++rr) solver.at(rr, c) = cols[c][rr];
            RowSpace span(nreps);
            for (const auto& old_rep : H.by_index[1].at(d - mn).representatives) {
                std::vector<Rational> acted = T.apply(old_rep);
                auto sol = solver.solve(acted);
                if (!sol) throw std::logic_error("cusp: t-multiple of a cocycle escaped the kernel");
                std::vector<Rational> head(sol->begin(),
                                           sol->begin() + static_cast<std::ptrdiff_t>(nreps));
                span.insert(std::move(head));
            }
            old_rank = static_cast<int>(span.dim());
        }
        int fresh = dim - old_rank;
        if (fresh > 0) {
            gen_counts[d] = fresh;
            generators += fresh;
        }
    }
    auto& summary = rep.body.add("h1_summary");
    summary.add("total_dim_up_to_bound", std::to_string(total));
    std::string gens_str;
    for (const auto& [d, c] : gen_counts)
        gens_str += (gens_str.empty() ? "" : ", ") + ("d=" + std::to_string(d) + ":" +
                                                      std::to_string(c));
    summary.add("new_generators_over_invariant_ring", gens_str.empty() ? "none" : gens_str);
    summary.add("generator_count", std::to_string(generators));
    Rational reference = Rational(n - 2) * Rational(m - 1) / 2;
    summary.add("reference_value_(n-2)(m-1)/2", rational_str(reference));
    bool int_ref = reference.get_den() == 1;
    summary.add("matches_total",
                (int_ref && Rational(total) == reference) ? "yes" : "no (documented discrepancy)");
    summary.add("matches_generator_count",
                (int_ref && Rational(generators) == reference) ? "yes"
                                                               : "no (documented discrepancy)");
    if (!int_ref)
        summary.add("note", "reference value is not an integer; computed tables are authoritative");
    return rep;
}

}  // namespace

std::vector<GridPoint> expand_grid(const ProblemFile::TaskSection& task, bool with_kl) {
    auto range = [&](const std::string& name, int lo_def, int hi_def) {
        for (const auto& [k, v] : task.grid)
            if (k == name) return v;
        for (const auto& [k, v] : task.params)
            if (k == name) return std::make_pair(static_cast<int>(v), static_cast<int>(v));
        return std::make_pair(lo_def, hi_def);
    };
    auto [mlo, mhi] = range("m", 1, 5);
    auto [nlo, nhi] = range("n", 1, 5);
    std::vector<GridPoint> out;
    for (int m = mlo; m <= mhi; ++m)
        for (int n = nlo; n <= nhi; ++n) {
            if (!with_kl) {
                out.push_back({m, n, 1, 1});
                continue;
            }
            auto [klo, khi] = range("k", 1, m);
            auto [llo, lhi] = range("l", 1, n);
            for (int k = std::max(1, klo); k <= std::min(m, khi); ++k)
                for (int l = std::max(1, llo); l <= std::min(n, lhi); ++l)
                    out.push_back({m, n, k, l});
        }
    return out;
}

Report run_command(const std::string& command, const ProblemFile& problem) {
    if (command != problem.task.command)
        throw std::invalid_argument("command '" + command + "' does not match the problem's task '" +
                                    problem.task.command + "'");
    if (command == "verify-mf") return run_verify_mf(problem);
    if (command == "verify-syzygies") return run_verify_syzygies(problem);
    if (command == "check-connection") return run_check_connection(problem);
    if (command == "complex-check") return run_complex_check(problem);
    if (command == "cohomology") return run_cohomology(problem);
    if (command == "horizontal") return run_horizontal(problem);
    if (command == "gauss-manin") return run_gauss_manin(problem);
    if (command == "gysin") return run_gysin(problem);
    if (command == "cusp") return run_cusp(problem);
    throw std::invalid_argument("unknown command '" + command + "'");
}

}  // namespace lrc
