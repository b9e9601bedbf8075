#include "lrc/gauss_manin.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrc {

LRSequence::LRSequence(LieAlgebra kernel, LieAlgebra total, std::vector<Polynomial> invariants,
                       std::vector<HGenerator> hgens, Degree expr_bound)
    : kernel_(std::move(kernel)),
      total_(std::move(total)),
      invariants_(std::move(invariants)),
      hgens_(std::move(hgens)),
      expr_bound_(expr_bound) {
    const RingPtr& ring = kernel_.ring();
    if (!ring->same_variables(*total_.ring()))
        throw std::invalid_argument("LRSequence: kernel and total algebras over different rings");

    for (int s = 0; s < kernel_.rank(); ++s) {
        if (!express_in_generators(kernel_.generator(s), total_, expr_bound_))
            throw std::invalid_argument("LRSequence: kernel generator " + std::to_string(s + 1) +
                                        " not expressible in the total algebra");
        for (const Polynomial& t : invariants_) {
            Polynomial v = kernel_.generator(s)(t);
            if (!v.is_zero())
                throw std::invalid_argument("LRSequence: kernel generator " + std::to_string(s + 1) +
                                            " does not annihilate invariant " + t.str());
        }
    }

    for (std::size_t h = 0; h < hgens_.size(); ++h) {
        const HGenerator& hg = hgens_[h];
        if (hg.action.size() != invariants_.size())
            throw std::invalid_argument("LRSequence: H generator '" + hg.name +
                                        "' action count != invariant count");
        auto expr = express_in_generators(hg.lift, total_, expr_bound_);
        if (!expr)
            throw std::invalid_argument("LRSequence: lift of '" + hg.name +
                                        "' not expressible in the total algebra");
        lift_in_total_.push_back(std::move(*expr));

        for (std::size_t t = 0; t < invariants_.size(); ++t) {
            Polynomial got = hg.lift(invariants_[t]);
            if (!(got == ring->nf(hg.action[t])))
                throw std::invalid_argument("LRSequence: lift of '" + hg.name +
                                            "' acts on invariant " + std::to_string(t + 1) +
                                            " as " + got.str() + ", prescribed " +
                                            hg.action[t].str());
        }

        std::vector<std::vector<Polynomial>> brackets;
        for (int s = 0; s < kernel_.rank(); ++s) {
            Derivation br = hg.lift.bracket(kernel_.generator(s));
            auto in_kernel = express_in_generators(br, kernel_, expr_bound_);
            if (!in_kernel)
                throw std::invalid_argument("LRSequence: [lift of '" + hg.name + "', k_" +
                                            std::to_string(s + 1) +
                                            "] does not land in the kernel algebra");
            brackets.push_back(std::move(*in_kernel));
        }
        lift_brackets_.push_back(std::move(brackets));
    }
}

Degree LRSequence::lift_degree(int h) const {
    WeightedDegree wd = hgens_[static_cast<std::size_t>(h)].lift.degree();
    if (!wd.is_homogeneous())
        throw std::logic_error("LRSequence: lift is not a homogeneous operator");
    return wd.value;
}

HorizontalSections horizontal_sections(const Connection& conn, Degree max_degree) {
    const LieAlgebra& K = conn.algebra();
    const Module& W = conn.module();

    for (int i = 0; i < K.rank(); ++i)
        for (int j = i + 1; j < K.rank(); ++j) {
            PolyMatrix R = curvature(conn, i, j, max_degree + 1);
            if (!curvature_zero_on_module(conn, R))
                throw std::runtime_error("horizontal_sections: connection is not flat on the pair (" +
                                         std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
        }

    HorizontalSections out;
    out.lo = W.min_degree();
    out.hi = max_degree;
    for (Degree d = out.lo; d <= max_degree; ++d) {
        auto basis = W.slice_basis(d);
        if (basis.empty()) continue;
        // stack the slices of every generator action
        std::size_t nrows = 0;
        std::vector<QMatrix> blocks;
        for (int g = 0; g < K.rank(); ++g) {
            Degree td = d + K.degree(g);
            QMatrix M(static_cast<std::size_t>(W.slice_dim(td)), basis.size());
            for (std::size_t c = 0; c < basis.size(); ++c) {
                ModuleElement img = conn.apply(g, basis[c]);
                std::vector<Rational> coords = W.coords(img, td);
                for (std::size_t r = 0; r < coords.size(); ++r) M.at(r, c) = coords[r];
            }
            nrows += M.rows();
            blocks.push_back(std::move(M));
        }
        QMatrix stacked(nrows, basis.size());
        std::size_t off = 0;
        for (const QMatrix& b : blocks) {
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c) stacked.at(off + r, c) = b.at(r, c);
            off += b.rows();
        }
        std::vector<ModuleElement> sections;
        for (const auto& v : stacked.kernel_basis()) sections.push_back(W.element_from_coords(v, d));
        if (!sections.empty()) out.basis.emplace(d, std::move(sections));
    }
    return out;
}

namespace {

bool element_horizontal(const Connection& connK, const ModuleElement& w) {
    const Module& W = connK.module();
    WeightedDegree wd = W.element_degree(w);
    if (wd.is_bottom()) return true;
    if (!wd.is_homogeneous())
        throw std::invalid_argument("horizontality check requires a homogeneous element");
    for (int g = 0; g < connK.algebra().rank(); ++g) {
        ModuleElement img = connK.apply(g, w);
        if (!W.element_is_zero(img, wd.value + connK.algebra().degree(g))) return false;
    }
    return true;
}

}  // namespace

ModuleElement induced_connection_action(const LRSequence& seq, const Connection& conn, int h,
                                        const ModuleElement& w) {
    Connection connK = restrict_connection(conn, seq.kernel(), seq.expr_bound());
    if (!element_horizontal(connK, w))
        throw std::invalid_argument("induced_connection_action: input is not horizontal");
    ModuleElement out = conn.apply_combination(seq.lift_in_total(h), w);
    if (!element_horizontal(connK, out))
        throw std::runtime_error(
            "induced_connection_action: result is not horizontal (invalid lift or non-flat input)");
    return out;
}

QMatrix cochain_action_matrix(const LRSequence& seq, const Connection& conn,
                              const StandardComplex& cx, int h, int p, Degree d) {
    const Module& W = cx.module();
    const LieAlgebra& K = cx.algebra();
    Degree dy = seq.lift_degree(h);
    const CochainBasis& src = cx.basis(p, d);
    const CochainBasis& dst = cx.basis(p, d + dy);

    std::map<std::vector<int>, std::size_t> dst_offset;
    {
        std::size_t off = 0;
        for (std::size_t i = 0; i < dst.elements.size();) {
            std::size_t j = i;
            while (j < dst.elements.size() && dst.elements[j].wedge == dst.elements[i].wedge) ++j;
            dst_offset[dst.elements[i].wedge] = off;
            off += j - i;
            i = j;
        }
    }

    QMatrix out(dst.elements.size(), src.elements.size());
    auto wedges = StandardComplex::wedges(K.rank(), p);

    for (std::size_t col = 0; col < src.elements.size(); ++col) {
        const auto& el = src.elements[col];
        ModuleElement b = W.slice_basis(el.module_degree)[el.slice_index];

        for (const auto& J : wedges) {
            ModuleElement acc = W.zero_element();
            bool any = false;

            if (J == el.wedge) {
                ModuleElement v = conn.apply_combination(seq.lift_in_total(h), b);
                for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = acc[i] + v[i];
                any = true;
            }

            // - sum_s phi(k_{J_1} ^ ... ^ [y, k_{J_s}] ^ ... )
            for (std::size_t s = 0; s < J.size(); ++s) {
                const auto& expr = seq.lift_bracket_in_kernel(h, J[s]);
                std::vector<int> rest;
                for (std::size_t u = 0; u < J.size(); ++u)
                    if (u != s) rest.push_back(J[u]);
                for (int t = 0; t < K.rank(); ++t) {
                    const Polynomial& ct = expr[static_cast<std::size_t>(t)];
                    if (ct.is_zero()) continue;
                    if (std::find(rest.begin(), rest.end(), t) != rest.end()) continue;
                    std::size_t pos = 0;
                    while (pos < rest.size() && rest[pos] < t) ++pos;
                    std::vector<int> sorted = rest;
                    sorted.insert(sorted.begin() + static_cast<std::ptrdiff_t>(pos), t);
                    if (sorted != el.wedge) continue;
                    // moving g_t from slot s to slot pos costs (-1)^(s-pos)
                    Rational sign(((s + pos) % 2 == 0) ? 1 : -1);
                    for (std::size_t i = 0; i < acc.size(); ++i)
                        acc[i] = acc[i] - (ct * b[i]).scaled(sign);
                    any = true;
                }
            }

            if (!any) continue;
            acc = W.nf_element(acc);
            Degree target_degree = d + dy + cx.wedge_degree(J);
            std::vector<Rational> coords = W.coords(acc, target_degree);
            std::size_t off = dst_offset.count(J) ? dst_offset[J] : 0;
            for (std::size_t i = 0; i < coords.size(); ++i) {
                if (is_zero(coords[i])) continue;
                out.at(off + i, col) += coords[i];
            }
        }
    }
    return out;
}

GmAction gm_matrices(const LRSequence& seq, const Connection& conn, int index, Degree max_degree) {
    Connection connK = restrict_connection(conn, seq.kernel(), seq.expr_bound());
    StandardComplex cx(connK, seq.expr_bound());

    Degree max_dy = 0;
    for (std::size_t h = 0; h < seq.hgens().size(); ++h)
        max_dy = std::max(max_dy, seq.lift_degree(static_cast<int>(h)));
    GradedCohomology H = cohomology(cx, max_degree + max_dy);

    GmAction out;
    out.index = index;
    out.lo = cx.report_floor();
    out.hi = max_degree;
    out.matrices.resize(seq.hgens().size());

    for (std::size_t h = 0; h < seq.hgens().size(); ++h) {
        Degree dy = seq.lift_degree(static_cast<int>(h));
        for (Degree d = out.lo; d <= max_degree; ++d) {
            int sdim = H.dim(index, d);
            int tdim = H.dim(index, d + dy);
            if (sdim == 0) continue;

            // commutation with the differential on this slice
            QMatrix Yp = cochain_action_matrix(seq, conn, cx, static_cast<int>(h), index, d);
            QMatrix Yp1 = cochain_action_matrix(seq, conn, cx, static_cast<int>(h), index + 1, d);
            const QMatrix& D_src = cx.differential(index, d);
            const QMatrix& D_dst = cx.differential(index, d + dy);
            if (!(Yp1.multiply(D_src) == D_dst.multiply(Yp)))
                throw std::runtime_error(
                    "gm_matrices: lift action does not commute with the differential at degree " +
                    std::to_string(d) + " (invalid sequence data)");

            const auto& src_slice = H.by_index[static_cast<std::size_t>(index)].at(d);

            // express each acted representative in [representatives | coboundaries]
            std::vector<std::vector<Rational>> solver_cols;
            if (tdim > 0)
                for (const auto& rep : H.by_index[static_cast<std::size_t>(index)].at(d + dy).representatives)
                    solver_cols.push_back(rep);
            std::size_t nreps = solver_cols.size();
            if (index > 0) {
                const QMatrix& dprev = cx.differential(index - 1, d + dy);
                for (std::size_t c = 0; c < dprev.cols(); ++c) {
                    std::vector<Rational> col;
                    for (std::size_t r = 0; r < dprev.rows(); ++r) col.push_back(dprev.at(r, c));
                    solver_cols.push_back(std::move(col));
                }
            }
            std::size_t height = static_cast<std::size_t>(cx.cochain_dim(index, d + dy));
            QMatrix solver(height, solver_cols.size());
            for (std::size_t c = 0; c < solver_cols.size(); ++c)
                for (std::size_t r = 0; r < height; ++r) solver.at(r, c) = solver_cols[c][r];

            QMatrix mat(static_cast<std::size_t>(tdim), static_cast<std::size_t>(sdim));
            for (int v = 0; v < sdim; ++v) {
                std::vector<Rational> acted = Yp.apply(src_slice.representatives[static_cast<std::size_t>(v)]);
                // must be a cocycle
                const QMatrix& D = cx.differential(index, d + dy);
                for (const Rational& q : D.apply(acted))
                    if (!is_zero(q))
                        throw std::runtime_error(
                            "gm_matrices: action does not preserve cocycles at degree " +
                            std::to_string(d));
                auto sol = solver.solve(acted);
                if (!sol)
                    throw std::runtime_error(
                        "gm_matrices: acted cocycle not expressible in representatives and "
                        "coboundaries at degree " + std::to_string(d));
                for (std::size_t r = 0; r < nreps; ++r) mat.at(r, static_cast<std::size_t>(v)) = (*sol)[r];
            }
            out.matrices[h].emplace(d, std::move(mat));
        }
    }
    return out;
}

GysinClass gysin_class(const StandardComplex& cx, Degree max_degree) {
    GradedCohomology H = cohomology(cx, max_degree);
    GysinClass out;
    out.lo = H.lo;
    out.hi = H.hi;
    for (Degree d = H.lo; d <= H.hi; ++d) {
        long chi = 0;
        for (int p = 0; p <= cx.algebra().rank(); ++p)
            chi += (p % 2 == 0 ? 1 : -1) * static_cast<long>(H.dim(p, d));
        if (chi != 0) out.chi.emplace(d, chi);
    }
    return out;
}

GysinClass gysin_class(const LRSequence& seq, const Connection& conn, Degree max_degree) {
    Connection connK = restrict_connection(conn, seq.kernel(), seq.expr_bound());
    StandardComplex cx(connK, seq.expr_bound());
    return gysin_class(cx, max_degree);
}

}  // namespace lrc
