#include "lrc/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrc {

StandardComplex::StandardComplex(Connection conn, Degree bracket_degree_bound)
    : conn_(std::move(conn)) {
    const LieAlgebra& L = conn_.algebra();
    bracket_exprs_.resize(static_cast<std::size_t>(L.rank()));
    for (int i = 0; i < L.rank(); ++i) {
        for (int j = i + 1; j < L.rank(); ++j) {
            Derivation br = L.generator(i).bracket(L.generator(j));
            auto expr = express_in_generators(br, L, bracket_degree_bound);
            if (!expr)
                throw std::runtime_error("StandardComplex: bracket [g_" + std::to_string(i + 1) +
                                         ", g_" + std::to_string(j + 1) +
                                         "] not expressible in the generators");
            bracket_exprs_[static_cast<std::size_t>(i)].push_back(std::move(*expr));
        }
    }
}

const std::vector<Polynomial>& StandardComplex::bracket_expression(int i, int j) const {
    if (i >= j) throw std::invalid_argument("bracket_expression: need i < j");
    return bracket_exprs_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - i - 1)];
}

std::vector<std::vector<int>> StandardComplex::wedges(int rank, int p) {
    std::vector<std::vector<int>> out;
    if (p < 0 || p > rank) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == p) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < rank; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

Degree StandardComplex::wedge_degree(const std::vector<int>& wedge) const {
    Degree d = 0;
    for (int i : wedge) d += conn_.algebra().degree(i);
    return d;
}

const CochainBasis& StandardComplex::basis(int p, Degree d) const {
    std::lock_guard<std::mutex> lk(mu_);
    auto key = std::make_pair(p, d);
    auto it = basis_cache_.find(key);
    if (it == basis_cache_.end()) it = basis_cache_.emplace(key, build_basis(p, d)).first;
    return it->second;
}

CochainBasis StandardComplex::build_basis(int p, Degree d) const {
    CochainBasis b;
    b.p = p;
    b.degree = d;
    for (const auto& wedge : wedges(conn_.algebra().rank(), p)) {
        Degree md = d + wedge_degree(wedge);
        int dim = conn_.module().slice_dim(md);
        for (int s = 0; s < dim; ++s)
            b.elements.push_back({wedge, md, static_cast<std::size_t>(s)});
    }
    return b;
}

int StandardComplex::cochain_dim(int p, Degree d) const {
    return static_cast<int>(basis(p, d).elements.size());
}

const QMatrix& StandardComplex::differential(int p, Degree d) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = diff_cache_.find({p, d});
        if (it != diff_cache_.end()) return it->second;
    }
    QMatrix m = build_differential(p, d);
    std::lock_guard<std::mutex> lk(mu_);
    return diff_cache_.emplace(std::make_pair(p, d), std::move(m)).first->second;
}

QMatrix StandardComplex::build_differential(int p, Degree d) const {
    const CochainBasis& src = basis(p, d);
    const CochainBasis& dst = basis(p + 1, d);
    const Module& W = conn_.module();
    const RingPtr& ring = W.ring();

    // offsets of each target wedge's coordinate block
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
    auto target_wedges = wedges(conn_.algebra().rank(), p + 1);

    for (std::size_t col = 0; col < src.elements.size(); ++col) {
        const auto& el = src.elements[col];
        ModuleElement b = W.slice_basis(el.module_degree)[el.slice_index];

        for (const auto& J : target_wedges) {
            ModuleElement acc = W.zero_element();
            bool any = false;

            // first sum: (-1)^t nabla_{g_{J_t}} phi(J \ J_t)   (t zero-based)
            for (std::size_t t = 0; t < J.size(); ++t) {
                std::vector<int> rest;
                for (std::size_t u = 0; u < J.size(); ++u)
                    if (u != t) rest.push_back(J[u]);
                if (rest != el.wedge) continue;
                ModuleElement v = conn_.apply(J[t], b);
                Rational sign((t % 2 == 0) ? 1 : -1);
                for (std::size_t i = 0; i < acc.size(); ++i)
                    acc[i] = acc[i] + v[i].scaled(sign);
                any = true;
            }

            // second sum: (-1)^{s+t} phi([g_{J_s}, g_{J_t}] ^ J \ {J_s, J_t})
            for (std::size_t s = 0; s + 1 < J.size(); ++s) {
                for (std::size_t t = s + 1; t < J.size(); ++t) {
                    std::vector<int> rest;
                    for (std::size_t u = 0; u < J.size(); ++u)
                        if (u != s && u != t) rest.push_back(J[u]);
                    const auto& expr = bracket_expression(J[s], J[t]);
                    Rational outer(((s + t) % 2 == 0) ? 1 : -1);
                    for (int k = 0; k < conn_.algebra().rank(); ++k) {
                        const Polynomial& ck = expr[static_cast<std::size_t>(k)];
                        if (ck.is_zero()) continue;
                        if (std::find(rest.begin(), rest.end(), k) != rest.end()) continue;
                        // sign of sorting g_k into the increasing wedge
                        std::size_t pos = 0;
                        while (pos < rest.size() && rest[pos] < k) ++pos;
                        std::vector<int> sorted = rest;
                        sorted.insert(sorted.begin() + static_cast<std::ptrdiff_t>(pos), k);
                        if (sorted != el.wedge) continue;
                        Rational sign = outer * Rational((pos % 2 == 0) ? 1 : -1);
                        for (std::size_t i = 0; i < acc.size(); ++i)
                            acc[i] = acc[i] + (ck * b[i]).scaled(sign);
                        any = true;
                    }
                }
            }

            if (!any) continue;
            acc = W.nf_element(acc);
            Degree target_degree = d + wedge_degree(J);
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

ModuleElement StandardComplex::value_on_wedge(int p, Degree d, const std::vector<Rational>& coords,
                                              const std::vector<int>& wedge) const {
    const CochainBasis& b = basis(p, d);
    if (coords.size() != b.elements.size())
        throw std::invalid_argument("value_on_wedge: coordinate count mismatch");
    const Module& W = conn_.module();
    ModuleElement out = W.zero_element();
    for (std::size_t i = 0; i < b.elements.size(); ++i) {
        if (b.elements[i].wedge != wedge || is_zero(coords[i])) continue;
        ModuleElement base = W.slice_basis(b.elements[i].module_degree)[b.elements[i].slice_index];
        for (std::size_t g = 0; g < out.size(); ++g)
            out[g] = out[g] + base[g].scaled(coords[i]);
    }
    return out;
}

Degree StandardComplex::report_floor() const {
    Degree pos = 0;
    for (int i = 0; i < conn_.algebra().rank(); ++i)
        pos += std::max<Degree>(conn_.algebra().degree(i), 0);
    return conn_.module().min_degree() - pos;
}

StandardComplex::VerifyReport StandardComplex::verify(Degree max_degree) const {
    VerifyReport rep;
    int r = conn_.algebra().rank();
    for (Degree d = report_floor(); d <= max_degree; ++d) {
        for (int p = 0; p + 1 <= r; ++p) {
            const QMatrix& d0 = differential(p, d);
            const QMatrix& d1 = differential(p + 1, d);
            if (d0.cols() == 0 || d1.rows() == 0) continue;
            if (!d1.multiply(d0).is_zero()) {
                rep.ok = false;
                rep.p = p;
                rep.degree = d;
                return rep;
            }
        }
    }
    return rep;
}

GradedCohomology cohomology(const StandardComplex& cx, Degree max_degree) {
    auto check = cx.verify(max_degree);
    if (!check.ok)
        throw std::runtime_error("cohomology: input is not a complex (d^2 != 0 at p = " +
                                 std::to_string(check.p) + ", degree " +
                                 std::to_string(check.degree) + "); the connection is not flat");

    int r = cx.algebra().rank();
    GradedCohomology out;
    out.lo = cx.report_floor();
    out.hi = max_degree;
    out.by_index.resize(static_cast<std::size_t>(r) + 1);

    for (Degree d = out.lo; d <= max_degree; ++d) {
        for (int p = 0; p <= r; ++p) {
            int cdim = cx.cochain_dim(p, d);
            if (cdim == 0) continue;
            const QMatrix& dp = cx.differential(p, d);
            std::vector<std::vector<Rational>> kernel;
            if (dp.rows() == 0) {
                // zero map: whole slice is the kernel
                for (int i = 0; i < cdim; ++i) {
                    std::vector<Rational> v(static_cast<std::size_t>(cdim), Rational(0));
                    v[static_cast<std::size_t>(i)] = 1;
                    kernel.push_back(std::move(v));
                }
            } else {
                kernel = dp.kernel_basis();
            }

            RowSpace image(static_cast<std::size_t>(cdim));
            if (p > 0) {
                const QMatrix& dprev = cx.differential(p - 1, d);
                for (std::size_t c = 0; c < dprev.cols(); ++c) {
                    std::vector<Rational> col;
                    col.reserve(dprev.rows());
                    for (std::size_t i = 0; i < dprev.rows(); ++i) col.push_back(dprev.at(i, c));
                    image.insert(std::move(col));
                }
            }

            RowSpace quotient(static_cast<std::size_t>(cdim));
            for (auto& v : kernel) quotient.insert(image.reduce(std::move(v)));

            CohomologySlice slice;
            slice.dim = static_cast<int>(quotient.dim());
            slice.representatives = quotient.rows();
            if (slice.dim != static_cast<int>(kernel.size() - image.dim()))
                throw std::logic_error("cohomology: rank bookkeeping mismatch");
            if (slice.dim > 0) out.by_index[static_cast<std::size_t>(p)].emplace(d, std::move(slice));
        }
    }
    return out;
}

}  // namespace lrc
