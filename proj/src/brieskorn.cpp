#include "lrc/brieskorn.hpp"

#include "lrc/qmatrix.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>

namespace lrc {

namespace {

void check_mn(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("parameters require m, n >= 1");
}

void check_mnkl(int m, int n, int k, int l) {
    check_mn(m, n);
    if (k < 1 || k > m || l < 1 || l > n)
        throw std::invalid_argument("parameters require 1 <= k <= m and 1 <= l <= n");
}

Polynomial mono2(const RingPtr& ring, int xe, int ye, const Rational& c) {
    return Polynomial::monomial(ring, {xe, ye}, c);
}

Polynomial mono3(const RingPtr& ring, int xe, int ye, int ze, const Rational& c) {
    return Polynomial::monomial(ring, {xe, ye, ze}, c);
}

}  // namespace

RingPtr brieskorn_ring(int m, int n) {
    check_mn(m, n);
    auto base = Ring::free_ring({"x", "y", "z"},
                                {2 * static_cast<Degree>(n), 2 * static_cast<Degree>(m),
                                 static_cast<Degree>(m) * n});
    Polynomial f = mono3(base, m, 0, 0, 1) + mono3(base, 0, n, 0, 1) + mono3(base, 0, 0, 2, 1);
    return Ring::quotient(base, f, "z", 2);
}

MatrixFactorization phi_psi(int m, int n, int k, int l) {
    check_mnkl(m, n, k, l);
    RingPtr A = brieskorn_ring(m, n);
    auto X = [&](int e) { return mono3(A, e, 0, 0, 1); };
    auto Y = [&](int e) { return mono3(A, 0, e, 0, 1); };
    Polynomial z = mono3(A, 0, 0, 1, 1);
    Polynomial o = Polynomial::zero(A);

    MatrixFactorization mf;
    mf.ring = A;
    mf.f = X(m) + Y(n) + z * z;
    mf.phi = {{X(m - k), Y(n - l), o, z},
              {Y(l), -X(k), z, o},
              {z, o, -Y(n - l), -X(k)},
              {o, z, X(m - k), -Y(l)}};
    mf.psi = {{X(k), Y(n - l), z, o},
              {Y(l), -X(m - k), o, z},
              {o, z, -Y(l), X(k)},
              {z, o, -X(m - k), -Y(n - l)}};
    return mf;
}

MfCheck verify_mf(const MatrixFactorization& mf) {
    MfCheck out;
    const std::size_t r = mf.phi.size();
    for (int which = 0; which < 2; ++which) {
        PolyMatrix prod = which == 0 ? poly_matrix_mul(mf.phi, mf.psi) : poly_matrix_mul(mf.psi, mf.phi);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                Polynomial want = (i == j) ? mf.f : Polynomial::zero(mf.ring);
                Polynomial diff = prod[i][j] - want;
                if (!diff.is_zero()) {
                    out.ok = false;
                    out.which = which;
                    out.row = static_cast<int>(i);
                    out.col = static_cast<int>(j);
                    out.difference = diff;
                    return out;
                }
            }
    }
    return out;
}

std::array<Derivation, 4> der_generators(int m, int n) {
    check_mn(m, n);
    RingPtr A = brieskorn_ring(m, n);
    auto zero = Polynomial::zero(A);
    Derivation d0(A, {mono3(A, 1, 0, 0, 2 * n), mono3(A, 0, 1, 0, 2 * m),
                      mono3(A, 0, 0, 1, Rational(m) * n)});
    Derivation d1(A, {mono3(A, 0, n - 1, 0, -n), mono3(A, m - 1, 0, 0, m), zero});
    Derivation d2(A, {mono3(A, 0, 0, 1, -2), zero, mono3(A, m - 1, 0, 0, m)});
    Derivation d3(A, {zero, mono3(A, 0, 0, 1, -2), mono3(A, 0, n - 1, 0, n)});
    return {d0, d1, d2, d3};
}

PolyMatrix syzygy_matrix(int m, int n) {
    check_mn(m, n);
    RingPtr A = brieskorn_ring(m, n);
    auto zero = Polynomial::zero(A);
    return {{mono3(A, 0, n - 1, 0, 1), mono3(A, 0, 0, 1, 1), zero, mono3(A, m - 1, 0, 0, 1)},
            {mono3(A, 1, 0, 0, 2), zero, mono3(A, 0, 0, 1, -2), mono3(A, 0, 1, 0, -2)},
            {zero, mono3(A, 1, 0, 0, n), mono3(A, 0, n - 1, 0, n), mono3(A, 0, 0, 1, -n)},
            {mono3(A, 0, 0, 1, -m), mono3(A, 0, 1, 0, m), mono3(A, m - 1, 0, 0, -m), zero}};
}

SyzygyReport verify_syzygies(int m, int n) {
    auto gens = der_generators(m, n);
    PolyMatrix rho = syzygy_matrix(m, n);
    RingPtr A = gens[0].ring();

    SyzygyReport rep;
    rep.rows_ok = true;
    rep.cols_ok = true;
    for (std::size_t i = 0; i < 4; ++i) {
        std::vector<Polynomial> res;
        for (int v = 0; v < A->nvars(); ++v) {
            Polynomial acc = Polynomial::zero(A);
            for (std::size_t j = 0; j < 4; ++j) acc = acc + rho[i][j] * gens[j].coeff(v);
            acc = A->nf(acc);
            if (!acc.is_zero()) rep.rows_ok = false;
            res.push_back(std::move(acc));
        }
        rep.row_residuals.push_back(std::move(res));
    }
    for (std::size_t j = 0; j < 4; ++j) {
        std::vector<Polynomial> res;
        for (int v = 0; v < A->nvars(); ++v) {
            Polynomial acc = Polynomial::zero(A);
            for (std::size_t i = 0; i < 4; ++i) acc = acc + rho[i][j] * gens[i].coeff(v);
            acc = A->nf(acc);
            if (!acc.is_zero()) rep.cols_ok = false;
            res.push_back(std::move(acc));
        }
        rep.col_residuals.push_back(std::move(res));
    }
    if (rep.rows_ok && rep.cols_ok) rep.orientation = SyzygyReport::Orientation::both;
    else if (rep.rows_ok) rep.orientation = SyzygyReport::Orientation::rows;
    else if (rep.cols_ok) rep.orientation = SyzygyReport::Orientation::columns;
    else rep.orientation = SyzygyReport::Orientation::neither;
    return rep;
}

std::vector<Degree> generator_degrees(const PolyMatrix& phi, const RingPtr& ring) {
    const std::size_t r = phi.size();
    std::vector<std::optional<Degree>> row(r), col(phi.empty() ? 0 : phi[0].size());
    auto entry_degree = [&](std::size_t i, std::size_t j) -> std::optional<Degree> {
        if (phi[i][j].is_zero()) return std::nullopt;
        WeightedDegree wd = phi[i][j].weighted_degree();
        if (!wd.is_homogeneous())
            throw std::invalid_argument("generator_degrees: inhomogeneous presentation entry");
        return wd.value;
    };
    // propagate from anchored rows across shared nonzero entries
    for (std::size_t seed = 0; seed < r; ++seed) {
        if (row[seed]) continue;
        row[seed] = (seed == 0) ? 0 : 0;  // each new component anchored at 0
        std::deque<std::pair<bool, std::size_t>> work;  // (is_row, index)
        work.emplace_back(true, seed);
        while (!work.empty()) {
            auto [is_row, idx] = work.front();
            work.pop_front();
            if (is_row) {
                for (std::size_t j = 0; j < col.size(); ++j) {
                    auto e = entry_degree(idx, j);
                    if (!e) continue;
                    Degree want = *row[idx] + *e;
                    if (!col[j]) { col[j] = want; work.emplace_back(false, j); }
                    else if (*col[j] != want)
                        throw std::invalid_argument(
                            "generator_degrees: inconsistent homogeneity constraints");
                }
            } else {
                for (std::size_t i = 0; i < r; ++i) {
                    auto e = entry_degree(i, idx);
                    if (!e) continue;
                    Degree want = *col[idx] - *e;
                    if (!row[i]) { row[i] = want; work.emplace_back(true, i); }
                    else if (*row[i] != want)
                        throw std::invalid_argument(
                            "generator_degrees: inconsistent homogeneity constraints");
                }
            }
        }
    }
    std::vector<Degree> out;
    out.reserve(r);
    for (std::size_t i = 0; i < r; ++i) out.push_back(*row[i]);
    return out;
}

namespace {

// closed-form entry c * x^xe * y^ye; undefined when c != 0 and an exponent
// is negative
Polynomial closed_form_term(const RingPtr& ring, const std::string& name, const Rational& c,
                            int xe, int ye) {
    if (is_zero(c)) return Polynomial::zero(ring);
    if (xe < 0 || ye < 0)
        throw closed_form_error(name, "closed form " + name + " requires monomial x^" +
                                          std::to_string(xe) + "*y^" + std::to_string(ye) +
                                          " with scalar " + rational_str(c));
    return mono3(ring, xe, ye, 0, c);
}

struct FamilyScalars {
    Rational a0[4];
    Rational b[4], c[4], d[4];
};

FamilyScalars family_scalars(int m, int n, int k, int l) {
    Rational mn = Rational(m) * n, nk = Rational(n) * k, ml = Rational(m) * l;
    Rational half = rat(1, 2);
    FamilyScalars s;
    s.a0[0] = nk + ml - half * mn;
    s.a0[1] = rat(3, 2) * mn - ml - nk;
    s.a0[2] = half * mn + ml - nk;
    s.a0[3] = half * mn + nk - ml;
    Rational q = rat(1, 4);
    s.b[0] = q * (mn - 2 * nk - 2 * ml);
    s.b[1] = q * (3 * mn - 2 * ml - 2 * nk);
    s.b[2] = q * (2 * nk - mn - 2 * ml);
    s.b[3] = q * (2 * nk - 2 * ml + mn);
    Rational in = rat(1, n);
    s.c[0] = in * (half * mn - ml - nk);
    s.c[1] = in * (rat(3, 2) * mn - ml - nk);
    s.c[2] = in * (half * mn + ml - nk);
    s.c[3] = in * (ml - nk - half * mn);
    Rational im = rat(1, m);
    s.d[0] = im * (half * mn - ml - nk);
    s.d[1] = im * (ml + nk - rat(3, 2) * mn);
    s.d[2] = im * (half * mn + ml - nk);
    s.d[3] = im * (half * mn - ml + nk);
    return s;
}

}  // namespace

std::vector<std::string> closed_form_undefined(int m, int n, int k, int l) {
    check_mnkl(m, n, k, l);
    FamilyScalars s = family_scalars(m, n, k, l);
    std::vector<std::string> out;
    auto probe = [&](const std::string& name, const Rational& c, int xe, int ye) {
        if (!is_zero(c) && (xe < 0 || ye < 0)) out.push_back(name);
    };
    probe("b_1", s.b[0], k - 1, l - 1);
    probe("b_2", s.b[1], m - k - 1, n - l - 1);
    probe("b_3", s.b[2], m - k - 1, l - 1);
    probe("b_4", s.b[3], k - 1, n - l - 1);
    probe("c_1", s.c[0], k - 1, 0);
    probe("c_2", s.c[1], m - k - 1, 0);
    probe("c_3", s.c[2], m - k - 1, 0);
    probe("c_4", s.c[3], k - 1, 0);
    probe("d_1", s.d[0], 0, l - 1);
    probe("d_2", s.d[1], 0, n - l - 1);
    probe("d_3", s.d[2], 0, l - 1);
    probe("d_4", s.d[3], 0, n - l - 1);
    return out;
}

ConnectionFamily connection_family(int m, int n, int k, int l) {
    check_mnkl(m, n, k, l);
    MatrixFactorization mf = phi_psi(m, n, k, l);
    RingPtr A = mf.ring;

    std::vector<std::vector<Polynomial>> columns;
    for (std::size_t j = 0; j < 4; ++j) {
        std::vector<Polynomial> col;
        for (std::size_t i = 0; i < 4; ++i) col.push_back(mf.phi[i][j]);
        columns.push_back(std::move(col));
    }
    Module W = Module::presented(A, generator_degrees(mf.phi, A), std::move(columns));

    auto gens = der_generators(m, n);
    LieAlgebra L(A, {gens[0], gens[1], gens[2], gens[3]}, syzygy_matrix(m, n));

    FamilyScalars s = family_scalars(m, n, k, l);
    PolyMatrix A0 = poly_matrix_zero(A, 4, 4);
    for (int i = 0; i < 4; ++i) A0[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
        Polynomial::constant(A, s.a0[i]);

    PolyMatrix A1 = poly_matrix_zero(A, 4, 4);
    A1[1][0] = closed_form_term(A, "b_1", s.b[0], k - 1, l - 1);
    A1[0][1] = closed_form_term(A, "b_2", s.b[1], m - k - 1, n - l - 1);
    A1[3][2] = closed_form_term(A, "b_3", s.b[2], m - k - 1, l - 1);
    A1[2][3] = closed_form_term(A, "b_4", s.b[3], k - 1, n - l - 1);

    PolyMatrix A2 = poly_matrix_zero(A, 4, 4);
    A2[2][0] = closed_form_term(A, "c_1", s.c[0], k - 1, 0);
    A2[3][1] = closed_form_term(A, "c_2", s.c[1], m - k - 1, 0);
    A2[0][2] = closed_form_term(A, "c_3", s.c[2], m - k - 1, 0);
    A2[1][3] = closed_form_term(A, "c_4", s.c[3], k - 1, 0);

    PolyMatrix A3 = poly_matrix_zero(A, 4, 4);
    A3[3][0] = closed_form_term(A, "d_1", s.d[0], 0, l - 1);
    A3[2][1] = closed_form_term(A, "d_2", s.d[1], 0, n - l - 1);
    A3[1][2] = closed_form_term(A, "d_3", s.d[2], 0, l - 1);
    A3[0][3] = closed_form_term(A, "d_4", s.d[3], 0, n - l - 1);

    Connection conn(L, W, {A0, A1, A2, A3});
    return ConnectionFamily{m, n, k, l, A, std::move(mf), std::move(W), std::move(L), std::move(conn)};
}

CuspSetup cusp_setup(int m, int n) {
    if (m < 2 || n < 2) throw std::invalid_argument("cusp_setup requires m, n >= 2");
    RingPtr B = Ring::free_ring({"x", "y"}, {static_cast<Degree>(n), static_cast<Degree>(m)});
    Polynomial f = mono2(B, m, 0, 1) - mono2(B, 0, n, 1);
    Polynomial fx = f.diff(0), fy = f.diff(1);

    // kernel of delta -> delta(f) on homogeneous derivations, scanned by
    // operator degree; the first nonzero slice must be one-dimensional
    Degree lo = -std::max<Degree>(n, m);
    Degree hi = static_cast<Degree>(m) * n;
    std::optional<Derivation> tangent;
    for (Degree e = lo; e <= hi && !tangent; ++e) {
        auto xmonos = monomials_of_degree(*B, e + n);
        auto ymonos = monomials_of_degree(*B, e + m);
        if (xmonos.empty() && ymonos.empty()) continue;
        auto targets = monomials_of_degree(*B, e + static_cast<Degree>(m) * n);
        std::map<Exponents, std::size_t> tindex;
        for (std::size_t i = 0; i < targets.size(); ++i) tindex[targets[i]] = i;
        QMatrix M(targets.size(), xmonos.size() + ymonos.size());
        auto fill = [&](const std::vector<Exponents>& monos, const Polynomial& grad,
                        std::size_t offset) {
            for (std::size_t u = 0; u < monos.size(); ++u) {
                Polynomial prod = Polynomial::monomial(B, monos[u], 1) * grad;
                for (const Term& t : prod.terms()) M.at(tindex.at(t.exps), offset + u) += t.coef;
            }
        };
        fill(xmonos, fx, 0);
        fill(ymonos, fy, xmonos.size());
        auto kernel = M.kernel_basis();
        if (kernel.empty()) continue;
        if (kernel.size() != 1)
            throw std::runtime_error("cusp_setup: tangent kernel not rank 1 at degree " +
                                     std::to_string(e));
        // integral primitive normalization with positive leading coefficient
        std::vector<Rational>& v = kernel[0];
        mpz_class lcm_den = 1, gcd_num = 0;
        for (const Rational& q : v) {
            if (is_zero(q)) continue;
            mpz_class den = q.get_den();
            lcm_den = lcm_den / gcd(lcm_den, den) * den;
        }
        for (Rational& q : v) q *= Rational(lcm_den);
        for (const Rational& q : v) gcd_num = gcd(gcd_num, q.get_num());
        if (gcd_num != 0)
            for (Rational& q : v) q /= Rational(gcd_num);
        for (const Rational& q : v) {
            if (is_zero(q)) continue;
            if (sgn(q) < 0)
                for (Rational& w : v) w = -w;
            break;
        }
        Polynomial cx = Polynomial::zero(B), cy = Polynomial::zero(B);
        for (std::size_t u = 0; u < xmonos.size(); ++u)
            if (!is_zero(v[u])) cx = cx + Polynomial::monomial(B, xmonos[u], v[u]);
        for (std::size_t u = 0; u < ymonos.size(); ++u)
            if (!is_zero(v[xmonos.size() + u]))
                cy = cy + Polynomial::monomial(B, ymonos[u], v[xmonos.size() + u]);
        tangent = Derivation(B, {cx, cy});
    }
    if (!tangent) throw std::runtime_error("cusp_setup: no tangent generator found");

    Derivation euler(B, {mono2(B, 1, 0, n), mono2(B, 0, 1, m)});

    CuspSetup out{m,
                  n,
                  B,
                  f,
                  *tangent,
                  euler,
                  LieAlgebra(B, {*tangent}),
                  LieAlgebra(B, {*tangent, euler}),
                  Module::free_module(B, {0}, static_cast<Degree>(m) * n),
                  Connection(LieAlgebra(B, {*tangent, euler}),
                             Module::free_module(B, {0}, static_cast<Degree>(m) * n),
                             {poly_matrix_zero(B, 1, 1),
                              {{Polynomial::constant(B, Rational(m) * n)}}}),
                  {mono2(B, m - 1, 0, m), mono2(B, 0, n - 1, n)},
                  Polynomial::zero(B)};
    Polynomial cand = out.naive_candidate[0] * fx + out.naive_candidate[1] * fy;
    out.naive_candidate_value = cand;
    return out;
}

std::map<Degree, int> cusp_h1_oracle(int m, int n, Degree max_degree) {
    if (m < 2 || n < 2) throw std::invalid_argument("cusp_h1_oracle requires m, n >= 2");
    RingPtr B = Ring::free_ring({"x", "y"}, {static_cast<Degree>(n), static_cast<Degree>(m)});
    Polynomial f = mono2(B, m, 0, 1) - mono2(B, 0, n, 1);
    Polynomial fx = f.diff(0), fy = f.diff(1);
    // tangent generator in closed form for the oracle path: the syzygy of
    // (f_x, f_y) is (n y^(n-1), m x^(m-1)) up to scale
    Polynomial px = mono2(B, 0, n - 1, n), py = mono2(B, m - 1, 0, m);
    Degree dP = static_cast<Degree>(m) * n - m - n;
    Degree mn = static_cast<Degree>(m) * n;

    std::map<Degree, int> dims;
    for (Degree e = 0; e <= max_degree; ++e) {
        // slice e of H^1 = I_{e + dP} / tangent(I_e) with I_d = f * B_{d - mn}
        auto target = monomials_of_degree(*B, e + dP - mn);
        if (target.empty()) continue;
        auto source = monomials_of_degree(*B, e - mn);
        std::map<Exponents, std::size_t> tindex;
        for (std::size_t i = 0; i < target.size(); ++i) tindex[target[i]] = i;
        QMatrix M(target.size(), source.size());
        for (std::size_t u = 0; u < source.size(); ++u) {
            Polynomial b = Polynomial::monomial(B, source[u], 1);
            Polynomial img = px * b.diff(0) + py * b.diff(1);
            for (const Term& t : img.terms()) M.at(tindex.at(t.exps), u) += t.coef;
        }
        int dim = static_cast<int>(target.size()) - static_cast<int>(M.rank());
        if (dim > 0) dims[e] = dim;
    }
    return dims;
}

}  // namespace lrc
