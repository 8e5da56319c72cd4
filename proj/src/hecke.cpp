#include "qmf/hecke.hpp"

#include <stdexcept>

namespace qmf {

HomogeneousPoly hecke_apply(const Int& p, const HomogeneousPoly& f) {
    if (f.frame() != Frame::X) throw std::invalid_argument("hecke_apply: X frame expected");
    for (const RotationMatrix& g : gamma_list())
        if (act(g, f) != f)
            throw std::invalid_argument("hecke_apply: polynomial is not invariant");
    HomogeneousPoly out(f.degree(), Frame::X);
    for (const RotationMatrix& rep : hecke_coset_reps(p)) out = out + act(rep.inverse(), f);
    return out;
}

HeckeMatrix hecke_matrix(const Int& p, const BasisResult& b) {
    if (b.dim() == 0) throw std::invalid_argument("hecke_matrix: empty basis");
    const std::size_t d = poly_space_dim(b.l), t = b.dim();
    // Solve [basis | images] to re-express each image in the basis.
    RationalMatrix aug(d, 2 * t);
    for (std::size_t j = 0; j < t; ++j) {
        aug.set_column(j, b.basis[j].dense());
        aug.set_column(t + j, hecke_apply(p, b.basis[j]).dense());
    }
    RrefResult r = rref(aug);
    for (std::size_t k = 0; k < r.pivots.size(); ++k)
        if (r.pivots[k] >= t)
            throw std::logic_error("hecke_matrix: image not in the spanned space");
    if (r.pivots.size() != t) throw std::logic_error("hecke_matrix: basis not independent");
    HeckeMatrix out{p, b.l, b.variant, RationalMatrix(t, t)};
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) out.matrix.at(i, j) = r.matrix.at(i, t + j);
    return out;
}

std::vector<Rational> char_poly(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: square matrix expected");
    const std::size_t n = m.rows();
    // Faddeev-LeVerrier: M_1 = A, c_k = -tr(A M_k)/k, M_{k+1} = A M_k + c_k I.
    std::vector<Rational> coeffs(n + 1);
    coeffs[n] = 1;
    RationalMatrix mk = RationalMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += mk.at(i, i);
        Rational ck = -tr / static_cast<long>(k);
        coeffs[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) mk.at(i, i) += ck;
    }
    return coeffs;
}

Rational theta_character(int l, const Rational& trace) {
    if (l < 0) throw std::invalid_argument("theta_character: negative degree");
    Rational t_prev = 2, t_cur = trace - 1, sum = 1;
    for (int k = 1; k <= l; ++k) {
        sum += t_cur;
        Rational t_next = (trace - 1) * t_cur - t_prev;
        t_prev = t_cur;
        t_cur = t_next;
    }
    return sum;
}

namespace {

long to_integer(const Rational& r, const char* what) {
    if (!is_integer(r)) throw std::logic_error(std::string(what) + ": non-integral value");
    return static_cast<long>(r.get_num().get_si());
}

}  // namespace

DimTriple dim_formula(int l) {
    if (l < 0) throw std::invalid_argument("dim_formula: negative degree");
    const int mod3 = l % 3, mod4 = l % 4;
    const int c3 = mod3 == 0 ? 1 : mod3 == 1 ? 0 : -1;
    const int c4 = (mod4 == 0 || mod4 == 3) ? 1 : 0;
    const int sign = l % 2 == 0 ? 1 : -1;
    Rational gamma = make_rational(2 * l + 1, 12) + make_rational(sign, 4) +
                     make_rational(2 * c3, 3);
    Rational half_t2 = make_rational(c4, 2);
    Rational plus = gamma / 2 + half_t2;
    Rational minus = gamma / 2 - half_t2;
    return {to_integer(gamma, "dim_formula"), to_integer(plus, "dim_formula"),
            to_integer(minus, "dim_formula")};
}

long dim_via_trace_formula(int l) {
    Rational v = theta_character(l, 3) / 12 + theta_character(l, -1) / 4 +
                 theta_character(l, 0) * make_rational(2, 3);
    return to_integer(v, "dim_via_trace_formula");
}

long trace_t2_formula(int l) {
    // (1/2) X_l(trace 1) + (1/2) X_l(trace -1)
    Rational v = (theta_character(l, 1) + theta_character(l, -1)) / 2;
    return to_integer(v, "trace_t2_formula");
}

Rational hecke_trace_via_classes(const Int& p, int l) {
    Rational acc = 0;
    for (const auto& cls : hecke_conjugacy_classes(p))
        acc += theta_character(l, cls.front().trace()) * static_cast<long>(cls.size());
    return acc / 12;
}

namespace {

long count_two_term_reps(int l, int s, int t) {
    if (l < 0) return 0;
    long count = 0;
    for (int a = 0; a * s <= l; ++a)
        if ((l - a * s) % t == 0) ++count;
    return count;
}

}  // namespace

long generating_series_coeff(DimSeries series, int l) {
    if (l < 0) throw std::invalid_argument("generating_series_coeff: negative degree");
    switch (series) {
        case DimSeries::Plus:
            return count_two_term_reps(l, 3, 4);
        case DimSeries::Minus:
            return count_two_term_reps(l - 6, 3, 4);
        case DimSeries::GammaEven:
            if (l % 2 != 0) return 0;
            return count_two_term_reps(l, 4, 6) + count_two_term_reps(l - 6, 4, 6);
        case DimSeries::GammaOdd:
            if (l % 2 != 1) return 0;
            return count_two_term_reps(l - 3, 4, 6) + count_two_term_reps(l - 9, 4, 6);
    }
    return 0;
}

std::vector<Rational> legendre(int l) {
    if (l < 0) throw std::invalid_argument("legendre: negative degree");
    std::vector<Rational> prev{1};  // L_0
    if (l == 0) return prev;
    std::vector<Rational> cur{0, 1};  // L_1
    for (int k = 2; k <= l; ++k) {
        std::vector<Rational> next(k + 1);
        const Rational a = make_rational(2 * k - 1, k), b = make_rational(k - 1, k);
        for (int e = 0; e < k; ++e)
            if (cur[e] != 0) next[e + 1] += a * cur[e];
        for (int e = 0; e <= k - 2; ++e)
            if (prev[e] != 0) next[e] -= b * prev[e];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace {

HomogeneousPoly norm_form_poly() {
    HomogeneousPoly nm(2, Frame::X);
    nm.add_term({2, 0, 0}, 3);
    nm.add_term({0, 2, 0}, 3);
    nm.add_term({0, 0, 2}, 3);
    nm.add_term({1, 1, 0}, -2);
    nm.add_term({0, 1, 1}, -2);
    nm.add_term({1, 0, 1}, -2);
    return nm;
}

std::array<Rational, 3> gram_times(const std::array<Rational, 3>& y) {
    const RotationMatrix q = gram_matrix();
    std::array<Rational, 3> w;
    for (int i = 0; i < 3; ++i)
        w[i] = q.at(i, 0) * y[0] + q.at(i, 1) * y[1] + q.at(i, 2) * y[2];
    return w;
}

Rational form_value(const std::array<Rational, 3>& x, const std::array<Rational, 3>& y) {
    std::array<Rational, 3> w = gram_times(y);
    return x[0] * w[0] + x[1] * w[1] + x[2] * w[2];
}

}  // namespace

HomogeneousPoly zonal_kernel(int l, const std::array<Rational, 3>& y) {
    const std::vector<Rational> leg = legendre(l);
    const std::array<Rational, 3> w = gram_times(y);
    HomogeneousPoly pairing(1, Frame::X);
    pairing.add_term({1, 0, 0}, w[0]);
    pairing.add_term({0, 1, 0}, w[1]);
    pairing.add_term({0, 0, 1}, w[2]);
    const Rational norm_y = form_value(y, y);
    const HomogeneousPoly nm = norm_form_poly();

    HomogeneousPoly out(l, Frame::X);
    // Exponent parity of L_l matches l, so l - e is even and k = (l-e)/2.
    HomogeneousPoly pair_pow = HomogeneousPoly::constant(Frame::X, 1);
    std::vector<HomogeneousPoly> pair_powers{pair_pow};
    for (int e = 1; e <= l; ++e) pair_powers.push_back(mul(pair_powers.back(), pairing));
    for (int e = l % 2; e <= l; e += 2) {
        if (leg[e] == 0) continue;
        const int k = (l - e) / 2;
        HomogeneousPoly term = pair_powers[e];
        for (int i = 0; i < k; ++i) term = mul(term, nm);
        out = out + term * (leg[e] * pow(norm_y, k));
    }
    return out;
}

HomogeneousPoly gamma_kernel(int l, const std::array<Rational, 3>& y) {
    HomogeneousPoly k = zonal_kernel(l, y);
    HomogeneousPoly out(l, Frame::X);
    for (const RotationMatrix& g : gamma_list()) out = out + act(g, k);
    return out * make_rational(1, 12);
}

Rational zonal_kernel_value(int l, const std::array<Rational, 3>& x0,
                            const std::array<Rational, 3>& y0) {
    const std::vector<Rational> leg = legendre(l);
    const Rational nx = form_value(x0, x0), ny = form_value(y0, y0), u = form_value(x0, y0);
    Rational out = 0;
    for (int e = l % 2; e <= l; e += 2) {
        if (leg[e] == 0) continue;
        const int k = (l - e) / 2;
        out += leg[e] * pow(nx * ny, k) * pow(u, static_cast<unsigned long>(e));
    }
    return out;
}

bool kernel_character_identity_check(int l, const RotationMatrix& g, const RotationMatrix& h) {
    const Rational half = make_rational(1, 2);
    const std::array<Rational, 3> a{half, half, Rational(0)};
    const std::array<Rational, 3> x0 = g.inverse().apply_row(a);
    const std::array<Rational, 3> y0 = h.inverse().apply_row(a);
    const RotationMatrix gh = g * h.inverse();
    // The reproducing kernel carries the dimension factor 2l+1 on top of the
    // plain Legendre pairing (at g = h both sides must equal 2l+1).
    return (2 * l + 1) * zonal_kernel_value(l, x0, y0) == theta_character(l, gh.trace());
}

Rational sphere_average(const HomogeneousPoly& f) {
    if (f.frame() == Frame::E)
        throw std::invalid_argument("sphere_average: x or y frame expected");
    HomogeneousPoly g = f.frame() == Frame::X ? change_frame_xy(f) : f;
    // On the euclidean unit sphere with probability measure the even moments
    // are prod (a_i - 1)!! / (|a| + 1)!!, odd moments vanish.
    auto dfact = [](long n) {
        Int out = 1;
        for (long k = n; k >= 2; k -= 2) out *= k;
        return out;
    };
    Rational acc = 0;
    for (const auto& [t, c] : g.terms()) {
        if (t.a % 2 || t.b % 2 || t.c % 2) continue;
        Int num = dfact(t.a - 1) * dfact(t.b - 1) * dfact(t.c - 1);
        acc += c * make_rational(num, dfact(t.sum() + 1));
    }
    return acc;
}

HomogeneousPoly kernel_self_pairing(int l, const RotationMatrix& g) {
    if (g.frame != MatrixFrame::QForm)
        throw std::invalid_argument("kernel_self_pairing: form-frame matrix expected");
    // u(x) = (x g^{-1}) Q x^t, a quadratic polynomial; the norm factors of the
    // kernel both become Nm(x) because g preserves the form.
    const RotationMatrix m = g.inverse() * gram_matrix();
    HomogeneousPoly u(2, Frame::X);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            ExponentTriple t{};
            (i == 0 ? t.a : i == 1 ? t.b : t.c) += 1;
            (j == 0 ? t.a : j == 1 ? t.b : t.c) += 1;
            u.add_term(t, m.at(i, j));
        }
    const std::vector<Rational> leg = legendre(l);
    const HomogeneousPoly nm = norm_form_poly();
    HomogeneousPoly out(2 * l, Frame::X);
    std::vector<HomogeneousPoly> u_pow{HomogeneousPoly::constant(Frame::X, 1)};
    for (int e = 1; e <= l; ++e) u_pow.push_back(mul(u_pow.back(), u));
    for (int e = l % 2; e <= l; e += 2) {
        if (leg[e] == 0) continue;
        HomogeneousPoly term = u_pow[e];
        for (int i = 0; i < (l - e) / 2; ++i) term = mul(mul(term, nm), nm);
        out = out + term * leg[e];
    }
    return out;
}

bool integrated_character_identity_check(int l, const RotationMatrix& g) {
    Rational avg = sphere_average(kernel_self_pairing(l, g));
    return (2 * l + 1) * avg == theta_character(l, g.trace());
}

}  // namespace qmf
