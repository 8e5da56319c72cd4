#include "qmf/arith.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qmf/ecoord.hpp"

namespace qmf {

Int norm_ternary(const std::array<long, 3>& a) {
    Int a1 = a[0], a2 = a[1], a3 = a[2];
    return 3 * (a1 * a1 + a2 * a2 + a3 * a3) - 2 * (a1 * a2 + a2 * a3 + a3 * a1);
}

std::vector<CMPoint> cm_points(long disc) {
    if (disc >= 0) throw std::invalid_argument("cm_points: discriminant must be negative");
    const long n = -disc;
    long bound = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while (bound * bound > n) --bound;
    while ((bound + 1) * (bound + 1) <= n) ++bound;
    std::vector<CMPoint> out;
    for (long a1 = -bound; a1 <= bound; ++a1)
        for (long a2 = -bound; a2 <= bound; ++a2)
            for (long a3 = -bound; a3 <= bound; ++a3)
                if (norm_ternary({a1, a2, a3}) == n) out.push_back({{a1, a2, a3}, disc});
    return out;
}

std::vector<int> parity_at_cm(const HomogeneousPoly& f, long disc) {
    if (!f.has_integer_coeffs())
        throw std::invalid_argument("parity_at_cm: integer coefficients required");
    std::vector<int> out;
    for (const CMPoint& p : cm_points(disc)) {
        Rational v = eval(f, {Rational(p.coords[0]), Rational(p.coords[1]), Rational(p.coords[2])});
        out.push_back(mpz_odd_p(v.get_num_mpz_t()) ? 1 : 0);
    }
    return out;
}

HomogeneousPoly norm_power_mod2(int l) {
    if (l < 0 || l % 2 != 0) throw std::invalid_argument("norm_power_mod2: even degree required");
    // Nm = 3 sum xi^2 - 2 sum xi xj = sum xi^2 mod 2.
    HomogeneousPoly nm2(2, Frame::X);
    nm2.add_term({2, 0, 0}, 1);
    nm2.add_term({0, 2, 0}, 1);
    nm2.add_term({0, 0, 2}, 1);
    HomogeneousPoly acc = HomogeneousPoly::constant(Frame::X, 1);
    for (int i = 0; i < l / 2; ++i) acc = mod2_reduce(mul(acc, nm2));
    return acc;
}

std::string CongruenceCertificate::describe() const {
    std::ostringstream os;
    if (!found) {
        os << "l=" << l << ": no certificate within the search bounds";
        return os.str();
    }
    if (!pair)
        os << "l=" << l << ": " << multiplier << " * f(" << index_i + 1 << ")";
    else
        os << "l=" << l << ": (f(" << index_i + 1 << ") " << (sign < 0 ? "-" : "+") << " "
           << multiplier << " * f(" << index_j + 1 << ")) / 2";
    os << "  [candidates tried: " << candidates_tried << "]";
    return os.str();
}

CongruenceCertificate congruence_certificate(const BasisResult& plus_basis, long max_multiplier) {
    if (plus_basis.variant != Variant::Plus)
        throw std::invalid_argument("congruence_certificate: plus basis required");
    const int l = plus_basis.l;
    if (l < 4 || l % 2 != 0)
        throw std::invalid_argument("congruence_certificate: even degree >= 4 required");
    CongruenceCertificate cert;
    cert.l = l;
    const HomogeneousPoly target = norm_power_mod2(l);
    const auto& fs = plus_basis.basis;

    std::vector<HomogeneousPoly> parity;
    for (const auto& f : fs) parity.push_back(mod2_reduce(f));

    // Odd multiples of a single primitive element (parity is independent of
    // the odd multiplier, so c = 1 decides).
    for (std::size_t k = 0; k < fs.size(); ++k) {
        ++cert.candidates_tried;
        if (parity[k] == target) {
            cert.found = true;
            cert.pair = false;
            cert.index_i = k;
            cert.multiplier = 1;
            cert.certified = fs[k];
            cert.combination = {{k, Rational(1)}};
            return cert;
        }
    }

    // Half-integer combinations (f_i +/- c f_j)/2; integrality forces the two
    // parity classes to agree.
    const Rational half = make_rational(1, 2);
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = 0; j < fs.size(); ++j) {
            if (i == j || parity[i] != parity[j]) continue;
            for (long c = 1; c <= max_multiplier; c += 2)
                for (int sign : {-1, +1}) {
                    ++cert.candidates_tried;
                    HomogeneousPoly g = (fs[i] + fs[j] * Rational(sign * c)) * half;
                    if (!g.has_integer_coeffs()) continue;
                    if (mod2_reduce(g) == target) {
                        cert.found = true;
                        cert.pair = true;
                        cert.index_i = i;
                        cert.index_j = j;
                        cert.multiplier = c;
                        cert.sign = sign;
                        cert.certified = g;
                        cert.combination = {{i, half}, {j, half * sign * c}};
                        return cert;
                    }
                }
        }
    return cert;
}

CongruenceCertificate congruence_certificate(int l, long max_multiplier) {
    return congruence_certificate(basis(l, Variant::Plus), max_multiplier);
}

namespace {

// Synthetic division of f by (y_vi - s * y_vj): f = q * divisor + r with r
// free of y_vi beyond degree 0 ... the remainder must vanish for exactness.
bool divide_linear_factor(const HomogeneousPoly& f, int vi, int vj, int s, HomogeneousPoly& q) {
    const int l = f.degree();
    auto expo = [](const ExponentTriple& t, int v) { return v == 0 ? t.a : v == 1 ? t.b : t.c; };
    auto with = [](ExponentTriple t, int v, int e) {
        (v == 0 ? t.a : v == 1 ? t.b : t.c) = e;
        return t;
    };
    int maxk = 0;
    for (const auto& [t, c] : f.terms()) maxk = std::max(maxk, expo(t, vi));
    // c_k = coefficient polynomial of y_vi^k
    std::vector<HomogeneousPoly> ck(maxk + 1, HomogeneousPoly());
    for (int k = 0; k <= maxk; ++k) ck[k] = HomogeneousPoly(l - k, Frame::Y);
    for (const auto& [t, c] : f.terms()) ck[expo(t, vi)].add_term(with(t, vi, 0), c);

    // q_{K-1} = c_K; q_{k-1} = c_k + s*y_vj*q_k; remainder = c_0 + s*y_vj*q_0.
    auto shift_vj = [&](const HomogeneousPoly& p) {
        HomogeneousPoly out(p.degree() + 1, Frame::Y);
        for (const auto& [t, c] : p.terms())
            out.add_term(with(t, vj, expo(t, vj) + 1), s > 0 ? c : -c);
        return out;
    };
    std::vector<HomogeneousPoly> qk(maxk, HomogeneousPoly());
    if (maxk == 0) return f.is_zero();
    qk[maxk - 1] = ck[maxk];
    for (int k = maxk - 1; k >= 1; --k) qk[k - 1] = ck[k] + shift_vj(qk[k]);
    HomogeneousPoly remainder = ck[0] + shift_vj(qk[0]);
    if (!remainder.is_zero()) return false;
    q = HomogeneousPoly(l - 1, Frame::Y);
    for (int k = 0; k < maxk; ++k)
        for (const auto& [t, c] : qk[k].terms()) q.add_term(with(t, vi, k), c);
    return true;
}

const char* var_names_y[3] = {"y1", "y2", "y3"};

}  // namespace

DivisionResult divides_f3(const HomogeneousPoly& f) {
    DivisionResult res;
    if (f.frame() == Frame::E) throw std::invalid_argument("divides_f3: x or y frame expected");
    const Frame in_frame = f.frame();
    HomogeneousPoly g = in_frame == Frame::X ? change_frame_xy(f) : f;
    if (g.is_zero()) {
        res.ok = true;
        res.quotient = HomogeneousPoly(f.degree() - 3, in_frame);
        return res;
    }
    // Divisible by -y1 y2 y3 iff every term carries all three variables.
    for (const auto& [t, c] : g.terms()) {
        if (t.a < 1 || t.b < 1 || t.c < 1) {
            res.failed_factor = var_names_y[t.a < 1 ? 0 : t.b < 1 ? 1 : 2];
            return res;
        }
    }
    HomogeneousPoly q(g.degree() - 3, Frame::Y);
    for (const auto& [t, c] : g.terms()) q.add_term({t.a - 1, t.b - 1, t.c - 1}, -c);
    res.ok = true;
    res.quotient = in_frame == Frame::X ? change_frame_xy(q) : q;
    return res;
}

DivisionResult divides_f6minus(const HomogeneousPoly& f) {
    DivisionResult res;
    if (f.frame() == Frame::E) throw std::invalid_argument("divides_f6minus: x or y frame expected");
    const Frame in_frame = f.frame();
    HomogeneousPoly g = in_frame == Frame::X ? change_frame_xy(f) : f;
    if (g.is_zero()) {
        res.ok = true;
        res.quotient = HomogeneousPoly(f.degree() - 6, in_frame);
        return res;
    }
    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& p : pairs)
        for (int s : {1, -1}) {
            HomogeneousPoly q;
            if (!divide_linear_factor(g, p[0], p[1], s, q)) {
                res.failed_factor = std::string(var_names_y[p[0]]) + (s > 0 ? " - " : " + ") +
                                    var_names_y[p[1]];
                return res;
            }
            g = q;
        }
    res.ok = true;
    g = g * 64;  // the divisor carries the 1/64 normalization
    res.quotient = in_frame == Frame::X ? change_frame_xy(g) : g;
    return res;
}

}  // namespace qmf
