#include "qmf/quaternion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qmf {

HurwitzQuaternion::HurwitzQuaternion(Int a0, Int a1, Int a2, Int a3)
    : c0(std::move(a0)), c1(std::move(a1)), c2(std::move(a2)), c3(std::move(a3)) {
    const bool p0 = mpz_odd_p(c0.get_mpz_t());
    if (p0 != static_cast<bool>(mpz_odd_p(c1.get_mpz_t())) ||
        p0 != static_cast<bool>(mpz_odd_p(c2.get_mpz_t())) ||
        p0 != static_cast<bool>(mpz_odd_p(c3.get_mpz_t())))
        throw std::invalid_argument("HurwitzQuaternion: mixed parity components");
}

HurwitzQuaternion quat_mul(const HurwitzQuaternion& a, const HurwitzQuaternion& b) {
    // Product of the doubled integer quaternions, halved (the order is closed
    // under multiplication, so the halves are exact).
    Int d0 = a.c0 * b.c0 - a.c1 * b.c1 - a.c2 * b.c2 - a.c3 * b.c3;
    Int d1 = a.c0 * b.c1 + a.c1 * b.c0 + a.c2 * b.c3 - a.c3 * b.c2;
    Int d2 = a.c0 * b.c2 - a.c1 * b.c3 + a.c2 * b.c0 + a.c3 * b.c1;
    Int d3 = a.c0 * b.c3 + a.c1 * b.c2 - a.c2 * b.c1 + a.c3 * b.c0;
    return HurwitzQuaternion(d0 / 2, d1 / 2, d2 / 2, d3 / 2);
}

HurwitzQuaternion quat_conj(const HurwitzQuaternion& a) {
    return HurwitzQuaternion(a.c0, -a.c1, -a.c2, -a.c3);
}

Int quat_norm(const HurwitzQuaternion& a) {
    return (a.c0 * a.c0 + a.c1 * a.c1 + a.c2 * a.c2 + a.c3 * a.c3) / 4;
}

Int quat_trace(const HurwitzQuaternion& a) { return a.c0; }

HurwitzQuaternion quat_neg(const HurwitzQuaternion& a) {
    return HurwitzQuaternion(-a.c0, -a.c1, -a.c2, -a.c3);
}

bool RotationMatrix::operator<(const RotationMatrix& o) const {
    for (int k = 0; k < 9; ++k) {
        int c = cmp(a[k], o.a[k]);
        if (c != 0) return c < 0;
    }
    return false;
}

RotationMatrix RotationMatrix::identity(MatrixFrame frame) {
    RotationMatrix m;
    m.frame = frame;
    for (int i = 0; i < 3; ++i) m.at(i, i) = 1;
    return m;
}

RotationMatrix RotationMatrix::from_integers(const std::array<int, 9>& entries, MatrixFrame frame) {
    RotationMatrix m;
    m.frame = frame;
    for (int k = 0; k < 9; ++k) m.a[k] = entries[k];
    return m;
}

RotationMatrix RotationMatrix::operator*(const RotationMatrix& rhs) const {
    if (frame != rhs.frame) throw std::invalid_argument("rotation product: frame mismatch");
    RotationMatrix out;
    out.frame = frame;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rational acc = 0;
            for (int k = 0; k < 3; ++k) acc += at(i, k) * rhs.at(k, j);
            out.at(i, j) = acc;
        }
    return out;
}

Rational RotationMatrix::det() const {
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

RotationMatrix RotationMatrix::inverse() const {
    RotationMatrix adj;
    adj.frame = frame;
    adj.at(0, 0) = at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1);
    adj.at(0, 1) = at(0, 2) * at(2, 1) - at(0, 1) * at(2, 2);
    adj.at(0, 2) = at(0, 1) * at(1, 2) - at(0, 2) * at(1, 1);
    adj.at(1, 0) = at(1, 2) * at(2, 0) - at(1, 0) * at(2, 2);
    adj.at(1, 1) = at(0, 0) * at(2, 2) - at(0, 2) * at(2, 0);
    adj.at(1, 2) = at(0, 2) * at(1, 0) - at(0, 0) * at(1, 2);
    adj.at(2, 0) = at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0);
    adj.at(2, 1) = at(0, 1) * at(2, 0) - at(0, 0) * at(2, 1);
    adj.at(2, 2) = at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    Rational d = det();
    if (d == 0) throw std::invalid_argument("inverse: singular matrix");
    if (d != 1)
        for (auto& x : adj.a) x /= d;
    return adj;
}

std::array<Rational, 3> RotationMatrix::apply_row(const std::array<Rational, 3>& v) const {
    std::array<Rational, 3> out;
    for (int j = 0; j < 3; ++j)
        out[j] = v[0] * at(0, j) + v[1] * at(1, j) + v[2] * at(2, j);
    return out;
}

RotationMatrix gram_matrix() {
    return RotationMatrix::from_integers({3, -1, -1, -1, 3, -1, -1, -1, 3}, MatrixFrame::QForm);
}

bool is_orthogonal_for_frame(const RotationMatrix& g) {
    if (g.det() != 1) return false;
    RotationMatrix gram =
        g.frame == MatrixFrame::QForm ? gram_matrix() : RotationMatrix::identity(g.frame);
    gram.frame = g.frame;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rational acc = 0;
            for (int k = 0; k < 3; ++k)
                for (int m = 0; m < 3; ++m) acc += g.at(i, k) * gram.at(k, m) * g.at(j, m);
            if (acc != gram.at(i, j)) return false;
        }
    return true;
}

namespace {

// gamma_Y conjugates the QForm frame into the Euclidean one.
RotationMatrix gamma_y_matrix() {
    RotationMatrix m;
    m.frame = MatrixFrame::QForm;
    const Rational h = make_rational(1, 2);
    m.at(0, 1) = h;
    m.at(0, 2) = h;
    m.at(1, 0) = h;
    m.at(1, 2) = h;
    m.at(2, 0) = h;
    m.at(2, 1) = h;
    return m;
}

}  // namespace

RotationMatrix rho(const HurwitzQuaternion& q, MatrixFrame frame) {
    Int nm = quat_norm(q);
    if (nm == 0) throw std::invalid_argument("rho: zero quaternion");
    // Trace-zero basis b1=-i+j+ij, b2=i-j+ij, b3=i+j-ij in doubled coordinates.
    const HurwitzQuaternion basis[3] = {HurwitzQuaternion(0, -2, 2, 2),
                                        HurwitzQuaternion(0, 2, -2, 2),
                                        HurwitzQuaternion(0, 2, 2, -2)};
    const HurwitzQuaternion cq = quat_conj(q);
    RotationMatrix m;
    m.frame = MatrixFrame::QForm;
    const Int den = 4 * nm;
    for (int k = 0; k < 3; ++k) {
        // q^{-1} b_k q = conj(q) b_k q / Nm(q); row = its lattice coordinates.
        HurwitzQuaternion z = quat_mul(quat_mul(cq, basis[k]), q);
        m.at(k, 0) = make_rational(z.c2 + z.c3, den);
        m.at(k, 1) = make_rational(z.c1 + z.c3, den);
        m.at(k, 2) = make_rational(z.c1 + z.c2, den);
    }
    if (frame == MatrixFrame::Euclidean) {
        RotationMatrix gy = gamma_y_matrix();
        m = gy * m * gy.inverse();
        m.frame = MatrixFrame::Euclidean;
    }
    return m;
}

std::vector<HurwitzQuaternion> norm_elements(const Int& n) {
    if (n < 1) throw std::invalid_argument("norm_elements: n must be positive");
    const Int target = 4 * n;
    Int bound_sq;
    mpz_sqrt(bound_sq.get_mpz_t(), target.get_mpz_t());
    const long bound = bound_sq.get_si();
    std::vector<HurwitzQuaternion> out;
    for (long c0 = -bound; c0 <= bound; ++c0)
        for (long c1 = -bound; c1 <= bound; ++c1) {
            if (((c0 ^ c1) & 1) != 0) continue;
            for (long c2 = -bound; c2 <= bound; ++c2) {
                if (((c0 ^ c2) & 1) != 0) continue;
                Int partial = Int(c0) * c0 + Int(c1) * c1 + Int(c2) * c2;
                if (partial > target) continue;
                for (long c3 = -bound; c3 <= bound; ++c3) {
                    if (((c0 ^ c3) & 1) != 0) continue;
                    if (partial + Int(c3) * c3 == target)
                        out.emplace_back(Int(c0), Int(c1), Int(c2), Int(c3));
                }
            }
        }
    return out;
}

const std::vector<HurwitzQuaternion>& unit_group() {
    static const std::vector<HurwitzQuaternion> units = norm_elements(1);
    return units;
}

const std::vector<RotationMatrix>& gamma_list() {
    static const std::vector<RotationMatrix> gammas = [] {
        std::vector<RotationMatrix> out;
        for (const HurwitzQuaternion& u : unit_group()) {
            RotationMatrix g = rho(u);
            if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
        }
        return out;
    }();
    return gammas;
}

RotationMatrix gamma2_matrix() {
    static const RotationMatrix g2 = rho(HurwitzQuaternion(0, 2, -2, 0));  // i - j
    return g2;
}

const std::vector<RotationMatrix>& gamma_gamma2_list() {
    static const std::vector<RotationMatrix> coset = [] {
        std::vector<RotationMatrix> out;
        for (const RotationMatrix& g : gamma_list()) out.push_back(g * gamma2_matrix());
        return out;
    }();
    return coset;
}

std::vector<RotationMatrix> hecke_set(const Int& p) {
    std::set<RotationMatrix> dedup;
    for (const HurwitzQuaternion& q : norm_elements(p)) dedup.insert(rho(q));
    return {dedup.begin(), dedup.end()};
}

std::vector<RotationMatrix> hecke_coset_reps(const Int& p) {
    std::vector<RotationMatrix> all = hecke_set(p);
    const auto& gammas = gamma_list();
    std::vector<bool> assigned(all.size(), false);
    std::vector<RotationMatrix> reps;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (assigned[i]) continue;
        // Left coset of all[i]: { g * all[i] }. all is sorted, so all[i] is
        // already the least member of its coset.
        for (const RotationMatrix& g : gammas) {
            RotationMatrix member = g * all[i];
            auto it = std::lower_bound(all.begin(), all.end(), member);
            if (it == all.end() || *it != member)
                throw std::logic_error("hecke_coset_reps: coset left the norm-p set");
            assigned[it - all.begin()] = true;
        }
        reps.push_back(all[i]);
    }
    return reps;
}

std::vector<std::vector<RotationMatrix>> hecke_conjugacy_classes(const Int& p) {
    std::vector<RotationMatrix> all = hecke_set(p);
    const auto& gammas = gamma_list();
    std::vector<bool> assigned(all.size(), false);
    std::vector<std::vector<RotationMatrix>> classes;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (assigned[i]) continue;
        std::set<RotationMatrix> cls;
        for (const RotationMatrix& g : gammas) cls.insert(g.inverse() * all[i] * g);
        for (const RotationMatrix& m : cls) {
            auto it = std::lower_bound(all.begin(), all.end(), m);
            if (it == all.end() || *it != m)
                throw std::logic_error("hecke_conjugacy_classes: class left the norm-p set");
            assigned[it - all.begin()] = true;
        }
        classes.emplace_back(cls.begin(), cls.end());
    }
    return classes;
}

}  // namespace qmf
