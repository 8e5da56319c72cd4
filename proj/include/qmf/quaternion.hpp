#ifndef QMF_QUATERNION_HPP
#define QMF_QUATERNION_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "qmf/rational.hpp"

namespace qmf {

// Element (c0 + c1*i + c2*j + c3*ij)/2 of the maximal quaternion order.
// The four doubled components are all even (integral quaternion) or all odd
// (half-integer coset of w = (1+i+j+ij)/2); the constructor enforces this.
struct HurwitzQuaternion {
    Int c0, c1, c2, c3;

    HurwitzQuaternion(Int a0, Int a1, Int a2, Int a3);
    static HurwitzQuaternion from_integers(long a0, long a1, long a2, long a3) {
        return HurwitzQuaternion(2 * a0, 2 * a1, 2 * a2, 2 * a3);
    }

    bool operator==(const HurwitzQuaternion& o) const {
        return c0 == o.c0 && c1 == o.c1 && c2 == o.c2 && c3 == o.c3;
    }
};

HurwitzQuaternion quat_mul(const HurwitzQuaternion& a, const HurwitzQuaternion& b);
HurwitzQuaternion quat_conj(const HurwitzQuaternion& a);
Int quat_norm(const HurwitzQuaternion& a);
Int quat_trace(const HurwitzQuaternion& a);
HurwitzQuaternion quat_neg(const HurwitzQuaternion& a);

enum class MatrixFrame : std::uint8_t { QForm, Euclidean };

// A 3x3 rational rotation: det 1 and g*Q*g^t = Q in the QForm frame
// (Q = [[3,-1,-1],[-1,3,-1],[-1,-1,3]]), or g*g^t = 1 in the Euclidean frame.
struct RotationMatrix {
    std::array<Rational, 9> a{};
    MatrixFrame frame = MatrixFrame::QForm;

    Rational& at(int i, int j) { return a[3 * i + j]; }
    const Rational& at(int i, int j) const { return a[3 * i + j]; }

    bool operator==(const RotationMatrix& o) const { return frame == o.frame && a == o.a; }
    bool operator!=(const RotationMatrix& o) const { return !(*this == o); }
    // Row-major entry order; used for canonical representative selection.
    bool operator<(const RotationMatrix& o) const;

    static RotationMatrix identity(MatrixFrame frame);
    static RotationMatrix from_integers(const std::array<int, 9>& entries, MatrixFrame frame);

    RotationMatrix operator*(const RotationMatrix& rhs) const;
    RotationMatrix inverse() const;  // adjugate; valid because det = 1
    Rational trace() const { return at(0, 0) + at(1, 1) + at(2, 2); }
    Rational det() const;

    // Row vector times matrix.
    std::array<Rational, 3> apply_row(const std::array<Rational, 3>& v) const;
};

// The Gram matrix of the norm form on the trace-zero lattice and its inverse.
RotationMatrix gram_matrix();
bool is_orthogonal_for_frame(const RotationMatrix& g);

// Conjugation action x -> q^{-1} x q on trace-zero quaternions, as a matrix
// acting on row coordinate vectors. Scale-invariant: rho(q) = rho(t*q).
RotationMatrix rho(const HurwitzQuaternion& q, MatrixFrame frame = MatrixFrame::QForm);

// The 24 units of the order, in the enumeration order of norm_elements(1).
const std::vector<HurwitzQuaternion>& unit_group();
// The 12-element rotation group generated by the unit conjugations, and its
// companion coset for the norm-2 Hecke set.
const std::vector<RotationMatrix>& gamma_list();
const std::vector<RotationMatrix>& gamma_gamma2_list();
RotationMatrix gamma2_matrix();

// All order elements of norm exactly n, by exhaustive search over the doubled
// coordinates (|ci| <= 2*sqrt(n)), in ascending lexicographic order.
std::vector<HurwitzQuaternion> norm_elements(const Int& n);

// The image of the norm-p elements under rho (duplicates removed), sorted.
std::vector<RotationMatrix> hecke_set(const Int& p);
// One representative per left coset of the rotation group in hecke_set(p):
// the lexicographically least matrix of each coset, sorted. p = 2 gives one
// coset; odd primes give p + 1.
std::vector<RotationMatrix> hecke_coset_reps(const Int& p);
// Partition of hecke_set(p) into conjugacy classes under the rotation group.
std::vector<std::vector<RotationMatrix>> hecke_conjugacy_classes(const Int& p);

}  // namespace qmf

#endif
