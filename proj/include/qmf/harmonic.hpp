#ifndef QMF_HARMONIC_HPP
#define QMF_HARMONIC_HPP

#include <string>
#include <vector>

#include "qmf/matrix.hpp"
#include "qmf/poly.hpp"
#include "qmf/quaternion.hpp"

namespace qmf {

// Which invariant space: the full rotation-invariant space, or one of the two
// eigenspaces of the norm-2 involution (sign convention (-1)^l * (+/-)).
enum class Variant : std::uint8_t { Gamma, Plus, Minus };

const char* variant_name(Variant v);
Variant variant_from_name(const std::string& s);

// Left action (g.f)(v) = f(v g). QForm matrices act on the X frame,
// Euclidean matrices on the Y frame.
HomogeneousPoly act(const RotationMatrix& g, const HomogeneousPoly& f);

// Matrix of the degree-l group averaging map in the monomial basis:
// sum over the 12 rotations for Gamma, and the same sum plus/minus
// (-1)^l times the sum over the companion coset for Plus/Minus.
RationalMatrix average_matrix(int l, Variant variant);

// Single column of average_matrix (integer entries), without materializing
// the whole matrix.
std::vector<Int> average_column(int l, Variant variant, const ExponentTriple& t);

// Matrix of the X-frame Laplacian from degree l to degree l-2.
RationalMatrix laplacian_matrix(int l);

struct BasisResult {
    int l = 0;
    Variant variant = Variant::Gamma;
    std::vector<HomogeneousPoly> basis;   // primitive integer polynomials
    std::vector<Rational> scales;         // echelon form = scale * primitive form

    std::size_t dim() const { return basis.size(); }
};

// Basis of the invariant harmonic space: pivot columns of the averaging
// matrix give a basis B of the invariant subspace, the kernel of
// (Laplacian * B) cuts out the harmonic part, and the resulting vectors are
// echelonized against the descending monomial order and made primitive.
BasisResult basis(int l, Variant variant);

struct MembershipReport {
    bool harmonic = false;
    bool invariant = false;
    bool hecke2_sign = false;

    bool all() const { return harmonic && invariant && hecke2_sign; }
};

// Checks the three defining conditions of the space for the given variant
// (for Variant::Gamma the sign condition is vacuous and reported as the
// invariance result).
MembershipReport verify_membership(const HomogeneousPoly& f, Variant variant);

// True iff the two sets of polynomials span the same subspace.
bool same_span(const std::vector<HomogeneousPoly>& a, const std::vector<HomogeneousPoly>& b);

}  // namespace qmf

#endif
