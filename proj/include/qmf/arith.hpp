#ifndef QMF_ARITH_HPP
#define QMF_ARITH_HPP

#include <array>
#include <string>
#include <vector>

#include "qmf/harmonic.hpp"
#include "qmf/poly.hpp"

namespace qmf {

// The ternary norm form 3(a1^2+a2^2+a3^2) - 2(a1 a2 + a2 a3 + a3 a1).
Int norm_ternary(const std::array<long, 3>& a);

struct CMPoint {
    std::array<long, 3> coords;
    long disc;  // negative; norm of the point is -disc
};

// All lattice points of norm -disc. The form has minimal eigenvalue 1
// (eigenvalues 1, 4, 4), so |ai| <= sqrt(-disc) bounds the search box.
// Lexicographic output order.
std::vector<CMPoint> cm_points(long disc);

// Parity (0/1) of f at every point of cm_points(disc); f must have integer
// coefficients.
std::vector<int> parity_at_cm(const HomogeneousPoly& f, long disc);

struct CongruenceCertificate {
    int l = 0;
    bool found = false;
    bool pair = false;           // false: odd multiple of one element
    std::size_t index_i = 0;     // first (or only) basis index
    std::size_t index_j = 0;     // second basis index for pair certificates
    long multiplier = 1;         // the odd c
    int sign = -1;               // pair combination (f_i + sign*c*f_j)/2
    HomogeneousPoly certified;   // integer polynomial congruent to Nm^(l/2) mod 2
    std::vector<std::pair<std::size_t, Rational>> combination;  // over the basis
    long candidates_tried = 0;
    std::string describe() const;
};

// Searches the plus basis for an integer-coefficient combination congruent
// to Nm^(l/2) mod 2: first odd multiples of single primitive elements, then
// half-integer combinations (f_i +/- c f_j)/2 with odd c <= max_multiplier.
CongruenceCertificate congruence_certificate(const BasisResult& plus_basis,
                                             long max_multiplier = 15);
CongruenceCertificate congruence_certificate(int l, long max_multiplier = 15);

// Coefficient parity class of the norm form power Nm^(l/2) (l even).
HomogeneousPoly norm_power_mod2(int l);

struct DivisionResult {
    bool ok = false;
    HomogeneousPoly quotient;
    std::string failed_factor;  // which linear factor obstructed, when !ok
};

// Exact division by the degree-3 plus form, performed in the Y frame where
// it is the monomial -y1 y2 y3. The quotient is returned in the input frame.
DivisionResult divides_f3(const HomogeneousPoly& f);
// Exact division by the degree-6 minus form, factor by factor over the six
// linear forms yi -+ yj.
DivisionResult divides_f6minus(const HomogeneousPoly& f);

}  // namespace qmf

#endif
