#ifndef QMF_HECKE_HPP
#define QMF_HECKE_HPP

#include <array>
#include <vector>

#include "qmf/harmonic.hpp"
#include "qmf/matrix.hpp"
#include "qmf/poly.hpp"
#include "qmf/quaternion.hpp"

namespace qmf {

// (T_p f)(v) = sum of f(v g^{-1}) over the norm-p coset representatives.
// f must be invariant under the rotation group (checked), otherwise the sum
// depends on the chosen representatives.
HomogeneousPoly hecke_apply(const Int& p, const HomogeneousPoly& f);

struct HeckeMatrix {
    Int p;
    int l = 0;
    Variant variant = Variant::Gamma;
    RationalMatrix matrix;  // column j = coordinates of T_p(basis[j])
};

HeckeMatrix hecke_matrix(const Int& p, const BasisResult& basis);

// Monic characteristic polynomial, constant coefficient first.
std::vector<Rational> char_poly(const RationalMatrix& m);

// Character value of the degree-l representation at a rotation with the
// given trace, via the two-term recursion t_0 = 2, t_1 = trace - 1,
// t_k = t_1 t_{k-1} - t_{k-2}; the value is 1 + sum_{k<=l} t_k.
Rational theta_character(int l, const Rational& trace);

struct DimTriple {
    long gamma = 0, plus = 0, minus = 0;
};

// Closed-form dimensions of the three invariant spaces.
DimTriple dim_formula(int l);
// Dimension of the full invariant space from the class-equation form
// (1/12) X_l(1) + (1/4) X_l(-1) + (2/3) X_l(0) of the trace average.
long dim_via_trace_formula(int l);
// Trace of the norm-2 involution: +1, 0, 0, -1 for l = 0,1,2,3 mod 4.
long trace_t2_formula(int l);

// Trace of T_p on the degree-l invariant space from the class equation:
// (1/12) * sum over conjugacy classes of #class * X_l(trace of the class).
// Exact, and valid for the raw operator normalization used here.
Rational hecke_trace_via_classes(const Int& p, int l);

enum class DimSeries { GammaEven, GammaOdd, Plus, Minus };
// Coefficient of t^l in the generating function of the series:
//   Plus:      1/((1-t^3)(1-t^4))
//   Minus:     t^6/((1-t^3)(1-t^4))
//   GammaEven: (1+t^6)/((1-t^4)(1-t^6)), even degrees
//   GammaOdd:  t^3(1+t^6)/((1-t^4)(1-t^6)), odd degrees
long generating_series_coeff(DimSeries series, int l);

// Legendre polynomial coefficients (index = exponent), by the recursion
// L_0 = 1, L_1 = t, L_l = ((2l-1)/l) t L_{l-1} - ((l-1)/l) L_{l-2}.
std::vector<Rational> legendre(int l);

// The degree-l reproducing kernel as a polynomial in the first argument:
// sum_k c_{l,k} Nm(x)^k Nm(y)^k (x Q y^t)^{l-2k} with L_l(t) = sum c_{l,k} t^{l-2k}.
HomogeneousPoly zonal_kernel(int l, const std::array<Rational, 3>& y);
// Its group average (1/12) sum_g kernel(x g, y); lies in the invariant space.
HomogeneousPoly gamma_kernel(int l, const std::array<Rational, 3>& y);

// Scalar kernel value K_l(x0, y0) for points given by coordinates.
Rational zonal_kernel_value(int l, const std::array<Rational, 3>& x0,
                            const std::array<Rational, 3>& y0);

// Exact check of K_l(a g^{-1}, a h^{-1}) = X_l(trace(g h^{-1})) at the
// rational base point a = (1/2, 1/2, 0) of the unit sphere of the form.
// Note: this pointwise identity only holds up to a stabilizer average; see
// integrated_character_identity_check for the form that is actually true.
bool kernel_character_identity_check(int l, const RotationMatrix& g, const RotationMatrix& h);

// Exact average of a polynomial over the unit sphere of the form (invariant
// probability measure), by rational moment formulas.
Rational sphere_average(const HomogeneousPoly& f);

// The self-pairing x -> K_l(x g^{-1}, x) as a degree-2l polynomial.
HomogeneousPoly kernel_self_pairing(int l, const RotationMatrix& g);

// The integrated identity behind the trace formula:
// (2l+1) * avg_x K_l(x g^{-1}, x) = X_l(trace g), exact.
bool integrated_character_identity_check(int l, const RotationMatrix& g);

}  // namespace qmf

#endif
