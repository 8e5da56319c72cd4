#ifndef QMF_ECOORD_HPP
#define QMF_ECOORD_HPP

#include <vector>

#include "qmf/harmonic.hpp"
#include "qmf/poly.hpp"

namespace qmf {

// The two universal factor forms in Y coordinates: the degree-3 plus form
// -y1 y2 y3 and the degree-6 minus form (1/64)(y1^2-y2^2)(y1^2-y3^2)(y2^2-y3^2),
// normalized so that both match their X-frame counterparts exactly.
const HomogeneousPoly& f3_plus_y();
const HomogeneousPoly& f6_minus_y();
const HomogeneousPoly& f3_plus_x();
const HomogeneousPoly& f6_minus_x();

// The transported Laplacian on the weighted ring, with the first-order
// correction selected by eps1 (factor f3) and eps2 (factor f6). Weighted
// degree m -> m-2; m < 2 maps to zero.
HomogeneousPoly delta_eps_apply(int eps1, int eps2, const HomogeneousPoly& f);

// Kernel of delta_eps on the weighted-degree-m slice, echelonized against the
// canonical monomial order (so a one-dimensional kernel is scaled to leading
// coefficient 1 at e1^(m/2)).
std::vector<HomogeneousPoly> ebasis(int m, int eps1, int eps2);

// Closed form for the kernel dimension: k+1 when m-12k lies in
// {0,4,6,8,10,14}, 0 otherwise.
long dim_eh_formula(int m);

// Expands an e-frame polynomial through e1 = sum yi^2, e2 = sum yi^2 yj^2,
// e3 = y1^2 y2^2 y3^2.
HomogeneousPoly ecoord_expand_y(const HomogeneousPoly& f);

// Full conversion: expand in y, multiply by f3^eps1 f6^eps2, change to the
// X frame. The input must lie in the kernel of delta_eps (checked); the
// output has degree m + 3 eps1 + 6 eps2.
HomogeneousPoly ecoord_to_x(int eps1, int eps2, const HomogeneousPoly& f);

// The (eps1, eps2, m) parameters realizing degree l of the given variant,
// or m < 0 when the space is forced to be zero.
struct EcoordParams {
    int m = -1, eps1 = 0, eps2 = 0;
};
EcoordParams ecoord_params(int l, Variant variant);

// Basis of the degree-l space computed through the weighted-ring kernel, in
// the same canonical normal form as basis(l, variant). Variant::Gamma joins
// the plus and minus parts.
BasisResult ecoord_basis(int l, Variant variant);

}  // namespace qmf

#endif
