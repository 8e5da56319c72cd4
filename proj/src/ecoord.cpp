#include "qmf/ecoord.hpp"

#include <stdexcept>

#include "qmf/matrix.hpp"

namespace qmf {

const HomogeneousPoly& f3_plus_y() {
    static const HomogeneousPoly f = HomogeneousPoly::monomial(Frame::Y, {1, 1, 1}, -1);
    return f;
}

const HomogeneousPoly& f6_minus_y() {
    static const HomogeneousPoly f = [] {
        auto diff = [](int i, int j) {  // yi^2 - yj^2
            HomogeneousPoly p(2, Frame::Y);
            ExponentTriple s{}, t{};
            (i == 0 ? s.a : i == 1 ? s.b : s.c) = 2;
            (j == 0 ? t.a : j == 1 ? t.b : t.c) = 2;
            p.add_term(s, 1);
            p.add_term(t, -1);
            return p;
        };
        return mul(mul(diff(0, 1), diff(0, 2)), diff(1, 2)) * make_rational(1, 64);
    }();
    return f;
}

const HomogeneousPoly& f3_plus_x() {
    static const HomogeneousPoly f = change_frame_xy(f3_plus_y());
    return f;
}

const HomogeneousPoly& f6_minus_x() {
    static const HomogeneousPoly f = change_frame_xy(f6_minus_y());
    return f;
}

HomogeneousPoly delta_eps_apply(int eps1, int eps2, const HomogeneousPoly& f) {
    if (f.frame() != Frame::E) throw std::invalid_argument("delta_eps_apply: e-frame expected");
    if ((eps1 != 0 && eps1 != 1) || (eps2 != 0 && eps2 != 1))
        throw std::invalid_argument("delta_eps_apply: eps flags must be 0 or 1");
    const int m = f.degree();
    HomogeneousPoly out(m >= 2 ? m - 2 : 0, Frame::E);
    if (m < 2) return out;
    const long first = 1 + 2 * eps1;
    for (const auto& [t, c] : f.terms()) {
        const long j1 = t.a, j2 = t.b, j3 = t.c;
        auto add = [&](int e1, int e2, int e3, long coeff) {
            if (coeff != 0) out.add_term({e1, e2, e3}, c * coeff);
        };
        // second order part
        if (j1 >= 2) add(j1 - 1, j2, j3, 4 * j1 * (j1 - 1));
        if (j2 >= 2) {
            add(j1 + 1, j2 - 1, j3, 4 * j2 * (j2 - 1));
            add(j1, j2 - 2, j3 + 1, 12 * j2 * (j2 - 1));
        }
        if (j3 >= 2) add(j1, j2 + 1, j3 - 1, 4 * j3 * (j3 - 1));
        if (j1 >= 1 && j2 >= 1) add(j1 - 1, j2, j3, 16 * j1 * j2);
        if (j1 >= 1 && j3 >= 1) add(j1 - 1, j2, j3, 24 * j1 * j3);
        if (j2 >= 1 && j3 >= 1) add(j1 + 1, j2 - 1, j3, 16 * j2 * j3);
        // first order part
        if (j1 >= 1) add(j1 - 1, j2, j3, first * 6 * j1 + eps2 * 24 * j1);
        if (j2 >= 1) add(j1 + 1, j2 - 1, j3, first * 4 * j2 + eps2 * 8 * j2);
        if (j3 >= 1) add(j1, j2 + 1, j3 - 1, first * 2 * j3);
    }
    return out;
}

std::vector<HomogeneousPoly> ebasis(int m, int eps1, int eps2) {
    if (m < 0 || m % 2 != 0) throw std::invalid_argument("ebasis: even degree expected");
    const std::vector<ExponentTriple> mons = weighted_monomials(m);
    if (m == 0) return {HomogeneousPoly::constant(Frame::E, 1)};
    const std::vector<ExponentTriple> low = weighted_monomials(m - 2);
    RationalMatrix delta(low.size(), mons.size());
    for (std::size_t j = 0; j < mons.size(); ++j) {
        HomogeneousPoly img = delta_eps_apply(eps1, eps2, HomogeneousPoly::monomial(Frame::E, mons[j]));
        delta.set_column(j, img.dense());
    }
    std::vector<std::vector<Rational>> kernel = kernel_basis(delta);
    // weighted_monomials is already the descending canonical order
    std::vector<std::size_t> natural(mons.size());
    for (std::size_t i = 0; i < natural.size(); ++i) natural[i] = i;
    std::vector<std::vector<Rational>> echelon = row_space_echelon(kernel, natural);
    std::vector<HomogeneousPoly> out;
    for (const auto& row : echelon) out.push_back(HomogeneousPoly::from_dense(m, Frame::E, row));
    return out;
}

long dim_eh_formula(int m) {
    if (m < 0 || m % 2 != 0) throw std::invalid_argument("dim_eh_formula: even degree expected");
    static const int residue_to_offset[6] = {0, 14, 4, 6, 8, 10};  // m mod 12 = 0,2,4,6,8,10
    const int r = residue_to_offset[(m % 12) / 2];
    if (m < r) return 0;
    return (m - r) / 12 + 1;
}

HomogeneousPoly ecoord_expand_y(const HomogeneousPoly& f) {
    if (f.frame() != Frame::E) throw std::invalid_argument("ecoord_expand_y: e-frame expected");
    static const HomogeneousPoly gens[3] = {
        [] {
            HomogeneousPoly p(2, Frame::Y);
            p.add_term({2, 0, 0}, 1);
            p.add_term({0, 2, 0}, 1);
            p.add_term({0, 0, 2}, 1);
            return p;
        }(),
        [] {
            HomogeneousPoly p(4, Frame::Y);
            p.add_term({2, 2, 0}, 1);
            p.add_term({2, 0, 2}, 1);
            p.add_term({0, 2, 2}, 1);
            return p;
        }(),
        HomogeneousPoly::monomial(Frame::Y, {2, 2, 2})};
    // Power tables over the support of f.
    std::array<std::vector<HomogeneousPoly>, 3> pows;
    for (int v = 0; v < 3; ++v) pows[v].push_back(HomogeneousPoly::constant(Frame::Y, 1));
    auto power = [&](int v, int e) -> const HomogeneousPoly& {
        while (static_cast<int>(pows[v].size()) <= e)
            pows[v].push_back(mul(pows[v].back(), gens[v]));
        return pows[v][e];
    };
    HomogeneousPoly out(f.degree(), Frame::Y);
    for (const auto& [t, c] : f.terms()) {
        HomogeneousPoly term = mul(power(0, t.a), power(1, t.b));
        term = mul(term, power(2, t.c));
        out = out + term * c;
    }
    return out;
}

EcoordParams ecoord_params(int l, Variant variant) {
    if (variant == Variant::Gamma)
        throw std::invalid_argument("ecoord_params: pick a sign variant");
    EcoordParams p;
    p.eps1 = l % 2;
    p.eps2 = variant == Variant::Minus ? 1 : 0;
    p.m = l - 3 * p.eps1 - 6 * p.eps2;
    return p;
}

HomogeneousPoly ecoord_to_x(int eps1, int eps2, const HomogeneousPoly& f) {
    if (!delta_eps_apply(eps1, eps2, f).is_zero())
        throw std::invalid_argument("ecoord_to_x: input not in the transported kernel");
    HomogeneousPoly y = ecoord_expand_y(f);
    if (eps1) y = mul(y, f3_plus_y());
    if (eps2) y = mul(y, f6_minus_y());
    return change_frame_xy(y);
}

BasisResult ecoord_basis(int l, Variant variant) {
    if (variant == Variant::Gamma) {
        BasisResult plus = ecoord_basis(l, Variant::Plus);
        BasisResult minus = ecoord_basis(l, Variant::Minus);
        std::vector<HomogeneousPoly> all;
        for (const auto& p : plus.basis) all.push_back(p);
        for (const auto& p : minus.basis) all.push_back(p);
        BasisResult out;
        out.l = l;
        out.variant = Variant::Gamma;
        if (!all.empty()) {
            std::vector<std::vector<Rational>> vecs;
            for (const auto& p : all) vecs.push_back(p.dense());
            std::vector<std::size_t> desc(poly_space_dim(l));
            for (std::size_t i = 0; i < desc.size(); ++i) desc[i] = desc.size() - 1 - i;
            for (const auto& row : row_space_echelon(vecs, desc)) {
                PrimitiveForm pf = primitive_normalize(HomogeneousPoly::from_dense(l, Frame::X, row));
                out.basis.push_back(std::move(pf.poly));
                out.scales.push_back(pf.scale);
            }
        }
        return out;
    }

    BasisResult out;
    out.l = l;
    out.variant = variant;
    EcoordParams p = ecoord_params(l, variant);
    if (p.m < 0) return out;
    std::vector<std::vector<Rational>> vecs;
    for (const HomogeneousPoly& e : ebasis(p.m, p.eps1, p.eps2))
        vecs.push_back(ecoord_to_x(p.eps1, p.eps2, e).dense());
    if (vecs.empty()) return out;
    std::vector<std::size_t> desc(poly_space_dim(l));
    for (std::size_t i = 0; i < desc.size(); ++i) desc[i] = desc.size() - 1 - i;
    for (const auto& row : row_space_echelon(vecs, desc)) {
        PrimitiveForm pf = primitive_normalize(HomogeneousPoly::from_dense(l, Frame::X, row));
        out.basis.push_back(std::move(pf.poly));
        out.scales.push_back(pf.scale);
    }
    return out;
}

}  // namespace qmf
