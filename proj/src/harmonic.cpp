#include "qmf/harmonic.hpp"

#include <algorithm>
#include <stdexcept>

#include "qmf/hecke.hpp"

namespace qmf {

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::Gamma: return "gamma";
        case Variant::Plus: return "plus";
        case Variant::Minus: return "minus";
    }
    return "?";
}

Variant variant_from_name(const std::string& s) {
    if (s == "gamma") return Variant::Gamma;
    if (s == "plus") return Variant::Plus;
    if (s == "minus") return Variant::Minus;
    throw std::invalid_argument("unknown variant: " + s);
}

HomogeneousPoly act(const RotationMatrix& g, const HomogeneousPoly& f) {
    const bool ok = (g.frame == MatrixFrame::QForm && f.frame() == Frame::X) ||
                    (g.frame == MatrixFrame::Euclidean && f.frame() == Frame::Y);
    if (!ok) throw std::invalid_argument("act: matrix and polynomial frames do not match");
    // (g.f)(v) = f(v g): variable i becomes the linear form with the i-th
    // column of g read across the new variables.
    std::array<std::array<Rational, 3>, 3> rows;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) rows[i][k] = g.at(k, i);
    return substitute_linear(f, rows, f.frame());
}

namespace {

// Binomial table, large enough for any degree we ever touch.
const Int& binom(int n, int k) {
    static std::vector<std::vector<Int>> table;
    if (static_cast<int>(table.size()) <= n) {
        for (int r = static_cast<int>(table.size()); r <= n; ++r) {
            std::vector<Int> row(r + 1, 1);
            for (int c = 1; c < r; ++c) row[c] = table[r - 1][c - 1] + table[r - 1][c];
            table.push_back(std::move(row));
        }
    }
    return table[n][k];
}

// Accumulates into `out` the monomial expansion of the orbit sum
//   sum_{v in {1, i, j, ij}} v . x^(a,b,c)
// using the explicit binomial shapes of the three involutions:
//   i : (x1,x2,x3) -> (-x1, -x1+x3, -x1+x2)
//   j : (x1,x2,x3) -> (x3-x2, -x2, x1-x2)
//   ij: (x1,x2,x3) -> (x2-x3, x1-x3, -x3)
void accumulate_klein_orbit(int l, const ExponentTriple& t, std::vector<Int>& out) {
    const int a = t.a, b = t.b, c = t.c;
    auto add = [&](int e1, int e2, int e3, const Int& coeff) {
        out[index_of(l, {e1, e2, e3})] += coeff;
    };
    out[index_of(l, t)] += 1;
    Int coeff;
    for (int s = 0; s <= b; ++s)
        for (int tt = 0; tt <= c; ++tt) {
            coeff = binom(b, s) * binom(c, tt);
            if ((l - s - tt) % 2 != 0) coeff = -coeff;
            add(l - s - tt, tt, s, coeff);
        }
    for (int s = 0; s <= a; ++s)
        for (int tt = 0; tt <= c; ++tt) {
            coeff = binom(a, s) * binom(c, tt);
            if ((l - s - tt) % 2 != 0) coeff = -coeff;
            add(tt, l - s - tt, s, coeff);
        }
    for (int s = 0; s <= a; ++s)
        for (int tt = 0; tt <= b; ++tt) {
            coeff = binom(a, s) * binom(b, tt);
            if ((l - s - tt) % 2 != 0) coeff = -coeff;
            add(tt, s, l - s - tt, coeff);
        }
}

// Column of the Gamma averaging matrix. The group factors as the Klein
// four-group times the cyclic monomial-permuting subgroup, so the column is
// the Klein orbit sum followed by the three cyclic exponent rotations.
std::vector<Int> gamma_average_column(int l, const ExponentTriple& t) {
    const std::size_t d = poly_space_dim(l);
    std::vector<Int> klein(d), out(d);
    accumulate_klein_orbit(l, t, klein);
    for (std::size_t m = 0; m < d; ++m) {
        if (klein[m] == 0) continue;
        ExponentTriple s = monomial_of(l, m);
        out[m] += klein[m];
        out[index_of(l, {s.c, s.a, s.b})] += klein[m];
        out[index_of(l, {s.b, s.c, s.a})] += klein[m];
    }
    return out;
}

}  // namespace

std::vector<Int> average_column(int l, Variant variant, const ExponentTriple& t) {
    if (variant == Variant::Gamma) return gamma_average_column(l, t);
    // The companion coset acts on a monomial by the exponent swap (a,b,c) ->
    // (b,a,c) times (-1)^l, which cancels against the (-1)^l in the definition.
    std::vector<Int> first = gamma_average_column(l, t);
    std::vector<Int> second = gamma_average_column(l, {t.b, t.a, t.c});
    for (std::size_t m = 0; m < first.size(); ++m) {
        if (variant == Variant::Plus)
            first[m] += second[m];
        else
            first[m] -= second[m];
    }
    return first;
}

RationalMatrix average_matrix(int l, Variant variant) {
    const std::size_t d = poly_space_dim(l);
    RationalMatrix a(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Int> col = average_column(l, variant, monomial_of(l, j));
        for (std::size_t i = 0; i < d; ++i)
            if (col[i] != 0) a.at(i, j) = Rational(col[i]);
    }
    return a;
}

RationalMatrix laplacian_matrix(int l) {
    const std::size_t rows = l >= 2 ? poly_space_dim(l - 2) : 0;
    RationalMatrix d(rows, poly_space_dim(l));
    if (l < 2) return d;
    const Rational half = make_rational(1, 2);
    for (std::size_t j = 0; j < d.cols(); ++j) {
        ExponentTriple t = monomial_of(l, j);
        auto add = [&](int e1, int e2, int e3, long coeff) {
            if (coeff != 0) d.at(index_of(l - 2, {e1, e2, e3}), j) += half * coeff;
        };
        if (t.a >= 2) add(t.a - 2, t.b, t.c, static_cast<long>(t.a) * (t.a - 1));
        if (t.b >= 2) add(t.a, t.b - 2, t.c, static_cast<long>(t.b) * (t.b - 1));
        if (t.c >= 2) add(t.a, t.b, t.c - 2, static_cast<long>(t.c) * (t.c - 1));
        if (t.a >= 1 && t.b >= 1) add(t.a - 1, t.b - 1, t.c, static_cast<long>(t.a) * t.b);
        if (t.a >= 1 && t.c >= 1) add(t.a - 1, t.b, t.c - 1, static_cast<long>(t.a) * t.c);
        if (t.b >= 1 && t.c >= 1) add(t.a, t.b - 1, t.c - 1, static_cast<long>(t.b) * t.c);
    }
    return d;
}

namespace {

// Doubled Laplacian as sparse integer columns: column m holds (row, coeff)
// pairs of 2*laplacian_matrix(l). The factor 2 does not change any kernel.
std::vector<std::vector<std::pair<std::size_t, long>>> laplacian_columns(int l) {
    const std::size_t d = poly_space_dim(l);
    std::vector<std::vector<std::pair<std::size_t, long>>> cols(d);
    if (l < 2) return cols;
    for (std::size_t j = 0; j < d; ++j) {
        ExponentTriple t = monomial_of(l, j);
        auto add = [&](int e1, int e2, int e3, long coeff) {
            if (coeff != 0) cols[j].emplace_back(index_of(l - 2, {e1, e2, e3}), coeff);
        };
        if (t.a >= 2) add(t.a - 2, t.b, t.c, static_cast<long>(t.a) * (t.a - 1));
        if (t.b >= 2) add(t.a, t.b - 2, t.c, static_cast<long>(t.b) * (t.b - 1));
        if (t.c >= 2) add(t.a, t.b, t.c - 2, static_cast<long>(t.c) * (t.c - 1));
        if (t.a >= 1 && t.b >= 1) add(t.a - 1, t.b - 1, t.c, static_cast<long>(t.a) * t.b);
        if (t.a >= 1 && t.c >= 1) add(t.a - 1, t.b, t.c - 1, static_cast<long>(t.a) * t.c);
        if (t.b >= 1 && t.c >= 1) add(t.a, t.b - 1, t.c - 1, static_cast<long>(t.b) * t.c);
    }
    return cols;
}

// All exponent permutations of t whose column coincides with t's column (up
// to sign for Minus). Used to skip provably dependent columns of the
// averaging matrix without reducing them.
bool duplicate_of_earlier_column(int l, Variant variant, const ExponentTriple& t,
                                 std::size_t j) {
    const int a = t.a, b = t.b, c = t.c;
    if (variant == Variant::Gamma) {
        return index_of(l, {c, a, b}) < j || index_of(l, {b, c, a}) < j;
    }
    if (variant == Variant::Minus && (a == b || b == c || a == c)) return true;  // zero column
    const ExponentTriple perms[5] = {{c, a, b}, {b, c, a}, {b, a, c}, {a, c, b}, {c, b, a}};
    for (const ExponentTriple& p : perms)
        if (index_of(l, p) < j) return true;
    return false;
}

}  // namespace

BasisResult basis(int l, Variant variant) {
    if (l < 0) throw std::invalid_argument("basis: negative degree");
    const std::size_t d = poly_space_dim(l);

    // Pivot columns of the averaging matrix, streamed.
    IntColumnScanner scanner(d);
    std::vector<std::vector<Int>> image_cols;
    for (std::size_t j = 0; j < d; ++j) {
        ExponentTriple t = monomial_of(l, j);
        if (duplicate_of_earlier_column(l, variant, t, j)) continue;
        std::vector<Int> col = average_column(l, variant, t);
        if (scanner.offer(col)) image_cols.push_back(std::move(col));
    }
    const std::size_t c = image_cols.size();

    // Kernel of (Laplacian composed with the image inclusion).
    const std::size_t rows_low = l >= 2 ? poly_space_dim(l - 2) : 0;
    auto dcols = laplacian_columns(l);
    RationalMatrix db(rows_low, c);
    for (std::size_t k = 0; k < c; ++k)
        for (std::size_t m = 0; m < d; ++m) {
            if (image_cols[k][m] == 0) continue;
            for (const auto& [row, coeff] : dcols[m]) db.at(row, k) += Rational(image_cols[k][m] * coeff);
        }
    std::vector<std::vector<Rational>> kernel = kernel_basis(db);

    // Back to degree-l coefficient vectors.
    std::vector<std::vector<Rational>> vectors;
    for (const auto& kv : kernel) {
        std::vector<Rational> w(d);
        for (std::size_t k = 0; k < c; ++k) {
            if (kv[k] == 0) continue;
            for (std::size_t m = 0; m < d; ++m)
                if (image_cols[k][m] != 0) w[m] += kv[k] * Rational(image_cols[k][m]);
        }
        vectors.push_back(std::move(w));
    }

    // Canonical form: echelonize against the descending monomial order.
    std::vector<std::size_t> desc(d);
    for (std::size_t i = 0; i < d; ++i) desc[i] = d - 1 - i;
    std::vector<std::vector<Rational>> echelon = row_space_echelon(vectors, desc);

    BasisResult out;
    out.l = l;
    out.variant = variant;
    for (const auto& row : echelon) {
        PrimitiveForm pf = primitive_normalize(HomogeneousPoly::from_dense(l, Frame::X, row));
        out.basis.push_back(std::move(pf.poly));
        out.scales.push_back(pf.scale);
    }
    return out;
}

MembershipReport verify_membership(const HomogeneousPoly& f, Variant variant) {
    MembershipReport r;
    if (f.frame() != Frame::X) throw std::invalid_argument("verify_membership: X frame expected");
    r.harmonic = laplacian(f).is_zero();
    r.invariant = true;
    for (const RotationMatrix& g : gamma_list())
        if (act(g, f) != f) {
            r.invariant = false;
            break;
        }
    if (!r.invariant || f.is_zero()) {
        r.hecke2_sign = r.invariant;  // sign test needs a well-defined T_2
        return r;
    }
    if (variant == Variant::Gamma) {
        r.hecke2_sign = true;  // no sign constraint on the full space
        return r;
    }
    const int sign = (f.degree() % 2 == 0 ? 1 : -1) * (variant == Variant::Plus ? 1 : -1);
    HomogeneousPoly image = hecke_apply(2, f);
    r.hecke2_sign = (image == f * sign);
    return r;
}

bool same_span(const std::vector<HomogeneousPoly>& a, const std::vector<HomogeneousPoly>& b) {
    auto echelon = [](const std::vector<HomogeneousPoly>& polys) {
        std::vector<std::vector<Rational>> vecs;
        for (const auto& p : polys)
            if (!p.is_zero()) vecs.push_back(p.dense());
        if (vecs.empty()) return vecs;
        std::vector<std::size_t> desc(vecs.front().size());
        for (std::size_t i = 0; i < desc.size(); ++i) desc[i] = desc.size() - 1 - i;
        return row_space_echelon(vecs, desc);
    };
    return echelon(a) == echelon(b);
}

}  // namespace qmf
