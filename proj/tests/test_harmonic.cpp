#include <doctest.h>

#include <random>

#include "qmf/ecoord.hpp"
#include "qmf/harmonic.hpp"
#include "qmf/hecke.hpp"
#include "test_util.hpp"

using namespace qmf;

namespace {

// Reference averaging matrix straight from the definition.
RationalMatrix naive_average_matrix(int l, Variant variant) {
    const std::size_t d = poly_space_dim(l);
    RationalMatrix a(d, d);
    const int sign = variant == Variant::Minus ? -1 : 1;
    const int parity = l % 2 == 0 ? 1 : -1;
    for (std::size_t j = 0; j < d; ++j) {
        HomogeneousPoly mono = HomogeneousPoly::monomial(Frame::X, monomial_of(l, j));
        HomogeneousPoly sum(l, Frame::X);
        for (const RotationMatrix& g : gamma_list()) sum = sum + act(g, mono);
        if (variant != Variant::Gamma) {
            HomogeneousPoly coset_sum(l, Frame::X);
            for (const RotationMatrix& g : gamma_gamma2_list()) coset_sum = coset_sum + act(g, mono);
            sum = sum + coset_sum * Rational(sign * parity);
        }
        a.set_column(j, sum.dense());
    }
    return a;
}

}  // namespace

TEST_CASE("average matrix at degree 0") {
    RationalMatrix a = average_matrix(0, Variant::Gamma);
    REQUIRE(a.rows() == 1);
    CHECK(a.at(0, 0) == 12);
}

TEST_CASE("average matrix agrees with the definition") {
    for (int l = 0; l <= 5; ++l)
        for (Variant v : {Variant::Gamma, Variant::Plus, Variant::Minus})
            CHECK(average_matrix(l, v) == naive_average_matrix(l, v));
}

TEST_CASE("rank of the degree-3 average matrix") {
    CHECK(rref(average_matrix(3, Variant::Gamma)).pivots.size() == 1);
}

TEST_CASE("averaging is idempotent up to the group order") {
    for (int l = 0; l <= 8; ++l)
        for (Variant v : {Variant::Plus, Variant::Minus}) {
            RationalMatrix ave = average_matrix(l, Variant::Gamma);
            RationalMatrix avepm = average_matrix(l, v);
            RationalMatrix composed = avepm * ave;
            RationalMatrix scaled(avepm.rows(), avepm.cols());
            for (std::size_t i = 0; i < avepm.rows(); ++i)
                for (std::size_t j = 0; j < avepm.cols(); ++j)
                    scaled.at(i, j) = avepm.at(i, j) * 12;
            CHECK(composed == scaled);
        }
}

TEST_CASE("laplacian matrix matches the polynomial operator") {
    for (int l = 2; l <= 6; ++l) {
        RationalMatrix d = laplacian_matrix(l);
        REQUIRE(d.rows() == poly_space_dim(l - 2));
        for (std::size_t j = 0; j < d.cols(); ++j) {
            HomogeneousPoly img = laplacian(HomogeneousPoly::monomial(Frame::X, monomial_of(l, j)));
            CHECK(d.column(j) == img.dense());
        }
    }
    CHECK(laplacian_matrix(1).rows() == 0);
    CHECK(laplacian_matrix(0).rows() == 0);
}

TEST_CASE("degree-3 plus space is spanned by the printed generator") {
    BasisResult b = basis(3, Variant::Plus);
    REQUIRE(b.dim() == 1);
    CHECK(b.basis[0] == testutil::f3_printed());
    CHECK(b.scales[0] == 1);
    CHECK(basis(3, Variant::Minus).dim() == 0);
}

TEST_CASE("degree-5 spaces are empty") {
    CHECK(basis(5, Variant::Plus).dim() == 0);
    CHECK(basis(5, Variant::Minus).dim() == 0);
    CHECK(basis(5, Variant::Gamma).dim() == 0);
}

TEST_CASE("degree-4 plus generator is the integer form of the printed one") {
    BasisResult b = basis(4, Variant::Plus);
    REQUIRE(b.dim() == 1);
    CHECK(b.basis[0] == testutil::f4_printed() * 3);
}

TEST_CASE("degree-6 minus generator") {
    BasisResult b = basis(6, Variant::Minus);
    REQUIRE(b.dim() == 1);
    // the printed form has a negative leading coefficient, so the canonical
    // primitive representative is its negative
    CHECK(b.basis[0] == primitive_normalize(testutil::f6_minus_printed()).poly);
    CHECK(b.basis[0] == -testutil::f6_minus_printed());
}

TEST_CASE("optimized basis pipeline matches the literal one") {
    // Reference: full averaging matrix -> pivot columns -> kernel of the
    // composed map -> echelon form, with no streaming and no column skipping.
    auto reference = [](int l, Variant v) {
        RationalMatrix a = average_matrix(l, v);
        ColumnImage img = column_image_basis(a);
        const std::size_t d = a.rows(), c = img.indices.size();
        RationalMatrix b(d, c);
        for (std::size_t k = 0; k < c; ++k) b.set_column(k, img.columns[k]);
        RationalMatrix db = laplacian_matrix(l) * b;
        std::vector<std::vector<Rational>> vectors;
        for (const auto& kv : kernel_basis(db)) vectors.push_back(b.apply(kv));
        std::vector<std::size_t> desc(d);
        for (std::size_t i = 0; i < d; ++i) desc[i] = d - 1 - i;
        std::vector<HomogeneousPoly> out;
        for (const auto& row : row_space_echelon(vectors, desc))
            out.push_back(primitive_normalize(HomogeneousPoly::from_dense(l, Frame::X, row)).poly);
        return out;
    };
    for (int l = 0; l <= 9; ++l)
        for (Variant v : {Variant::Gamma, Variant::Plus, Variant::Minus})
            CHECK(basis(l, v).basis == reference(l, v));
}

TEST_CASE("basis dimensions match the closed form") {
    for (int l = 0; l <= 14; ++l) {
        DimTriple d = dim_formula(l);
        CHECK(basis(l, Variant::Gamma).dim() == static_cast<std::size_t>(d.gamma));
        CHECK(basis(l, Variant::Plus).dim() == static_cast<std::size_t>(d.plus));
        CHECK(basis(l, Variant::Minus).dim() == static_cast<std::size_t>(d.minus));
    }
}

TEST_CASE("basis elements satisfy the defining conditions") {
    for (int l = 0; l <= 10; ++l)
        for (Variant v : {Variant::Plus, Variant::Minus}) {
            BasisResult b = basis(l, v);
            for (const auto& f : b.basis) {
                MembershipReport r = verify_membership(f, v);
                CHECK(r.harmonic);
                CHECK(r.invariant);
                CHECK(r.hecke2_sign);
            }
        }
}

TEST_CASE("plus and minus parts assemble the full invariant space") {
    for (int l = 0; l <= 12; ++l) {
        BasisResult plus = basis(l, Variant::Plus), minus = basis(l, Variant::Minus);
        BasisResult full = basis(l, Variant::Gamma);
        CHECK(plus.dim() + minus.dim() == full.dim());
        std::vector<HomogeneousPoly> both = plus.basis;
        for (const auto& f : minus.basis) both.push_back(f);
        CHECK(same_span(both, full.basis));
    }
}

TEST_CASE("image of the averaging map decomposes by norm powers") {
    for (int l = 0; l <= 10; ++l) {
        RationalMatrix ave = average_matrix(l, Variant::Gamma);
        std::vector<HomogeneousPoly> cols;
        for (std::size_t j = 0; j < ave.cols(); ++j) {
            auto col = ave.column(j);
            bool zero = true;
            for (const auto& x : col) zero = zero && x == 0;
            if (!zero) cols.push_back(HomogeneousPoly::from_dense(l, Frame::X, col));
        }
        std::vector<HomogeneousPoly> graded;
        HomogeneousPoly nm_pow = HomogeneousPoly::constant(Frame::X, 1);
        for (int m = 0; 2 * m <= l; ++m) {
            for (const auto& f : basis(l - 2 * m, Variant::Gamma).basis)
                graded.push_back(mul(nm_pow, f));
            nm_pow = mul(nm_pow, testutil::norm_form_x());
        }
        CHECK(same_span(cols, graded));
    }
}

TEST_CASE("membership report examples") {
    MembershipReport r = verify_membership(testutil::f6_minus_printed(), Variant::Minus);
    CHECK(r.harmonic);
    CHECK(r.invariant);
    CHECK(r.hecke2_sign);

    HomogeneousPoly f34 = mul(testutil::f3_printed(), testutil::f4_printed());
    r = verify_membership(f34, Variant::Plus);
    CHECK_FALSE(r.harmonic);
    CHECK(r.invariant);

    HomogeneousPoly nf3 = mul(testutil::norm_form_x(), testutil::f3_printed());
    r = verify_membership(nf3, Variant::Plus);
    CHECK(r.invariant);
    CHECK_FALSE(r.harmonic);
}

TEST_CASE("same_span basics") {
    std::vector<HomogeneousPoly> a{testutil::f3_printed()};
    std::vector<HomogeneousPoly> b{testutil::f3_printed() * make_rational(-7, 3)};
    CHECK(same_span(a, b));
    CHECK(same_span({}, {}));
    CHECK_FALSE(same_span(a, {}));
}
