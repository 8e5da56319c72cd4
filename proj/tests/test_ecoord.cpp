#include <doctest.h>

#include <random>

#include "qmf/ecoord.hpp"
#include "test_util.hpp"

using namespace qmf;
using testutil::poly;

TEST_CASE("factor forms in both frames") {
    CHECK(f3_plus_y() == HomogeneousPoly::monomial(Frame::Y, {1, 1, 1}, -1));
    CHECK(f3_plus_x() == testutil::f3_printed());
    // the 1/64 normalization makes the y-frame product match the x-frame form
    CHECK(f6_minus_x() == testutil::f6_minus_printed());
    CHECK(change_frame_xy(testutil::f6_minus_printed()) == f6_minus_y());
}

TEST_CASE("transported operator on small inputs") {
    HomogeneousPoly e1 = HomogeneousPoly::monomial(Frame::E, {1, 0, 0});
    CHECK(delta_eps_apply(0, 0, e1) == HomogeneousPoly::constant(Frame::E, 6));

    CHECK(delta_eps_apply(0, 0, poly(Frame::E, {{2, 0, 0, 1}, {0, 1, 0, -5}})).is_zero());
    CHECK(delta_eps_apply(1, 0, poly(Frame::E, {{2, 0, 0, 1}, {0, 1, 0, -11, 3}})).is_zero());
    CHECK_THROWS(delta_eps_apply(2, 0, e1));
    CHECK_THROWS(delta_eps_apply(0, 0, testutil::f3_printed()));
}

TEST_CASE("commutative diagram with the euclidean laplacian") {
    std::mt19937 rng(555);
    std::uniform_int_distribution<long> small(-4, 4);
    for (int m : {4, 6, 8, 10}) {
        auto mons = weighted_monomials(m);
        for (int eps1 : {0, 1})
            for (int eps2 : {0, 1}) {
                HomogeneousPoly f(m, Frame::E);
                for (const auto& t : mons) {
                    long v = small(rng);
                    if (v) f.add_term(t, Rational(v));
                }
                HomogeneousPoly lhs = ecoord_expand_y(f);
                if (eps1) lhs = mul(lhs, f3_plus_y());
                if (eps2) lhs = mul(lhs, f6_minus_y());
                lhs = laplacian_y(lhs);

                HomogeneousPoly rhs = ecoord_expand_y(delta_eps_apply(eps1, eps2, f));
                if (eps1) rhs = mul(rhs, f3_plus_y());
                if (eps2) rhs = mul(rhs, f6_minus_y());
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("kernel bases match the printed tables") {
    auto b400 = ebasis(4, 0, 0);
    REQUIRE(b400.size() == 1);
    CHECK(b400[0] == poly(Frame::E, {{2, 0, 0, 1}, {0, 1, 0, -5}}));

    auto b600 = ebasis(6, 0, 0);
    REQUIRE(b600.size() == 1);
    CHECK(b600[0] == poly(Frame::E, {{3, 0, 0, 1}, {1, 1, 0, -21, 2}, {0, 0, 1, 231, 2}}));

    auto b410 = ebasis(4, 1, 0);
    REQUIRE(b410.size() == 1);
    CHECK(b410[0] == poly(Frame::E, {{2, 0, 0, 1}, {0, 1, 0, -11, 3}}));

    auto b401 = ebasis(4, 0, 1);
    REQUIRE(b401.size() == 1);
    CHECK(b401[0] == poly(Frame::E, {{2, 0, 0, 1}, {0, 1, 0, -17, 3}}));

    auto b411 = ebasis(4, 1, 1);
    REQUIRE(b411.size() == 1);
    CHECK(b411[0] == poly(Frame::E, {{2, 0, 0, 1}, {0, 1, 0, -23, 5}}));
}

TEST_CASE("twelve-dimensional slice has the printed leading basis vector") {
    auto b = ebasis(12, 0, 0);
    REQUIRE(b.size() == 2);
    CHECK(b[0] == poly(Frame::E, {{6, 0, 0, 1},
                                  {4, 1, 0, -39},
                                  {0, 3, 0, 4199, 5},
                                  {3, 0, 1, 2652},
                                  {1, 1, 1, -75582, 5},
                                  {0, 0, 2, 264537, 5}}));
    CHECK(b[1] == poly(Frame::E, {{2, 2, 0, 1},
                                  {0, 3, 0, -24, 5},
                                  {3, 0, 1, -8},
                                  {1, 1, 1, 222, 5},
                                  {0, 0, 2, -707, 5}}));
}

TEST_CASE("kernel dimension formula") {
    CHECK(dim_eh_formula(0) == 1);
    CHECK(dim_eh_formula(2) == 0);
    CHECK(dim_eh_formula(12) == 2);
    CHECK(dim_eh_formula(26) == 2);
    for (int m = 0; m <= 40; m += 2)
        for (int eps1 : {0, 1})
            for (int eps2 : {0, 1})
                CHECK(ebasis(m, eps1, eps2).size() == static_cast<std::size_t>(dim_eh_formula(m)));
}

TEST_CASE("conversion to the x frame") {
    HomogeneousPoly f4hat = poly(Frame::E, {{2, 0, 0, 1}, {0, 1, 0, -5}});
    CHECK(ecoord_to_x(0, 0, f4hat) == testutil::f4_printed() * (-6));

    // degree 9 minus form factors as the product of the two universal forms
    HomogeneousPoly f9 = ecoord_to_x(1, 1, HomogeneousPoly::constant(Frame::E, 1));
    CHECK(f9 == mul(f3_plus_x(), f6_minus_x()));

    // converted elements satisfy all three defining conditions
    MembershipReport r9 = verify_membership(f9, Variant::Minus);
    CHECK(r9.all());
    MembershipReport r7 = verify_membership(ecoord_to_x(1, 0, ebasis(4, 1, 0)[0]), Variant::Plus);
    CHECK(r7.all());

    CHECK_THROWS(ecoord_to_x(0, 0, HomogeneousPoly::monomial(Frame::E, {1, 0, 0})));
}

TEST_CASE("fast-path bases span the main-path spaces") {
    for (int l = 0; l <= 12; ++l)
        for (Variant v : {Variant::Plus, Variant::Minus, Variant::Gamma}) {
            BasisResult fast = ecoord_basis(l, v);
            BasisResult main = basis(l, v);
            CHECK(fast.dim() == main.dim());
            CHECK(same_span(fast.basis, main.basis));
        }
}

TEST_CASE("parameter mapping") {
    EcoordParams p = ecoord_params(9, Variant::Minus);
    CHECK(p.m == 0);
    CHECK(p.eps1 == 1);
    CHECK(p.eps2 == 1);
    p = ecoord_params(4, Variant::Plus);
    CHECK(p.m == 4);
    CHECK(p.eps1 == 0);
    CHECK(p.eps2 == 0);
    CHECK(ecoord_params(5, Variant::Minus).m < 0);
}
