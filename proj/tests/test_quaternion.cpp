#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "qmf/quaternion.hpp"

using namespace qmf;

namespace {

RotationMatrix q_mat(const std::array<int, 9>& e) {
    return RotationMatrix::from_integers(e, MatrixFrame::QForm);
}

// The twelve rotations of the invariance group, as printed tables.
std::vector<RotationMatrix> printed_gamma() {
    return {
        q_mat({1, 0, 0, 0, 1, 0, 0, 0, 1}),    q_mat({0, 0, 1, 1, 0, 0, 0, 1, 0}),
        q_mat({0, 1, 0, 0, 0, 1, 1, 0, 0}),    q_mat({-1, -1, -1, 0, 0, 1, 0, 1, 0}),
        q_mat({-1, -1, -1, 0, 1, 0, 1, 0, 0}), q_mat({-1, -1, -1, 1, 0, 0, 0, 0, 1}),
        q_mat({0, 0, 1, -1, -1, -1, 1, 0, 0}), q_mat({0, 1, 0, -1, -1, -1, 0, 0, 1}),
        q_mat({1, 0, 0, -1, -1, -1, 0, 1, 0}), q_mat({0, 1, 0, 1, 0, 0, -1, -1, -1}),
        q_mat({1, 0, 0, 0, 0, 1, -1, -1, -1}), q_mat({0, 0, 1, 0, 1, 0, -1, -1, -1})};
}

std::vector<RotationMatrix> printed_gamma_coset() {
    return {
        q_mat({0, -1, 0, -1, 0, 0, 0, 0, -1}), q_mat({0, 0, -1, 0, -1, 0, -1, 0, 0}),
        q_mat({-1, 0, 0, 0, 0, -1, 0, -1, 0}), q_mat({1, 1, 1, 0, 0, -1, -1, 0, 0}),
        q_mat({1, 1, 1, -1, 0, 0, 0, -1, 0}),  q_mat({1, 1, 1, 0, -1, 0, 0, 0, -1}),
        q_mat({0, 0, -1, 1, 1, 1, 0, -1, 0}),  q_mat({-1, 0, 0, 1, 1, 1, 0, 0, -1}),
        q_mat({0, -1, 0, 1, 1, 1, -1, 0, 0}),  q_mat({-1, 0, 0, 0, -1, 0, 1, 1, 1}),
        q_mat({0, -1, 0, 0, 0, -1, 1, 1, 1}),  q_mat({0, 0, -1, -1, 0, 0, 1, 1, 1})};
}

bool set_equal(std::vector<RotationMatrix> a, std::vector<RotationMatrix> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

int element_order(const RotationMatrix& g) {
    RotationMatrix cur = g;
    const RotationMatrix id = RotationMatrix::identity(g.frame);
    int n = 1;
    while (cur != id) {
        cur = cur * g;
        ++n;
        REQUIRE(n <= 12);
    }
    return n;
}

}  // namespace

TEST_CASE("parity invariant is enforced") {
    CHECK_THROWS(HurwitzQuaternion(1, 0, 0, 0));
    CHECK_NOTHROW(HurwitzQuaternion(1, 1, 1, 1));
    CHECK_NOTHROW(HurwitzQuaternion(2, 0, 0, 0));
}

TEST_CASE("basic arithmetic") {
    HurwitzQuaternion w(1, 1, 1, 1);
    HurwitzQuaternion w3 = quat_mul(quat_mul(w, w), w);
    CHECK(w3 == HurwitzQuaternion(-2, 0, 0, 0));  // w^3 = -1

    HurwitzQuaternion one_plus_i = HurwitzQuaternion::from_integers(1, 1, 0, 0);
    CHECK(quat_norm(one_plus_i) == 2);

    HurwitzQuaternion i = HurwitzQuaternion::from_integers(0, 1, 0, 0);
    CHECK(quat_conj(i) == quat_neg(i));
    CHECK(quat_trace(i) == 0);
    CHECK(quat_norm(w) == 1);
    CHECK(quat_trace(w) == 1);
}

TEST_CASE("conjugation matrices of the three generators") {
    CHECK(rho(HurwitzQuaternion::from_integers(0, 1, 0, 0)) ==
          q_mat({-1, -1, -1, 0, 0, 1, 0, 1, 0}));
    CHECK(rho(HurwitzQuaternion(1, 1, 1, 1)) == q_mat({0, 0, 1, 1, 0, 0, 0, 1, 0}));
    CHECK(rho(HurwitzQuaternion::from_integers(0, 1, -1, 0)) ==
          q_mat({0, -1, 0, -1, 0, 0, 0, 0, -1}));
    CHECK(gamma2_matrix() == q_mat({0, -1, 0, -1, 0, 0, 0, 0, -1}));
}

TEST_CASE("rho is scale invariant and kills -1") {
    HurwitzQuaternion q = HurwitzQuaternion::from_integers(1, 2, 0, 1);
    CHECK(rho(q) == rho(quat_neg(q)));
    HurwitzQuaternion q3(q.c0 * 3, q.c1 * 3, q.c2 * 3, q.c3 * 3);
    CHECK(rho(q) == rho(q3));
    CHECK_THROWS(rho(HurwitzQuaternion(0, 0, 0, 0)));
}

TEST_CASE("unit group and rotation tables") {
    CHECK(unit_group().size() == 24);
    CHECK(gamma_list().size() == 12);
    CHECK(set_equal(gamma_list(), printed_gamma()));
    CHECK(set_equal(gamma_gamma2_list(), printed_gamma_coset()));
}

TEST_CASE("group structure of the rotation group") {
    int order2 = 0, order3 = 0, order1 = 0;
    for (const auto& g : gamma_list()) {
        int n = element_order(g);
        if (n == 1) ++order1;
        if (n == 2) ++order2;
        if (n == 3) ++order3;
    }
    CHECK(order1 == 1);
    CHECK(order2 == 3);  // alternating group of degree 4
    CHECK(order3 == 8);

    const RotationMatrix i = q_mat({-1, -1, -1, 0, 0, 1, 0, 1, 0});
    const RotationMatrix j = q_mat({0, 0, 1, -1, -1, -1, 1, 0, 0});
    const RotationMatrix w = q_mat({0, 0, 1, 1, 0, 0, 0, 1, 0});
    const RotationMatrix id = RotationMatrix::identity(MatrixFrame::QForm);
    CHECK(i * i == id);
    CHECK(j * j == id);
    CHECK(w * w * w == id);
    CHECK(i * j == j * i);
    // braid relations, composed in action order
    CHECK(w * i == j * w);
    CHECK(i * w == w * (i * j));
}

TEST_CASE("rho is a homomorphism on the unit group") {
    for (const auto& a : unit_group())
        for (const auto& b : unit_group()) CHECK(rho(quat_mul(a, b)) == rho(a) * rho(b));
}

TEST_CASE("emitted matrices preserve the form exactly") {
    for (const auto& g : gamma_list()) {
        CHECK(g.det() == 1);
        CHECK(is_orthogonal_for_frame(g));
    }
    for (const auto& g : gamma_gamma2_list()) CHECK(is_orthogonal_for_frame(g));
    for (const auto& g : hecke_set(3)) CHECK(is_orthogonal_for_frame(g));
    for (const auto& u : unit_group())
        CHECK(is_orthogonal_for_frame(rho(u, MatrixFrame::Euclidean)));
}

TEST_CASE("euclidean frame conjugation") {
    RotationMatrix fi = rho(HurwitzQuaternion::from_integers(0, 1, 0, 0), MatrixFrame::Euclidean);
    RotationMatrix expect;
    expect.frame = MatrixFrame::Euclidean;
    expect.at(0, 0) = 1;
    expect.at(1, 1) = -1;
    expect.at(2, 2) = -1;
    CHECK(fi == expect);
    // the cyclic generator is fixed by the frame change
    RotationMatrix fw = rho(HurwitzQuaternion(1, 1, 1, 1), MatrixFrame::Euclidean);
    for (int k = 0; k < 9; ++k) CHECK(fw.a[k] == rho(HurwitzQuaternion(1, 1, 1, 1)).a[k]);
}

TEST_CASE("coordinate equivariance of the conjugation action") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> small(-3, 3);
    const HurwitzQuaternion b1(0, -2, 2, 2), b2(0, 2, -2, 2), b3(0, 2, 2, -2);
    for (int trial = 0; trial < 5; ++trial) {
        std::array<Rational, 3> x{Rational(small(rng)), Rational(small(rng)), Rational(small(rng))};
        for (const auto& q : unit_group()) {
            // quaternion side: q^{-1} (x1 b1 + x2 b2 + x3 b3) q
            auto scale = [&](const HurwitzQuaternion& b, long s) {
                return HurwitzQuaternion(b.c0 * s, b.c1 * s, b.c2 * s, b.c3 * s);
            };
            HurwitzQuaternion xq = scale(b1, x[0].get_num().get_si());
            HurwitzQuaternion t2 = scale(b2, x[1].get_num().get_si());
            HurwitzQuaternion t3 = scale(b3, x[2].get_num().get_si());
            xq = HurwitzQuaternion(xq.c0 + t2.c0 + t3.c0, xq.c1 + t2.c1 + t3.c1,
                                   xq.c2 + t2.c2 + t3.c2, xq.c3 + t2.c3 + t3.c3);
            HurwitzQuaternion img = quat_mul(quat_mul(quat_conj(q), xq), q);  // norm 1 units
            // matrix side
            std::array<Rational, 3> y = rho(q).apply_row(x);
            CHECK(make_rational(img.c2 + img.c3, 4) == y[0]);
            CHECK(make_rational(img.c1 + img.c3, 4) == y[1]);
            CHECK(make_rational(img.c1 + img.c2, 4) == y[2]);
        }
    }
}

TEST_CASE("lattice stability under the rotation group") {
    for (const auto& g : gamma_list())
        for (const auto& x : g.a) CHECK(is_integer(x));
}

TEST_CASE("norm element counts") {
    CHECK(norm_elements(1).size() == 24);
    CHECK(norm_elements(2).size() == 24);
    CHECK(norm_elements(3).size() == 96);
    for (long p : {3L, 5L, 7L, 11L, 13L}) CHECK(norm_elements(p).size() == 24 * (p + 1));
}

TEST_CASE("hecke cosets") {
    auto t2 = hecke_coset_reps(2);
    REQUIRE(t2.size() == 1);
    // the single coset is the printed companion coset
    auto coset = printed_gamma_coset();
    CHECK(std::find(coset.begin(), coset.end(), t2[0]) != coset.end());

    CHECK(hecke_coset_reps(3).size() == 4);
    CHECK(hecke_coset_reps(5).size() == 6);

    CHECK(hecke_set(2).size() == 12);
    CHECK(set_equal(hecke_set(2), printed_gamma_coset()));
}

TEST_CASE("hecke conjugacy classes at p = 2") {
    auto classes = hecke_conjugacy_classes(2);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].size() == 6);
    CHECK(classes[1].size() == 6);
}

TEST_CASE("coset representatives are deterministic and canonical") {
    auto reps1 = hecke_coset_reps(5), reps2 = hecke_coset_reps(5);
    CHECK(reps1 == reps2);
    CHECK(std::is_sorted(reps1.begin(), reps1.end()));
}
