#include <cmath>
#include <random>

#include "doctest.h"
#include "hypzeta/errors.hpp"
#include "hypzeta/liealg.hpp"

using namespace hz;

namespace {

double maxabs(const Mat& A) { return A.cwiseAbs().maxCoeff(); }

Vec e_vec(int l, int i) {
    Vec e = Vec::Zero(l - 1);
    e(i) = 1.0;
    return e;
}

Mat random_so(int l, std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    Mat A = Mat::Zero(l + 1, l + 1);
    for (int i = 1; i <= l; ++i) {
        double v = n(rng);
        A(0, i) = A(i, 0) = v;
        for (int j = i + 1; j <= l; ++j) {
            double w = n(rng);
            A(i, j) = w;
            A(j, i) = -w;
        }
    }
    return A;
}

}  // namespace

TEST_CASE("build_basis: l=2 has trivial m") {
    auto b = build_basis(2);
    CHECK(b.M.empty());
    REQUIRE(b.X.size() == 1);
    Mat Xe = x_u(2, e_vec(2, 0));
    CHECK(maxabs(b.X[0] * 2.0 - Xe) < 1e-15);
    CHECK_THROWS_AS(build_basis(1), InputError);
}

TEST_CASE("build_basis: normalizations and dimension count") {
    for (int l = 2; l <= 6; ++l) {
        auto b = build_basis(l);
        CHECK(b.rho0 == doctest::Approx(0.5 * (l - 1)));
        CHECK(int(b.all().size()) == l * (l + 1) / 2);
        Mat Xe = x_u(l, e_vec(l, 0));
        CHECK(killing_theta(Xe, Xe) == doctest::Approx(4.0 * (l - 1)));
        CHECK(maxabs(b.Hrho - 0.25 * b.H0) < 1e-15);
        CHECK(maxabs(b.H0 - std::sqrt(2.0 * (l - 1)) * b.H1) < 1e-14);
        CHECK(killing_theta(b.H1, b.H1) == doctest::Approx(1.0));
        for (const auto& q : b.all()) CHECK(in_so1l(q));
        for (size_t i = 0; i < b.X.size(); ++i) {
            CHECK(maxabs(bracket(theta(b.X[i]), b.X[i]) - b.Halpha) < 1e-12);
            for (size_t j = 0; j < b.X.size(); ++j) {
                double d = i == j ? 1.0 : 0.0;
                CHECK(std::abs(killing_theta(b.X[i], b.X[j]) - d) < 1e-12);
                CHECK(std::abs(killing(b.X[i], b.Z[j]) - d) < 1e-12);
            }
        }
    }
}

TEST_CASE("dual pairs are B-dual over the full basis") {
    for (int l = 2; l <= 5; ++l) {
        auto p = build_basis(l).dual_pairs();
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = 0; j < p.size(); ++j)
                CHECK(std::abs(killing(p[i].first, p[j].second) - (i == j ? 1.0 : 0.0)) < 1e-12);
    }
}

TEST_CASE("root action on n") {
    for (int l = 2; l <= 5; ++l) {
        auto b = build_basis(l);
        for (const auto& X : b.X) CHECK(maxabs(bracket(b.H0, X) - X) < 1e-12);
    }
}

TEST_CASE("killing form") {
    std::mt19937_64 rng(5);
    for (int l = 2; l <= 5; ++l) {
        auto b = build_basis(l);
        CHECK(killing(b.H0, b.H0) == doctest::Approx(2.0 * (l - 1)));
        CHECK(killing(b.X[0], theta(b.X[0])) < 0);
        for (int t = 0; t < 5; ++t) {
            Mat X = random_so(l, rng), Y = random_so(l, rng);
            CHECK(std::abs(killing(X, Y) - killing_ad(X, Y)) < 1e-10 * (1 + std::abs(killing(X, Y))));
        }
    }
    CHECK_THROWS_AS(killing(Mat::Zero(3, 3), Mat::Zero(4, 4)), InputError);
}

TEST_CASE("Z_{Y_j} relations") {
    for (int l = 3; l <= 6; ++l) {
        auto b = build_basis(l);
        Mat Xe1 = x_u(l, e_vec(l, 0));
        for (int j = 1; j < l - 1; ++j) {
            const Mat& Z = b.ZY[j];
            CHECK(maxabs(bracket(Z, b.X[0]) - b.X[j]) < 1e-12);
            CHECK(maxabs(bracket(b.X[j], Z) - b.X[0]) < 1e-12);
            Mat Xej = x_u(l, e_vec(l, j));
            CHECK(maxabs(bracket(Xe1, theta(Xej)) - 2.0 * Z) < 1e-12);
            CHECK(maxabs(bracket(b.X[0], theta(b.X[j])) - Z / (2.0 * (l - 1))) < 1e-12);
        }
    }
}

TEST_CASE("casimir: printed and symmetrized forms, centrality") {
    for (int l = 2; l <= 6; ++l) {
        auto r = casimir_report(l);
        CHECK(r.residual_printed < 1e-10);
        CHECK(r.residual_symmetrized < 1e-10);
        CHECK(r.centrality < 1e-12);
        CHECK(casimir_check(l) < 1e-10);
    }
}

TEST_CASE("casimir: sl2 case with integer matrices") {
    CHECK(sl2_check() < 1e-14);
    // The right side is an integer matrix, so 8 Omega must round to it exactly.
    auto b = build_basis(2);
    Eigen::MatrixXi H(3, 3), X(3, 3);
    H << 0, 0, 2, 0, 0, 0, 2, 0, 0;
    X << 0, 1, 0, 1, 0, -1, 0, 1, 0;
    Eigen::MatrixXi thX = X;
    thX.row(0) *= -1;
    thX.col(0) *= -1;
    Eigen::MatrixXi W = X + thX;
    Eigen::MatrixXi rhs = H * H + 4 * X * X - 4 * X * W - 2 * H;
    Mat lhs = 8.0 * casimir_dual(b);
    Eigen::MatrixXi rounded = lhs.array().round().cast<int>();
    CHECK(rounded == rhs);
    CHECK(maxabs(lhs - rhs.cast<double>()) < 1e-14);
}

TEST_CASE("polar form of the Casimir element") {
    CHECK(polar_form_check(3, 1.0) < 1e-9);
    for (int l = 2; l <= 5; ++l)
        for (double r : {0.5, 1.0, 2.0, 3.7}) CHECK(polar_form_check(l, r) < 1e-9);
    CHECK_THROWS_AS(polar_form_check(3, 0.0), InputError);
    // l=2: no m terms, the polar form is the Casimir identity itself.
    auto b = build_basis(2);
    CHECK(maxabs(polar_form_rhs(b, 0.3, 0.0) - casimir_printed(b)) < 1e-14);
    // The printed -1/f coefficient agrees only at r = sqrt(2).
    CHECK(polar_form_report(4, std::sqrt(2.0)).residual_printed < 1e-12);
    CHECK(polar_form_report(4, 1.0).residual_printed > 0.1);
}
