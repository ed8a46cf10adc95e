#include <cmath>
#include <random>

#include "doctest.h"
#include "hypzeta/errors.hpp"
#include "hypzeta/geom.hpp"
#include "hypzeta/radial.hpp"
#include "hypzeta/transforms.hpp"
#include "hypzeta/zeta.hpp"
#include "test_util.hpp"

using namespace hz;

namespace {

// l = 2: complementary lambda = 0.3i, principal lambda = 1 and 2.5.
SpectralModel toy_l2() {
    return parse_model(R"({"dimension": 2,
      "eigen": [{"lambda_sq": -0.09, "ps": {"0": 0.5, "1": 0.2}, "c": {"0": 0.8, "1": -0.4}},
                {"lambda_sq": 1.0, "ps": {"0": 1.0, "1": [0.3, 0.1]}},
                {"lambda_sq": 6.25, "ps": {"0": 0.3}}],
      "geodesics": [{"L": 1.5, "integrals": {"0": 1.0, "1": 0.5}},
                    {"L": 2.3, "integrals": {"0": 0.4}},
                    {"L": 4.6, "L0": 2.3, "integrals": {"0": 0.4, "1": -0.2}}]})");
}

SpectralModel toy_l3() {
    return parse_model(R"({"dimension": 3,
      "eigen": [{"lambda_sq": 0.5, "ps": {"0": 1.0}}],
      "geodesics": [{"L": 1.1, "m11": 0.3, "integrals": {"0": 1.0}},
                    {"L": 1.9, "m11": -0.6, "integrals": {"0": [0.2, 0.1]}},
                    {"L": 3.0, "integrals": {"0": 0.5}}]})");
}

}  // namespace

TEST_CASE("coeff_c1: closed form against quadrature and frozen values") {
    // mpmath, 30 digits, of the quadrature representation.
    CHECK(rel_err(coeff_c1(1.2, 1.0, 1.0, 0.7, 4.0, 2), 1.38730169277118) < 1e-10);
    CHECK(rel_err(coeff_c1(1.1, 0.3, 1.0, 0.7, 3.5, 3), 1.54949661803544) < 1e-10);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 12; ++i) {
        int l = 2 + i % 3;
        double rho0 = rho0_of(l);
        double L = 0.5 + 3 * u(rng);
        double m11 = l == 2 ? 1.0 : 2 * u(rng) - 1;
        cplx r(2 * u(rng), 0.0);
        cplx k(2 * rho0 + 0.3 + 2 * u(rng), u(rng) - 0.5);
        cplx ip(u(rng), u(rng));
        auto q = coeff_c1_quad(L, m11, ip, r, k, l);
        CHECK(rel_err(coeff_c1(L, m11, ip, r, k, l), q.value) < 1e-6);
    }
}

TEST_CASE("coeff_c1: l = 2 special form") {
    // c1/(2 omega I) = (int phi) z^{k-1/2} F(k-a,k-b,k;1-z) / (2 sinh(L/2)).
    for (double L : {0.8, 1.7, 4.0}) {
        cplx k(2.2, 0.3), r = 0.9;
        auto P = ode_params_from_eigen(2, r);
        double z = std::cosh(L) / (std::cosh(L) - 1);
        cplx want = std::pow(z, k - 0.5) * hyp2f1(k - P.a, k - P.b, k, 1.0 - z) / (2 * std::sinh(L / 2));
        cplx got = coeff_c1(L, 1.0, 1.0, r, k, 2) / (2.0 * omega_sphere(2) * I_of_z(r, 2, k));
        CHECK(rel_err(got, want) < 1e-12);
    }
}

TEST_CASE("coeff_c1: printed variant differs off l = 2 scaling") {
    double L = 1.3;
    cplx k = 2.5;
    double ch = std::cosh(L), z = ch / (ch - 1);
    cplx ratio = coeff_c1(L, 1.0, 1.0, 0.4, k, 2) / coeff_c1_printed(L, 1.0, 1.0, 0.4, k, 2);
    CHECK(rel_err(ratio, std::pow(ch - 1, -0.5) * std::pow(z, 0.5)) < 1e-12);
}

TEST_CASE("coeff_c1_mc: central holonomy reproduces the closed form") {
    std::mt19937_64 rng(2);
    Mat h = -Mat::Identity(2, 2);  // l = 3: m11 = -1 is central
    double se = 0;
    cplx mc = coeff_c1_mc(1.4, h, 1.0, 0.6, 3.0, 3, 200, rng, &se);
    CHECK(rel_err(mc, coeff_c1(1.4, -1.0, 1.0, 0.6, 3.0, 3)) < 1e-12);
    CHECK(se < 1e-12);
}

TEST_CASE("auxi bound holds on random inputs") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0, 1);
    for (auto m : {toy_l2(), toy_l3()}) {
        double rho0 = rho0_of(m.l);
        double C = auxi_constant(m, 0);
        REQUIRE(C > 0);
        for (int i = 0; i < 30; ++i) {
            cplx k(2 * rho0 + 0.05 + 3 * u(rng), 6 * u(rng) - 3);
            for (const auto& g : m.geodesics) {
                double c = std::abs(coefficient(m, g, 0, k));
                CHECK(c <= C * g.L * std::exp(-rho0 * g.L));
            }
        }
    }
}

TEST_CASE("beta_coeffs") {
    auto b = beta_coeffs({1.3, 0.4}, 0);
    CHECK(rel_err(b[0], std::pow(2.0, cplx(-1.3, -0.4))) < 1e-15);
    auto b1 = beta_coeffs(1.0, 3);
    CHECK(std::abs(b1[1] - 0.125) < 1e-15);
    CHECK(std::abs(b1[2] - 0.0625) < 1e-15);
    CHECK_THROWS_AS(beta_coeffs(1.0, -1), InputError);
    // sum_m beta(k;m) y^{-k-2m} = e^{-k arccosh y}, since ((1-sqrt(1-t))/t) at t = 1/y^2.
    for (double y : {2.0, 4.0, 10.0}) {
        for (cplx k : {cplx(0.7), cplx(2.0, 1.5), cplx(3.1, -0.2)}) {
            auto beta = beta_coeffs(k, 80);
            cplx s = 0;
            for (int m = 0; m <= 80; ++m) s += beta[m] * std::pow(cplx(y), -k - 2.0 * m);
            CHECK(rel_err(s, std::exp(-k * std::acosh(y))) < 1e-12);
        }
    }
}

TEST_CASE("z_geom equals the superposition of R-type sums") {
    for (auto m : {toy_l2(), toy_l3()}) {
        double rho0 = rho0_of(m.l);
        for (double re : {2 * rho0 + 0.2, 2 * rho0 + 1.0, 2 * rho0 + 2.5})
            for (double im : {-1.0, 0.0, 2.0}) {
                cplx k(re, im);
                auto zg = z_geom(k, 0, m);
                CHECK(rel_err(z_superpose(k, 0, m, 60), zg.value) < 1e-8);
                CHECK(std::abs(zg.value) <= zg.bound);
            }
        cplx k(2 * rho0 + 0.5, 0.3);
        CHECK(rel_err(z_superpose(k, 0, m, 50), z_superpose(k, 0, m, 60)) < 1e-8);
        CHECK_THROWS_AS(z_geom(cplx(2 * rho0 - 0.1), 0, m), DomainError);
        CHECK_THROWS_AS(r_geom(cplx(2 * rho0), 0, m), DomainError);
    }
}

TEST_CASE("scalar identity e^{-(k-rho0)t} against the cosh expansion at t = 0.5") {
    double t = 0.5;
    cplx k(1.7, 0.9);
    auto beta = beta_coeffs(k, 200);
    cplx s = 0;
    for (int m = 0; m <= 200; ++m) s += beta[m] * std::pow(cplx(std::cosh(t)), -k - 2.0 * m);
    CHECK(rel_err(s, std::exp(-k * t)) < 1e-8);
}

TEST_CASE("Selberg comparison") {
    auto m = toy_l2();
    for (const auto& g : m.geodesics) CHECK(std::abs(jacobian_det(g, 2) - (1 - std::exp(-g.L))) < 1e-12);
    for (cplx k : {cplx(1.5), cplx(2.2, 1.0), cplx(4.0, -3.0)}) {
        auto p = selberg_pair(k, m);
        CHECK(p.trivial_holonomy);
        CHECK(std::abs(p.ratio - 2.0) < 1e-12);
    }
    auto m3 = toy_l3();
    auto p = selberg_pair(cplx(2.6, 0.5), m3);
    CHECK(!p.trivial_holonomy);
    CHECK(std::abs(p.ratio - 2.0) < 1e-12);
}

TEST_CASE("r_spec: frozen values") {
    auto m = toy_l2();
    // mpmath evaluation of the defining sum.
    CHECK(rel_err(r_spec({2.3, 0.4}, 0, m), {4.62243561609092629, -4.72312323089803029}) < 1e-11);
    CHECK(rel_err(r_spec({0.6, 0.3}, 0, m), {-0.969954672782170502, -8.25400524887328491}) < 1e-11);
    CHECK_THROWS_AS(r_spec(cplx(0.5, 1.0), 0, m), PoleError);
    CHECK(pole_distance(cplx(0.5, 1.2), 0, m) < 0.2 + 1e-12);
}

TEST_CASE("poles_and_residues: closed form, oracle and contour") {
    auto m = toy_l2();
    auto poles = poles_and_residues(0, m);
    REQUIRE(poles.size() == 6);
    struct Want {
        cplx loc, res;
    };
    // mpmath limits (k - k0) r_spec(k).
    for (Want w : {Want{{0.5, 1.0}, {2.24235809251606598, -3.98241887758762648}},
                   Want{{0.5, 2.5}, {0.532571492699091532, 0.0499071918390926882}},
                   Want{0.8, 3.17189839658048624}, Want{0.2, -0.767574201733702660}}) {
        bool found = false;
        for (const auto& p : poles)
            if (std::abs(p.location - w.loc) < 1e-12) {
                found = true;
                CHECK(p.order == 1);
                CHECK(rel_err(p.residue, w.res) < 1e-10);
            }
        CHECK(found);
    }
    SpecOptions o;
    o.allow_near_pole = true;
    for (const auto& p : poles) {
        CHECK(!p.numeric);
        CHECK(std::abs(p.location.real() - 0.5) < 0.5);
        auto nr = residue_numeric([&](cplx k) { return r_spec(k, 0, m, o); }, p.location, 0.05, 256);
        CHECK(nr.order == 1);
        CHECK(rel_err(nr.residue, p.residue) < 1e-8);
        if (std::abs(p.location.imag()) > 0.5) CHECK(rel_err(p.residue_printed, 0.5 * p.residue) < 1e-14);
    }
}

TEST_CASE("poles_and_residues: order-2 pole at lambda = 0") {
    auto m = parse_model(R"({"dimension": 2, "eigen": [{"lambda_sq": 0.0, "ps": {"0": 1.0}, "c": {"0": 0.7}}],
        "geodesics": []})");
    CHECK(m.eigen[0].series == Series::Complementary);
    cplx coef = 0.7;
    auto poles = poles_and_residues(0, m);
    REQUIRE(poles.size() == 1);
    CHECK(poles[0].order == 2);
    // mpmath: leading 2^{rho0} omega, residue 2^{rho0} omega (ln 2 - gamma - psi(1/2)), per unit coefficient.
    CHECK(rel_err(poles[0].leading / coef, 2.82842712474619010) < 1e-12);
    CHECK(rel_err(poles[0].residue / coef, 5.88154886081128313) < 1e-12);
    SpecOptions o;
    o.allow_near_pole = true;
    auto nr = residue_numeric([&](cplx k) { return r_spec(k, 0, m, o); }, 0.5, 0.05, 256);
    CHECK(nr.order == 2);
    CHECK(rel_err(nr.residue, poles[0].residue) < 1e-8);
    CHECK(rel_err(nr.moments[1], poles[0].leading) < 1e-8);
}

TEST_CASE("residue_numeric: examples") {
    auto g = [](cplx k) { return hz::gamma(k); };
    CHECK(std::abs(residue_numeric(g, 0.0, 0.3).residue - 1.0) < 1e-12);
    CHECK(std::abs(residue_numeric(g, -1.0, 0.3).residue + 1.0) < 1e-12);
    auto h = residue_numeric([](cplx k) { return std::exp(k) / (k * k * k); }, 0.0, 0.5);
    CHECK(h.order == 3);
    CHECK(std::abs(h.residue - 0.5) < 1e-12);
    // Regular point.
    CHECK(residue_numeric(g, 1.5, 0.3).order == 0);
    CHECK_THROWS_AS(residue_numeric(g, 0.0, 0.99, 16), ConvergenceError);
}

TEST_CASE("z_spec: residue is 2^{rho0-k0} times the r_spec residue") {
    auto m = toy_l2();
    SpecOptions o;
    o.allow_near_pole = true;
    cplx k0(0.5, 1.0);
    auto zr = residue_numeric([&](cplx k) { return z_spec(k, 0, m, 30, o); }, k0, 0.05, 256);
    auto rr = residue_numeric([&](cplx k) { return r_spec(k, 0, m, o); }, k0, 0.05, 256);
    CHECK(rel_err(zr.residue, std::pow(2.0, 0.5 - k0) * rr.residue) < 1e-8);
}

TEST_CASE("r_spec: holomorphic away from poles, Jmax tail bound") {
    auto m = toy_l2();
    SpecOptions o;
    for (cplx k0 : {cplx(0.5, 0.0), cplx(0.5, 1.7), cplx(0.75, -0.5)}) {
        auto nr = residue_numeric([&](cplx k) { return r_spec(k, 0, m, o); }, k0, 0.1, 256);
        CHECK(nr.order == 0);
    }
    cplx k(0.6, 0.3);
    double tail = -1;
    SpecOptions trunc;
    trunc.jmax = 1;
    cplx part = r_spec(k, 0, m, trunc, &tail);
    CHECK(tail > 0);
    CHECK(std::abs(r_spec(k, 0, m) - part) <= tail * (1 + 1e-12));
    double t0 = -1;
    r_spec(k, 0, m, {}, &t0);
    CHECK(t0 == 0.0);
}

TEST_CASE("complementary record without C is rejected") {
    auto m = toy_l2();
    m.eigen[0].c_const.clear();
    CHECK_THROWS_AS(r_spec(cplx(0.6, 0.3), 0, m), InputError);
}

TEST_CASE("normalize") {
    cplx k(1.3, 0.2), r = 0.8;
    cplx v(0.4, -1.1);
    CHECK(rel_err(normalize(v * omega_sphere(2) * I_of_z(r, 2, k), k, r, 2), v) < 1e-14);
    CHECK_THROWS_AS(normalize(1.0, -1.0, r, 2), PoleError);
}

TEST_CASE("discrepancy: bracket decays with the length") {
    cplx k = 1.5, r = 0.9;
    double prev = INFINITY;
    for (double L = 1.0; L <= 20.0; L += 1.0) {
        double d = std::abs(discrepancy_bracket(k, r, L));
        CHECK(d < prev);
        prev = d;
    }
    CHECK(prev < 1e-3);
    // The bracket is 1 minus the normalized coefficient; the printed exponent is not.
    for (double L : {0.7, 2.0}) {
        cplx c = coeff_c1(L, 1.0, 1.0, r, k, 2) * 2.0 * std::sinh(L / 2) / (2.0 * omega_sphere(2) * I_of_z(r, 2, k));
        CHECK(std::abs(discrepancy_bracket(k, r, L) - (1.0 - c)) < 1e-12);
        CHECK(std::abs(discrepancy_bracket(k, r, L, true) - (1.0 - c)) > 1e-3);
    }
    auto m = toy_l2();
    CHECK(std::isfinite(std::abs(discrepancy_l2(k, m, 0))));
    CHECK_THROWS_AS(discrepancy_l2(k, toy_l3(), 0), InputError);
}

TEST_CASE("extend_sigma is linear in the weights") {
    auto m = toy_l2();
    cplx k(0.62, 0.4);
    cplx a(2.0, 0.5), b(-1.0, 3.0);
    cplx got = extend_sigma({{0, a}, {1, b}}, k, m, 20);
    cplx want = a * z_spec(k, 0, m, 20) + b * z_spec(k, 1, m, 20);
    CHECK(rel_err(got, want) < 1e-13);
    CHECK_THROWS_AS(extend_sigma({{7, a}}, k, m, 20), InputError);
}
