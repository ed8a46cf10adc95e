#include "hypzeta/transforms.hpp"

#include <cmath>
#include <string>

#include "hypzeta/errors.hpp"
#include "hypzeta/geom.hpp"
#include "hypzeta/radial.hpp"

namespace hz {

namespace {

const cplx kI(0, 1);

void check_l(int l) {
    if (l < 2) throw InputError("l must be >= 2, got " + std::to_string(l));
}

// x^{-k} for x > 0.
cplx rpow(double x, cplx k) { return std::exp(-k * std::log(x)); }

}  // namespace

double omega_sphere(int l) {
    check_l(l);
    if (l == 2) return 2.0;
    double h = 0.5 * (l - 1);
    return 2.0 * std::pow(kPi, h) / std::tgamma(h);
}

cplx r_from_lambda(int l, cplx lambda) {
    double rho0 = rho0_of(l);
    return std::sqrt(4.0 * rho0 * lambda * lambda + rho0 * rho0 * (4.0 * rho0 - 1.0));
}

cplx abel_fk(cplx k, double t, int l) {
    double rho0 = rho0_of(l);
    if (!(k.real() > rho0)) throw DomainError("abel_fk: requires Re k > rho0");
    return std::pow(2.0, rho0) * rpow(std::cosh(t), k - rho0) * omega_sphere(l) * 0.5 * beta_fn(rho0, k - rho0);
}

QuadratureResult abel_fk_quad(cplx k, double t, int l, double tol) {
    double rho0 = rho0_of(l);
    if (!(k.real() > rho0)) throw DomainError("abel_fk_quad: requires Re k > rho0");
    Mat at = a_t(l, t);
    auto f = [&](double s) -> cplx {
        Vec u = Vec::Zero(l - 1);
        u(0) = s;
        return std::pow(s, l - 2) * f_k_eval(at * n_u(l, u), k);
    };
    auto q = integrate_half_line(f, tol);
    double scale = omega_sphere(l) * std::exp(rho0 * t);
    q.value *= scale;
    q.error_estimate *= scale;
    return q;
}

AdmissibilityReport abel_admissibility(cplx k, int l, double eps, double t_max, double dt) {
    double rho0 = rho0_of(l);
    std::vector<double> g;
    for (double t = 0; t <= t_max + 1e-12; t += dt)
        g.push_back(std::exp((rho0 + eps) * t) * std::abs(abel_fk(k, t, l)));
    AdmissibilityReport rep;
    size_t half = g.size() / 2;
    rep.monotone_growth = true;
    bool tail_nonincreasing = true;
    for (size_t i = half; i + 1 < g.size(); ++i) {
        if (!(g[i + 1] > g[i])) rep.monotone_growth = false;
        if (g[i + 1] > g[i]) tail_nonincreasing = false;
    }
    size_t imax = 0;
    for (size_t i = 0; i < g.size(); ++i)
        if (g[i] > g[imax]) imax = i;
    rep.sup = g[imax];
    rep.tail_ratio = g.back() / g[half];
    rep.bounded = tail_nonincreasing && imax < half;
    return rep;
}

cplx spherical_transform_fk(cplx k, cplx mu, int l, Mode mode) {
    double rho0 = rho0_of(l);
    if (mode == Mode::Quadrature) return spherical_transform_fk_quad(k, mu, l).value;
    return omega_sphere(l) * std::pow(cplx(2.0), k - 2.0) * beta_fn(k - rho0, rho0) *
           beta_fn((k + kI * mu - rho0) / 2.0, (k - kI * mu - rho0) / 2.0);
}

QuadratureResult spherical_transform_fk_quad(cplx k, cplx mu, int l, double tol) {
    double rho0 = rho0_of(l);
    if (!(k.real() > 2 * rho0)) throw DomainError("spherical_transform_fk: quadrature requires Re k > 2 rho0");
    double omega = omega_sphere(l);
    double inner_err = 0;
    long evals = 0;
    // F(t) = e^{rho0 t} omega int_0^inf s^{l-2} (cosh t + s^2 e^t/2)^{-k} ds, with s = sigma v
    // and sigma^2 = 2 cosh(t) e^{-t} so the inner integrand keeps unit scale.
    auto F = [&](double t) -> cplx {
        double ch = std::cosh(t), sigma = std::sqrt(2.0 * ch * std::exp(-t));
        auto inner = [&](double v) -> cplx {
            double s = sigma * v;
            return std::pow(s, l - 2) * rpow(ch + 0.5 * s * s * std::exp(t), k);
        };
        auto q = integrate_half_line(inner, 0.1 * tol);
        evals += q.evaluations;
        double scale = omega * sigma * std::exp(rho0 * t);
        inner_err = std::max(inner_err, q.error_estimate * scale);
        return q.value * scale;
    };
    // F is even, so the Fourier integral is 2 int_0^inf cos(mu t) F(t) dt. The integrand
    // decays like e^{-(Re k - rho0 - |Im mu|)t}; cut where that falls below 1e-18.
    double rate = k.real() - rho0 - std::abs(mu.imag());
    if (!(rate > 0)) throw DomainError("spherical_transform_fk: Fourier integral diverges for |Im mu| >= Re k - rho0");
    double T = std::min(700.0, 42.0 / rate);
    auto q = integrate([&](double t) { return 2.0 * std::cos(mu * t) * F(t); }, 0.0, T, tol, 20);
    q.error_estimate += inner_err;
    q.evaluations += evals;
    return q;
}

bool I_quadrature_converges(cplx r, int l, cplx z) {
    return rho0_of(l) + std::abs(r.imag()) < 2.0 * z.real();
}

cplx I_of_z(cplx r, int l, cplx z, Mode mode) {
    if (mode == Mode::Quadrature) return I_of_z_quad(r, l, z).value;
    auto P = ode_params_from_eigen(l, r);
    double rho0 = rho0_of(l);
    if (is_gamma_pole(z - P.a) || is_gamma_pole(z - P.b)) throw PoleError("I_of_z: pole at z - a or z - b");
    if (is_gamma_pole(z)) return 0.0;
    return 0.5 * std::exp(lgamma(rho0) + lgamma(z - P.a) + lgamma(z - P.b) - 2.0 * lgamma(z));
}

QuadratureResult I_of_z_quad(cplx r, int l, cplx z, double tol) {
    if (!I_quadrature_converges(r, l, z))
        throw DomainError("I_of_z: integral diverges unless rho0 + |Im r| < 2 Re z");
    auto P = ode_params_from_eigen(l, r);
    auto f = [&](double s) -> cplx {
        if (s == 0.0) return l == 2 ? 1.0 : 0.0;
        return std::pow(s, l - 2) * rpow(1 + s * s, z) * hyp2f1(P.a, P.b, P.c, -s * s);
    };
    // |integrand| ~ s^{l-2-2 Re z-rho0+|Im r|}, up to a log factor when a = b.
    double alpha = 2 * z.real() + rho0_of(l) - std::abs(r.imag()) - (l - 2);
    return integrate_algebraic(f, alpha, tol, 20);
}

cplx c_of_lambda(cplx lambda, int l) {
    return 0.5 * omega_sphere(l) * beta_fn(kI * lambda, rho0_of(l));
}

QuadratureResult c_of_lambda_quad(cplx lambda, int l, double tol) {
    double rho0 = rho0_of(l), omega = omega_sphere(l);
    cplx w = kI * lambda;
    QuadratureResult q;
    if (w.real() >= 1.0) {
        q = integrate_half_line([&](double s) { return std::pow(s, l - 2) * rpow(1 + s * s, w + rho0); }, tol, 20);
        q.value *= omega;
        q.error_estimate *= omega;
        return q;
    }
    if (w.real() <= -1.0 || std::abs(w) == 0.0)
        throw DomainError("c_of_lambda_quad: requires Re(i lambda) > -1 and lambda != 0");
    // (omega/2) [1/w + int_0^inf ((1-e^{-u})^{rho0-1} - 1) e^{-w u} du], u = v^2.
    auto f = [&](double v) -> cplx {
        if (v == 0.0) return rho0 == 0.5 ? cplx(2.0) : cplx(0.0);
        double u = v * v;
        return 2.0 * v * (std::pow(-std::expm1(-u), rho0 - 1.0) - 1.0) * std::exp(-w * u);
    };
    q = integrate(f, 0.0, 8.0, tol, 20);
    q.value = 0.5 * omega * (1.0 / w + q.value);
    q.error_estimate *= 0.5 * omega;
    return q;
}

cplx wigner_from_ps(cplx ps, cplx r, double lambda, int l) {
    if (!(lambda > 0)) throw InputError("wigner_from_ps: only principal series (lambda > 0) is supported");
    return omega_sphere(l) * I_of_z(r, l, rho0_of(l) + kI * lambda) * ps;
}

cplx ps_normalized(cplx ps, cplx lambda, int l) { return c_of_lambda(lambda, l) * ps; }

double beta_asym_ratio(cplx k, double lambda, int l) {
    double rho0 = rho0_of(l);
    double e = 0.5 * (k.real() - rho0 - 1.0);
    double yp = std::abs(k.imag() + lambda), ym = std::abs(k.imag() - lambda);
    // Compare in log space; both sides underflow for large lambda.
    double lb = std::real(lgamma((k - kI * lambda - rho0) / 2.0) + lgamma((k + kI * lambda - rho0) / 2.0) -
                          lgamma(k - rho0));
    double la = -0.25 * kPi * (yp + ym) + e * (std::log(yp) + std::log(ym));
    return std::exp(lb - la);
}

double beta_asym_limit(cplx k, int l) {
    double w = k.real() - rho0_of(l);
    return 2 * kPi * std::pow(2.0, 1 - w) / std::exp(std::real(lgamma(cplx(w, k.imag()))));
}

}  // namespace hz
