#include "hypzeta/radial.hpp"

#include <cmath>
#include <string>

#include "hypzeta/errors.hpp"

namespace hz {

namespace {

const cplx I(0, 1);

void require_smooth(double p) {
    double twop = 2 * p;
    if (twop < -1e-9 || std::abs(twop - std::round(twop)) > 1e-9)
        throw SmoothnessError("exponent p=" + std::to_string(p) + " does not give an origin-smooth solution");
}

}  // namespace

double rho0_of(int l) { return 0.5 * (l - 1); }

cplx mu_from_r(int l, cplx r) {
    double rho0 = rho0_of(l);
    return 0.25 * (rho0 + r * r / rho0);
}

OdeParams ode_params_from_eigen(int l, cplx r, double d) {
    if (l < 2) throw InputError("ode_params_from_eigen: l must be >= 2");
    if (d > 0) throw InputError("ode_params_from_eigen: d must be <= 0");
    double rho0 = rho0_of(l);
    return OdeParams{0.5 * (rho0 + I * r), 0.5 * (rho0 - I * r), rho0, d};
}

std::pair<double, double> indicial_roots(double c, double d) {
    if (d > 0) throw InputError("indicial_roots: d must be <= 0");
    double h = 0.5 * (1 - c);
    double s = std::sqrt(h * h - d);
    return {h + s, h - s};
}

double smooth_root(const OdeParams& P) {
    if (P.d == 0.0) return 0.0;
    return indicial_roots(P.c, P.d).first;
}

cplx smooth_solution(const OdeParams& P, double x) { return smooth_solution(P, x, smooth_root(P)); }

cplx smooth_solution(const OdeParams& P, double x, double p) {
    if (x > 0) throw InputError("smooth_solution: x must be <= 0");
    if (std::abs(p * p + (P.c - 1) * p + P.d) > 1e-9)
        throw InputError("smooth_solution: p is not a root of the indicial equation");
    require_smooth(p);
    cplx F = hyp2f1(P.a + p, P.b + p, P.c + 2 * p, x);
    if (p == 0.0) return F;
    return std::exp(I * kPi * p) * std::pow(std::abs(x), p) * F;
}

std::pair<std::vector<cplx>, std::vector<cplx>> eh_pole_data(const OdeParams& P, int T) {
    std::vector<cplx> a(T + 1), b(T + 1);
    a[0] = P.c;
    b[0] = P.d;
    for (int k = 1; k <= T; ++k) {
        a[k] = P.c - (P.a + P.b + 1.0);
        b[k] = P.d - P.a * P.b;
    }
    return {a, b};
}

FrobeniusSeries frobenius_series(const std::vector<cplx>& a, const std::vector<cplx>& b, double p, int T) {
    if (int(a.size()) < T + 1 || int(b.size()) < T + 1)
        throw InputError("frobenius_series: need T+1 pole coefficients");
    auto f = [&](cplx s) { return s * (s - 1.0) + a[0] * s + b[0]; };
    if (std::abs(f(p)) > 1e-9) throw InputError("frobenius_series: p is not an indicial root");
    cplx other = 1.0 - a[0] - p;
    cplx gap = other - p;
    if (std::abs(gap.imag()) < 1e-9 && gap.real() > 0.5 && std::abs(gap.real() - std::round(gap.real())) < 1e-9)
        throw LogCaseError("frobenius_series: roots differ by a positive integer; the second solution "
                           "has a logarithmic singularity (log case)");
    FrobeniusSeries s;
    s.p = p;
    s.T = T;
    s.coeffs.assign(T + 1, 0.0);
    s.coeffs[0] = 1.0;
    for (int t = 1; t <= T; ++t) {
        cplx acc = 0;
        for (int k = 1; k <= t; ++k) acc += (double(t - k) + p) * a[k] * s.coeffs[t - k] + b[k] * s.coeffs[t - k];
        s.coeffs[t] = -acc / f(p + t);
    }
    return s;
}

namespace {

template <class T, class F>
std::complex<T> fd1(const F& f, T x, T h) {
    return (-f(x - 3 * h) + T(9) * f(x - 2 * h) - T(45) * f(x - h) + T(45) * f(x + h) - T(9) * f(x + 2 * h) +
            f(x + 3 * h)) /
           (T(60) * h);
}

template <class T, class F>
std::complex<T> fd2(const F& f, T x, T h) {
    return (T(2) * f(x - 3 * h) - T(27) * f(x - 2 * h) + T(270) * f(x - h) - T(490) * f(x) +
            T(270) * f(x + h) - T(27) * f(x + 2 * h) + T(2) * f(x + 3 * h)) /
           (T(180) * h * h);
}

template <class T, class F>
double op_residual(const OdeParams& P, const F& f, double xd) {
    if (xd == 0.0) throw InputError("operator_residual: x must be nonzero");
    using C = std::complex<T>;
    T x = xd;
    T h = T(1e-4) * std::max(T(1), std::abs(x));
    C d1 = fd1<T>(f, x, h), d2 = fd2<T>(f, x, h), v = f(x);
    C a(P.a), b(P.b);
    C r = x * (T(1) - x) * d2 + (T(P.c) - (a + b + T(1)) * x) * d1 - a * b * v + (T(P.d) / x) * v;
    return double(std::abs(r));
}

template <class T, class F>
double rad_residual(int l, cplx mu, double d, const F& f, double sd) {
    if (sd <= 0) throw InputError("radial_residual: s must be positive");
    using C = std::complex<T>;
    T s = sd;
    T k = 2 * std::sqrt(T(l - 1));
    T sigma = k * s;
    T h = T(1e-4) * std::max(T(1), s);
    C d1 = fd1<T>(f, s, h) / k, d2 = fd2<T>(f, s, h) / (k * k);
    T D = 4 * T(d);
    C v = f(s);
    C r = (sigma * sigma / (T(2) * (l - 1)) + T(2)) * d2 +
          ((T(1) / (T(2) * (l - 1)) + T(0.5)) * sigma + T(2) * (l - 2) / sigma) * d1 +
          (T(2) * D / (sigma * sigma)) * v + C(mu) * v;
    return double(std::abs(r));
}

}  // namespace

cplx fd_first(const ScalarFn& f, double x, double h) { return fd1<double>(f, x, h); }
cplx fd_second(const ScalarFn& f, double x, double h) { return fd2<double>(f, x, h); }

double operator_residual(const OdeParams& P, const ScalarFn& f, double x) {
    return op_residual<double>(P, f, x);
}
double operator_residual(const OdeParams& P, const ScalarFnL& f, double x) {
    return op_residual<long double>(P, f, x);
}

double radial_residual(int l, cplx mu, double d, const ScalarFn& f, double s) {
    return rad_residual<double>(l, mu, d, f, s);
}
double radial_residual(int l, cplx mu, double d, const ScalarFnL& f, double s) {
    return rad_residual<long double>(l, mu, d, f, s);
}

cplxl hyp2f1_neg_ld(cplxl a, cplxl b, cplxl c, long double x) {
    if (x > 0) throw DomainError("hyp2f1_neg_ld: requires x <= 0");
    long double w = x / (x - 1);
    cplxl cb = c - b;
    cplxl term = 1, sum = 1;
    for (int n = 0; n < 1000000; ++n) {
        term *= (a + (long double)n) * (cb + (long double)n) / ((c + (long double)n) * (long double)(n + 1)) * w;
        sum += term;
        if (std::abs(term) <= 1e-21L * std::abs(sum)) return std::pow(1 - x, -a) * sum;
    }
    throw ConvergenceError("hyp2f1_neg_ld: series did not converge");
}

cplxl smooth_solution_ld(const OdeParams& P, long double x, double p) {
    require_smooth(p);
    cplxl F = hyp2f1_neg_ld(cplxl(P.a) + (long double)p, cplxl(P.b) + (long double)p,
                            (long double)P.c + 2 * (long double)p, x);
    if (p == 0.0) return F;
    return std::exp(cplxl(0, 1) * (3.14159265358979323846264338327950288L * p)) * std::pow(std::abs(x), (long double)p) * F;
}

cplxl weight_kernel_ld(double p, cplx lead, const OdeParams& P, long double s, int l) {
    require_smooth(p);
    long double pl = p;
    cplxl F = hyp2f1_neg_ld(cplxl(P.a) + pl, cplxl(P.b) + pl, (long double)P.c + 2 * pl, -s * s);
    if (p == 0.0) return cplxl(lead) * F;
    return std::exp(cplxl(0, 1) * (3.14159265358979323846264338327950288L * pl)) *
           std::pow((long double)(4 * (l - 1)), pl) * cplxl(lead) * std::pow(s, 2 * pl) * F;
}

cplx weight_kernel(double p, double d, cplx lead, const OdeParams& P, double s, int l) {
    if (d > 0) throw InputError("weight_kernel: d must be <= 0");
    require_smooth(p);
    if (std::abs(p * p + (P.c - 1) * p + d) > 1e-9)
        throw InputError("weight_kernel: (p, d) inconsistent with the indicial equation");
    cplx F = hyp2f1(P.a + p, P.b + p, P.c + 2 * p, -s * s);
    if (p == 0.0) return lead * F;
    return std::exp(I * kPi * p) * std::pow(4.0 * (l - 1), p) * lead * std::pow(s, 2 * p) * F;
}

cplx weight_kernel_l2(cplx int_phi, cplx int_xphi, const OdeParams& P, double s) {
    return int_phi * hyp2f1(P.a, P.b, 0.5, -s * s) +
           2.0 * I * int_xphi * s * hyp2f1(P.a + 0.5, P.b + 0.5, 1.5, -s * s);
}

}  // namespace hz
