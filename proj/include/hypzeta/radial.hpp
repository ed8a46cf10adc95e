#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "hypzeta/specfun.hpp"

namespace hz {

// Parameters of x(1-x)y'' + (c-(a+b+1)x)y' - ab y + (d/x) y = 0.
struct OdeParams {
    cplx a, b;
    double c = 0.5;
    double d = 0.0;
};

struct FrobeniusSeries {
    double p = 0;
    std::vector<cplx> coeffs;  // c_0 .. c_T
    int T = 0;
};

double rho0_of(int l);
// mu = (rho0 + r^2/rho0)/4 as a complex number.
cplx mu_from_r(int l, cplx r);
OdeParams ode_params_from_eigen(int l, cplx r, double d = 0.0);

// Roots of p^2 + (c-1)p + d = 0 with p1 >= p2. Requires d <= 0.
std::pair<double, double> indicial_roots(double c, double d);

// Default root for the origin-smooth solution: 0 when d = 0, p1 otherwise.
double smooth_root(const OdeParams& P);

// x^p 2F1(a+p, b+p, c+2p; x) for x <= 0, with x^p = e^{i pi p}|x|^p.
// Throws SmoothnessError unless 2p is a non-negative integer (within 1e-9).
cplx smooth_solution(const OdeParams& P, double x);
cplx smooth_solution(const OdeParams& P, double x, double p);

// Coefficients a_k of zP(z) and b_k of z^2 Q(z) for the normalized form of the ODE above.
std::pair<std::vector<cplx>, std::vector<cplx>> eh_pole_data(const OdeParams& P, int T);

// c_0 = 1, f(p+t) c_t = -sum_{k=1}^t ((t-k+p) a_k + b_k) c_{t-k}, f(s) = s(s-1) + a_0 s + b_0.
// Throws LogCaseError if the other root exceeds p by a positive integer.
FrobeniusSeries frobenius_series(const std::vector<cplx>& a, const std::vector<cplx>& b, double p, int T);

using ScalarFn = std::function<cplx(double)>;
using cplxl = std::complex<long double>;
using ScalarFnL = std::function<cplxl(long double)>;

// 2F1(a, b, c; x) for real x <= 0 in long double: Pfaff transformation to
// x/(x-1) in [0, 1) and a plain series. Used where finite differences need
// values accurate beyond double precision.
cplxl hyp2f1_neg_ld(cplxl a, cplxl b, cplxl c, long double x);
cplxl smooth_solution_ld(const OdeParams& P, long double x, double p);
cplxl weight_kernel_ld(double p, cplx lead, const OdeParams& P, long double s, int l);

// Sixth-order central difference derivatives with step h.
cplx fd_first(const ScalarFn& f, double x, double h);
cplx fd_second(const ScalarFn& f, double x, double h);

// |x(1-x)f'' + (c-(a+b+1)x)f' - ab f + (d/x) f| with h = 1e-4 max(1,|x|).
// With h = 1e-4 the second difference amplifies rounding in f by ~6/h^2, so
// double-valued f cannot resolve residuals below ~1e-7; the long double
// overload is the one the tests use.
double operator_residual(const OdeParams& P, const ScalarFn& f, double x);
double operator_residual(const OdeParams& P, const ScalarFnL& f, double x);

// Radial (slice) equation in X_{e1} coordinates s:
// sigma = 2 sqrt(l-1) s, (sigma^2/(2(l-1)) + 2)F'' + ((1/(2(l-1)) + 1/2)sigma + 2(l-2)/sigma)F'
//   + (2 D/sigma^2) F + mu F, derivatives in sigma, D = 4d.
double radial_residual(int l, cplx mu, double d, const ScalarFn& f, double s);
double radial_residual(int l, cplx mu, double d, const ScalarFnL& f, double s);

// (-1)^p (4(l-1))^p lead s^{2p} 2F1(a+p, b+p, c+2p; -s^2).
cplx weight_kernel(double p, double d, cplx lead, const OdeParams& P, double s, int l);
// l=2: int(phi) 2F1(a,b,1/2;-s^2) + 2i int(X phi) s 2F1(a+1/2,b+1/2,3/2;-s^2).
cplx weight_kernel_l2(cplx int_phi, cplx int_xphi, const OdeParams& P, double s);

}  // namespace hz
