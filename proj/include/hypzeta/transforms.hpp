#pragma once

#include <vector>

#include "hypzeta/quadrature.hpp"
#include "hypzeta/specfun.hpp"

namespace hz {

enum class Mode { Closed, Quadrature };

// Surface measure of the unit sphere in R^{l-1}; 2 for l = 2.
double omega_sphere(int l);

// r with r^2 = 4 rho0 lambda^2 + rho0^2 (4 rho0 - 1), principal square root.
cplx r_from_lambda(int l, cplx lambda);

// Abel transform of f_k: 2^{rho0} cosh^{rho0-k}(t) omega (1/2) B(rho0, k-rho0). Requires Re k > rho0.
cplx abel_fk(cplx k, double t, int l);
// e^{rho0 t} omega int_0^inf s^{l-2} f_k(a_t n_{s e_1}) ds, evaluated on the group matrices.
QuadratureResult abel_fk_quad(cplx k, double t, int l, double tol = 1e-12);

// Sampled growth of e^{(rho0+eps)t}|F(t)| on t in [0, t_max].
struct AdmissibilityReport {
    double sup = 0;         // max sampled value
    double tail_ratio = 0;  // g(t_max) / g(t_max/2)
    bool monotone_growth = false;
    bool bounded = false;  // sup attained away from t_max and tail non-increasing
};
AdmissibilityReport abel_admissibility(cplx k, int l, double eps = 0.05, double t_max = 40.0,
                                       double dt = 0.5);

// omega 2^{k-2} B(k-rho0, rho0) B((k+i mu-rho0)/2, (k-i mu-rho0)/2) or the iterated
// integral 2 int_0^inf cos(mu t) F_{f_k}(t) dt with F from the s-integral (Re k > 2 rho0).
cplx spherical_transform_fk(cplx k, cplx mu, int l, Mode mode = Mode::Closed);
QuadratureResult spherical_transform_fk_quad(cplx k, cplx mu, int l, double tol = 1e-10);

// (1/2) Gamma(rho0) Gamma(z-a) Gamma(z-b) / Gamma(z)^2, a,b = (rho0 +- i r)/2.
cplx I_of_z(cplx r, int l, cplx z, Mode mode = Mode::Closed);
// int_0^inf s^{l-2} (1+s^2)^{-z} 2F1(a, b, rho0; -s^2) ds. DomainError unless
// rho0 + |Im r| < 2 Re z.
QuadratureResult I_of_z_quad(cplx r, int l, cplx z, double tol = 1e-11);
bool I_quadrature_converges(cplx r, int l, cplx z);

// (omega/2) B(i lambda, rho0). PoleError at lambda = 0.
cplx c_of_lambda(cplx lambda, int l);
// Quadrature path: direct s-integral when Re(i lambda) >= 1, otherwise the
// u = ln(1+s^2) form with the non-decaying part integrated in closed form.
QuadratureResult c_of_lambda_quad(cplx lambda, int l, double tol = 1e-12);

// omega I(a, b, rho0, rho0 + i lambda) ps for principal series lambda > 0.
cplx wigner_from_ps(cplx ps, cplx r, double lambda, int l);
// Normalized pairing C(lambda) ps.
cplx ps_normalized(cplx ps, cplx lambda, int l);

// |B((k-i lambda-rho0)/2, (k+i lambda-rho0)/2)| divided by
// e^{-(pi/4)(|Im k+lambda|+|Im k-lambda|)} |Im k+lambda|^e |Im k-lambda|^e, e = (Re k-rho0-1)/2.
double beta_asym_ratio(cplx k, double lambda, int l);
// Limit of beta_asym_ratio as lambda -> inf: 2 pi 2^{1-w} / |Gamma(w + i Im k)|, w = Re k - rho0.
double beta_asym_limit(cplx k, int l);

}  // namespace hz
