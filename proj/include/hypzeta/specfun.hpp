#pragma once

#include <complex>
#include <vector>

namespace hz {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kEulerGamma = 0.57721566490153286061;

// True if z is within tol of 0, -1, -2, ...
bool is_gamma_pole(cplx z, double tol = 1e-12);

// log Gamma(z); exp(lgamma(z)) == Gamma(z) but the imaginary part is not
// normalised to a particular branch. Throws PoleError at poles.
cplx lgamma(cplx z);
cplx gamma(cplx z);
// 1/Gamma(z), entire; exactly 0 at the poles of Gamma.
cplx rgamma(cplx z);
cplx digamma(cplx z);

// Gamma(x)Gamma(y)/Gamma(x+y). Returns 0 when only x+y is at a pole,
// throws PoleError when x or y is.
cplx beta_fn(cplx x, cplx y);

cplx pochhammer(cplx a, int n);
cplx binom_general(cplx k, int l);

// Gauss hypergeometric function for |z| < 1 or real z < 1.
cplx hyp2f1(cplx a, cplx b, cplx c, cplx z);
// Plain power series, no transformations. Used as the region-consistency oracle.
cplx hyp2f1_series(cplx a, cplx b, cplx c, cplx z, int max_terms = 200000);
// The large-|z| connection formula (valid for real z < 0), exposed for the
// overlap test against the series.
cplx hyp2f1_connection(cplx a, cplx b, cplx c, cplx z);
// Number of times the degenerate b-a in Z branch perturbed parameters on the
// calling thread.
long hyp2f1_degenerate_count();

// 3F2 on |z| < 1. tail_estimate (optional) receives the estimated truncation error.
cplx hyp3f2(cplx a1, cplx a2, cplx a3, cplx b1, cplx b2, cplx z, double* tail_estimate = nullptr);

}  // namespace hz
