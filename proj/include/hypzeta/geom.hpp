#pragma once

#include <random>

#include "hypzeta/liealg.hpp"
#include "hypzeta/quadrature.hpp"
#include "hypzeta/specfun.hpp"

namespace hz {

// Group elements are (l+1)x(l+1) matrices in SO_0(1,l).
Mat a_t(int l, double t);
Mat n_u(int l, const Vec& u);
// f in SO(l-1), placed in the rows/columns 1..l-1. Throws InputError if f is not special orthogonal.
Mat embed_m(int l, const Mat& f);
Mat weyl_w(int l);

bool is_group_element(const Mat& g, double tol = 1e-10);
// g^{-1} = J' g^T J'.
Mat group_inverse(const Mat& g);

// Fractional linear action on the open unit ball in R^l.
Vec ball_action(const Mat& g, const Vec& y);

// (1 - |g.0|^2)^{k/2} = |g_00|^{-k}.
cplx f_k_eval(const Mat& g, cplx k);

// t with H(g) = t H_0.
double iwasawa_height(const Mat& g);

// Spherical function phi_lambda(a_t) by 1D quadrature over the K-orbit.
QuadratureResult spherical_phi_quad(cplx lambda, double t, int l, double tol = 1e-11);
cplx spherical_phi(cplx lambda, double t, int l);
// Monte-Carlo average of e^{(i lambda - rho0) H(a_t k)} over Haar-random k in K.
cplx spherical_phi_mc(cplx lambda, double t, int l, long samples, std::mt19937_64& rng,
                      double* std_error = nullptr);

// Haar-distributed element of SO(n).
Mat haar_sample_so(int n, std::mt19937_64& rng);

}  // namespace hz
