#pragma once

#include <functional>
#include <map>
#include <random>
#include <vector>

#include "hypzeta/model.hpp"
#include "hypzeta/quadrature.hpp"

namespace hz {

// ---- geometric side ----

// Closed form of the trivial-representation coefficient for central holonomy:
// (omega sqrt(2(l-1))/2) (int phi) (cosh L - m11)^{-rho0} z^{k-rho0}
//   Gamma(rho0) Gamma(k-a) Gamma(k-b) / Gamma(k)^2 2F1(k-a, k-b, k; 1-z), z = cosh L/(cosh L - m11).
cplx coeff_c1(double L, double m11, cplx int_phi, cplx r_n, cplx k, int l);
// The same with z^{k-2 rho0} and no (cosh L - m11)^{-rho0} prefactor, as printed.
cplx coeff_c1_printed(double L, double m11, cplx int_phi, cplx r_n, cplx k, int l);
// omega sqrt(2(l-1)) (int phi) (cosh L - m11)^{-rho0} int_0^inf s^{l-2}(s^2+1)^{-k} 2F1(a,b,rho0;-z s^2) ds.
QuadratureResult coeff_c1_quad(double L, double m11, cplx int_phi, cplx r_n, cplx k, int l, double tol = 1e-11);
// Experimental: Haar average over m in M of the closed form at (m^{-1} h m)_{11}.
cplx coeff_c1_mc(double L, const Mat& holonomy, cplx int_phi, cplx r_n, cplx k, int l, long samples,
                 std::mt19937_64& rng, double* std_error = nullptr);

struct GeomOptions {
    long mc_samples = 20000;  // non-central holonomy only
    unsigned long seed = 1;
};

struct GeomSum {
    cplx value{0.0};
    double bound = 0;     // majorant C(phi) sum L e^{-rho0 L} w(L)
    double mc_error = 0;  // Monte-Carlo standard error, non-central holonomy only
};

// Coefficient of geodesic g for phi_n at k (closed form or Monte-Carlo).
cplx coefficient(const SpectralModel& m, const GeodesicClassData& g, int n, cplx k, const GeomOptions& opt = {},
                 double* mc_error = nullptr);

// C(phi) with |c| <= C(phi) L e^{-rho0 L} for L >= min length of the model.
double auxi_constant(const SpectralModel& m, int n);

// sum_gamma c(k) cosh(L)^{rho0-k}; requires Re k > 2 rho0.
GeomSum r_geom(cplx k, int n, const SpectralModel& m, const GeomOptions& opt = {});
// sum_gamma c(k) e^{-(k-rho0) L}; requires Re k > 2 rho0.
GeomSum z_geom(cplx k, int n, const SpectralModel& m, const GeomOptions& opt = {});
// sum_gamma c(k_coeff) cosh(L)^{rho0-k_weight}.
cplx r_geom_weighted(cplx k_coeff, cplx k_weight, int n, const SpectralModel& m, const GeomOptions& opt = {});

// Taylor coefficients beta(k;0..M) of ((1-sqrt(1-t))/t)^k.
std::vector<cplx> beta_coeffs(cplx k, int M);
// sum_{m<=M} beta(k-rho0;m) sum_gamma c(k) cosh(L)^{-(k+2m-rho0)}.
cplx z_superpose(cplx k, int n, const SpectralModel& m, int M, const GeomOptions& opt = {});

struct SelbergPair {
    cplx z1{0.0};          // sum L0 e^{-rho0 L} e^{(rho0-k)L} / det(1 - Ad(m a_L)^{-1}|n)
    cplx log_deriv{0.0};   // L_S(k - rho0) = 2 sum L0 (-1)^{l-1} e^{(2 rho0-k)L} / det(1 - Ad(m a_L)|n)
    cplx ratio{0.0};       // log_deriv / z1
    bool trivial_holonomy = true;
};
SelbergPair selberg_pair(cplx k, const SpectralModel& m);
// det(1 - Ad(m_gamma a_L)^{-1}|n) from the matrices.
double jacobian_det(const GeodesicClassData& g, int l);

// ---- spectral side ----

struct SpecOptions {
    int jmax = -1;              // number of principal records used; -1 for all
    bool allow_near_pole = false;
};

// Continuation of R(k;phi_n) from the eigen data. Throws PoleError within 1e-6 of a pole
// unless allow_near_pole. tail receives sum of |omitted principal terms|.
cplx r_spec(cplx k, int n, const SpectralModel& m, const SpecOptions& opt = {}, double* tail = nullptr);
// error receives sum |beta_j| tail_j plus the last retained term as a truncation estimate.
cplx z_spec(cplx k, int n, const SpectralModel& m, int M, const SpecOptions& opt = {}, double* error = nullptr);
// Distance from k to the pole set of r_spec for phi_n.
double pole_distance(cplx k, int n, const SpectralModel& m);

struct Pole {
    cplx location;
    int order = 1;
    cplx residue{0.0};
    cplx residue_printed{0.0};  // the paper's transcription, for comparison
    cplx leading{0.0};          // coefficient of (k-k0)^{-order}
    bool numeric = false;       // residue from contour integration (coincident poles)
};
// Poles of r_spec in the strip rho0 - 1/2 < Re k < rho0 + 1/2.
std::vector<Pole> poles_and_residues(int n, const SpectralModel& m);

struct NumericResidue {
    cplx residue{0.0};
    int order = 0;
    std::vector<cplx> moments;  // (1/2 pi i) oint (k-k0)^j f, j = 0..max_order
};
// Trapezoidal rule on |k - k0| = radius; ConvergenceError if doubling npoints changes the result.
NumericResidue residue_numeric(const std::function<cplx(cplx)>& f, cplx k0, double radius, int npoints = 128,
                               int max_order = 4);

// value / (omega I(a, b, rho0, k)).
cplx normalize(cplx value, cplx k, cplx r_n, int l);

// l = 2: 1 - z^{k-1/2} 2F1(k-a, k-b, k; 1-z), z = cosh L/(cosh L - 1); printed uses z^{k-1}.
cplx discrepancy_bracket(cplx k, cplx r_n, double L, bool printed = false);
cplx discrepancy_l2(cplx k, const SpectralModel& m, int n, bool printed = false);

// sum_n w_n z_spec(k, n).
cplx extend_sigma(const std::map<int, cplx>& weights, cplx k, const SpectralModel& m, int M,
                  const SpecOptions& opt = {});

// Deterministic pairwise summation.
cplx pairwise_sum(const std::vector<cplx>& v);

}  // namespace hz
