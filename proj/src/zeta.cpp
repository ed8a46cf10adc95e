#include "hypzeta/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hypzeta/errors.hpp"
#include "hypzeta/geom.hpp"
#include "hypzeta/radial.hpp"
#include "hypzeta/transforms.hpp"

namespace hz {

namespace {

const cplx kI(0, 1);

cplx cpow_pos(double x, cplx e) { return std::exp(e * std::log(x)); }

void require_half_plane(cplx k, int l, const char* what) {
    if (!(k.real() > 2 * rho0_of(l)))
        throw DomainError(std::string(what) + ": geodesic sums converge only for Re k > 2 rho0");
}

cplx int_phi_of(const GeodesicClassData& g, int n) {
    auto it = g.integrals.find(n);
    return it == g.integrals.end() ? cplx(0.0) : it->second;
}

// Principal and complementary contributions share the Beta factor; coef_j carries the rest.
struct SpecTerm {
    cplx lambda;
    cplx coef;  // omega I ps (principal) or C ps (complementary)
    bool principal;
};

std::vector<SpecTerm> spec_terms(int n, const SpectralModel& m) {
    const auto& phi = m.eigen_at(n);
    double rho0 = rho0_of(m.l), omega = omega_sphere(m.l);
    std::vector<SpecTerm> out;
    for (const auto& e : m.eigen) {
        auto it = e.ps.find(n);
        if (it == e.ps.end() || it->second == 0.0) continue;
        if (e.series == Series::Principal) {
            out.push_back({e.lambda, omega * I_of_z(phi.r, m.l, rho0 + kI * e.lambda) * it->second, true});
        } else {
            auto c = e.c_const.find(n);
            if (c == e.c_const.end())
                throw InputError("eigen[" + std::to_string(e.index) + "].c: C constant for index " + std::to_string(n) +
                                 " missing");
            out.push_back({e.lambda, c->second * it->second, false});
        }
    }
    return out;
}

cplx beta_pair(cplx k, cplx lambda, double rho0) {
    return beta_fn((k - kI * lambda - rho0) / 2.0, (k + kI * lambda - rho0) / 2.0);
}

}  // namespace

cplx pairwise_sum(const std::vector<cplx>& v) {
    std::function<cplx(size_t, size_t)> rec = [&](size_t a, size_t b) -> cplx {
        if (b - a <= 8) {
            cplx s = 0;
            for (size_t i = a; i < b; ++i) s += v[i];
            return s;
        }
        size_t mid = a + (b - a) / 2;
        return rec(a, mid) + rec(mid, b);
    };
    return rec(0, v.size());
}

// ---- geometric side ----

cplx coeff_c1(double L, double m11, cplx int_phi, cplx r_n, cplx k, int l) {
    auto P = ode_params_from_eigen(l, r_n);
    double rho0 = rho0_of(l), ch = std::cosh(L), den = ch - m11;
    double z = ch / den;
    cplx g = std::exp(lgamma(rho0) + lgamma(k - P.a) + lgamma(k - P.b) - 2.0 * lgamma(k));
    return 0.5 * omega_sphere(l) * std::sqrt(2.0 * (l - 1)) * int_phi * std::pow(den, -rho0) *
           cpow_pos(z, k - rho0) * g * hyp2f1(k - P.a, k - P.b, k, 1.0 - z);
}

cplx coeff_c1_printed(double L, double m11, cplx int_phi, cplx r_n, cplx k, int l) {
    auto P = ode_params_from_eigen(l, r_n);
    double rho0 = rho0_of(l), ch = std::cosh(L);
    double z = ch / (ch - m11);
    cplx g = std::exp(lgamma(rho0) + lgamma(k - P.a) + lgamma(k - P.b) - 2.0 * lgamma(k));
    return 0.5 * omega_sphere(l) * std::sqrt(2.0 * (l - 1)) * int_phi * cpow_pos(z, k - 2 * rho0) * g *
           hyp2f1(k - P.a, k - P.b, k, 1.0 - z);
}

QuadratureResult coeff_c1_quad(double L, double m11, cplx int_phi, cplx r_n, cplx k, int l, double tol) {
    auto P = ode_params_from_eigen(l, r_n);
    double rho0 = rho0_of(l), ch = std::cosh(L), den = ch - m11;
    double z = ch / den;
    auto f = [&](double s) -> cplx {
        return std::pow(s, l - 2) * cpow_pos(1 + s * s, -k) * hyp2f1(P.a, P.b, P.c, -z * s * s);
    };
    auto q = integrate_half_line(f, tol, 20);
    cplx pre = omega_sphere(l) * std::sqrt(2.0 * (l - 1)) * int_phi * std::pow(den, -rho0);
    q.value *= pre;
    q.error_estimate *= std::abs(pre);
    return q;
}

cplx coeff_c1_mc(double L, const Mat& h, cplx int_phi, cplx r_n, cplx k, int l, long samples, std::mt19937_64& rng,
                 double* std_error) {
    if (samples <= 0) throw InputError("coeff_c1_mc: samples must be positive");
    cplx sum = 0;
    double sq = 0;
    for (long i = 0; i < samples; ++i) {
        Mat mm = haar_sample_so(l - 1, rng);
        double m11 = (mm.transpose() * h * mm)(0, 0);
        cplx v = coeff_c1(L, std::clamp(m11, -1.0, 1.0), int_phi, r_n, k, l);
        sum += v;
        sq += std::norm(v);
    }
    cplx mean = sum / double(samples);
    if (std_error) *std_error = std::sqrt(std::max(0.0, sq / samples - std::norm(mean)) / samples);
    return mean;
}

cplx coefficient(const SpectralModel& m, const GeodesicClassData& g, int n, cplx k, const GeomOptions& opt,
                 double* mc_error) {
    cplx ip = int_phi_of(g, n);
    if (ip == 0.0) return 0.0;
    cplx r = m.eigen_at(n).r;
    if (is_central(g, m.l)) return coeff_c1(g.L, g.m11, ip, r, k, m.l);
    std::mt19937_64 rng(opt.seed);
    return coeff_c1_mc(g.L, *g.holonomy, ip, r, k, m.l, opt.mc_samples, rng, mc_error);
}

double auxi_constant(const SpectralModel& m, int n) {
    double rho0 = rho0_of(m.l);
    double sup = 0;
    for (const auto& g : m.geodesics) sup = std::max(sup, std::abs(int_phi_of(g, n)) * std::sqrt(2.0 * (m.l - 1)) / g.L0);
    if (m.geodesics.empty()) return 0;
    double Linf = m.min_length();
    double K = std::pow(2.0 / std::pow(-std::expm1(-Linf), 2), rho0);
    return sup * 0.5 * omega_sphere(m.l) * beta_fn(rho0, rho0).real() * K;
}

GeomSum r_geom(cplx k, int n, const SpectralModel& m, const GeomOptions& opt) {
    require_half_plane(k, m.l, "r_geom");
    double rho0 = rho0_of(m.l), C = auxi_constant(m, n);
    GeomSum out;
    std::vector<cplx> terms;
    double var = 0;
    for (const auto& g : m.geodesics) {
        double se = 0;
        terms.push_back(coefficient(m, g, n, k, opt, &se) * cpow_pos(std::cosh(g.L), rho0 - k));
        var += std::pow(se * std::pow(std::cosh(g.L), rho0 - k.real()), 2);
        out.bound += C * g.L * std::exp(-rho0 * g.L) * std::pow(std::cosh(g.L), rho0 - k.real());
    }
    out.value = pairwise_sum(terms);
    out.mc_error = std::sqrt(var);
    return out;
}

GeomSum z_geom(cplx k, int n, const SpectralModel& m, const GeomOptions& opt) {
    require_half_plane(k, m.l, "z_geom");
    double rho0 = rho0_of(m.l), C = auxi_constant(m, n);
    GeomSum out;
    std::vector<cplx> terms;
    double var = 0;
    for (const auto& g : m.geodesics) {
        double se = 0;
        terms.push_back(coefficient(m, g, n, k, opt, &se) * std::exp(-(k - rho0) * g.L));
        var += std::pow(se * std::exp(-(k.real() - rho0) * g.L), 2);
        out.bound += C * g.L * std::exp(-rho0 * g.L) * std::exp(-(k.real() - rho0) * g.L);
    }
    out.value = pairwise_sum(terms);
    out.mc_error = std::sqrt(var);
    return out;
}

cplx r_geom_weighted(cplx k_coeff, cplx k_weight, int n, const SpectralModel& m, const GeomOptions& opt) {
    double rho0 = rho0_of(m.l);
    std::vector<cplx> terms;
    for (const auto& g : m.geodesics)
        terms.push_back(coefficient(m, g, n, k_coeff, opt) * cpow_pos(std::cosh(g.L), rho0 - k_weight));
    return pairwise_sum(terms);
}

std::vector<cplx> beta_coeffs(cplx k, int M) {
    if (M < 0) throw InputError("beta_coeffs: M must be >= 0");
    // h(t) = g(t)/g(0), g(t) = sum_m (-1)^m binom(1/2, m+1) t^m, g(0) = 1/2.
    std::vector<cplx> h(M + 1), lg(M + 1, 0.0), e(M + 1, 0.0);
    for (int i = 0; i <= M; ++i) h[i] = (i % 2 ? -1.0 : 1.0) * binom_general(0.5, i + 1) / 0.5;
    // log h: j lg_j = j h_j - sum_{i=1}^{j-1} i lg_i h_{j-i}.
    for (int j = 1; j <= M; ++j) {
        cplx s = double(j) * h[j];
        for (int i = 1; i < j; ++i) s -= double(i) * lg[i] * h[j - i];
        lg[j] = s / double(j);
    }
    // exp(k log h): j e_j = sum_{i=1}^{j} i k lg_i e_{j-i}.
    e[0] = 1.0;
    for (int j = 1; j <= M; ++j) {
        cplx s = 0;
        for (int i = 1; i <= j; ++i) s += double(i) * k * lg[i] * e[j - i];
        e[j] = s / double(j);
    }
    cplx scale = std::pow(cplx(2.0), -k);
    for (auto& x : e) x *= scale;
    return e;
}

cplx z_superpose(cplx k, int n, const SpectralModel& m, int M, const GeomOptions& opt) {
    require_half_plane(k, m.l, "z_superpose");
    double rho0 = rho0_of(m.l);
    auto beta = beta_coeffs(k - rho0, M);
    // Coefficients at k are computed once; only the cosh weights shift with m.
    std::vector<cplx> c;
    for (const auto& g : m.geodesics) c.push_back(coefficient(m, g, n, k, opt));
    std::vector<cplx> terms;
    for (int j = 0; j <= M; ++j) {
        std::vector<cplx> inner;
        for (size_t i = 0; i < m.geodesics.size(); ++i)
            inner.push_back(c[i] * cpow_pos(std::cosh(m.geodesics[i].L), rho0 - (k + 2.0 * j)));
        terms.push_back(beta[j] * pairwise_sum(inner));
    }
    return pairwise_sum(terms);
}

double jacobian_det(const GeodesicClassData& g, int l) {
    Mat h = holonomy_matrix(g, l);
    return ad_det_n(embed_m(l, h) * a_t(l, g.L));
}

SelbergPair selberg_pair(cplx k, const SpectralModel& m) {
    require_half_plane(k, m.l, "selberg_pair");
    double rho0 = rho0_of(m.l);
    SelbergPair out;
    std::vector<cplx> z1, ls;
    for (const auto& g : m.geodesics) {
        Mat h = holonomy_matrix(g, m.l);
        Mat ma = embed_m(m.l, h) * a_t(m.l, g.L);
        double det_inv = ad_det_n(ma);                  // det(1 - Ad(ma)^{-1}|n)
        double det = ad_det_n(group_inverse(ma));       // det(1 - Ad(ma)|n)
        z1.push_back(g.L0 * std::exp(-rho0 * g.L) / det_inv * std::exp((rho0 - k) * g.L));
        ls.push_back(2.0 * g.L0 * ((m.l - 1) % 2 ? -1.0 : 1.0) / det * std::exp((2 * rho0 - k) * g.L));
        if ((h - Mat::Identity(h.rows(), h.cols())).cwiseAbs().maxCoeff() > 0) out.trivial_holonomy = false;
    }
    out.z1 = pairwise_sum(z1);
    out.log_deriv = pairwise_sum(ls);
    out.ratio = out.z1 == 0.0 ? cplx(0.0) : out.log_deriv / out.z1;
    return out;
}

// ---- spectral side ----

double pole_distance(cplx k, int n, const SpectralModel& m) {
    double rho0 = rho0_of(m.l);
    double d = INFINITY;
    auto near = [&](cplx base) {
        // base - 2j, j >= 0
        double j = std::max(0.0, std::round((base.real() - k.real()) / 2));
        d = std::min(d, std::abs(k - (base - 2 * j)));
    };
    bool has_zero = false;
    for (const auto& e : m.eigen) {
        auto it = e.ps.find(n);
        if (it == e.ps.end() || it->second == 0.0) continue;
        near(rho0 + kI * e.lambda);
        near(rho0 - kI * e.lambda);
        if (std::abs(e.lambda) == 0.0) has_zero = true;
    }
    // B(k - rho0, rho0) poles at rho0 - j; at rho0 itself only with a lambda = 0 record.
    double j = std::max(has_zero ? 0.0 : 1.0, std::round(rho0 - k.real()));
    double loc = rho0 - j;
    bool cancelled = std::abs(loc - std::round(loc)) < 1e-12 && loc <= 0;  // Gamma(k) pole cancels
    if (!cancelled) d = std::min(d, std::abs(k - loc));
    return d;
}

cplx r_spec(cplx k, int n, const SpectralModel& m, const SpecOptions& opt, double* tail) {
    if (!opt.allow_near_pole && pole_distance(k, n, m) < 1e-6)
        throw PoleError("r_spec: k is within 1e-6 of a pole");
    double rho0 = rho0_of(m.l), omega = omega_sphere(m.l);
    auto terms = spec_terms(n, m);
    std::vector<cplx> kept;
    double omitted = 0;
    int principal_seen = 0;
    for (const auto& t : terms) {
        cplx v = beta_pair(k, t.lambda, rho0) * t.coef;
        if (t.principal && opt.jmax >= 0 && principal_seen++ >= opt.jmax) {
            omitted += std::abs(v);
            continue;
        }
        kept.push_back(v);
    }
    cplx pre = std::pow(cplx(2.0), k - 2.0) * beta_fn(k - rho0, rho0) * omega;
    if (tail) *tail = std::abs(pre) * omitted;
    return pre * pairwise_sum(kept);
}

cplx z_spec(cplx k, int n, const SpectralModel& m, int M, const SpecOptions& opt, double* error) {
    double rho0 = rho0_of(m.l);
    auto beta = beta_coeffs(k - rho0, M);
    std::vector<cplx> terms;
    double err = 0;
    for (int j = 0; j <= M; ++j) {
        double tail = 0;
        terms.push_back(beta[j] * r_spec(k + 2.0 * j, n, m, opt, &tail));
        err += std::abs(beta[j]) * tail;
    }
    if (error) *error = err + std::abs(terms.back());
    return pairwise_sum(terms);
}

NumericResidue residue_numeric(const std::function<cplx(cplx)>& f, cplx k0, double radius, int npoints,
                               int max_order) {
    if (!(radius > 0) || npoints < 8) throw InputError("residue_numeric: bad radius or npoints");
    auto moments = [&](int N) {
        std::vector<cplx> mom(max_order + 1, 0.0);
        for (int i = 0; i < N; ++i) {
            cplx w = radius * std::exp(kI * (2 * kPi * (i + 0.5) / N));
            cplx v = f(k0 + w) * w / double(N);
            cplx p = 1.0;
            for (int j = 0; j <= max_order; ++j) {
                mom[j] += v * p;
                p *= w;
            }
        }
        return mom;
    };
    auto a = moments(npoints), b = moments(2 * npoints);
    double scale = 0;
    for (int j = 0; j <= max_order; ++j) scale = std::max(scale, std::abs(b[j]) / std::pow(radius, j));
    for (int j = 0; j <= max_order; ++j)
        if (std::abs(a[j] - b[j]) > 1e-9 * std::max(1.0, scale) * std::pow(radius, j))
            throw ConvergenceError("residue_numeric: trapezoidal sums did not converge; reduce the radius");
    NumericResidue out;
    out.moments = b;
    out.residue = b[0];
    // Moment j is a_{-(j+1)}; the order is the last significant one.
    double tol = 1e-9 * std::max(1.0, scale);
    for (int j = 0; j <= max_order; ++j)
        if (std::abs(b[j]) > tol * std::pow(radius, j)) out.order = j + 1;
    return out;
}

std::vector<Pole> poles_and_residues(int n, const SpectralModel& m) {
    double rho0 = rho0_of(m.l), omega = omega_sphere(m.l);
    auto terms = spec_terms(n, m);
    std::vector<Pole> poles;
    auto add = [&](const Pole& p) {
        for (auto& q : poles)
            if (std::abs(q.location - p.location) < 1e-9) {
                q.order = std::max(q.order, p.order);
                q.residue += p.residue;
                q.residue_printed += p.residue_printed;
                q.leading = q.order == p.order ? q.leading + p.leading : q.leading;
                q.numeric = q.numeric || p.numeric;
                return;
            }
        poles.push_back(p);
    };
    auto in_strip = [&](cplx k) { return std::abs(k.real() - rho0) < 0.5 - 1e-12; };
    bool fallback = false;
    std::vector<cplx> fallback_locs;
    for (const auto& t : terms) {
        if (std::abs(t.lambda) == 0.0) {
            // Order 2 at rho0: 2^{k-2} B(k-rho0,rho0) B((k-rho0)/2,(k-rho0)/2) ~ 2^{rho0}/w^2 + residue/w.
            Pole p;
            p.location = rho0;
            p.order = 2;
            p.leading = std::pow(2.0, rho0) * omega * t.coef;
            p.residue = std::pow(2.0, rho0) * (std::log(2.0) - kEulerGamma - digamma(rho0).real()) * omega * t.coef;
            p.residue_printed = (std::log(2.0) * std::pow(2.0, rho0 - 3) - std::pow(2.0, rho0 - 1) * kEulerGamma) * omega * t.coef;
            add(p);
            continue;
        }
        for (double sign : {1.0, -1.0}) {
            cplx il = sign * kI * t.lambda;  // pole from (k - il - rho0)/2 = -j
            for (int j = 0; j <= 3 + int(rho0); ++j) {
                cplx k0 = rho0 + il - 2.0 * j;
                if (!in_strip(k0)) continue;
                cplx v0 = il - double(j);
                Pole p;
                p.location = k0;
                try {
                    if (is_gamma_pole(v0) || is_gamma_pole(k0)) throw PoleError("coincident poles");
                    // 2^{k0-2} Gamma(rho0)/Gamma(k0) omega coef 2 (-1)^j / j! Gamma(v0)
                    double sj = (j % 2 ? -1.0 : 1.0) / std::tgamma(j + 1.0);
                    p.residue = std::pow(cplx(2.0), k0 - 2.0) * std::exp(lgamma(rho0) - lgamma(k0) + lgamma(v0)) * omega *
                                t.coef * 2.0 * sj;
                    p.leading = p.residue;
                    if (j == 0) {
                        // Printed (I)/(II): 2^{k0-1} omega coef' with the Beta residue taken as 1.
                        p.residue_printed = 0.5 * p.residue;
                    }
                } catch (const PoleError&) {
                    fallback = true;
                    fallback_locs.push_back(k0);
                    continue;
                }
                add(p);
            }
        }
    }
    if (fallback) {
        SpecOptions opt;
        opt.allow_near_pole = true;
        for (cplx k0 : fallback_locs) {
            bool done = false;
            for (auto& q : poles) done = done || std::abs(q.location - k0) < 1e-9;
            if (done) continue;
            auto nr = residue_numeric([&](cplx k) { return r_spec(k, n, m, opt); }, k0, 0.05, 256);
            if (nr.order == 0) continue;
            Pole p;
            p.location = k0;
            p.order = nr.order;
            p.residue = nr.residue;
            p.leading = nr.moments[nr.order - 1];
            p.numeric = true;
            poles.push_back(p);
        }
    }
    std::sort(poles.begin(), poles.end(), [](const Pole& a, const Pole& b) {
        return a.location.real() != b.location.real() ? a.location.real() < b.location.real()
                                                      : a.location.imag() < b.location.imag();
    });
    return poles;
}

cplx normalize(cplx value, cplx k, cplx r_n, int l) {
    if (is_gamma_pole(k)) throw PoleError("normalize: the normalizer vanishes at non-positive integers");
    return value / (omega_sphere(l) * I_of_z(r_n, l, k));
}

cplx discrepancy_bracket(cplx k, cplx r_n, double L, bool printed) {
    auto P = ode_params_from_eigen(2, r_n);
    double ch = std::cosh(L);
    double z = ch / (ch - 1.0);
    cplx e = printed ? k - 1.0 : k - 0.5;
    return 1.0 - cpow_pos(z, e) * hyp2f1(k - P.a, k - P.b, k, 1.0 - z);
}

cplx discrepancy_l2(cplx k, const SpectralModel& m, int n, bool printed) {
    if (m.l != 2) throw InputError("discrepancy_l2: requires l = 2");
    if (!(k.real() > 0)) throw DomainError("discrepancy_l2: requires Re k > 0");
    cplx r = m.eigen_at(n).r;
    std::vector<cplx> terms;
    for (const auto& g : m.geodesics) {
        cplx ip = int_phi_of(g, n);
        if (ip == 0.0) continue;
        terms.push_back(std::exp(-(k - 0.5) * g.L) / (2 * std::sinh(g.L / 2)) * ip * discrepancy_bracket(k, r, g.L, printed));
    }
    return pairwise_sum(terms);
}

cplx extend_sigma(const std::map<int, cplx>& weights, cplx k, const SpectralModel& m, int M, const SpecOptions& opt) {
    std::vector<cplx> terms;
    for (const auto& [n, w] : weights) {
        if (n < 0 || n >= int(m.eigen.size())) throw InputError("extend_sigma: unknown component index " + std::to_string(n));
        if (w == 0.0) continue;
        terms.push_back(w * z_spec(k, n, m, M, opt));
    }
    return pairwise_sum(terms);
}

}  // namespace hz
