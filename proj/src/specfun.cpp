#include "hypzeta/specfun.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "hypzeta/errors.hpp"

namespace hz {

namespace {

// Lanczos approximation, g = 607/128, 15 terms (Godfrey's coefficients).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4, .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,  -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4, .36899182659531622704e-5};

const double kHalfLog2Pi = 0.5 * std::log(2.0 * kPi);

cplx lgamma_right(cplx z) {
    z -= 1.0;
    cplx x = kLanczos[0];
    for (int i = 1; i < 15; ++i) x += kLanczos[i] / (z + double(i));
    cplx t = z + kLanczosG + 0.5;
    return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

// log sin(pi z) without overflow for large |Im z|.
cplx log_sin_pi(cplx z) {
    const cplx I(0, 1);
    if (z.imag() > 8.0) {
        return -I * kPi * z + std::log((std::exp(2.0 * I * kPi * z) - 1.0) / (2.0 * I));
    }
    if (z.imag() < -8.0) {
        return I * kPi * z + std::log((1.0 - std::exp(-2.0 * I * kPi * z)) / (2.0 * I));
    }
    // Reduce by the nearest integer first so that sin is accurate near its zeros.
    double n = std::round(z.real());
    cplx v = std::sin(kPi * (z - n));
    if (std::fmod(std::abs(n), 2.0) == 1.0) v = -v;
    return std::log(v);
}

cplx cot_pi(cplx z) {
    if (std::abs(z.imag()) > 20.0) return cplx(0, z.imag() > 0 ? -1.0 : 1.0);
    cplx w = z - std::round(z.real());
    return std::cos(kPi * w) / std::sin(kPi * w);
}

std::string fmt(cplx z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

thread_local long g_degenerate = 0;

bool near_integer(cplx z, double tol) {
    return std::abs(z.imag()) < tol && std::abs(z.real() - std::round(z.real())) < tol;
}

// prod Gamma(num) / prod Gamma(den) * exp(extra_log); zero if any den is a pole.
template <size_t N, size_t D>
cplx gamma_ratio(const std::array<cplx, N>& num, const std::array<cplx, D>& den, cplx extra_log) {
    for (auto d : den)
        if (is_gamma_pole(d)) return 0.0;
    cplx s = extra_log;
    for (auto n : num) s += lgamma(n);
    for (auto d : den) s -= lgamma(d);
    return std::exp(s);
}

}  // namespace

bool is_gamma_pole(cplx z, double tol) {
    if (std::abs(z.imag()) > tol) return false;
    double n = std::round(z.real());
    return n <= 0.0 && std::abs(z.real() - n) <= tol;
}

cplx lgamma(cplx z) {
    if (is_gamma_pole(z)) throw PoleError("gamma: pole at " + fmt(z));
    if (z.real() < 0.5) {
        return std::log(kPi) - log_sin_pi(z) - lgamma_right(1.0 - z);
    }
    return lgamma_right(z);
}

cplx gamma(cplx z) {
    cplx v = std::exp(lgamma(z));
    if (z.imag() == 0.0) v.imag(0.0);
    return v;
}

cplx rgamma(cplx z) {
    if (is_gamma_pole(z)) return 0.0;
    cplx v = std::exp(-lgamma(z));
    if (z.imag() == 0.0) v.imag(0.0);
    return v;
}

cplx digamma(cplx z) {
    if (is_gamma_pole(z)) throw PoleError("digamma: pole at " + fmt(z));
    if (z.real() < 0.5) {
        // psi(z) = psi(1-z) - pi cot(pi z)
        return digamma(1.0 - z) - kPi * cot_pi(z);
    }
    cplx acc = 0.0;
    while (std::abs(z) < 12.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    // Asymptotic series with Bernoulli numbers B_2 .. B_16.
    static constexpr std::array<double, 8> b2n = {1.0 / 6,   -1.0 / 30, 1.0 / 42,    -1.0 / 30,
                                                  5.0 / 66,  -691.0 / 2730, 7.0 / 6, -3617.0 / 510};
    cplx z2 = 1.0 / (z * z);
    cplx zp = z2;
    cplx s = std::log(z) - 0.5 / z;
    for (int n = 1; n <= 8; ++n) {
        s -= b2n[n - 1] / (2.0 * n) * zp;
        zp *= z2;
    }
    return acc + s;
}

cplx beta_fn(cplx x, cplx y) {
    bool px = is_gamma_pole(x), py = is_gamma_pole(y), pxy = is_gamma_pole(x + y);
    if (px || py) throw PoleError("beta: pole at (" + fmt(x) + ", " + fmt(y) + ")");
    if (pxy) return 0.0;
    cplx v = std::exp(lgamma(x) + lgamma(y) - lgamma(x + y));
    if (x.imag() == 0.0 && y.imag() == 0.0) v.imag(0.0);
    return v;
}

cplx pochhammer(cplx a, int n) {
    cplx p = 1.0;
    for (int i = 0; i < n; ++i) p *= a + double(i);
    return p;
}

cplx binom_general(cplx k, int l) {
    cplx p = 1.0;
    for (int i = 0; i < l; ++i) p *= (k - double(i)) / double(i + 1);
    return p;
}

cplx hyp2f1_series(cplx a, cplx b, cplx c, cplx z, int max_terms) {
    cplx term = 1.0, sum = 1.0;
    int small = 0;
    for (int n = 0; n < max_terms; ++n) {
        term *= (a + double(n)) * (b + double(n)) / ((c + double(n)) * double(n + 1)) * z;
        sum += term;
        if (term == 0.0) return sum;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) {
            if (++small >= 2) return sum;
        } else {
            small = 0;
        }
    }
    throw ConvergenceError("hyp2f1: series did not converge at z=" + fmt(z));
}

cplx hyp2f1_connection(cplx a, cplx b, cplx c, cplx z) {
    if (z.imag() != 0.0 || z.real() >= 0.0)
        throw DomainError("hyp2f1_connection: requires real z < 0");
    if (near_integer(b - a, 1e-9)) {
        // Symmetric perturbation of b with one Richardson step; the two
        // connection terms blow up like 1/eps, so eps cannot be tiny.
        ++g_degenerate;
        const double eps = 1e-4;
        auto avg = [&](double e) {
            return 0.5 * (hyp2f1_connection(a, b + e, c, z) + hyp2f1_connection(a, b - e, c, z));
        };
        return (4.0 * avg(eps) - avg(2 * eps)) / 3.0;
    }
    cplx lmz = std::log(-z);
    cplx w = 1.0 / z;
    cplx t1 = gamma_ratio<2, 2>({c, b - a}, {b, c - a}, -a * lmz);
    cplx t2 = gamma_ratio<2, 2>({c, a - b}, {a, c - b}, -b * lmz);
    cplx s = 0.0;
    // For z in [-2, -0.8] the argument 1/z leaves the unit disc; hyp2f1 then
    // uses Pfaff, which never routes back here.
    if (t1 != 0.0) s += t1 * hyp2f1(a, a - c + 1.0, a - b + 1.0, w);
    if (t2 != 0.0) s += t2 * hyp2f1(b, b - c + 1.0, b - a + 1.0, w);
    return s;
}

long hyp2f1_degenerate_count() { return g_degenerate; }

cplx hyp2f1(cplx a, cplx b, cplx c, cplx z) {
    if (is_gamma_pole(c)) throw DomainError("hyp2f1: c is a non-positive integer: " + fmt(c));
    if (z == 0.0) return 1.0;
    double az = std::abs(z);
    if (az <= 0.8) return hyp2f1_series(a, b, c, z);
    if (z.imag() == 0.0) {
        double x = z.real();
        if (x >= 1.0) throw DomainError("hyp2f1: z >= 1 is outside the supported region");
        if (x > 0.8) {
            // Pfaff: maps (0.8, 1) to (-inf, -4).
            return std::pow(1.0 - x, -a) * hyp2f1_connection(a, c - b, c, x / (x - 1.0));
        }
        if (x > -2.0) {
            // Pfaff: maps (-2, -0.8) to (0.44, 0.67).
            return std::pow(1.0 - x, -a) * hyp2f1_series(a, c - b, c, x / (x - 1.0));
        }
        return hyp2f1_connection(a, b, c, z);
    }
    if (az < 1.0) return hyp2f1_series(a, b, c, z);
    throw DomainError("hyp2f1: complex z with |z| >= 1 is not supported: " + fmt(z));
}

cplx hyp3f2(cplx a1, cplx a2, cplx a3, cplx b1, cplx b2, cplx z, double* tail_estimate) {
    if (is_gamma_pole(b1) || is_gamma_pole(b2))
        throw DomainError("hyp3f2: lower parameter is a non-positive integer");
    if (std::abs(z) >= 1.0) throw ConvergenceError("hyp3f2: series diverges for |z| >= 1");
    cplx term = 1.0, sum = 1.0;
    double q = std::abs(z);
    for (int n = 0; n < 2000000; ++n) {
        cplx ratio = (a1 + double(n)) * (a2 + double(n)) * (a3 + double(n)) /
                     ((b1 + double(n)) * (b2 + double(n)) * double(n + 1)) * z;
        term *= ratio;
        sum += term;
        if (term == 0.0) {
            if (tail_estimate) *tail_estimate = 0.0;
            return sum;
        }
        // Once the term ratio is below 1, the tail is bounded by a geometric series.
        double r = std::abs(ratio);
        if (n > 4 && r < 1.0) {
            double rr = std::max(r, q);
            double tail = std::abs(term) * rr / (1.0 - rr);
            if (tail <= 1e-16 * std::abs(sum) || tail <= 1e-300) {
                if (tail_estimate) *tail_estimate = tail;
                return sum;
            }
        }
    }
    throw ConvergenceError("hyp3f2: series did not converge");
}

}  // namespace hz
