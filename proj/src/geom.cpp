#include "hypzeta/geom.hpp"

#include <cmath>

#include "hypzeta/errors.hpp"

namespace hz {

namespace {

Mat jprime(int n) {
    Mat J = -Mat::Identity(n, n);
    J(0, 0) = 1.0;
    return J;
}

}  // namespace

Mat a_t(int l, double t) {
    Mat g = Mat::Identity(l + 1, l + 1);
    g(0, 0) = g(l, l) = std::cosh(t);
    g(0, l) = g(l, 0) = std::sinh(t);
    return g;
}

Mat n_u(int l, const Vec& u) {
    if (u.size() != l - 1) throw InputError("n_u: vector length must be l-1");
    double h = 0.5 * u.squaredNorm();
    Mat g = Mat::Identity(l + 1, l + 1);
    g(0, 0) = 1 + h;
    g(0, l) = -h;
    g(l, 0) = h;
    g(l, l) = 1 - h;
    for (int i = 1; i < l; ++i) {
        double v = u(i - 1);
        g(0, i) = v;
        g(i, 0) = v;
        g(i, l) = -v;
        g(l, i) = v;
    }
    return g;
}

Mat embed_m(int l, const Mat& f) {
    if (f.rows() != l - 1 || f.cols() != l - 1) throw InputError("embed_m: f must be (l-1)x(l-1)");
    if (l > 1) {
        Mat I = Mat::Identity(l - 1, l - 1);
        if ((f.transpose() * f - I).cwiseAbs().maxCoeff() > 1e-10 || std::abs(f.determinant() - 1) > 1e-10)
            throw InputError("embed_m: f is not in SO(l-1)");
    }
    Mat g = Mat::Identity(l + 1, l + 1);
    g.block(1, 1, l - 1, l - 1) = f;
    return g;
}

Mat weyl_w(int l) {
    Mat g = Mat::Identity(l + 1, l + 1);
    g(l - 1, l - 1) = -1;
    g(l, l) = -1;
    return g;
}

bool is_group_element(const Mat& g, double tol) {
    if (g.rows() != g.cols() || g.rows() < 3) return false;
    Mat J = jprime(int(g.rows()));
    double s = (g.transpose() * J * g - J).cwiseAbs().maxCoeff();
    double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
    return s <= tol * scale * scale && std::abs(g.determinant() - 1) <= tol * std::pow(scale, g.rows()) &&
           g(0, 0) >= 1 - tol;
}

Mat group_inverse(const Mat& g) {
    Mat J = jprime(int(g.rows()));
    return J * g.transpose() * J;
}

Vec ball_action(const Mat& g, const Vec& y) {
    int l = int(g.rows()) - 1;
    if (y.size() != l) throw InputError("ball_action: point has wrong dimension");
    if (y.norm() >= 1.0) throw InputError("ball_action: point is not in the open unit ball");
    double a = g(0, 0);
    Vec b = g.row(0).tail(l).transpose();
    Vec c = g.col(0).tail(l);
    Mat d = g.bottomRightCorner(l, l);
    double den = b.dot(y) + a;
    if (std::abs(den) < 1e-14) throw NumericalError("ball_action: vanishing denominator");
    return (d * y + c) / den;
}

cplx f_k_eval(const Mat& g, cplx k) { return std::exp(-k * std::log(std::abs(g(0, 0)))); }

double iwasawa_height(const Mat& g) {
    int l = int(g.rows()) - 1;
    return std::log(std::abs(g(0, 0) + g(0, l)));
}

QuadratureResult spherical_phi_quad(cplx lambda, double t, int l, double tol) {
    if (l < 2) throw InputError("spherical_phi: l must be >= 2");
    const cplx I(0, 1);
    double rho0 = 0.5 * (l - 1);
    cplx e = I * lambda - rho0;
    double ch = std::cosh(t), sh = std::sinh(t);
    auto f = [&](double th) -> cplx {
        double base = ch + std::cos(th) * sh;
        return std::exp(e * std::log(base)) * std::pow(std::sin(th), l - 2);
    };
    auto q = integrate(f, 0.0, kPi, tol);
    double norm = std::sqrt(kPi) * std::exp(std::lgamma(0.5 * (l - 1)) - std::lgamma(0.5 * l));
    q.value /= norm;
    q.error_estimate /= norm;
    return q;
}

cplx spherical_phi(cplx lambda, double t, int l) {
    auto q = spherical_phi_quad(lambda, t, l);
    if (!(q.error_estimate <= 1e-8 * std::max(1.0, std::abs(q.value))))
        throw ConvergenceError("spherical_phi: quadrature error estimate " + std::to_string(q.error_estimate));
    return q.value;
}

cplx spherical_phi_mc(cplx lambda, double t, int l, long samples, std::mt19937_64& rng, double* std_error) {
    const cplx I(0, 1);
    double rho0 = 0.5 * (l - 1);
    cplx e = I * lambda - rho0;
    Mat at = a_t(l, t);
    Mat k = Mat::Identity(l + 1, l + 1);
    cplx sum = 0;
    double sq = 0;
    for (long s = 0; s < samples; ++s) {
        k.bottomRightCorner(l, l) = haar_sample_so(l, rng);
        cplx v = std::exp(e * iwasawa_height(at * k));
        sum += v;
        sq += std::norm(v);
    }
    cplx mean = sum / double(samples);
    if (std_error) *std_error = std::sqrt(std::max(0.0, sq / samples - std::norm(mean)) / samples);
    return mean;
}

Mat haar_sample_so(int n, std::mt19937_64& rng) {
    if (n < 1) throw InputError("haar_sample_so: n must be >= 1");
    if (n == 1) return Mat::Identity(1, 1);
    std::normal_distribution<double> nd;
    Mat A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = nd(rng);
    Eigen::HouseholderQR<Mat> qr(A);
    Mat Q = qr.householderQ();
    Mat R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i)
        if (R(i, i) < 0) Q.col(i) *= -1.0;
    if (Q.determinant() < 0) Q.col(0) *= -1.0;
    return Q;
}

}  // namespace hz
