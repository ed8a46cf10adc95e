#include "hypzeta/liealg.hpp"

#include <cmath>
#include <string>
#include <unsupported/Eigen/MatrixFunctions>

#include "hypzeta/errors.hpp"

namespace hz {

namespace {

int dim_of(const Mat& X) { return int(X.rows()) - 1; }

// Elementary basis of so(1,l): boosts E_0i + E_i0, rotations E_ij - E_ji.
std::vector<Mat> elementary_basis(int l) {
    std::vector<Mat> out;
    for (int i = 1; i <= l; ++i) out.push_back(unit(l, 0, i) + unit(l, i, 0));
    for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j) out.push_back(unit(l, i, j) - unit(l, j, i));
    return out;
}

Vec elementary_coords(const Mat& Y) {
    int l = dim_of(Y);
    if (l < 1) throw InputError("elementary_coords: matrix must be at least 2x2");
    Vec c(Eigen::Index(l) * (l + 1) / 2);
    int k = 0;
    for (int i = 1; i <= l; ++i) c(k++) = Y(0, i);
    for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j) c(k++) = Y(i, j);
    return c;
}

Mat ad_matrix(const Mat& X) {
    auto basis = elementary_basis(dim_of(X));
    Mat A(basis.size(), basis.size());
    for (size_t j = 0; j < basis.size(); ++j) A.col(j) = elementary_coords(bracket(X, basis[j]));
    return A;
}

}  // namespace

Mat unit(int l, int i, int j) {
    Mat E = Mat::Zero(l + 1, l + 1);
    E(i, j) = 1.0;
    return E;
}

Mat x_u(int l, const Vec& u) {
    if (u.size() != l - 1) throw InputError("x_u: vector length must be l-1");
    Mat X = Mat::Zero(l + 1, l + 1);
    for (int i = 1; i < l; ++i) {
        X(0, i) = X(i, 0) = u(i - 1);
        X(i, l) = -u(i - 1);
        X(l, i) = u(i - 1);
    }
    return X;
}

Mat theta(const Mat& X) {
    Mat Y = X;
    Y.row(0) *= -1.0;
    Y.col(0) *= -1.0;
    return Y;
}

Mat bracket(const Mat& A, const Mat& B) { return A * B - B * A; }

bool in_so1l(const Mat& X, double tol) {
    Mat J = Mat::Identity(X.rows(), X.cols());
    J.diagonal().tail(X.rows() - 1).setConstant(-1.0);
    return (X.transpose() * J + J * X).cwiseAbs().maxCoeff() <= tol;
}

std::vector<std::pair<Mat, Mat>> StructuredBasis::dual_pairs() const {
    std::vector<std::pair<Mat, Mat>> p;
    p.emplace_back(H1, H1);
    for (const auto& m : M) p.emplace_back(m, -m);
    for (size_t i = 0; i < X.size(); ++i) {
        p.emplace_back(X[i], Z[i]);
        p.emplace_back(Z[i], X[i]);
    }
    return p;
}

std::vector<Mat> StructuredBasis::all() const {
    std::vector<Mat> v{H1};
    v.insert(v.end(), M.begin(), M.end());
    v.insert(v.end(), X.begin(), X.end());
    v.insert(v.end(), Z.begin(), Z.end());
    return v;
}

StructuredBasis build_basis(int l) {
    if (l < 2) throw InputError("build_basis: l must be >= 2, got " + std::to_string(l));
    StructuredBasis b;
    b.l = l;
    b.rho0 = 0.5 * (l - 1);
    const double n2 = std::sqrt(2.0 * (l - 1));
    b.H0 = unit(l, 0, l) + unit(l, l, 0);
    b.H1 = b.H0 / n2;
    b.Halpha = b.H0 / (2.0 * (l - 1));
    b.Hrho = b.H0 / 4.0;
    for (int i = 1; i <= l - 1; ++i)
        for (int j = i + 1; j <= l - 1; ++j) b.M.push_back((unit(l, i, j) - unit(l, j, i)) / n2);
    for (int i = 0; i < l - 1; ++i) {
        Vec e = Vec::Zero(l - 1);
        e(i) = 1.0;
        Mat Xi = x_u(l, e) / (2.0 * std::sqrt(double(l - 1)));
        b.X.push_back(Xi);
        b.Z.push_back(-theta(Xi));
        b.W.push_back(Xi + theta(Xi));
    }
    b.ZY.resize(l - 1);
    // Z_{Y_j} in m solving [Z, X_1] = X_j, by least squares over the M basis.
    for (int j = 1; j < l - 1; ++j) {
        Mat A((l + 1) * (l + 1), b.M.size());
        for (size_t k = 0; k < b.M.size(); ++k) {
            Mat c = bracket(b.M[k], b.X[0]);
            A.col(k) = Eigen::Map<const Vec>(c.data(), c.size());
        }
        Vec rhs = Eigen::Map<const Vec>(b.X[j].data(), b.X[j].size());
        Vec coef = A.colPivHouseholderQr().solve(rhs);
        b.ZY[j] = Mat::Zero(l + 1, l + 1);
        for (size_t k = 0; k < b.M.size(); ++k) b.ZY[j] += coef(k) * b.M[k];
    }
    return b;
}

double killing(const Mat& X, const Mat& Y) {
    if (X.rows() != Y.rows() || X.cols() != Y.cols() || X.rows() != X.cols())
        throw InputError("killing: dimension mismatch");
    return (dim_of(X) - 1) * (X * Y).trace();
}

double killing_theta(const Mat& X, const Mat& Y) { return -killing(X, theta(Y)); }

double killing_ad(const Mat& X, const Mat& Y) {
    if (X.rows() != Y.rows()) throw InputError("killing_ad: dimension mismatch");
    return (ad_matrix(X) * ad_matrix(Y)).trace();
}

Mat casimir_dual(const StructuredBasis& b) {
    Mat O = Mat::Zero(b.l + 1, b.l + 1);
    for (const auto& [q, qd] : b.dual_pairs()) O += q * qd;
    return O;
}

Mat casimir_printed(const StructuredBasis& b) {
    Mat O = b.H1 * b.H1 - 2.0 * b.Hrho;
    for (const auto& m : b.M) O -= m * m;
    for (size_t i = 0; i < b.X.size(); ++i) O += 2.0 * b.X[i] * b.X[i] - 2.0 * b.X[i] * b.W[i];
    return O;
}

Mat casimir_symmetrized(const StructuredBasis& b) {
    Mat O = b.H1 * b.H1;
    for (const auto& m : b.M) O -= m * m;
    for (size_t i = 0; i < b.X.size(); ++i)
        O += 2.0 * b.X[i] * b.X[i] - b.X[i] * b.W[i] - b.W[i] * b.X[i];
    return O;
}

CasimirReport casimir_report(int l) {
    auto b = build_basis(l);
    Mat O = casimir_dual(b);
    CasimirReport r;
    r.residual_printed = (O - casimir_printed(b)).cwiseAbs().maxCoeff();
    r.residual_symmetrized = (O - casimir_symmetrized(b)).cwiseAbs().maxCoeff();
    for (const auto& q : b.all()) r.centrality = std::max(r.centrality, bracket(O, q).cwiseAbs().maxCoeff());
    return r;
}

double casimir_check(int l) { return casimir_report(l).residual_printed; }

double sl2_check() {
    auto b = build_basis(2);
    Mat H = 2.0 * b.H0;
    Vec e(1);
    e << 1.0;
    Mat X = x_u(2, e);
    Mat W = X + theta(X);
    Mat lhs = 8.0 * casimir_dual(b);
    Mat rhs = H * H + 4.0 * X * X - 4.0 * X * W - 2.0 * H;
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

Mat polar_form_rhs(const StructuredBasis& b, double r, double coeff_w) {
    if (!(r > 0)) throw InputError("polar form: slice point r must be positive");
    const double f = 1.0 / r;
    Mat g = (r * b.X[0]).exp();
    Mat gi = (-r * b.X[0]).exp();
    Mat O = b.H1 * b.H1 - 2.0 * b.Hrho + 2.0 * b.X[0] * b.X[0] + 2.0 * (b.l - 2) * f * b.X[0] -
            2.0 * b.X[0] * b.W[0];
    for (const auto& m : b.M) O -= m * m;
    for (int j = 1; j < b.l - 1; ++j) {
        const Mat& Z = b.ZY[j];
        Mat Zc = gi * Z * g;  // Ad(exp(-X')) Z
        O += 2.0 * f * f * (Zc * Zc - 2.0 * Zc * Z + Z * Z);
        O += coeff_w * (Zc - Z) * b.W[j];
    }
    return O;
}

PolarReport polar_form_report(int l, double r) {
    auto b = build_basis(l);
    Mat O = casimir_dual(b);
    PolarReport p;
    p.residual = (O - polar_form_rhs(b, r, -2.0 / r)).cwiseAbs().maxCoeff();
    p.residual_printed = (O - polar_form_rhs(b, r, -r)).cwiseAbs().maxCoeff();
    return p;
}

double polar_form_check(int l, double r) { return polar_form_report(l, r).residual; }

double ad_det_n(const Mat& g) {
    int l = dim_of(g);
    Mat gi = g.inverse();
    Mat A(l - 1, l - 1);
    for (int i = 0; i < l - 1; ++i) {
        Vec e = Vec::Zero(l - 1);
        e(i) = 1.0;
        Mat Y = gi * x_u(l, e) * g;
        for (int k = 0; k < l - 1; ++k) A(k, i) = Y(0, k + 1);
    }
    return (Mat::Identity(l - 1, l - 1) - A).determinant();
}

}  // namespace hz
