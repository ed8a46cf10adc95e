#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

namespace hz {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

// Matrix unit E_ij in gl(l+1).
Mat unit(int l, int i, int j);
// X_u in n, u of length l-1.
Mat x_u(int l, const Vec& u);
// Cartan involution, X -> J X J with J = diag(-1, 1, ..., 1).
Mat theta(const Mat& X);
Mat bracket(const Mat& A, const Mat& B);
// Checks X^T J' + J' X = 0, J' = diag(1, -1, ..., -1).
bool in_so1l(const Mat& X, double tol = 1e-12);

struct StructuredBasis {
    int l = 2;
    double rho0 = 0.5;
    Mat H0, H1, Hrho, Halpha;
    std::vector<Mat> M;  // orthonormal basis of m (B(M,M) = -1)
    std::vector<Mat> X;  // B_theta-orthonormal basis of n
    std::vector<Mat> Z;  // Z_i = -theta X_i
    std::vector<Mat> W;  // W_i = X_i + theta X_i
    // Z_{Y_j} in m for Y_j = X_j, j >= 1 (index 0 unused).
    std::vector<Mat> ZY;

    // (Q_i, Q^i) with B(Q_i, Q^j) = delta_ij.
    std::vector<std::pair<Mat, Mat>> dual_pairs() const;
    std::vector<Mat> all() const;
};

StructuredBasis build_basis(int l);

// (l-1) Tr(XY). Throws InputError on dimension mismatch.
double killing(const Mat& X, const Mat& Y);
double killing_theta(const Mat& X, const Mat& Y);
// Tr(ad X ad Y) with ad assembled on the elementary basis of so(1,l).
double killing_ad(const Mat& X, const Mat& Y);

// Omega as sum Q_i Q^i over the dual pairs.
Mat casimir_dual(const StructuredBasis& b);
// H1^2 - sum M^2 + 2 sum X^2 - 2 sum X W - 2 H_rho.
Mat casimir_printed(const StructuredBasis& b);
// H1^2 - sum M^2 + sum (2 X^2 - X W - W X).
Mat casimir_symmetrized(const StructuredBasis& b);

struct CasimirReport {
    double residual_printed = 0;
    double residual_symmetrized = 0;
    double centrality = 0;  // max ||[Omega, Q]|| over the basis
};
CasimirReport casimir_report(int l);
// Residual of the printed identity; must be < 1e-10.
double casimir_check(int l);
// l=2: max |8 Omega - (H^2 + 4X^2 - 4XW - 2H)| with H = 2H0, X = X_{e1}, all integer matrices.
double sl2_check();

// Right side of the polar decomposition of Omega at exp(rX1).
// coeff_w is the coefficient multiplying sum_j (Ad(exp(-X'))Z_{Y_j} - Z_{Y_j}) W_j.
Mat polar_form_rhs(const StructuredBasis& b, double r, double coeff_w);

struct PolarReport {
    double residual = 0;          // coefficient -2/r
    double residual_printed = 0;  // coefficient -r
};
PolarReport polar_form_report(int l, double r);
double polar_form_check(int l, double r);

// det(1 - Ad(g)^{-1}|n) for g in MA.
double ad_det_n(const Mat& g);

}  // namespace hz
