#pragma once

#include <Eigen/Dense>

namespace tsecon::linalg {

/// Plain least-squares solution of y = X b + e with classical covariance.
struct LeastSquares {
    Eigen::VectorXd coef;
    Eigen::VectorXd se;
    Eigen::VectorXd fitted;
    Eigen::VectorXd resid;
    Eigen::MatrixXd xtx_inv;  // (X'X)^-1
    double ssr = 0.0;
    double sigma2 = 0.0;  // ssr / (n - k)
    Eigen::Index n = 0;
    Eigen::Index k = 0;
};

/// Relative pivot threshold below which a design is treated as rank deficient
/// (columns are scaled to unit norm before factorization).
inline constexpr double kRankTolerance = 1e-9;

/// Throws DofError when n <= k and CollinearError when X is rank deficient.
[[nodiscard]] LeastSquares least_squares(const Eigen::MatrixXd& x, const Eigen::VectorXd& y);

/// Residuals of each column of `y` after projection on `x`. An empty `x`
/// returns `y` unchanged.
[[nodiscard]] Eigen::MatrixXd residualize(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y);

/// Solution of the symmetric-definite problem A v = lambda B v.
struct GeneralizedEigen {
    Eigen::VectorXd values;   // descending
    Eigen::MatrixXd vectors;  // columns, B-orthonormal: V' B V = I
};

/// Reduces the problem to standard form with the Cholesky factor of B
/// (B = L L', C = L^-1 A L^-T). Throws CollinearError if B is not positive
/// definite.
[[nodiscard]] GeneralizedEigen generalized_symmetric_eigen(const Eigen::MatrixXd& a,
                                                           const Eigen::MatrixXd& b);

/// Centered total sum of squares.
[[nodiscard]] double centered_tss(const Eigen::VectorXd& y);

}  // namespace tsecon::linalg
