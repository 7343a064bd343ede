#include "tsecon/linalg.hpp"

#include <string>

#include "tsecon/error.hpp"

namespace tsecon::linalg {

LeastSquares least_squares(const Eigen::MatrixXd& x, const Eigen::VectorXd& y) {
    const Eigen::Index n = x.rows();
    const Eigen::Index k = x.cols();
    if (y.size() != n) {
        throw LengthError("design has " + std::to_string(n) + " rows but response has " +
                          std::to_string(y.size()));
    }
    if (n <= k) {
        throw DofError("least squares needs more observations (" + std::to_string(n) +
                       ") than regressors (" + std::to_string(k) + ")");
    }

    Eigen::VectorXd norms = x.colwise().norm().transpose();
    for (Eigen::Index j = 0; j < k; ++j) {
        if (norms(j) == 0.0) {
            throw CollinearError("regressor column " + std::to_string(j) + " is identically zero");
        }
    }
    const Eigen::MatrixXd xs = x * norms.cwiseInverse().asDiagonal();

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(xs);
    qr.setThreshold(kRankTolerance);
    if (qr.rank() < k) {
        throw CollinearError("design matrix is rank deficient (rank " + std::to_string(qr.rank()) +
                             " of " + std::to_string(k) + ")");
    }

    LeastSquares out;
    out.n = n;
    out.k = k;
    out.coef = qr.solve(y).cwiseQuotient(norms);
    out.fitted = x * out.coef;
    out.resid = y - out.fitted;
    out.ssr = out.resid.squaredNorm();
    out.sigma2 = out.ssr / static_cast<double>(n - k);

    // (Xs'Xs)^-1 = P R^-1 R^-T P'
    const Eigen::MatrixXd r = qr.matrixR().topLeftCorner(k, k).triangularView<Eigen::Upper>();
    const Eigen::MatrixXd r_inv =
        r.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(k, k));
    const Eigen::MatrixXd perm = qr.colsPermutation();
    const Eigen::MatrixXd scaled_inv = perm * (r_inv * r_inv.transpose()) * perm.transpose();
    out.xtx_inv = norms.cwiseInverse().asDiagonal() * scaled_inv * norms.cwiseInverse().asDiagonal();
    out.se = (out.sigma2 * out.xtx_inv.diagonal().array()).sqrt().matrix();
    return out;
}

Eigen::MatrixXd residualize(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
    if (x.cols() == 0) {
        return y;
    }
    Eigen::MatrixXd out(y.rows(), y.cols());
    for (Eigen::Index j = 0; j < y.cols(); ++j) {
        out.col(j) = least_squares(x, y.col(j)).resid;
    }
    return out;
}

GeneralizedEigen generalized_symmetric_eigen(const Eigen::MatrixXd& a_in, const Eigen::MatrixXd& b_in) {
    // Equilibrate B to unit diagonal so the conditioning check is scale free.
    const Eigen::VectorXd diag = b_in.diagonal();
    if ((diag.array() <= 0.0).any()) {
        throw CollinearError("moment matrix has a non-positive diagonal");
    }
    const Eigen::VectorXd d = diag.cwiseSqrt().cwiseInverse();
    const Eigen::MatrixXd a = d.asDiagonal() * a_in * d.asDiagonal();
    const Eigen::MatrixXd b = d.asDiagonal() * b_in * d.asDiagonal();

    Eigen::LLT<Eigen::MatrixXd> llt(b);
    if (llt.info() != Eigen::Success) {
        throw CollinearError("moment matrix is not positive definite");
    }
    const Eigen::MatrixXd l = llt.matrixL();
    // Relative conditioning check; an exactly collinear pair can still pass LLT
    // with a pivot at rounding level.
    const double max_diag = l.diagonal().cwiseAbs().maxCoeff();
    if (l.diagonal().cwiseAbs().minCoeff() <= 1e-7 * max_diag) {
        throw CollinearError("moment matrix is numerically singular");
    }
    const Eigen::MatrixXd l_inv_a = l.triangularView<Eigen::Lower>().solve(a);
    Eigen::MatrixXd c = l.triangularView<Eigen::Lower>().solve(l_inv_a.transpose());
    c = 0.5 * (c + c.transpose()).eval();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(c);
    const Eigen::Index m = c.rows();
    GeneralizedEigen out;
    out.values.resize(m);
    out.vectors.resize(m, m);
    const Eigen::MatrixXd w = l.transpose().triangularView<Eigen::Upper>().solve(eig.eigenvectors());
    for (Eigen::Index i = 0; i < m; ++i) {
        // SelfAdjointEigenSolver sorts ascending.
        out.values(i) = eig.eigenvalues()(m - 1 - i);
        out.vectors.col(i) = d.asDiagonal() * w.col(m - 1 - i);
    }
    return out;
}

double centered_tss(const Eigen::VectorXd& y) {
    return (y.array() - y.mean()).square().sum();
}

}  // namespace tsecon::linalg
