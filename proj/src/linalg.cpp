#include "gyrobn/linalg.hpp"

#include "gyrobn/tolerances.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace gyrobn::linalg {

bool is_finite(const Matrix& m) { return m.allFinite(); }

bool is_symmetric(const Matrix& m, double tolerance) {
    if (m.rows() != m.cols()) return false;
    return (m - m.transpose()).cwiseAbs().maxCoeff() <= tolerance * std::max(1.0, m.cwiseAbs().maxCoeff());
}

bool is_skew(const Matrix& m, double tolerance) {
    if (m.rows() != m.cols()) return false;
    return (m + m.transpose()).cwiseAbs().maxCoeff() <= tolerance * std::max(1.0, m.cwiseAbs().maxCoeff());
}

SvdResult svd(const Matrix& m, SvdOrder order) {
    if (!is_finite(m)) throw std::invalid_argument("svd: non-finite input");

    Eigen::JacobiSVD<Matrix> solver(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Matrix u = solver.matrixU();
    Matrix v = solver.matrixV();
    Vector s = solver.singularValues(); // Eigen returns descending

    const auto k = s.size();
    if (order == SvdOrder::ascending) {
        u.rowwise().reverseInPlace();
        v.rowwise().reverseInPlace();
        s.reverseInPlace();
    }

    // Sign convention: first nonzero entry of each left column nonnegative.
    for (Eigen::Index j = 0; j < k; ++j) {
        for (Eigen::Index i = 0; i < u.rows(); ++i) {
            const double e = u(i, j);
            if (e != 0.0) {
                if (e < 0.0) {
                    u.col(j) = -u.col(j);
                    v.col(j) = -v.col(j);
                }
                break;
            }
        }
    }
    return {std::move(u), std::move(s), std::move(v)};
}

Matrix mexp_skew(const Matrix& omega) {
    if (!is_finite(omega)) throw std::invalid_argument("mexp_skew: non-finite input");
    if (!is_skew(omega, tol::skew_input)) throw std::invalid_argument("mexp_skew: input is not skew-symmetric");
    return omega.exp();
}

Matrix mexp_sym(const Matrix& m) {
    if (!is_symmetric(m, tol::skew_input)) throw std::invalid_argument("mexp_sym: input is not symmetric");
    Eigen::SelfAdjointEigenSolver<Matrix> eig(symmetrize(m));
    return eig.eigenvectors() * eig.eigenvalues().array().exp().matrix().asDiagonal() *
           eig.eigenvectors().transpose();
}

Matrix mlog_sym(const Matrix& m) {
    if (!is_symmetric(m, tol::skew_input)) throw std::invalid_argument("mlog_sym: input is not symmetric");
    Eigen::SelfAdjointEigenSolver<Matrix> eig(symmetrize(m));
    if (eig.eigenvalues().minCoeff() <= 0.0)
        throw std::domain_error("mlog_sym: input is not positive-definite");
    return eig.eigenvectors() * eig.eigenvalues().array().log().matrix().asDiagonal() *
           eig.eigenvectors().transpose();
}

Matrix cholesky(const Matrix& m) {
    if (!is_symmetric(m, tol::skew_input)) throw std::invalid_argument("cholesky: input is not symmetric");
    Eigen::LLT<Matrix> llt(symmetrize(m));
    if (llt.info() != Eigen::Success)
        throw std::domain_error("cholesky: input is not positive-definite");
    return llt.matrixL();
}

Matrix sym_power(const Matrix& m, double t) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(symmetrize(m));
    Vector lam = eig.eigenvalues().cwiseMax(tol::eig_floor);
    return eig.eigenvectors() * lam.array().pow(t).matrix().asDiagonal() *
           eig.eigenvectors().transpose();
}

} // namespace gyrobn::linalg
