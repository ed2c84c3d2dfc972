#include "gyrobn/grassmann_ops.hpp"

#include "gyrobn/tolerances.hpp"

#include <cmath>
#include <stdexcept>

namespace gyrobn::grassmann {

namespace {

// arcsin(s)/s with the series limit for singular values of U1 near 1.
double asinc(double s) {
    if (s < tol::arcsin_series) return 1.0;
    return std::asin(std::min(s, 1.0)) / s;
}

} // namespace

Matrix identity_onb(Eigen::Index n, Eigen::Index p) {
    Matrix e = Matrix::Zero(n, p);
    e.topRows(p).setIdentity();
    return e;
}

Matrix identity_pp(Eigen::Index n, Eigen::Index p) {
    Matrix e = Matrix::Zero(n, n);
    e.topLeftCorner(p, p).setIdentity();
    return e;
}

bool is_onb(const Matrix& u, double tolerance) {
    if (!u.allFinite() || u.rows() < u.cols()) return false;
    const Matrix gram = u.transpose() * u;
    return (gram - Matrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff() <= tolerance;
}

bool is_projector(const Matrix& pmat, Eigen::Index p, double tolerance) {
    if (!pmat.allFinite() || pmat.rows() != pmat.cols()) return false;
    if ((pmat - pmat.transpose()).cwiseAbs().maxCoeff() > tolerance) return false;
    if ((pmat * pmat - pmat).cwiseAbs().maxCoeff() > tolerance) return false;
    return std::abs(pmat.trace() - static_cast<double>(p)) <= std::sqrt(tolerance);
}

Matrix reorthonormalize(const Matrix& u) {
    Eigen::HouseholderQR<Matrix> qr(u);
    Matrix q = qr.householderQ() * Matrix::Identity(u.rows(), u.cols());
    const Matrix r = qr.matrixQR().topRows(u.cols()).triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < u.cols(); ++j)
        if (r(j, j) < 0.0) q.col(j) = -q.col(j);
    return q;
}

Matrix pi(const Matrix& u) { return u * u.transpose(); }

Matrix pi_inverse(const Matrix& pmat, Eigen::Index p) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(linalg::symmetrize(pmat));
    const Eigen::Index n = pmat.rows();
    if (eig.eigenvalues()(n - p) < 0.5)
        throw std::domain_error("pi_inverse: projector is rank-deficient");
    Matrix u(n, p);
    for (Eigen::Index j = 0; j < p; ++j) {
        // Eigen sorts ascending; take the top-p in descending order.
        Vector col = eig.eigenvectors().col(n - 1 - j);
        for (Eigen::Index i = 0; i < n; ++i) {
            if (col[i] != 0.0) {
                if (col[i] < 0.0) col = -col;
                break;
            }
        }
        u.col(j) = col;
    }
    return u;
}

Matrix fast_bracket(const Matrix& u) {
    const Eigen::Index n = u.rows();
    const Eigen::Index p = u.cols();
    const Matrix u1t = u.topRows(p).transpose();
    const auto svd = linalg::svd(u1t, linalg::SvdOrder::ascending);
    Vector factors(p);
    for (Eigen::Index i = 0; i < p; ++i) {
        const double s = std::min(svd.singulars[i], 1.0);
        factors[i] = asinc(std::sqrt(std::max(1.0 - s * s, 0.0)));
    }
    const Matrix u2t = u.bottomRows(n - p) * svd.left * factors.asDiagonal() * svd.right.transpose();
    return bracket_from_block(u2t, n);
}

Matrix bracket_from_block(const Matrix& bottom, Eigen::Index n) {
    const Eigen::Index p = bottom.cols();
    Matrix omega = Matrix::Zero(n, n);
    omega.bottomLeftCorner(n - p, p) = bottom;
    omega.topRightCorner(p, n - p) = -bottom.transpose();
    return omega;
}

Matrix onb_log(const Matrix& u, const Matrix& y) {
    const Eigen::Index p = u.cols();
    const auto svd = linalg::svd(y.transpose() * u, linalg::SvdOrder::ascending);
    Vector factors(p);
    for (Eigen::Index i = 0; i < p; ++i) {
        const double s = std::min(svd.singulars[i], 1.0);
        factors[i] = asinc(std::sqrt(std::max(1.0 - s * s, 0.0)));
    }
    const Matrix projected = y - u * (u.transpose() * y);
    return projected * svd.left * factors.asDiagonal() * svd.right.transpose();
}

Matrix onb_log_direct(const Matrix& u, const Matrix& y) {
    const Matrix uty = u.transpose() * y;
    const Matrix m = (y - u * uty) * uty.inverse();
    const auto svd = linalg::svd(m, linalg::SvdOrder::descending);
    const Vector angles = svd.singulars.array().atan();
    return svd.left * angles.asDiagonal() * svd.right.transpose();
}

Matrix direct_bracket(const Matrix& u) {
    const Eigen::Index n = u.rows();
    const Eigen::Index p = u.cols();
    const Matrix e = identity_onb(n, p);
    const Matrix delta = onb_log_direct(e, u);
    const Matrix pp_log = delta * e.transpose() + e * delta.transpose();
    const Matrix e_pp = identity_pp(n, p);
    return pp_log * e_pp - e_pp * pp_log;
}

Matrix onb_exp(const Matrix& u, const Matrix& delta) {
    const double horiz = (u.transpose() * delta).cwiseAbs().maxCoeff();
    if (horiz > tol::membership * std::max(1.0, delta.cwiseAbs().maxCoeff()))
        throw std::invalid_argument("onb_exp: tangent is not horizontal (U^T Delta != 0)");
    const auto svd = linalg::svd(delta, linalg::SvdOrder::descending);
    const Vector cos = svd.singulars.array().cos();
    const Vector sin = svd.singulars.array().sin();
    const Matrix result = u * svd.right * cos.asDiagonal() * svd.right.transpose() +
                          svd.left * sin.asDiagonal() * svd.right.transpose();
    return reorthonormalize(result);
}

Matrix oplus(const Matrix& u, const Matrix& v) {
    return reorthonormalize(linalg::mexp_skew(fast_bracket(u)) * v);
}

Matrix ominus(const Matrix& u) {
    return reorthonormalize(linalg::mexp_skew(-fast_bracket(u)) * identity_onb(u.rows(), u.cols()));
}

Matrix odot(double t, const Matrix& u) {
    return reorthonormalize(linalg::mexp_skew(t * fast_bracket(u)) * identity_onb(u.rows(), u.cols()));
}

double distance(const Matrix& u, const Matrix& v) {
    // Principal angles from both cos (sigma of U^T V) and sin
    // (sigma of (I - U U^T) V) so small angles do not drown in the
    // acos-near-1 cancellation. Descending cos pairs with ascending sin.
    const Matrix utv = u.transpose() * v;
    const auto cos_svd = linalg::svd(utv, linalg::SvdOrder::descending);
    const auto sin_svd = linalg::svd(v - u * utv, linalg::SvdOrder::ascending);
    double sum = 0.0;
    for (Eigen::Index i = 0; i < cos_svd.singulars.size(); ++i) {
        const double c = std::min(std::max(cos_svd.singulars[i], -1.0), 1.0);
        const double s = std::min(sin_svd.singulars[i], 1.0);
        const double theta = c * c >= 0.5 ? std::asin(s) : std::acos(c);
        sum += theta * theta;
    }
    return std::sqrt(sum);
}

} // namespace gyrobn::grassmann
