#include "gyrobn/spd_ops.hpp"

#include "gyrobn/tolerances.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace gyrobn::spd {

bool is_spd(const Matrix& p, double tolerance) {
    if (!p.allFinite() || !linalg::is_symmetric(p, tolerance)) return false;
    Eigen::SelfAdjointEigenSolver<Matrix> eig(linalg::symmetrize(p));
    return eig.eigenvalues().minCoeff() > 0.0;
}

Matrix sqrt(const Matrix& p) { return linalg::sym_power(p, 0.5); }
Matrix inv_sqrt(const Matrix& p) { return linalg::sym_power(p, -0.5); }

Matrix clog(const Matrix& p) {
    const Matrix l = linalg::cholesky(p);
    Matrix x = l;
    for (Eigen::Index i = 0; i < l.rows(); ++i) x(i, i) = std::log(l(i, i));
    return x;
}

Matrix clog_inv(const Matrix& x) {
    Matrix l = x;
    l.triangularView<Eigen::StrictlyUpper>().setZero();
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        if (std::abs(x(i, i)) > tol::diag_overflow)
            throw std::domain_error("clog_inv: diagonal entry too large to exponentiate");
        l(i, i) = std::exp(x(i, i));
    }
    return l * l.transpose();
}

Matrix oplus(Metric metric, const Matrix& p, const Matrix& q) {
    switch (metric) {
        case Metric::aim: {
            const Matrix s = sqrt(p);
            return linalg::symmetrize(s * q * s);
        }
        case Metric::lem:
            return linalg::mexp_sym(linalg::mlog_sym(p) + linalg::mlog_sym(q));
        case Metric::lcm:
            return clog_inv(clog(p) + clog(q));
    }
    throw std::logic_error("unreachable");
}

Matrix ominus(Metric metric, const Matrix& p) {
    switch (metric) {
        case Metric::aim:
        case Metric::lem:
            return linalg::sym_power(p, -1.0);
        case Metric::lcm:
            // clog_inv(-clog(P)) is the group inverse: clog of it cancels clog(P).
            return clog_inv(-clog(p));
    }
    throw std::logic_error("unreachable");
}

Matrix odot(Metric metric, double t, const Matrix& p) {
    switch (metric) {
        case Metric::aim:
            return linalg::sym_power(p, t); // t (.) S = S^t
        case Metric::lem:
            return linalg::mexp_sym(t * linalg::mlog_sym(p));
        case Metric::lcm:
            return clog_inv(t * clog(p));
    }
    throw std::logic_error("unreachable");
}

Matrix log_identity(Metric metric, const Matrix& p) {
    switch (metric) {
        case Metric::aim:
        case Metric::lem:
            return linalg::mlog_sym(p);
        case Metric::lcm:
            return clog(p);
    }
    throw std::logic_error("unreachable");
}

Matrix exp_identity(Metric metric, const Matrix& v) {
    switch (metric) {
        case Metric::aim:
        case Metric::lem:
            return linalg::mexp_sym(v);
        case Metric::lcm:
            return clog_inv(v);
    }
    throw std::logic_error("unreachable");
}

double distance(Metric metric, const Matrix& p, const Matrix& q) {
    switch (metric) {
        case Metric::aim: {
            const Matrix w = inv_sqrt(p);
            return linalg::mlog_sym(linalg::symmetrize(w * q * w)).norm();
        }
        case Metric::lem:
            return (linalg::mlog_sym(p) - linalg::mlog_sym(q)).norm();
        case Metric::lcm:
            return (clog(p) - clog(q)).norm();
    }
    throw std::logic_error("unreachable");
}

std::vector<Matrix> spdbn_aim_reference(const std::vector<Matrix>& batch, const Matrix& mean,
                                        double variance, const Matrix& bias, double scale,
                                        double epsilon) {
    const Matrix m_half_inv = inv_sqrt(mean);
    const Matrix b_half = sqrt(bias);
    const double exponent = scale / std::sqrt(variance + epsilon);
    std::vector<Matrix> out;
    out.reserve(batch.size());
    for (const Matrix& p : batch) {
        const Matrix centered = linalg::symmetrize(m_half_inv * p * m_half_inv);
        out.push_back(linalg::symmetrize(b_half * linalg::sym_power(centered, exponent) * b_half));
    }
    return out;
}

} // namespace gyrobn::spd
