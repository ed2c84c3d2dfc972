#include "gyrobn/correlation_ops.hpp"

#include "gyrobn/tolerances.hpp"

#include <stdexcept>

namespace gyrobn::correlation {

bool is_correlation(const Matrix& c, double tolerance) {
    if (!c.allFinite() || c.rows() != c.cols()) return false;
    if (!linalg::is_symmetric(c, tolerance)) return false;
    if ((c.diagonal().array() - 1.0).abs().maxCoeff() > tolerance) return false;
    Eigen::SelfAdjointEigenSolver<Matrix> eig(linalg::symmetrize(c));
    return eig.eigenvalues().minCoeff() > 0.0;
}

PolyPoincare cor_to_poly(const Matrix& c) {
    const Matrix l = linalg::cholesky(c);
    PolyPoincare rows;
    rows.reserve(c.rows() - 1);
    for (Eigen::Index i = 1; i < c.rows(); ++i)
        rows.push_back(l.row(i).head(i).transpose() / (1.0 + l(i, i)));
    return rows;
}

Matrix poly_to_cor(const PolyPoincare& rows) {
    const Eigen::Index n = static_cast<Eigen::Index>(rows.size()) + 1;
    Matrix l = Matrix::Zero(n, n);
    l(0, 0) = 1.0;
    for (Eigen::Index i = 1; i < n; ++i) {
        const Vector& y = rows[i - 1];
        if (y.size() != i) throw std::invalid_argument("poly_to_cor: row dimension mismatch");
        const double denom = 1.0 + y.squaredNorm();
        l.row(i).head(i) = (2.0 / denom) * y.transpose();
        l(i, i) = (1.0 - y.squaredNorm()) / denom;
    }
    return l * l.transpose();
}

Eigen::Index flat_dim(Eigen::Index n) { return n * (n - 1) / 2; }

Vector flatten(const PolyPoincare& rows) {
    const Eigen::Index n = static_cast<Eigen::Index>(rows.size()) + 1;
    Vector flat(flat_dim(n));
    Eigen::Index offset = 0;
    for (const Vector& row : rows) {
        flat.segment(offset, row.size()) = row;
        offset += row.size();
    }
    return flat;
}

PolyPoincare unflatten(const Vector& flat, Eigen::Index n) {
    if (flat.size() != flat_dim(n)) throw std::invalid_argument("unflatten: size mismatch");
    PolyPoincare rows;
    rows.reserve(n - 1);
    Eigen::Index offset = 0;
    for (Eigen::Index i = 1; i < n; ++i) {
        rows.push_back(flat.segment(offset, i));
        offset += i;
    }
    return rows;
}

} // namespace gyrobn::correlation
