#pragma once

#include <Eigen/Dense>

#include <stdexcept>

namespace gyrobn {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

namespace linalg {

enum class SvdOrder { ascending, descending };

struct SvdResult {
    Matrix left;      // orthonormal columns
    Vector singulars; // nonnegative, sorted per requested order
    Matrix right;     // orthonormal columns, m = left * singulars.asDiagonal() * right^T
};

// Thin SVD with a deterministic sign convention: the first nonzero entry of
// each left column is nonnegative.
SvdResult svd(const Matrix& m, SvdOrder order = SvdOrder::descending);

// Exact matrix exponential of a skew-symmetric matrix (scaling-and-squaring
// with Pade, not the Cayley approximation). Result is orthogonal with det +1.
Matrix mexp_skew(const Matrix& omega);

// Matrix exponential / logarithm of symmetric matrices via eigendecomposition.
// mlog_sym requires a symmetric positive-definite input.
Matrix mexp_sym(const Matrix& m);
Matrix mlog_sym(const Matrix& m);

// Lower-triangular Cholesky factor with positive diagonal. Throws on
// indefinite input.
Matrix cholesky(const Matrix& m);

// P^t for symmetric positive-semidefinite P, eigenvalues floored at tol::eig_floor.
Matrix sym_power(const Matrix& m, double t);

bool is_finite(const Matrix& m);
bool is_symmetric(const Matrix& m, double tolerance);
bool is_skew(const Matrix& m, double tolerance);

inline Matrix symmetrize(const Matrix& m) { return 0.5 * (m + m.transpose()); }

} // namespace linalg
} // namespace gyrobn
