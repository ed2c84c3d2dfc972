#pragma once

#include "gyrobn/linalg.hpp"

#include <vector>

// Full-rank correlation manifold Cor(n): SPD matrices with unit diagonal,
// identified row-wise with a product of unit Poincare balls (K = -1) through
// the Cholesky factor and the hemisphere -> ball map x / (1 + x_last).
namespace gyrobn::correlation {

// Rows 2..n of the Cholesky factor mapped to balls of dimension 1..n-1.
using PolyPoincare = std::vector<Vector>;

bool is_correlation(const Matrix& c, double tolerance);

PolyPoincare cor_to_poly(const Matrix& c);
Matrix poly_to_cor(const PolyPoincare& rows);

// Flattened tangent layout: row blocks of dimension 1, 2, ..., n-1.
Eigen::Index flat_dim(Eigen::Index n); // n(n-1)/2
Vector flatten(const PolyPoincare& rows);
PolyPoincare unflatten(const Vector& flat, Eigen::Index n);

} // namespace gyrobn::correlation
