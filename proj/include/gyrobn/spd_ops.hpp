#pragma once

#include "gyrobn/linalg.hpp"

#include <vector>

// SPD manifold gyro operations under three metrics. AIM is the affine-
// invariant gyrogroup; LEM and LCM are abelian Lie groups (gyrations are the
// identity map).
namespace gyrobn::spd {

enum class Metric { aim, lem, lcm };

bool is_spd(const Matrix& p, double tolerance);

Matrix sqrt(const Matrix& p);
Matrix inv_sqrt(const Matrix& p);

// clog = dlog o Cholesky: strictly lower part of L plus log of its diagonal,
// returned as a lower-triangular matrix. clog_inv is its exact inverse; the
// diagonal is capped before exponentiation to avoid overflow.
Matrix clog(const Matrix& p);
Matrix clog_inv(const Matrix& x);

Matrix oplus(Metric metric, const Matrix& p, const Matrix& q);
Matrix ominus(Metric metric, const Matrix& p);
Matrix odot(Metric metric, double t, const Matrix& p);

// Tangent representation at the identity: symmetric matrices for AIM/LEM,
// lower-triangular matrices (the clog chart) for LCM.
Matrix log_identity(Metric metric, const Matrix& p);
Matrix exp_identity(Metric metric, const Matrix& v);

double distance(Metric metric, const Matrix& p, const Matrix& q);

// The AIM-based SPDBN reference update
// B^{1/2} (M^{-1/2} P_i M^{-1/2})^{s/sqrt(v2+eps)} B^{1/2}.
std::vector<Matrix> spdbn_aim_reference(const std::vector<Matrix>& batch, const Matrix& mean,
                                        double variance, const Matrix& bias, double scale,
                                        double epsilon);

} // namespace gyrobn::spd
