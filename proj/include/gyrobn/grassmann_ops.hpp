#pragma once

#include "gyrobn/linalg.hpp"

// ONB Grassmannian Gr(p, n): equivalence classes [U] of n x p matrices with
// orthonormal columns, plus the projector (PP) perspective P = U U^T. Equality
// of ONB points is class-level (gyrodistance), never entrywise.
namespace gyrobn::grassmann {

Matrix identity_onb(Eigen::Index n, Eigen::Index p); // (I_p, 0)^T
Matrix identity_pp(Eigen::Index n, Eigen::Index p);  // pi(identity_onb)

bool is_onb(const Matrix& u, double tolerance);
bool is_projector(const Matrix& pmat, Eigen::Index p, double tolerance);

// Re-orthonormalize a drifted representative via sign-fixed thin QR. Keeps
// the subspace, kills drift.
Matrix reorthonormalize(const Matrix& u);

// pi: [U] -> U U^T and its inverse via the top-p eigenvectors of P
// (descending eigenvalues, first-nonzero-positive sign convention).
Matrix pi(const Matrix& u);
Matrix pi_inverse(const Matrix& pmat, Eigen::Index p);

// [log_{I_PP}(U U^T), I_PP] as the 2x2-block skew matrix with zero diagonal
// blocks, computed from the p x p SVD of U1^T (ascending order).
Matrix fast_bracket(const Matrix& u);

// Same bracket assembled from an explicit bottom block: [[0, -B^T], [B, 0]].
Matrix bracket_from_block(const Matrix& bottom, Eigen::Index n);

// Stable ONB logarithm: SVD of Y^T U ascending, Delta = (I - U U^T) Y Q
// (arcsin(S_hat)/S_hat) R^T. Defined even near the cut locus.
Matrix onb_log(const Matrix& u, const Matrix& y);

// Closed-form logarithm O arctan(Sigma) R^T from the thin SVD of
// (I - U U^T) Y (U^T Y)^{-1}. Needs U^T Y invertible (away from the cut
// locus); kept as the route independent of onb_log for dual checks.
Matrix onb_log_direct(const Matrix& u, const Matrix& y);

// [log_{I_PP}(U U^T), I_PP] assembled the long way: direct ONB log, pushed
// through pi_*, then an explicit commutator with I_PP.
Matrix direct_bracket(const Matrix& u);

// Geodesic exponential U R cos(Sigma) R^T + O sin(Sigma) R^T from the thin
// SVD of the horizontal tangent Delta.
Matrix onb_exp(const Matrix& u, const Matrix& delta);

// Gyro operations, Omega = fast_bracket(u).
Matrix oplus(const Matrix& u, const Matrix& v);
Matrix ominus(const Matrix& u);
Matrix odot(double t, const Matrix& u);

// ||arccos(Sigma)|| over the singular values of U^T V; bounded by sqrt(p) pi/2.
double distance(const Matrix& u, const Matrix& v);

} // namespace gyrobn::grassmann
