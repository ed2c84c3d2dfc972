#include "gyrobn/stereo_ops.hpp"

#include "gyrobn/tolerances.hpp"

#include <cmath>
#include <limits>

namespace gyrobn::stereo {

namespace {

double clamp_atanh_arg(double t) {
    const double lim = 1.0 - tol::ball_clamp;
    return std::min(std::max(t, -lim), lim);
}

void require_finite_operand(const Vector& x) {
    if (is_infinity(x)) throw infinity_operand_error();
}

} // namespace

Vector infinity_point(Eigen::Index n) {
    return Vector::Constant(n, std::numeric_limits<double>::infinity());
}

bool is_infinity(const Vector& x) {
    return x.size() > 0 && std::isinf(x[0]);
}

double conformal_factor(const Vector& x, double K) {
    return 2.0 / (1.0 + K * x.squaredNorm());
}

double tan_k(double t, double K) { return K < 0 ? std::tanh(t) : std::tan(t); }

double atan_k(double t, double K) {
    return K < 0 ? std::atanh(clamp_atanh_arg(t)) : std::atan(t);
}

bool in_domain(const Vector& x, double K, double tolerance) {
    if (!x.allFinite()) return false;
    if (K < 0) return x.squaredNorm() < -1.0 / K + tolerance;
    return true;
}

Vector oplus(const Vector& x, const Vector& y, double K) {
    require_finite_operand(x);
    require_finite_operand(y);
    const double xy = x.dot(y);
    const double nx = x.squaredNorm();
    const double ny = y.squaredNorm();
    const double denom = 1.0 - 2.0 * K * xy + K * K * nx * ny;
    if (K > 0 && std::abs(denom) < tol::singular_branch) return infinity_point(x.size());
    return ((1.0 - 2.0 * K * xy - K * ny) * x + (1.0 + K * nx) * y) / denom;
}

Vector odot(double t, const Vector& x, double K) {
    require_finite_operand(x);
    const double norm = x.norm();
    if (t == 0.0 || norm < tol::near_zero) return Vector::Zero(x.size());
    const double sk = std::sqrt(std::abs(K));
    const double theta = t * atan_k(sk * norm, K);
    if (K > 0 && std::abs(std::cos(theta)) < tol::singular_branch) return infinity_point(x.size());
    return (tan_k(theta, K) / sk) * (x / norm);
}

Vector gyration(const Vector& x, const Vector& y, const Vector& z, double K) {
    require_finite_operand(x);
    require_finite_operand(y);
    require_finite_operand(z);
    const double xy = x.dot(y);
    const double xz = x.dot(z);
    const double yz = y.dot(z);
    const double nx = x.squaredNorm();
    const double ny = y.squaredNorm();
    const double a = -K * K * xz * ny - K * yz + 2.0 * K * K * xy * yz;
    const double b = -K * K * yz * nx + K * xz;
    const double d = 1.0 - 2.0 * K * xy + K * K * nx * ny;
    return z + 2.0 * (a * x + b * y) / d;
}

Vector exp0(const Vector& v, double K) {
    const double norm = v.norm();
    if (norm < tol::near_zero) return Vector::Zero(v.size());
    const double sk = std::sqrt(std::abs(K));
    const double theta = sk * norm;
    if (K > 0 && std::abs(std::cos(theta)) < tol::singular_branch) return infinity_point(v.size());
    return (tan_k(theta, K) / sk) * (v / norm);
}

Vector log0(const Vector& x, double K) {
    require_finite_operand(x);
    const double norm = x.norm();
    if (norm < tol::near_zero) return Vector::Zero(x.size());
    const double sk = std::sqrt(std::abs(K));
    return (atan_k(sk * norm, K) / sk) * (x / norm);
}

Vector exp(const Vector& x, const Vector& v, double K) {
    require_finite_operand(x);
    const double norm = v.norm();
    if (norm < tol::near_zero) return x;
    const double sk = std::sqrt(std::abs(K));
    const double lam = conformal_factor(x, K);
    const Vector step = (tan_k(sk * lam * norm / 2.0, K) / sk) * (v / norm);
    return oplus(x, step, K);
}

Vector log(const Vector& x, const Vector& y, double K) {
    const Vector w = oplus(-x, y, K);
    if (is_infinity(w)) throw infinity_operand_error();
    const double norm = w.norm();
    if (norm < tol::near_zero) return Vector::Zero(x.size());
    const double sk = std::sqrt(std::abs(K));
    const double lam = conformal_factor(x, K);
    return (2.0 / (sk * lam)) * atan_k(sk * norm, K) * (w / norm);
}

Vector parallel_transport(const Vector& x, const Vector& y, const Vector& v, double K) {
    return (conformal_factor(x, K) / conformal_factor(y, K)) * gyration(y, -x, v, K);
}

double distance(const Vector& x, const Vector& y, double K) {
    const double sk = std::sqrt(std::abs(K));
    const Vector w = oplus(-x, y, K);
    if (is_infinity(w)) return M_PI / sk; // antipodal classes on the compactification
    return (2.0 / sk) * atan_k(sk * w.norm(), K);
}

} // namespace gyrobn::stereo
