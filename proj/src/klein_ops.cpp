#include "gyrobn/klein_ops.hpp"

#include "gyrobn/stereo_ops.hpp"
#include "gyrobn/tolerances.hpp"

#include <cmath>

namespace gyrobn::klein {

double gamma_factor(const Vector& x, double K) {
    return 1.0 / std::sqrt(std::max(1.0 + K * x.squaredNorm(), tol::ball_clamp));
}

bool in_domain(const Vector& x, double K, double tolerance) {
    return x.allFinite() && x.squaredNorm() < -1.0 / K + tolerance;
}

Vector oplus(const Vector& x, const Vector& y, double K) {
    const double xy = x.dot(y);
    const double gx = gamma_factor(x, K);
    return (x + y / gx - K * (gx / (1.0 + gx)) * xy * x) / (1.0 - K * xy);
}

Vector odot(double t, const Vector& x, double K) {
    const double norm = x.norm();
    if (t == 0.0 || norm < tol::near_zero) return Vector::Zero(x.size());
    const double sk = std::sqrt(-K);
    return (std::tanh(t * std::atanh(std::min(sk * norm, 1.0 - tol::ball_clamp))) / sk) * (x / norm);
}

Vector gyration(const Vector& x, const Vector& y, const Vector& z, double K) {
    const double gx = gamma_factor(x, K);
    const double gy = gamma_factor(y, K);
    const double xy = x.dot(y);
    const double xz = x.dot(z);
    const double yz = y.dot(z);
    const double a = K * (gx * gx / (gx + 1.0)) * (gy - 1.0) * xz - K * gx * gy * yz +
                     2.0 * K * K * (gx * gx * gy * gy / ((gx + 1.0) * (gy + 1.0))) * xy * yz;
    const double b = K * (gy / (gy + 1.0)) * (gx * (gy + 1.0) * xz + (gx - 1.0) * gy * yz);
    const double d = 1.0 + gx * gy * (1.0 - K * xy);
    return z + (a * x + b * y) / d;
}

Vector exp0(const Vector& v, double K) {
    const double norm = v.norm();
    if (norm < tol::near_zero) return Vector::Zero(v.size());
    const double sk = std::sqrt(-K);
    return (std::tanh(sk * norm) / sk) * (v / norm);
}

Vector log0(const Vector& x, double K) {
    const double norm = x.norm();
    if (norm < tol::near_zero) return Vector::Zero(x.size());
    const double sk = std::sqrt(-K);
    return (std::atanh(std::min(sk * norm, 1.0 - tol::ball_clamp)) / sk) * (x / norm);
}

Vector exp(const Vector& x, const Vector& v, double K) {
    const double c = 1.0 + K * x.squaredNorm(); // = 1/gamma_x^2 > 0 on the ball
    const Vector inner = v / std::sqrt(c) - (K * x.dot(v) / ((1.0 + std::sqrt(c)) * c)) * x;
    return oplus(x, exp0(inner, K), K);
}

Vector log(const Vector& x, const Vector& y, double K) {
    const Vector xp = to_poincare(x, K);
    const double lam = stereo::conformal_factor(xp, K);
    const Vector w = log0(oplus(-x, y, K), K);
    return from_poincare_differential(xp, w, K) / lam;
}

double distance(const Vector& x, const Vector& y, double K) {
    const double sk = std::sqrt(-K);
    const double norm = oplus(-x, y, K).norm();
    const double arg = sk * norm / (1.0 + std::sqrt(std::max(1.0 + K * norm * norm, 0.0)));
    return (2.0 / sk) * std::atanh(std::min(arg, 1.0 - tol::ball_clamp));
}

Vector to_poincare(const Vector& x, double K) {
    return x / (1.0 + std::sqrt(std::max(1.0 + K * x.squaredNorm(), 0.0)));
}

Vector from_poincare(const Vector& x, double K) {
    return 2.0 * x / (1.0 - K * x.squaredNorm());
}

Vector to_poincare_differential(const Vector& x, const Vector& v, double K) {
    const double c = std::sqrt(std::max(1.0 + K * x.squaredNorm(), tol::ball_clamp));
    return v / (1.0 + c) - (K * x.dot(v) / ((1.0 + c) * (1.0 + c) * c)) * x;
}

Vector from_poincare_differential(const Vector& x, const Vector& v, double K) {
    const double c = 1.0 - K * x.squaredNorm();
    return (2.0 / c) * v + (4.0 * K * x.dot(v) / (c * c)) * x;
}

} // namespace gyrobn::klein
