#include "gyrobn/radius_ops.hpp"

#include "gyrobn/stereo_ops.hpp"
#include "gyrobn/tolerances.hpp"

#include <cmath>

namespace gyrobn::radius {

namespace {

double cos_k(double t, double K) { return K > 0 ? std::cos(t) : std::cosh(t); }
double sin_k(double t, double K) { return K > 0 ? std::sin(t) : std::sinh(t); }

double acos_k(double t, double K) {
    if (K > 0) return std::acos(std::min(std::max(t, -1.0), 1.0));
    return std::acosh(std::max(t, 1.0));
}

// sqrt|K| * d(x, y), computed through the chord where acos_k would suffer
// cancellation (beta near 1 maps 1e-16 noise to 1e-8 angles).
double angle_between(const Vector& x, const Vector& y, double K) {
    const double beta = K * inner_k(x, y, K);
    if (K > 0 && beta < 0.0) return acos_k(beta, K);
    const Vector w = x - y;
    const double chord2 = std::max(inner_k(w, w, K), 0.0);
    const double half = 0.5 * std::sqrt(std::abs(K) * chord2);
    return K > 0 ? 2.0 * std::asin(std::min(half, 1.0)) : 2.0 * std::asinh(half);
}

// sin_k(t)/t with the series limit at t = 0.
double sinc_k(double t, double K) {
    if (std::abs(t) < tol::near_zero) return 1.0;
    return sin_k(t, K) / t;
}

// Allocation-free pole checks with early exit; the time component decides in
// the common case.
bool near_pole(const Vector& x, double K, double sign) {
    const double mu_t = sign / std::sqrt(std::abs(K));
    if (std::abs(x[0] - mu_t) >= tol::near_zero * std::max(1.0, std::abs(mu_t))) return false;
    for (Eigen::Index i = 1; i < x.size(); ++i)
        if (std::abs(x[i]) >= tol::near_zero) return false;
    return true;
}

bool near_origin(const Vector& x, double K) { return near_pole(x, K, 1.0); }
bool near_south(const Vector& x, double K) { return near_pole(x, K, -1.0); }

} // namespace

Vector origin(Eigen::Index n, double K) {
    Vector mu0 = Vector::Zero(n + 1);
    mu0[0] = 1.0 / std::sqrt(std::abs(K));
    return mu0;
}

Vector south_pole(Eigen::Index n, double K) { return -origin(n, K); }

double inner_k(const Vector& x, const Vector& y, double K) {
    const double spatial = x.tail(x.size() - 1).dot(y.tail(y.size() - 1));
    return K > 0 ? spatial + x[0] * y[0] : spatial - x[0] * y[0];
}

double constraint_residual(const Vector& x, double K) {
    return std::abs(K * inner_k(x, x, K) - 1.0);
}

bool in_domain(const Vector& x, double K, double tolerance) {
    if (!x.allFinite()) return false;
    if (K < 0 && x[0] <= 0.0) return false;
    return constraint_residual(x, K) <= tolerance;
}

Vector canonicalize(Vector x, double K) {
    if (K > 0) {
        x *= 1.0 / (std::sqrt(K) * x.norm());
    } else {
        x[0] = std::sqrt(1.0 / (-K) + x.tail(x.size() - 1).squaredNorm());
    }
    return x;
}

Vector ominus(const Vector& x) {
    Vector r = -x;
    r[0] = x[0];
    return r;
}

Vector odot(double t, const Vector& x, double K) {
    const Eigen::Index n = x.size() - 1;
    if (t == 0.0 || near_origin(x, K)) return origin(n, K);
    if (K > 0 && near_south(x, K)) throw south_pole_error();

    const double sk = std::sqrt(std::abs(K));
    const double theta = angle_between(origin(n, K), x, K); // acos_k(sk*x_t), chord-stabilized
    const double norm_s = x.tail(n).norm();
    Vector r(x.size());
    r[0] = cos_k(t * theta, K) / sk;
    r.tail(n) = (sin_k(t * theta, K) / (sk * norm_s)) * x.tail(n);
    return r;
}

Vector oplus(const Vector& x, const Vector& y, double K) {
    const Eigen::Index n = x.size() - 1;
    if (near_origin(y, K)) return x;
    if (near_origin(x, K)) return y;
    if (K > 0 && (near_south(x, K) || near_south(y, K))) throw south_pole_error();

    const double sk = std::sqrt(std::abs(K));
    const double a = 1.0 + sk * x[0];
    const double b = 1.0 + sk * y[0];
    const auto xs = x.tail(n);
    const auto ys = y.tail(n);
    const double nx = xs.squaredNorm();
    const double ny = ys.squaredNorm();
    const double sxy = xs.dot(ys);

    const double d = a * a * b * b - 2.0 * K * a * b * sxy + K * K * nx * ny;
    const double nn = a * a * ny + 2.0 * a * b * sxy + b * b * nx;
    if (K > 0 && std::abs(d) < tol::singular_branch) return south_pole(n, K);

    const double as = a * b * b - 2.0 * K * b * sxy - K * a * ny;
    const double ay = b * (a * a + K * nx);
    Vector r(x.size());
    r[0] = (d - K * nn) / ((d + K * nn) * sk);
    r.tail(n) = 2.0 * (as * xs + ay * ys) / (d + K * nn);
    return r;
}

Vector exp(const Vector& x, const Vector& v, double K) {
    const double sk = std::sqrt(std::abs(K));
    double norm2 = inner_k(v, v, K);
    if (norm2 < 0.0) norm2 = 0.0; // tangent vectors are spacelike; clip float noise
    const double alpha = sk * std::sqrt(norm2);
    return cos_k(alpha, K) * x + sinc_k(alpha, K) * v;
}

Vector log(const Vector& x, const Vector& y, double K) {
    const double beta = K * inner_k(x, y, K);
    const double theta = angle_between(x, y, K);
    const Vector w = y - beta * x;
    const double norm = std::sqrt(std::max(inner_k(w, w, K), 0.0)); // = sqrt(+-(1-beta^2))/sqrt|K|
    if (std::sqrt(std::abs(K)) * norm < tol::near_zero) {
        if (theta < 1e-6) return Vector::Zero(x.size()); // y == x
        throw south_pole_error();                        // antipodal pair, K > 0
    }
    return (theta / (std::sqrt(std::abs(K)) * norm)) * w;
}

Vector parallel_transport(const Vector& x, const Vector& y, const Vector& v, double K) {
    const double factor = K * inner_k(y, v, K) / (1.0 + K * inner_k(x, y, K));
    return v - factor * (x + y);
}

Vector exp_origin(const Vector& v, double K) {
    const Eigen::Index n = v.size() - 1;
    const double sk = std::sqrt(std::abs(K));
    const double norm_s = v.tail(n).norm();
    Vector r(v.size());
    r[0] = cos_k(sk * norm_s, K) / sk;
    if (norm_s < tol::near_zero) {
        r.tail(n).setZero();
    } else {
        r.tail(n) = (sin_k(sk * norm_s, K) / (sk * norm_s)) * v.tail(n);
    }
    return r;
}

Vector log_origin(const Vector& x, double K) {
    const Eigen::Index n = x.size() - 1;
    const double sk = std::sqrt(std::abs(K));
    const double norm_s = x.tail(n).norm();
    Vector r = Vector::Zero(x.size());
    if (norm_s < tol::near_zero) {
        if (K > 0 && x[0] < 0.0) throw south_pole_error();
        return r;
    }
    const double theta = angle_between(origin(n, K), x, K);
    r.tail(n) = (theta / (sk * norm_s)) * x.tail(n);
    return r;
}

Vector transport_from_origin(const Vector& x, const Vector& v, double K) {
    const Eigen::Index n = x.size() - 1;
    const double sk = std::sqrt(std::abs(K));
    const double factor = K * x.tail(n).dot(v.tail(n)) / (1.0 + sk * x[0]);
    Vector shift(x.size());
    shift[0] = x[0] + 1.0 / sk;
    shift.tail(n) = x.tail(n);
    return v - factor * shift;
}

Vector oplus_composed(const Vector& x, const Vector& y, double K) {
    return exp(x, transport_from_origin(x, log_origin(y, K), K), K);
}

Vector odot_composed(double t, const Vector& x, double K) {
    return exp_origin(t * log_origin(x, K), K);
}

double distance(const Vector& x, const Vector& y, double K) {
    return angle_between(x, y, K) / std::sqrt(std::abs(K));
}

Vector to_stereo(const Vector& x, double K) {
    const Eigen::Index n = x.size() - 1;
    const double sk = std::sqrt(std::abs(K));
    const double denom = 1.0 + sk * x[0];
    if (K > 0 && std::abs(denom) < tol::singular_branch) return stereo::infinity_point(n);
    return x.tail(n) / denom;
}

Vector from_stereo(const Vector& y, double K) {
    const Eigen::Index n = y.size();
    if (stereo::is_infinity(y)) {
        if (K < 0) throw stereo::infinity_operand_error();
        return south_pole(n, K);
    }
    const double sk = std::sqrt(std::abs(K));
    const double ny = y.squaredNorm();
    Vector r(n + 1);
    r[0] = (1.0 - K * ny) / ((1.0 + K * ny) * sk);
    r.tail(n) = 2.0 * y / (1.0 + K * ny);
    return r;
}

} // namespace gyrobn::radius
