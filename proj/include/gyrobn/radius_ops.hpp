#pragma once

#include "gyrobn/linalg.hpp"

#include <stdexcept>

// Radius model M^n_K for K != 0: hyperboloid (upper sheet) for K < 0, sphere
// of radius 1/sqrt(K) for K > 0. Points are (n+1)-vectors [x_t; x_s] with the
// time scalar first, satisfying K <x, x>_K = 1.
namespace gyrobn::radius {

struct south_pole_error : std::domain_error {
    south_pole_error() : std::domain_error("radius model: operation undefined at the south pole -mu0") {}
};

Vector origin(Eigen::Index n, double K);     // mu0 = [1/sqrt|K|; 0]
Vector south_pole(Eigen::Index n, double K); // -mu0, K > 0 only

// <x, y>_K: Euclidean for K > 0, Lorentz <x_s,y_s> - x_t*y_t for K < 0.
double inner_k(const Vector& x, const Vector& y, double K);

// |K <x,x>_K - 1|, the manifold constraint residual.
double constraint_residual(const Vector& x, double K);
bool in_domain(const Vector& x, double K, double tolerance);

// Exact renormalization back onto the constraint set.
Vector canonicalize(Vector x, double K);

// Closed forms (the primary path).
Vector oplus(const Vector& x, const Vector& y, double K);
Vector odot(double t, const Vector& x, double K);
Vector ominus(const Vector& x);

// Definitional compositions exp_x(PT_{mu0->x}(log_mu0(y))) and
// exp_mu0(t log_mu0(x)); kept for the dual-route checks and the benchmark.
Vector oplus_composed(const Vector& x, const Vector& y, double K);
Vector odot_composed(double t, const Vector& x, double K);

// Riemannian operators (general base point and the simplified origin forms).
Vector exp(const Vector& x, const Vector& v, double K);
Vector log(const Vector& x, const Vector& y, double K);
Vector parallel_transport(const Vector& x, const Vector& y, const Vector& v, double K);
Vector exp_origin(const Vector& v, double K);
Vector log_origin(const Vector& x, double K);
Vector transport_from_origin(const Vector& x, const Vector& v, double K);

double distance(const Vector& x, const Vector& y, double K);

// Isometries to/from the stereographic model (stereographic projection fixing
// the south pole). For K > 0 the south pole maps to the infinity sentinel and
// back.
Vector to_stereo(const Vector& x, double K);
Vector from_stereo(const Vector& y, double K);

} // namespace gyrobn::radius
