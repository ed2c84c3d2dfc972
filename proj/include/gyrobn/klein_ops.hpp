#pragma once

#include "gyrobn/linalg.hpp"

// Beltrami-Klein model K^n_K for K < 0, carrying the Einstein gyrovector
// space. Shares the open ball ||x||^2 < -1/K with the Poincare model but has
// straight-chord geodesics and a different metric.
namespace gyrobn::klein {

// gamma_x = 1 / sqrt(1 + K ||x||^2).
double gamma_factor(const Vector& x, double K);

bool in_domain(const Vector& x, double K, double tolerance = 0.0);

// Einstein gyro operations.
Vector oplus(const Vector& x, const Vector& y, double K);
inline Vector ominus(const Vector& x) { return -x; }
Vector odot(double t, const Vector& x, double K); // coincides with Mobius gyromultiplication
Vector gyration(const Vector& x, const Vector& y, const Vector& z, double K);

// Riemannian operators. exp0/log0 coincide entrywise with the Poincare maps.
Vector exp0(const Vector& v, double K);
Vector log0(const Vector& x, double K);
Vector exp(const Vector& x, const Vector& v, double K);
Vector log(const Vector& x, const Vector& y, double K);
double distance(const Vector& x, const Vector& y, double K);

// Isometries between the Beltrami-Klein and Poincare ball models, and their
// differentials (at 0 they scale by 1/2 and 2).
Vector to_poincare(const Vector& x, double K);
Vector from_poincare(const Vector& x, double K);
Vector to_poincare_differential(const Vector& x, const Vector& v, double K);
Vector from_poincare_differential(const Vector& x, const Vector& v, double K);

} // namespace gyrobn::klein
