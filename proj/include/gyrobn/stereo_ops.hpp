#pragma once

#include "gyrobn/linalg.hpp"

#include <stdexcept>

// Stereographic model st^n_K for K != 0: Poincare ball for K < 0, projected
// hypersphere for K > 0. All functions are pure; vectors are ambient R^n.
//
// For K > 0 the model is compactified with a single point at infinity, the
// image of the sphere's south pole. `infinity_point` / `is_infinity` handle
// that sentinel; every operation except the radius-model isometries rejects
// it with infinity_operand_error.
namespace gyrobn::stereo {

struct infinity_operand_error : std::domain_error {
    infinity_operand_error() : std::domain_error("stereographic: operation on the point at infinity") {}
};

Vector infinity_point(Eigen::Index n);
bool is_infinity(const Vector& x);

// Conformal factor lambda_x = 2 / (1 + K ||x||^2).
double conformal_factor(const Vector& x, double K);

// tan_K and its inverse: tanh/artanh for K < 0, tan/arctan for K > 0.
double tan_k(double t, double K);
double atan_k(double t, double K);

bool in_domain(const Vector& x, double K, double tolerance = 0.0);

// x (+) y. For K > 0 the singular configuration x = y/(K||y||^2) returns the
// infinity sentinel.
Vector oplus(const Vector& x, const Vector& y, double K);
inline Vector ominus(const Vector& x) { return -x; }

// t (.) x. For K > 0 singular scalings t*atan(sqrt(K)||x||) = pi/2 + k*pi
// return the infinity sentinel.
Vector odot(double t, const Vector& x, double K);

// Closed-form gyration gyr[x, y] z.
Vector gyration(const Vector& x, const Vector& y, const Vector& z, double K);

// Riemannian operators. exp0/log0 are the maps at the gyro identity 0.
Vector exp0(const Vector& v, double K);
Vector log0(const Vector& x, double K);
Vector exp(const Vector& x, const Vector& v, double K);
Vector log(const Vector& x, const Vector& y, double K);
Vector parallel_transport(const Vector& x, const Vector& y, const Vector& v, double K);

// Geodesic distance (2/sqrt|K|) atan_K(sqrt|K| ||(-x) (+) y||). Infinity is a
// valid *argument* here only through the compactified interpretation of an
// intermediate (+); as an operand it throws.
double distance(const Vector& x, const Vector& y, double K);

} // namespace gyrobn::stereo
