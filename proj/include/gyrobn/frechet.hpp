#pragma once

#include "gyrobn/manifold.hpp"

#include <optional>
#include <span>
#include <vector>

namespace gyrobn {

struct KarcherConfig {
    int max_iters = 50;
    double step = 1.0;           // in (0, 1]
    double tol = 1e-9;           // gradient-norm threshold at the current mean
    std::optional<Point> init;   // default: first sample
};

struct MeanResult {
    Point mean;
    int iterations = 0;    // gradient evaluations performed
    double grad_norm = 0.0;
    bool converged = false;
};

// Karcher flow mu <- exp_mu(step * sum_i w_i log_mu(x_i)), computed in gyro
// coordinates (z_i = ominus(mu) oplus x_i, u = sum w_i log_e(z_i),
// mu <- mu oplus exp_e(step * u)), which is the same update and is exactly
// equivariant under left gyrotranslation.
MeanResult frechet_mean(std::span<const Point> points, std::span<const double> weights,
                        const Manifold& manifold, const KarcherConfig& cfg = {});
MeanResult frechet_mean(std::span<const Point> points, const Manifold& manifold,
                        const KarcherConfig& cfg = {});

// (1/N) sum_i d^2(x_i, mean).
double frechet_variance(std::span<const Point> points, const Point& mean,
                        const Manifold& manifold);

// argmin_y eta d^2(x1, y) + (1-eta) d^2(x2, y) along the geodesic; eta is the
// weight of x1, so eta = 1 returns x1 and eta = 0 returns x2.
Point binary_barycenter(const Point& x1, const Point& x2, double eta, const Manifold& manifold);

} // namespace gyrobn
