#include "gyrobn/frechet.hpp"

#include <cmath>
#include <stdexcept>

namespace gyrobn {

MeanResult frechet_mean(std::span<const Point> points, std::span<const double> weights,
                        const Manifold& manifold, const KarcherConfig& cfg) {
    if (points.empty()) throw std::invalid_argument("frechet_mean: empty batch");
    if (weights.size() != points.size())
        throw std::invalid_argument("frechet_mean: weights/points size mismatch");
    if (cfg.tol <= 0.0 || cfg.step <= 0.0 || cfg.step > 1.0)
        throw std::invalid_argument("frechet_mean: invalid config");
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("frechet_mean: negative weight");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("frechet_mean: weights must sum to 1");

    MeanResult result;
    result.mean = cfg.init ? *cfg.init : points[0];
    for (int iter = 1; iter <= cfg.max_iters; ++iter) {
        Tangent grad;
        bool first = true;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (weights[i] == 0.0) continue;
            const Tangent u =
                manifold.log_identity(manifold.oplus(manifold.ominus(result.mean), points[i]));
            if (first) {
                grad = weights[i] * u;
                first = false;
            } else {
                grad += weights[i] * u;
            }
        }
        if (!grad.allFinite()) throw std::runtime_error("frechet_mean: NaN during iteration");
        result.iterations = iter;
        result.grad_norm = std::sqrt(std::max(manifold.metric_identity(grad, grad), 0.0));
        if (result.grad_norm < cfg.tol) {
            result.converged = true;
            return result;
        }
        result.mean =
            manifold.canonicalize(manifold.oplus(result.mean, manifold.exp_identity(cfg.step * grad)));
    }
    return result;
}

MeanResult frechet_mean(std::span<const Point> points, const Manifold& manifold,
                        const KarcherConfig& cfg) {
    const std::vector<double> weights(points.size(), 1.0 / static_cast<double>(points.size()));
    return frechet_mean(points, weights, manifold, cfg);
}

double frechet_variance(std::span<const Point> points, const Point& mean,
                        const Manifold& manifold) {
    double sum = 0.0;
    for (const Point& x : points) {
        const double d = manifold.distance(x, mean);
        sum += d * d;
    }
    return sum / static_cast<double>(points.size());
}

Point binary_barycenter(const Point& x1, const Point& x2, double eta, const Manifold& manifold) {
    if (eta < 0.0 || eta > 1.0) throw std::invalid_argument("binary_barycenter: eta outside [0, 1]");
    if (eta == 0.0) return x2;
    if (eta == 1.0) return x1;
    // exp_{x2}(eta * log_{x2}(x1)) in gyro coordinates.
    const Point toward = manifold.oplus(manifold.ominus(x2), x1);
    return manifold.canonicalize(manifold.oplus(x2, manifold.odot(eta, toward)));
}

} // namespace gyrobn
