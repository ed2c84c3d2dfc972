#pragma once

#include "gyrobn/frechet.hpp"
#include "gyrobn/manifold.hpp"

#include <nlohmann/json_fwd.hpp>
#include <span>
#include <vector>

namespace gyrobn {

enum class Mode { training, inference };

struct BatchNormState {
    Descriptor descriptor;
    Point bias;              // beta, on-manifold
    double scale = 1.0;      // s, may be negative
    Point running_mean;      // mu_r, on-manifold
    double running_var = 1.0;
    double momentum = 0.1;   // eta in [0, 1]
    double epsilon = 1e-5;
    Mode mode = Mode::training;
    KarcherConfig mean_cfg;
};

// Before/after statistics of a normalized batch.
struct BatchReport {
    Point pre_mean;
    double pre_var = 0.0;
    Point post_mean;
    double post_var = 0.0;
    int mean_iters = 0;
    double residual_to_bias = 0.0;
};

struct ForwardResult {
    std::vector<Point> batch;
    BatchReport report;
};

BatchNormState init_state(const Manifold& manifold, std::optional<Point> bias = std::nullopt,
                          double scale = 1.0, double momentum = 0.1, double epsilon = 1e-5);

// Algorithm: in training mode compute batch statistics, update the running
// statistics (barycenter with the momentum as the fresh-batch weight), then
// normalize with the batch statistics; in inference mode normalize with the
// running statistics and leave the state untouched. The core update is
// x_i <- beta (+) ((s/sqrt(v^2+eps)) (.) ((-mu) (+) x_i)).
ForwardResult forward(std::span<const Point> batch, BatchNormState& state,
                      const Manifold& manifold);

// State serialization: descriptor string, bias and running mean as flat
// arrays, and the scalars s, v^2_r, eta, eps.
nlohmann::json state_to_json(const BatchNormState& state);
BatchNormState state_from_json(const nlohmann::json& j);

// PP-perspective Grassmannian normalization: map through pi^{-1} to the ONB
// perspective, normalize there, map back with pi. `state` lives on the
// matching grass-onb descriptor.
std::vector<Point> pp_normalize_batch(std::span<const Point> batch, BatchNormState& state);

// Row-wise correlation GyroBN through the poly-Poincare identification;
// row_states[i] lives on stereo:K=-1:n=i+1.
std::vector<BatchNormState> cor_init_states(int n, double scale = 1.0, double momentum = 0.1,
                                            double epsilon = 1e-5);
std::vector<Point> cor_gyrobn(std::span<const Point> batch,
                              std::vector<BatchNormState>& row_states);

} // namespace gyrobn
