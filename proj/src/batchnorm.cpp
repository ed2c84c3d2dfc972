#include "gyrobn/batchnorm.hpp"

#include "gyrobn/correlation_ops.hpp"
#include "gyrobn/grassmann_ops.hpp"
#include "gyrobn/tolerances.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <stdexcept>

namespace gyrobn {

BatchNormState init_state(const Manifold& manifold, std::optional<Point> bias, double scale,
                          double momentum, double epsilon) {
    if (momentum < 0.0 || momentum > 1.0)
        throw std::invalid_argument("init_state: momentum outside [0, 1]");
    if (epsilon <= 0.0) throw std::invalid_argument("init_state: epsilon must be positive");
    BatchNormState state;
    state.descriptor = manifold.descriptor();
    if (bias) {
        if (!manifold.contains(*bias, tol::membership))
            throw std::invalid_argument("init_state: bias is not on the manifold");
        state.bias = std::move(*bias);
    } else {
        state.bias = manifold.identity();
    }
    state.scale = scale;
    state.running_mean = manifold.identity();
    state.running_var = 1.0;
    state.momentum = momentum;
    state.epsilon = epsilon;
    return state;
}

ForwardResult forward(std::span<const Point> batch, BatchNormState& state,
                      const Manifold& manifold) {
    if (batch.empty()) throw std::invalid_argument("forward: empty batch");
    if (state.descriptor != manifold.descriptor())
        throw std::invalid_argument("forward: state/manifold descriptor mismatch");
    if (state.mode == Mode::training && batch.size() < 2)
        throw std::invalid_argument("forward: training mode needs at least 2 samples");
    const auto [rows, cols] = point_shape(state.descriptor);
    for (const Point& x : batch)
        if (x.rows() != rows || x.cols() != cols)
            throw std::invalid_argument("forward: point shape does not match " +
                                        state.descriptor.str());

    const MeanResult batch_mean = frechet_mean(batch, manifold, state.mean_cfg);
    const double batch_var = frechet_variance(batch, batch_mean.mean, manifold);

    Point mu;
    double var = 0.0;
    if (state.mode == Mode::training) {
        state.running_mean =
            binary_barycenter(batch_mean.mean, state.running_mean, state.momentum, manifold);
        state.running_var = state.momentum * batch_var + (1.0 - state.momentum) * state.running_var;
        mu = batch_mean.mean;
        var = batch_var;
    } else {
        mu = state.running_mean;
        var = state.running_var;
    }

    const double t = state.scale / std::sqrt(var + state.epsilon);
    const Point neg_mu = manifold.ominus(mu);
    ForwardResult result;
    result.batch.reserve(batch.size());
    for (const Point& x : batch) {
        Point out = manifold.canonicalize(
            manifold.oplus(state.bias, manifold.odot(t, manifold.oplus(neg_mu, x))));
        if (!out.allFinite())
            throw std::runtime_error("forward: NaN produced while normalizing " +
                                     state.descriptor.str());
        result.batch.push_back(std::move(out));
    }

    const MeanResult post_mean = frechet_mean(result.batch, manifold, state.mean_cfg);
    result.report.pre_mean = batch_mean.mean;
    result.report.pre_var = batch_var;
    result.report.post_mean = post_mean.mean;
    result.report.post_var = frechet_variance(result.batch, post_mean.mean, manifold);
    result.report.mean_iters = batch_mean.iterations;
    result.report.residual_to_bias = manifold.distance(post_mean.mean, state.bias);
    return result;
}

namespace {

std::vector<double> to_flat(const Point& x) {
    std::vector<double> flat;
    flat.reserve(x.size());
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j) flat.push_back(x(i, j));
    return flat;
}

Point from_flat(const std::vector<double>& flat, const Descriptor& desc) {
    const auto [rows, cols] = point_shape(desc);
    if (static_cast<Eigen::Index>(flat.size()) != rows * cols)
        throw std::invalid_argument("state: flat array size mismatch");
    Point x(rows, cols);
    std::size_t k = 0;
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) x(i, j) = flat[k++];
    return x;
}

} // namespace

nlohmann::json state_to_json(const BatchNormState& state) {
    return nlohmann::json{{"descriptor", state.descriptor.str()},
                          {"bias", to_flat(state.bias)},
                          {"running_mean", to_flat(state.running_mean)},
                          {"scale", state.scale},
                          {"running_var", state.running_var},
                          {"momentum", state.momentum},
                          {"epsilon", state.epsilon}};
}

BatchNormState state_from_json(const nlohmann::json& j) {
    BatchNormState state;
    state.descriptor = Descriptor::parse(j.at("descriptor").get<std::string>());
    state.bias = from_flat(j.at("bias").get<std::vector<double>>(), state.descriptor);
    state.running_mean =
        from_flat(j.at("running_mean").get<std::vector<double>>(), state.descriptor);
    state.scale = j.at("scale").get<double>();
    state.running_var = j.at("running_var").get<double>();
    state.momentum = j.at("momentum").get<double>();
    state.epsilon = j.at("epsilon").get<double>();
    return state;
}

std::vector<Point> pp_normalize_batch(std::span<const Point> batch, BatchNormState& state) {
    if (state.descriptor.family != Family::grassmannian_onb)
        throw std::invalid_argument("pp_normalize_batch: state must live on grass-onb");
    const auto manifold = make_manifold(state.descriptor);
    std::vector<Point> onb_batch;
    onb_batch.reserve(batch.size());
    for (const Point& p : batch) onb_batch.push_back(grassmann::pi_inverse(p, state.descriptor.p));
    const ForwardResult normalized = forward(onb_batch, state, *manifold);
    std::vector<Point> out;
    out.reserve(batch.size());
    for (const Point& u : normalized.batch) out.push_back(grassmann::pi(u));
    return out;
}

std::vector<BatchNormState> cor_init_states(int n, double scale, double momentum, double epsilon) {
    std::vector<BatchNormState> states;
    states.reserve(n - 1);
    for (int i = 1; i < n; ++i) {
        Descriptor row{Family::stereographic, -1.0, i, 0};
        states.push_back(init_state(*make_manifold(row), std::nullopt, scale, momentum, epsilon));
    }
    return states;
}

std::vector<Point> cor_gyrobn(std::span<const Point> batch,
                              std::vector<BatchNormState>& row_states) {
    if (batch.empty()) throw std::invalid_argument("cor_gyrobn: empty batch");
    const Eigen::Index n = batch[0].rows();
    if (static_cast<Eigen::Index>(row_states.size()) != n - 1)
        throw std::invalid_argument("cor_gyrobn: need n-1 row states");

    std::vector<correlation::PolyPoincare> decomposed;
    decomposed.reserve(batch.size());
    for (const Point& c : batch) decomposed.push_back(correlation::cor_to_poly(c));

    // Rows are independent product factors; normalize each through its ball.
    std::vector<correlation::PolyPoincare> normalized(batch.size(),
                                                      correlation::PolyPoincare(n - 1));
    for (Eigen::Index row = 0; row < n - 1; ++row) {
        const auto ball = make_manifold(row_states[row].descriptor);
        std::vector<Point> row_batch;
        row_batch.reserve(batch.size());
        for (const auto& poly : decomposed) row_batch.push_back(poly[row]);
        ForwardResult res = forward(row_batch, row_states[row], *ball);
        for (std::size_t i = 0; i < batch.size(); ++i) normalized[i][row] = res.batch[i].col(0);
    }

    std::vector<Point> out;
    out.reserve(batch.size());
    for (const auto& poly : normalized) out.push_back(correlation::poly_to_cor(poly));
    return out;
}

} // namespace gyrobn
