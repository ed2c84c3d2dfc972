// gyrobn command-line front end: batch generation, normalization runs with
// before/after reports, axiom/property suites, and the closed-form benchmark.
//
// Exit codes: 0 success, 1 validation failure, 2 suite failure.

#include "gyrobn/axioms.hpp"
#include "gyrobn/batch_io.hpp"
#include "gyrobn/batchnorm.hpp"
#include "gyrobn/frechet.hpp"
#include "gyrobn/radius_ops.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>

namespace {

using namespace gyrobn;

std::vector<double> flat(const Point& x) {
    std::vector<double> out;
    out.reserve(x.size());
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j) out.push_back(x(i, j));
    return out;
}

void emit(const nlohmann::json& doc, const std::string& path) {
    if (path.empty()) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << doc.dump(2) << "\n";
}

int cmd_gen(const std::string& descriptor, int n, double sigma, std::uint64_t seed,
            const std::string& out_path) {
    const auto manifold = make_manifold(descriptor);
    BatchFile batch;
    batch.descriptor = manifold->descriptor();
    batch.seed = seed;
    batch.points.reserve(n);
    for (int i = 0; i < n; ++i) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(i));
        batch.points.push_back(manifold->random_point(rng, sigma));
    }
    write_batch(out_path, batch);
    return 0;
}

int cmd_bn(const std::string& in_path, const std::string& bias_path, double scale, double eps,
           double momentum, int mean_iters, const std::string& out_path,
           const std::string& report_path) {
    const BatchFile input = read_batch(in_path);
    const auto manifold = make_manifold(input.descriptor);

    std::optional<Point> bias;
    if (!bias_path.empty()) {
        const BatchFile bias_file = read_batch(bias_path);
        if (bias_file.descriptor != input.descriptor)
            throw std::runtime_error("bias descriptor " + bias_file.descriptor.str() +
                                     " does not match batch descriptor " + input.descriptor.str());
        if (bias_file.points.empty()) throw std::runtime_error("bias file holds no point");
        bias = bias_file.points.front();
    }

    BatchNormState state = init_state(*manifold, bias, scale, momentum, eps);
    state.mean_cfg.max_iters = mean_iters;
    const ForwardResult result = forward(input.points, state, *manifold);

    if (!out_path.empty()) {
        BatchFile normalized;
        normalized.descriptor = input.descriptor;
        normalized.seed = input.seed;
        normalized.points = result.batch;
        write_batch(out_path, normalized);
    }

    nlohmann::json report{{"descriptor", input.descriptor.str()},
                          {"count", input.points.size()},
                          {"pre_mean", flat(result.report.pre_mean)},
                          {"pre_var", result.report.pre_var},
                          {"post_mean", flat(result.report.post_mean)},
                          {"post_var", result.report.post_var},
                          {"mean_iters", result.report.mean_iters},
                          {"residual_to_bias", result.report.residual_to_bias},
                          {"scale", scale},
                          {"eps", eps},
                          {"momentum", momentum}};
    emit(report, report_path);
    return 0;
}

int cmd_check(const std::string& descriptor, int samples, std::uint64_t seed, double sigma,
              const std::string& report_path) {
    const auto manifold = make_manifold(descriptor);
    SuiteConfig cfg;
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.sigma = sigma;
    SuiteReport report = axiom_suite(*manifold, cfg);

    // The Poincare ball also runs the translations that must FAIL isometry.
    if (manifold->descriptor().family == Family::stereographic &&
        manifold->descriptor().curvature < 0) {
        const SuiteReport negatives = negative_control_suite(*manifold, samples, seed);
        for (const auto& law : negatives.laws) report.laws.push_back(law);
    }

    emit(suite_to_json(report), report_path);
    return report.all_pass() ? 0 : 2;
}

int cmd_bench(const std::vector<int>& dims, int batch_size, int repeats,
              const std::string& out_path) {
    using clock = std::chrono::steady_clock;
    std::string csv = "geometry,dim,variant,mean_us,median_us,agreement\n";
    bool agree_ok = true;

    for (const double curvature : {-1.0, 1.0}) {
        const std::string geometry = curvature < 0 ? "hyperboloid" : "sphere";
        for (const int dim : dims) {
            Descriptor desc{Family::radius, curvature, dim, 0};
            const auto manifold = make_manifold(desc);
            std::vector<Vector> xs, ys;
            xs.reserve(batch_size);
            ys.reserve(batch_size);
            for (int i = 0; i < batch_size; ++i) {
                Rng rng = Rng::substream(7u, static_cast<std::uint64_t>(i));
                xs.push_back(manifold->random_point(rng, 0.5));
                ys.push_back(manifold->random_point(rng, 0.5));
            }

            double agreement = 0.0;
            for (int i = 0; i < batch_size; ++i) {
                const Vector a = radius::oplus(xs[i], ys[i], curvature);
                const Vector b = radius::oplus_composed(xs[i], ys[i], curvature);
                agreement = std::max(agreement, (a - b).cwiseAbs().maxCoeff());
            }
            if (agreement >= 1e-9) agree_ok = false;

            auto time_variant = [&](auto&& op) {
                std::vector<double> micros(repeats);
                for (int r = 0; r < repeats; ++r) {
                    const auto start = clock::now();
                    double sink = 0.0;
                    for (int i = 0; i < batch_size; ++i) sink += op(xs[i], ys[i])[0];
                    const auto stop = clock::now();
                    volatile double keep = sink;
                    (void)keep;
                    micros[r] =
                        std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count() /
                        1000.0;
                }
                std::vector<double> sorted = micros;
                std::sort(sorted.begin(), sorted.end());
                const double mean =
                    std::accumulate(micros.begin(), micros.end(), 0.0) / micros.size();
                return std::pair<double, double>{mean, sorted[sorted.size() / 2]};
            };

            const auto closed = time_variant(
                [&](const Vector& x, const Vector& y) { return radius::oplus(x, y, curvature); });
            const auto composed = time_variant([&](const Vector& x, const Vector& y) {
                return radius::oplus_composed(x, y, curvature);
            });

            char line[256];
            std::snprintf(line, sizeof line, "%s,%d,closed,%.3f,%.3f,%.3e\n", geometry.c_str(),
                          dim, closed.first, closed.second, agreement);
            csv += line;
            std::snprintf(line, sizeof line, "%s,%d,composition,%.3f,%.3f,%.3e\n",
                          geometry.c_str(), dim, composed.first, composed.second, agreement);
            csv += line;
        }
    }

    if (out_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open " + out_path);
        out << csv;
    }
    return agree_ok ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pseudo-reductive gyrogroups and GyroBN over seven geometries"};
    app.require_subcommand(1);

    std::string manifold_str, out_path, report_path, in_path, bias_path;
    int n = 64, samples = 200, mean_iters = 50, batch_size = 10000, repeats = 20;
    double sigma = 0.5, scale = 1.0, eps = 1e-5, momentum = 0.1;
    std::uint64_t seed = 0;
    std::vector<int> dims{16, 64, 256, 1024};

    auto* gen = app.add_subcommand("gen", "sample a batch of on-manifold points");
    gen->add_option("--manifold", manifold_str, "descriptor, e.g. stereo:K=-1:n=16")->required();
    gen->add_option("--n", n, "number of samples");
    gen->add_option("--sigma", sigma, "wrapped-Gaussian scale");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--out", out_path, "output batch file")->required();

    auto* bn = app.add_subcommand("bn", "normalize a batch and report statistics");
    bn->add_option("--in", in_path, "input batch file")->required();
    bn->add_option("--bias", bias_path, "batch file whose first point is the bias (default: identity)");
    bn->add_option("--scale", scale, "scaling parameter s");
    bn->add_option("--eps", eps, "numerical-stability epsilon");
    bn->add_option("--momentum", momentum, "running-statistics momentum");
    bn->add_option("--mean-iters", mean_iters, "Karcher iteration budget");
    bn->add_option("--out", out_path, "normalized batch output path");
    bn->add_option("--report", report_path, "JSON report path (default: stdout)");

    auto* check = app.add_subcommand("check", "run the axiom/property suite");
    check->add_option("--manifold", manifold_str, "descriptor")->required();
    check->add_option("--samples", samples, "random samples per law");
    check->add_option("--seed", seed, "random seed");
    check->add_option("--sigma", sigma, "sample scale");
    check->add_option("--report", report_path, "JSON report path (default: stdout)");

    auto* bench = app.add_subcommand("bench", "time closed-form vs composed radius gyroaddition");
    bench->add_option("--dims", dims, "dimensions to time (comma separated)")->delimiter(',');
    bench->add_option("--batch-size", batch_size, "points per timing pass");
    bench->add_option("--repeats", repeats, "timing repetitions");
    bench->add_option("--out", out_path, "CSV output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1; // --help is a success; usage errors are validation failures
    }

    try {
        if (gen->parsed()) return cmd_gen(manifold_str, n, sigma, seed, out_path);
        if (bn->parsed())
            return cmd_bn(in_path, bias_path, scale, eps, momentum, mean_iters, out_path,
                          report_path);
        if (check->parsed()) return cmd_check(manifold_str, samples, seed, sigma, report_path);
        if (bench->parsed()) return cmd_bench(dims, batch_size, repeats, out_path);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 1;
}
