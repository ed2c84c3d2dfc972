#include "gyrobn/correlation_ops.hpp"

#include "gyrobn/batchnorm.hpp"
#include "gyrobn/frechet.hpp"
#include "gyrobn/manifold.hpp"
#include "gyrobn/stereo_ops.hpp"

#include <doctest.h>

using namespace gyrobn;

namespace {

Matrix sample_cor(Rng& rng, int n, double sigma = 0.5) {
    const auto m = make_manifold(Descriptor{Family::correlation, 0.0, n, 0});
    return m->random_point(rng, sigma);
}

} // namespace

TEST_CASE("the identity matrix maps to all-zero rows") {
    const auto rows = correlation::cor_to_poly(Matrix::Identity(5, 5));
    REQUIRE(rows.size() == 4);
    for (const Vector& row : rows) CHECK(row.norm() == 0.0);
    CHECK((correlation::poly_to_cor(rows) - Matrix::Identity(5, 5)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("the 2x2 case matches the frozen scalar oracle") {
    // rho = 0.6: Cholesky row 2 is (0.6, 0.8), mapping to 0.6/1.8 = 1/3.
    Matrix c(2, 2);
    c << 1.0, 0.6, 0.6, 1.0;
    const auto rows = correlation::cor_to_poly(c);
    REQUIRE(rows.size() == 1);
    REQUIRE(rows[0].size() == 1);
    CHECK(rows[0][0] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("cor_to_poly and poly_to_cor are mutually inverse") {
    for (int n = 2; n <= 8; ++n) {
        Rng rng(81 + n);
        for (int i = 0; i < 10; ++i) {
            const Matrix c = sample_cor(rng, n);
            const Matrix back = correlation::poly_to_cor(correlation::cor_to_poly(c));
            CHECK((back - c).cwiseAbs().maxCoeff() < 1e-9);
            CHECK((back.diagonal().array() - 1.0).abs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("poly_to_cor rejects mismatched row dimensions") {
    correlation::PolyPoincare rows{Vector::Zero(2)};
    CHECK_THROWS_AS(correlation::poly_to_cor(rows), std::invalid_argument);
}

TEST_CASE("cor_to_poly rejects matrices that are not positive-definite") {
    Matrix c(2, 2);
    c << 1.0, 1.5, 1.5, 1.0; // unit diagonal but indefinite
    CHECK_THROWS_AS(correlation::cor_to_poly(c), std::domain_error);
    CHECK_FALSE(correlation::is_correlation(c, 1e-10));
}

TEST_CASE("cor distance decomposes over the row balls") {
    const auto m = make_manifold("correlation:n=5");
    Rng rng(82);
    for (int i = 0; i < 15; ++i) {
        const Matrix x = sample_cor(rng, 5);
        const Matrix y = sample_cor(rng, 5);
        const auto a = correlation::cor_to_poly(x);
        const auto b = correlation::cor_to_poly(y);
        double sum = 0.0;
        for (std::size_t r = 0; r < a.size(); ++r) {
            const double d = stereo::distance(a[r], b[r], -1.0);
            sum += d * d;
        }
        CHECK(std::abs(m->distance(x, y) - std::sqrt(sum)) < 1e-12);
        CHECK(std::abs(m->gyrodist(x, y) - std::sqrt(sum)) < 1e-9);
    }
}

TEST_CASE("row-wise normalization of an identical batch with zero biases yields identity") {
    const int n = 4;
    Rng rng(83);
    const std::vector<Point> batch(6, sample_cor(rng, n));
    auto states = cor_init_states(n, /*scale=*/0.7);
    const auto out = cor_gyrobn(batch, states);
    for (const Point& c : out)
        CHECK((c - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("each normalized row batch has its Frechet mean at the row bias") {
    const int n = 5;
    Rng rng(84);
    std::vector<Point> batch;
    for (int i = 0; i < 24; ++i) batch.push_back(sample_cor(rng, n));
    auto states = cor_init_states(n);
    const auto out = cor_gyrobn(batch, states);

    for (int row = 0; row < n - 1; ++row) {
        const auto ball = make_manifold(states[row].descriptor);
        std::vector<Point> row_batch;
        for (const Point& c : out) row_batch.push_back(correlation::cor_to_poly(c)[row]);
        const MeanResult mean = frechet_mean(row_batch, *ball);
        CHECK(mean.converged);
        CHECK(ball->distance(mean.mean, states[row].bias) < 10.0 * states[row].mean_cfg.tol);
    }
}

TEST_CASE("cor_gyrobn equals phi-conjugated row-wise normalization") {
    const int n = 4;
    Rng rng(85);
    std::vector<Point> batch;
    for (int i = 0; i < 12; ++i) batch.push_back(sample_cor(rng, n));

    auto states = cor_init_states(n, 0.5);
    const auto direct = cor_gyrobn(batch, states);

    // Same computation spelled out through Phi by hand.
    auto states2 = cor_init_states(n, 0.5);
    std::vector<correlation::PolyPoincare> rows(batch.size());
    for (std::size_t i = 0; i < batch.size(); ++i) rows[i] = correlation::cor_to_poly(batch[i]);
    for (int r = 0; r < n - 1; ++r) {
        const auto ball = make_manifold(states2[r].descriptor);
        std::vector<Point> row_batch;
        for (const auto& poly : rows) row_batch.push_back(poly[r]);
        const ForwardResult res = forward(row_batch, states2[r], *ball);
        for (std::size_t i = 0; i < batch.size(); ++i) rows[i][r] = res.batch[i].col(0);
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
        const Matrix rebuilt = correlation::poly_to_cor(rows[i]);
        CHECK((rebuilt - direct[i]).cwiseAbs().maxCoeff() < 1e-12);
    }
}
