#include "gyrobn/manifold.hpp"

#include "gyrobn/correlation_ops.hpp"
#include "gyrobn/grassmann_ops.hpp"
#include "gyrobn/klein_ops.hpp"
#include "gyrobn/radius_ops.hpp"
#include "gyrobn/spd_ops.hpp"
#include "gyrobn/stereo_ops.hpp"
#include "gyrobn/tolerances.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

namespace gyrobn {

// ---------------------------------------------------------------------------
// Rng

struct Rng::Impl {
    std::mt19937_64 engine;
    bool has_cached = false;
    double cached = 0.0;
};

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

Rng::Rng(std::uint64_t seed) : impl_(new Impl{std::mt19937_64{seed}}) {}
Rng::~Rng() = default;
Rng::Rng(Rng&&) noexcept = default;
Rng& Rng::operator=(Rng&&) noexcept = default;

Rng Rng::substream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = seed ^ (0xA0761D6478BD642FULL + index * 0xE7037ED1A0B428DBULL);
    splitmix64(state);
    return Rng(splitmix64(state));
}

std::uint64_t Rng::bits() { return impl_->engine(); }

double Rng::uniform() {
    return static_cast<double>(impl_->engine() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::gaussian() {
    if (impl_->has_cached) {
        impl_->has_cached = false;
        return impl_->cached;
    }
    const double u1 = 1.0 - uniform(); // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    impl_->cached = r * std::sin(2.0 * M_PI * u2);
    impl_->has_cached = true;
    return r * std::cos(2.0 * M_PI * u2);
}

// ---------------------------------------------------------------------------
// Descriptor

namespace {

const char* family_token(Family f) {
    switch (f) {
        case Family::euclidean: return "euclidean";
        case Family::stereographic: return "stereo";
        case Family::radius: return "radius";
        case Family::klein: return "klein";
        case Family::grassmannian_onb: return "grass-onb";
        case Family::grassmannian_pp: return "grass-pp";
        case Family::spd_aim: return "spd-aim";
        case Family::spd_lem: return "spd-lem";
        case Family::spd_lcm: return "spd-lcm";
        case Family::correlation: return "correlation";
    }
    throw std::logic_error("unreachable");
}

bool needs_curvature(Family f) {
    return f == Family::stereographic || f == Family::radius || f == Family::klein;
}

} // namespace

Descriptor Descriptor::parse(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ':')) parts.push_back(item);
    if (parts.empty()) throw std::invalid_argument("descriptor: empty string");

    Descriptor d;
    const std::string& fam = parts[0];
    if (fam == "euclidean") d.family = Family::euclidean;
    else if (fam == "stereo") d.family = Family::stereographic;
    else if (fam == "radius") d.family = Family::radius;
    else if (fam == "klein") d.family = Family::klein;
    else if (fam == "grass-onb") d.family = Family::grassmannian_onb;
    else if (fam == "grass-pp") d.family = Family::grassmannian_pp;
    else if (fam == "spd-aim") d.family = Family::spd_aim;
    else if (fam == "spd-lem") d.family = Family::spd_lem;
    else if (fam == "spd-lcm") d.family = Family::spd_lcm;
    else if (fam == "correlation") d.family = Family::correlation;
    else throw std::invalid_argument("descriptor: unknown family '" + fam + "'");

    bool saw_k = false;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const auto eq = parts[i].find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("descriptor: expected key=value, got '" + parts[i] + "'");
        const std::string key = parts[i].substr(0, eq);
        const std::string value = parts[i].substr(eq + 1);
        try {
            if (key == "K") { d.curvature = std::stod(value); saw_k = true; }
            else if (key == "n") d.n = std::stoi(value);
            else if (key == "p") d.p = std::stoi(value);
            else throw std::invalid_argument("descriptor: unknown key '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("descriptor: bad value for '" + key + "'");
        }
    }

    if (d.n < 1) throw std::invalid_argument("descriptor: n must be positive");
    if (needs_curvature(d.family)) {
        if (!saw_k || d.curvature == 0.0)
            throw std::invalid_argument("descriptor: this family requires K != 0 "
                                        "(use 'euclidean:n=...' for the flat limit)");
        if (d.family == Family::klein && d.curvature > 0.0)
            throw std::invalid_argument("descriptor: klein requires K < 0");
    } else if (saw_k) {
        throw std::invalid_argument("descriptor: K is not a parameter of this family");
    }
    const bool grass = d.family == Family::grassmannian_onb || d.family == Family::grassmannian_pp;
    if (grass && !(0 < d.p && d.p < d.n))
        throw std::invalid_argument("descriptor: grassmannian requires 0 < p < n");
    if (!grass && d.p != 0)
        throw std::invalid_argument("descriptor: p is only a grassmannian parameter");
    if (d.family == Family::correlation && d.n < 2)
        throw std::invalid_argument("descriptor: correlation requires n >= 2");
    return d;
}

std::string Descriptor::str() const {
    char buffer[96];
    if (needs_curvature(family)) {
        std::snprintf(buffer, sizeof buffer, "%s:K=%g:n=%d", family_token(family), curvature, n);
    } else if (family == Family::grassmannian_onb || family == Family::grassmannian_pp) {
        std::snprintf(buffer, sizeof buffer, "%s:n=%d:p=%d", family_token(family), n, p);
    } else {
        std::snprintf(buffer, sizeof buffer, "%s:n=%d", family_token(family), n);
    }
    return buffer;
}

// ---------------------------------------------------------------------------
// Manifold base

Point Manifold::gyration(const Point& x, const Point& y, const Point& z) const {
    return oplus(ominus(oplus(x, y)), oplus(x, oplus(y, z)));
}

double Manifold::gyronorm(const Point& x) const {
    const Tangent v = log_identity(x);
    return std::sqrt(std::max(metric_identity(v, v), 0.0));
}

double Manifold::gyrodist(const Point& x, const Point& y) const {
    return gyronorm(oplus(ominus(x), y));
}

Point Manifold::random_point(Rng& rng, double sigma) const {
    return canonicalize(exp_identity(sigma * natural_scale() * random_tangent(rng)));
}

// ---------------------------------------------------------------------------
// Family adapters

namespace {

Vector as_vector(const Point& x) { return x.col(0); }

Matrix gaussian_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rng.gaussian();
    return m;
}

class EuclideanManifold final : public Manifold {
public:
    using Manifold::Manifold;

    Point identity() const override { return Vector::Zero(desc_.n); }
    Point oplus(const Point& x, const Point& y) const override { return x + y; }
    Point ominus(const Point& x) const override { return -x; }
    Point odot(double t, const Point& x) const override { return t * x; }
    Tangent log_identity(const Point& x) const override { return x; }
    Point exp_identity(const Tangent& v) const override { return v; }
    double metric_identity(const Tangent& v, const Tangent& w) const override {
        return v.col(0).dot(w.col(0));
    }
    double distance(const Point& x, const Point& y) const override { return (x - y).norm(); }
    bool contains(const Point& x, double) const override {
        return x.cols() == 1 && x.rows() == desc_.n && x.allFinite();
    }
    Tangent random_tangent(Rng& rng) const override {
        return gaussian_matrix(rng, desc_.n, 1) / std::sqrt(double(desc_.n));
    }
    Point gyration(const Point&, const Point&, const Point& z) const override { return z; }
    bool is_gyrovector_space() const override { return true; }
};

class StereographicManifold final : public Manifold {
public:
    using Manifold::Manifold;

    Point identity() const override { return Vector::Zero(desc_.n); }
    Point oplus(const Point& x, const Point& y) const override {
        return stereo::oplus(as_vector(x), as_vector(y), desc_.curvature);
    }
    Point ominus(const Point& x) const override { return -x; }
    Point odot(double t, const Point& x) const override {
        return stereo::odot(t, as_vector(x), desc_.curvature);
    }
    Tangent log_identity(const Point& x) const override {
        return stereo::log0(as_vector(x), desc_.curvature);
    }
    Point exp_identity(const Tangent& v) const override {
        return stereo::exp0(as_vector(v), desc_.curvature);
    }
    double metric_identity(const Tangent& v, const Tangent& w) const override {
        return 4.0 * v.col(0).dot(w.col(0)); // lambda_0^2 = 4
    }
    double distance(const Point& x, const Point& y) const override {
        return stereo::distance(as_vector(x), as_vector(y), desc_.curvature);
    }
    bool contains(const Point& x, double tolerance) const override {
        return x.cols() == 1 && x.rows() == desc_.n &&
               stereo::in_domain(as_vector(x), desc_.curvature, tolerance);
    }
    Tangent random_tangent(Rng& rng) const override {
        return gaussian_matrix(rng, desc_.n, 1) / std::sqrt(double(desc_.n));
    }
    Point canonicalize(Point x) const override {
        const double k = desc_.curvature;
        if (k < 0) {
            const double limit = (1.0 - tol::ball_clamp) / std::sqrt(-k);
            const double norm = x.norm();
            if (norm >= limit) x *= limit / norm;
        }
        return x;
    }
    Point gyration(const Point& x, const Point& y, const Point& z) const override {
        return stereo::gyration(as_vector(x), as_vector(y), as_vector(z), desc_.curvature);
    }
    bool is_gyrovector_space() const override { return true; }
    double natural_scale() const override { return 1.0 / std::sqrt(std::abs(desc_.curvature)); }
};

class RadiusManifold final : public Manifold {
public:
    using Manifold::Manifold;

    Point identity() const override { return radius::origin(desc_.n, desc_.curvature); }
    Point oplus(const Point& x, const Point& y) const override {
        return radius::oplus(as_vector(x), as_vector(y), desc_.curvature);
    }
    Point ominus(const Point& x) const override { return radius::ominus(as_vector(x)); }
    Point odot(double t, const Point& x) const override {
        return radius::odot(t, as_vector(x), desc_.curvature);
    }
    Tangent log_identity(const Point& x) const override {
        return radius::log_origin(as_vector(x), desc_.curvature);
    }
    Point exp_identity(const Tangent& v) const override {
        return radius::exp_origin(as_vector(v), desc_.curvature);
    }
    double metric_identity(const Tangent& v, const Tangent& w) const override {
        return v.col(0).tail(desc_.n).dot(w.col(0).tail(desc_.n));
    }
    double distance(const Point& x, const Point& y) const override {
        return radius::distance(as_vector(x), as_vector(y), desc_.curvature);
    }
    bool contains(const Point& x, double tolerance) const override {
        return x.cols() == 1 && x.rows() == desc_.n + 1 &&
               radius::in_domain(as_vector(x), desc_.curvature, tolerance);
    }
    Tangent random_tangent(Rng& rng) const override {
        Vector v = Vector::Zero(desc_.n + 1);
        v.tail(desc_.n) = gaussian_matrix(rng, desc_.n, 1) / std::sqrt(double(desc_.n));
        return v;
    }
    Point canonicalize(Point x) const override {
        return radius::canonicalize(as_vector(x), desc_.curvature);
    }
    bool is_gyrovector_space() const override { return true; }
    double natural_scale() const override { return 1.0 / std::sqrt(std::abs(desc_.curvature)); }
};

class KleinManifold final : public Manifold {
public:
    using Manifold::Manifold;

    Point identity() const override { return Vector::Zero(desc_.n); }
    Point oplus(const Point& x, const Point& y) const override {
        return klein::oplus(as_vector(x), as_vector(y), desc_.curvature);
    }
    Point ominus(const Point& x) const override { return -x; }
    Point odot(double t, const Point& x) const override {
        return klein::odot(t, as_vector(x), desc_.curvature);
    }
    Tangent log_identity(const Point& x) const override {
        return klein::log0(as_vector(x), desc_.curvature);
    }
    Point exp_identity(const Tangent& v) const override {
        return klein::exp0(as_vector(v), desc_.curvature);
    }
    double metric_identity(const Tangent& v, const Tangent& w) const override {
        return v.col(0).dot(w.col(0)); // g_0 is the plain inner product
    }
    double distance(const Point& x, const Point& y) const override {
        return klein::distance(as_vector(x), as_vector(y), desc_.curvature);
    }
    bool contains(const Point& x, double tolerance) const override {
        return x.cols() == 1 && x.rows() == desc_.n &&
               klein::in_domain(as_vector(x), desc_.curvature, tolerance);
    }
    Tangent random_tangent(Rng& rng) const override {
        return gaussian_matrix(rng, desc_.n, 1) / std::sqrt(double(desc_.n));
    }
    Point canonicalize(Point x) const override {
        const double limit = (1.0 - tol::ball_clamp) / std::sqrt(-desc_.curvature);
        const double norm = x.norm();
        if (norm >= limit) x *= limit / norm;
        return x;
    }
    Point gyration(const Point& x, const Point& y, const Point& z) const override {
        return klein::gyration(as_vector(x), as_vector(y), as_vector(z), desc_.curvature);
    }
    bool is_gyrovector_space() const override { return true; }
    double natural_scale() const override { return 1.0 / std::sqrt(std::abs(desc_.curvature)); }
};

class OnbGrassmannManifold final : public Manifold {
public:
    using Manifold::Manifold;

    Point identity() const override { return grassmann::identity_onb(desc_.n, desc_.p); }
    Point oplus(const Point& x, const Point& y) const override { return grassmann::oplus(x, y); }
    Point ominus(const Point& x) const override { return grassmann::ominus(x); }
    Point odot(double t, const Point& x) const override { return grassmann::odot(t, x); }
    Tangent log_identity(const Point& x) const override {
        return grassmann::onb_log(identity(), x);
    }
    Point exp_identity(const Tangent& v) const override {
        return grassmann::onb_exp(identity(), v);
    }
    double metric_identity(const Tangent& v, const Tangent& w) const override {
        return (v.transpose() * w).trace();
    }
    double distance(const Point& x, const Point& y) const override {
        return grassmann::distance(x, y);
    }
    bool contains(const Point& x, double tolerance) const override {
        return x.rows() == desc_.n && x.cols() == desc_.p && grassmann::is_onb(x, tolerance);
    }
    Tangent random_tangent(Rng& rng) const override {
        Matrix v = Matrix::Zero(desc_.n, desc_.p);
        v.bottomRows(desc_.n - desc_.p) =
            gaussian_matrix(rng, desc_.n - desc_.p, desc_.p) /
            std::sqrt(double((desc_.n - desc_.p) * desc_.p));
        return v;
    }
    Point canonicalize(Point x) const override { return grassmann::reorthonormalize(x); }
    bool has_left_reduction() const override { return false; }
};

class PpGrassmannManifold final : public Manifold {
public:
    using Manifold::Manifold;

    Point identity() const override { return grassmann::identity_pp(desc_.n, desc_.p); }
    Point oplus(const Point& x, const Point& y) const override {
        const Matrix rot = rotation(x);
        return linalg::symmetrize(rot * y * rot.transpose());
    }
    Point ominus(const Point& x) const override {
        const Matrix rot = rotation(x).transpose(); // mexp(-Omega)
        return linalg::symmetrize(rot * identity() * rot.transpose());
    }
    Point odot(double t, const Point& x) const override {
        const Matrix rot = linalg::mexp_skew(t * grassmann::fast_bracket(onb_of(x)));
        return linalg::symmetrize(rot * identity() * rot.transpose());
    }
    Tangent log_identity(const Point& x) const override {
        const Matrix delta = grassmann::onb_log(grassmann::identity_onb(desc_.n, desc_.p), onb_of(x));
        const Matrix bottom = delta.bottomRows(desc_.n - desc_.p);
        Matrix v = Matrix::Zero(desc_.n, desc_.n);
        v.bottomLeftCorner(desc_.n - desc_.p, desc_.p) = bottom;
        v.topRightCorner(desc_.p, desc_.n - desc_.p) = bottom.transpose();
        return v;
    }
    Point exp_identity(const Tangent& v) const override {
        const Matrix omega =
            grassmann::bracket_from_block(v.bottomLeftCorner(desc_.n - desc_.p, desc_.p), desc_.n);
        const Matrix rot = linalg::mexp_skew(omega);
        return linalg::symmetrize(rot * identity() * rot.transpose());
    }
    double metric_identity(const Tangent& v, const Tangent& w) const override {
        return 0.5 * (v.transpose() * w).trace();
    }
    double distance(const Point& x, const Point& y) const override {
        return grassmann::distance(onb_of(x), onb_of(y));
    }
    bool contains(const Point& x, double tolerance) const override {
        return x.rows() == desc_.n && grassmann::is_projector(x, desc_.p, tolerance);
    }
    Tangent random_tangent(Rng& rng) const override {
        const Matrix bottom = gaussian_matrix(rng, desc_.n - desc_.p, desc_.p) /
                              std::sqrt(double((desc_.n - desc_.p) * desc_.p));
        Matrix v = Matrix::Zero(desc_.n, desc_.n);
        v.bottomLeftCorner(desc_.n - desc_.p, desc_.p) = bottom;
        v.topRightCorner(desc_.p, desc_.n - desc_.p) = bottom.transpose();
        return v;
    }
    Point canonicalize(Point x) const override { return linalg::symmetrize(x); }
    bool has_left_reduction() const override { return false; }

private:
    Matrix onb_of(const Point& x) const { return grassmann::pi_inverse(x, desc_.p); }
    Matrix rotation(const Point& x) const {
        return linalg::mexp_skew(grassmann::fast_bracket(onb_of(x)));
    }
};

class SpdManifold final : public Manifold {
public:
    SpdManifold(Descriptor desc, spd::Metric metric) : Manifold(desc), metric_(metric) {}

    Point identity() const override { return Matrix::Identity(desc_.n, desc_.n); }
    Point oplus(const Point& x, const Point& y) const override {
        return spd::oplus(metric_, x, y);
    }
    Point ominus(const Point& x) const override { return spd::ominus(metric_, x); }
    Point odot(double t, const Point& x) const override { return spd::odot(metric_, t, x); }
    Tangent log_identity(const Point& x) const override {
        return spd::log_identity(metric_, x);
    }
    Point exp_identity(const Tangent& v) const override {
        return spd::exp_identity(metric_, v);
    }
    double metric_identity(const Tangent& v, const Tangent& w) const override {
        return (v.transpose() * w).trace();
    }
    double distance(const Point& x, const Point& y) const override {
        return spd::distance(metric_, x, y);
    }
    bool contains(const Point& x, double tolerance) const override {
        return x.rows() == desc_.n && x.cols() == desc_.n && spd::is_spd(x, tolerance);
    }
    Tangent random_tangent(Rng& rng) const override {
        const double dim = double(desc_.n * (desc_.n + 1)) / 2.0;
        if (metric_ == spd::Metric::lcm) {
            Matrix v = gaussian_matrix(rng, desc_.n, desc_.n);
            v.triangularView<Eigen::StrictlyUpper>().setZero();
            return v / std::sqrt(dim);
        }
        const Matrix a = gaussian_matrix(rng, desc_.n, desc_.n);
        return 0.5 * (a + a.transpose()) / std::sqrt(dim);
    }
    Point canonicalize(Point x) const override {
        if (metric_ == spd::Metric::lcm) return x; // outputs are L L^T, already symmetric
        return linalg::symmetrize(x);
    }
    Point gyration(const Point& x, const Point& y, const Point& z) const override {
        if (metric_ == spd::Metric::aim) return Manifold::gyration(x, y, z);
        return z; // LEM/LCM are abelian groups
    }

private:
    spd::Metric metric_;
};

class CorrelationManifold final : public Manifold {
public:
    using Manifold::Manifold;

    Point identity() const override { return Matrix::Identity(desc_.n, desc_.n); }
    Point oplus(const Point& x, const Point& y) const override {
        return map2(x, y, [](const Vector& a, const Vector& b) { return stereo::oplus(a, b, -1.0); });
    }
    Point ominus(const Point& x) const override {
        return map1(x, [](const Vector& a) { return Vector(-a); });
    }
    Point odot(double t, const Point& x) const override {
        return map1(x, [t](const Vector& a) { return stereo::odot(t, a, -1.0); });
    }
    Tangent log_identity(const Point& x) const override {
        correlation::PolyPoincare rows = correlation::cor_to_poly(x);
        for (Vector& row : rows) row = stereo::log0(row, -1.0);
        return correlation::flatten(rows);
    }
    Point exp_identity(const Tangent& v) const override {
        correlation::PolyPoincare rows = correlation::unflatten(v.col(0), desc_.n);
        for (Vector& row : rows) row = stereo::exp0(row, -1.0);
        return correlation::poly_to_cor(rows);
    }
    double metric_identity(const Tangent& v, const Tangent& w) const override {
        return 4.0 * v.col(0).dot(w.col(0)); // each row ball carries lambda_0^2 = 4
    }
    double distance(const Point& x, const Point& y) const override {
        const auto a = correlation::cor_to_poly(x);
        const auto b = correlation::cor_to_poly(y);
        double sum = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double d = stereo::distance(a[i], b[i], -1.0);
            sum += d * d;
        }
        return std::sqrt(sum);
    }
    bool contains(const Point& x, double tolerance) const override {
        return x.rows() == desc_.n && correlation::is_correlation(x, tolerance);
    }
    Tangent random_tangent(Rng& rng) const override {
        const Eigen::Index dim = correlation::flat_dim(desc_.n);
        return gaussian_matrix(rng, dim, 1) / std::sqrt(double(dim));
    }
    Point gyration(const Point& x, const Point& y, const Point& z) const override {
        const auto a = correlation::cor_to_poly(x);
        const auto b = correlation::cor_to_poly(y);
        auto c = correlation::cor_to_poly(z);
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = stereo::gyration(a[i], b[i], c[i], -1.0);
        return correlation::poly_to_cor(c);
    }
    Point canonicalize(Point x) const override {
        x = linalg::symmetrize(x);
        Vector d = x.diagonal().cwiseMax(tol::near_zero).cwiseInverse().cwiseSqrt();
        return d.asDiagonal() * x * d.asDiagonal();
    }
    // Wrapped Gaussian on spd-aim followed by Cor(Sigma) = D^-1/2 Sigma D^-1/2.
    Point random_point(Rng& rng, double sigma) const override {
        const double dim = double(desc_.n * (desc_.n + 1)) / 2.0;
        const Matrix a = gaussian_matrix(rng, desc_.n, desc_.n);
        const Matrix v = sigma * 0.5 * (a + a.transpose()) / std::sqrt(dim);
        return canonicalize(linalg::mexp_sym(v));
    }

private:
    template <typename F>
    Point map1(const Point& x, F&& f) const {
        auto rows = correlation::cor_to_poly(x);
        for (Vector& row : rows) row = f(row);
        return correlation::poly_to_cor(rows);
    }
    template <typename F>
    Point map2(const Point& x, const Point& y, F&& f) const {
        auto a = correlation::cor_to_poly(x);
        const auto b = correlation::cor_to_poly(y);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = f(a[i], b[i]);
        return correlation::poly_to_cor(a);
    }
};

} // namespace

std::unique_ptr<Manifold> make_manifold(const Descriptor& desc) {
    switch (desc.family) {
        case Family::euclidean: return std::make_unique<EuclideanManifold>(desc);
        case Family::stereographic: return std::make_unique<StereographicManifold>(desc);
        case Family::radius: return std::make_unique<RadiusManifold>(desc);
        case Family::klein: return std::make_unique<KleinManifold>(desc);
        case Family::grassmannian_onb: return std::make_unique<OnbGrassmannManifold>(desc);
        case Family::grassmannian_pp: return std::make_unique<PpGrassmannManifold>(desc);
        case Family::spd_aim: return std::make_unique<SpdManifold>(desc, spd::Metric::aim);
        case Family::spd_lem: return std::make_unique<SpdManifold>(desc, spd::Metric::lem);
        case Family::spd_lcm: return std::make_unique<SpdManifold>(desc, spd::Metric::lcm);
        case Family::correlation: return std::make_unique<CorrelationManifold>(desc);
    }
    throw std::logic_error("unreachable");
}

std::unique_ptr<Manifold> make_manifold(const std::string& descriptor) {
    return make_manifold(Descriptor::parse(descriptor));
}

std::pair<Eigen::Index, Eigen::Index> point_shape(const Descriptor& desc) {
    switch (desc.family) {
        case Family::euclidean:
        case Family::stereographic:
        case Family::klein:
            return {desc.n, 1};
        case Family::radius:
            return {desc.n + 1, 1};
        case Family::grassmannian_onb:
            return {desc.n, desc.p};
        case Family::grassmannian_pp:
        case Family::spd_aim:
        case Family::spd_lem:
        case Family::spd_lcm:
        case Family::correlation:
            return {desc.n, desc.n};
    }
    throw std::logic_error("unreachable");
}

} // namespace gyrobn
