#pragma once

#include "gyrobn/linalg.hpp"

#include <cstdint>
#include <memory>
#include <string>

namespace gyrobn {

// Manifold elements and tangent vectors as dense arrays in the family's
// ambient representation: n x 1 for vector families, (n+1) x 1 for the radius
// model, n x p for the ONB Grassmannian, n x n for projectors / SPD /
// correlation matrices.
using Point = Matrix;
using Tangent = Matrix;

enum class Family {
    euclidean,
    stereographic,
    radius,
    klein,
    grassmannian_onb,
    grassmannian_pp,
    spd_aim,
    spd_lem,
    spd_lcm,
    correlation,
};

struct Descriptor {
    Family family = Family::euclidean;
    double curvature = 0.0; // K; 0 only for the euclidean family
    int n = 0;
    int p = 0; // Grassmannian only, 0 < p < n

    // Grammar: "stereo:K=-1:n=16", "radius:K=1:n=8", "klein:K=-0.5:n=4",
    // "grass-onb:n=50:p=10", "grass-pp:n=10:p=3", "spd-aim:n=4",
    // "spd-lem:n=4", "spd-lcm:n=4", "correlation:n=10", "euclidean:n=8".
    static Descriptor parse(const std::string& text);
    std::string str() const;
    bool operator==(const Descriptor& other) const = default;
};

// Deterministic random stream: mt19937_64 (standardized output) with explicit
// uniform/gaussian transforms, so generated batches are identical across
// platforms and standard-library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    ~Rng();
    Rng(Rng&&) noexcept;
    Rng& operator=(Rng&&) noexcept;
    Rng(const Rng&) = delete;
    Rng& operator=(const Rng&) = delete;

    // Independent stream for sample `index` of a run seeded with `seed`.
    static Rng substream(std::uint64_t seed, std::uint64_t index);

    double uniform();                       // [0, 1)
    double uniform(double lo, double hi);
    double gaussian();                      // standard normal, Box-Muller
    std::uint64_t bits();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_; // engine + cached Box-Muller draw
};

// The per-manifold gyro operation bundle. All operations are pure; instances
// are immutable and safe to share across threads.
class Manifold {
public:
    explicit Manifold(Descriptor desc) : desc_(desc) {}
    virtual ~Manifold() = default;

    const Descriptor& descriptor() const { return desc_; }
    std::string name() const { return desc_.str(); }

    virtual Point identity() const = 0;
    virtual Point oplus(const Point& x, const Point& y) const = 0;
    virtual Point ominus(const Point& x) const = 0;
    virtual Point odot(double t, const Point& x) const = 0;
    virtual Tangent log_identity(const Point& x) const = 0;
    virtual Point exp_identity(const Tangent& v) const = 0;
    virtual double metric_identity(const Tangent& v, const Tangent& w) const = 0;
    virtual double distance(const Point& x, const Point& y) const = 0;
    virtual bool contains(const Point& x, double tolerance) const = 0;

    // Standard-normal tangent coordinates at the identity, scaled by 1/sqrt(dim)
    // so the expected squared norm is ~1 regardless of ambient dimension.
    virtual Tangent random_tangent(Rng& rng) const = 0;

    // Project a drifted representative back onto the manifold (QR for ONB
    // points, constraint renormalization for the radius model, ...).
    virtual Point canonicalize(Point x) const { return x; }

    // gyr[x, y] z. Default is the definitional composition
    // (ominus(x oplus y)) oplus (x oplus (y oplus z)); families with a closed
    // form override it.
    virtual Point gyration(const Point& x, const Point& y, const Point& z) const;

    // G4 is asserted for every family except the (pseudo-reductive but
    // non-reductive) Grassmannian.
    virtual bool has_left_reduction() const { return true; }
    // V1-V5 are asserted only where proved: stereographic, radius,
    // Beltrami-Klein / Einstein, and the euclidean control.
    virtual bool is_gyrovector_space() const { return false; }

    // 1/sqrt(|K|) for constant-curvature families, 1 otherwise.
    virtual double natural_scale() const { return 1.0; }

    double gyronorm(const Point& x) const;
    double gyrodist(const Point& x, const Point& y) const;

    // Wrapped Gaussian: tangent at the identity scaled by
    // sigma * natural_scale(), pushed through exp_identity.
    virtual Point random_point(Rng& rng, double sigma) const;

protected:
    Descriptor desc_;
};

std::unique_ptr<Manifold> make_manifold(const Descriptor& desc);
std::unique_ptr<Manifold> make_manifold(const std::string& descriptor);

// Flat row-major serialization shape of a point for a descriptor.
std::pair<Eigen::Index, Eigen::Index> point_shape(const Descriptor& desc);

} // namespace gyrobn
