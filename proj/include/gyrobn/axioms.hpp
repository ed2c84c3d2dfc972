#pragma once

#include "gyrobn/manifold.hpp"

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

namespace gyrobn {

struct LawReport {
    std::string name;
    int samples = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    // Negative controls: the entry passes when the residual EXCEEDS the
    // tolerance, demonstrating that the map is not a gyroisometry.
    bool expected_fail = false;
};

struct SuiteReport {
    std::string descriptor;
    int samples = 0;
    std::uint64_t seed = 0;
    std::vector<LawReport> laws;
    bool all_pass() const;
    const LawReport* find(const std::string& name) const;
};

struct SuiteConfig {
    int samples = 200;
    std::uint64_t seed = 0;
    double tolerance = 1e-8;
    double sigma = 0.5;
    bool family_invariants = true; // closed-form/isometry checks on top of G/V laws
};

// Numerical gyrogroup axiom suite: G1-G3 (+G4 where asserted),
// pseudo-reduction, left cancellation, gyrocommutativity, the gyroisometry
// laws, and V1-V5 on proven gyrovector spaces. Samples are evaluated on
// independent per-sample RNG streams and may run on worker threads.
SuiteReport axiom_suite(const Manifold& manifold, const SuiteConfig& cfg);

// Right gyrotranslation and both coaddition translations on the Poincare
// ball; all three are expected to fail the isometry check.
SuiteReport negative_control_suite(const Manifold& manifold, int samples, std::uint64_t seed);

nlohmann::json suite_to_json(const SuiteReport& report);

} // namespace gyrobn
