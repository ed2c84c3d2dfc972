#pragma once

// Central numerical tolerances. Reconstruction-style checks use `reconstruction`,
// property/axiom suites use `property`, dual-route comparisons use `equivalence`.
namespace gyrobn::tol {

inline constexpr double reconstruction = 1e-10;
inline constexpr double property = 1e-8;
inline constexpr double equivalence = 1e-9;
inline constexpr double roundtrip = 1e-10;

// Input validation
inline constexpr double skew_input = 1e-12;
inline constexpr double membership = 1e-10;

// Guards inside formulas
inline constexpr double near_zero = 1e-12;     // x/||x|| series limit
inline constexpr double ball_clamp = 1e-15;    // artanh/atan argument clamp
inline constexpr double singular_branch = 1e-12;  // |D| threshold for the -mu0 branch
inline constexpr double arcsin_series = 1e-8;  // arcsin(s)/s -> 1 switch
inline constexpr double eig_floor = 1e-12;     // eigenvalue floor for SPD powers
inline constexpr double diag_overflow = 700.0; // |entry| cap before exp() overflows

} // namespace gyrobn::tol
