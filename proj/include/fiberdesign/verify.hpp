#pragma once

#include "fiberdesign/moments.hpp"
#include "fiberdesign/weighted_design.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fiberdesign {

inline constexpr double kDefaultTolerance = 1e-9;

enum class Method { Moment, Gegenbauer, LiftOracle, InnerProduct };

std::string method_name(Method method);
Method parse_method(std::string_view name);

/// Per-degree worst deviations and verdicts for degrees 0..tested_strength.
struct VerificationReport {
  int tested_strength = 0;
  Method method = Method::Moment;
  double tolerance = kDefaultTolerance;
  std::vector<double> deviation;
  std::vector<bool> degree_passed;

  bool passed() const;
  /// Lowest failing degree.
  std::optional<int> first_failure() const;
  /// Degrees whose verdict is fail.
  std::vector<int> failing_degrees() const;
};

/// Moment test: max |sum_x lambda(x) x^alpha - avg_{S^m} x^alpha| over each
/// degree s <= t. Throws CapExceeded past `cap` monomials.
VerificationReport verify_spherical(const WeightedDesign& design, int t, double tol = kDefaultTolerance,
                                    std::size_t cap = kDefaultMonomialCap);

/// Harmonic test: |sum_{i,j} lambda_i lambda_j P_l(<x_i, x_j>)| per degree l,
/// with |sum lambda - 1| at l = 0.
VerificationReport verify_spherical_gegenbauer(const WeightedDesign& design, int t, double tol = kDefaultTolerance);

/// Fibre design of strength >= `strength` on S^k used by the lift oracle.
WeightedDesign oracle_fiber_design(int k, int strength);

/// Projective test. LiftOracle lifts with (2t+1)-design fibres and runs the
/// moment test on S^d at 2t+1; degree s collects sphere degrees 2s and 2s+1.
/// InnerProduct checks sum_y lambda(y) |<x, y>|^{2s} against its FP^n average
/// over a seeded sample of x (not available over O).
VerificationReport verify_projective(const WeightedDesign& design, int t, double tol = kDefaultTolerance,
                                     Method method = Method::LiftOracle, std::size_t cap = kDefaultMonomialCap);

/// Dispatches on the design's space; `method` defaults to Moment for spheres
/// and LiftOracle for projective spaces.
VerificationReport verify(const WeightedDesign& design, int t, double tol = kDefaultTolerance,
                          std::optional<Method> method = std::nullopt, std::size_t cap = kDefaultMonomialCap);

inline constexpr std::uint64_t kInnerProductSeed = 0x5eed'f1be'75ULL;
inline constexpr int kInnerProductSamples = 200;

}  // namespace fiberdesign
