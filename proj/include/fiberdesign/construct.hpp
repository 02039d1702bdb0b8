#pragma once

#include "fiberdesign/weighted_design.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace fiberdesign {

/// Algebra whose Hopf map has base S^m (m = k + 1): S^1 -> R, S^2 -> C,
/// S^4 -> H, S^8 -> O.
Algebra hopf_algebra_for_base(int m);

/// Algebra of the Hopf map with total space S^d (d = 2k + 1).
Algebra hopf_algebra_for_total(int d);

/// Inputs of the lift. The base is either a design on FP^n (projective map)
/// or a design on S^{k+1} (Hopf map). `fibers` holds one design on S^k per
/// base point, or a single design shared by all. Empty `basepoints` selects
/// the default base points.
struct LiftSpec {
  WeightedDesign base;
  std::vector<WeightedDesign> fibers;
  std::vector<Eigen::VectorXd> basepoints;

  /// Algebra of the projection.
  Algebra algebra() const;
  /// Dimension d of the total sphere.
  int total_dim() const;
};

/// Default z_y: the canonical representative for projective bases, the
/// explicit-fibre point for Hopf bases.
std::vector<Eigen::VectorXd> default_basepoints(const WeightedDesign& base);

/// z_y u_y for seeded random unit u_y in F.
std::vector<Eigen::VectorXd> random_basepoints(const WeightedDesign& base, std::uint64_t seed);

/// X = disjoint union over y of {z_y z : z in Z_y}, lambda(z_y z) = lambda_Y(y) lambda_y(z).
/// Throws CollisionError if two lifted points coincide and std::invalid_argument
/// for a base point outside its fibre or a fibre on the wrong sphere.
WeightedDesign lift(const LiftSpec& spec);

/// Target of a collapse: FP^n under Pi_F, or S^{k+1} under pi_F.
struct CollapseTarget {
  enum class Kind { Projective, HopfBase };
  Kind kind;
  Algebra algebra;
  int n = 1;

  static CollapseTarget projective(Algebra algebra, int n) { return {Kind::Projective, algebra, n}; }
  static CollapseTarget hopf_base(Algebra algebra) { return {Kind::HopfBase, algebra, 1}; }

  Space space() const;
};

struct CollapseOptions {
  /// Check the precondition that the input is a t-design.
  bool verify_input = true;
  double tolerance = 1e-9;
};

/// Y = images of X under the projection, grouped by equality within 1e-10;
/// lambda_Y(y) sums lambda over each group. The result claims strength t/2.
WeightedDesign collapse(const WeightedDesign& design, const CollapseTarget& target, int t,
                        const CollapseOptions& options = {});

/// FP^1 -> S^{k+1} through h_F; weights unchanged.
WeightedDesign convert_to_sphere(const WeightedDesign& design);

/// S^{k+1} -> FP^1 through h_F^{-1}; the algebra defaults to the one with k + 1 = m.
WeightedDesign convert_to_projective(const WeightedDesign& design, std::optional<Algebra> algebra = std::nullopt);

}  // namespace fiberdesign
