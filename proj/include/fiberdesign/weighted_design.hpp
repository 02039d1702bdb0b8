#pragma once

#include "fiberdesign/geometry.hpp"

#include <Eigen/Core>

#include <optional>
#include <string>
#include <utility>

namespace fiberdesign {

/// A finite point set with positive weights summing to one, on a sphere or a
/// projective space. Points are the columns of `points()`; projective points
/// are stored by canonical representative.
class WeightedDesign {
 public:
  /// Validates weights (positive, sum 1 within 1e-12), unit norms and pairwise
  /// distinctness; canonicalizes projective representatives.
  WeightedDesign(Space space, Eigen::MatrixXd points, Eigen::VectorXd weights, std::string name = {},
                 std::optional<int> claimed_strength = std::nullopt);

  /// Uniform weights 1/|X|.
  static WeightedDesign uniform(Space space, Eigen::MatrixXd points, std::string name = {},
                                std::optional<int> claimed_strength = std::nullopt);

  const Space& space() const { return space_; }
  const Eigen::MatrixXd& points() const { return points_; }
  const Eigen::VectorXd& weights() const { return weights_; }
  Eigen::Index size() const { return points_.cols(); }
  auto point(Eigen::Index i) const { return points_.col(i); }
  double weight(Eigen::Index i) const { return weights_[i]; }

  const std::string& name() const { return name_; }
  const std::optional<int>& claimed_strength() const { return claimed_strength_; }

  bool is_uniform() const;

  WeightedDesign renamed(std::string name, std::optional<int> claimed_strength) const;

  /// Projective point i (projective designs only).
  ProjectivePoint<double> projective_point(Eigen::Index i) const;

 private:
  Space space_;
  Eigen::MatrixXd points_;
  Eigen::VectorXd weights_;
  std::string name_;
  std::optional<int> claimed_strength_;
};

/// First pair of columns closer than `tol` in the max norm, if any.
std::optional<std::pair<Eigen::Index, Eigen::Index>> find_coincident_pair(const Eigen::MatrixXd& points, double tol);

}  // namespace fiberdesign
