#include "fiberdesign/weighted_design.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace fiberdesign {

namespace {

constexpr double kWeightSumTolerance = 1e-12;

}  // namespace

std::optional<std::pair<Eigen::Index, Eigen::Index>> find_coincident_pair(const Eigen::MatrixXd& points, double tol) {
  const Eigen::Index n = points.cols();
  if (n < 2 || points.rows() == 0) return std::nullopt;
  // Sweep along the first coordinate; only neighbours within tol can coincide.
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) { return points(0, a) < points(0, b); });
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = a + 1; b < n; ++b) {
      const Eigen::Index i = order[a], j = order[b];
      if (points(0, j) - points(0, i) > tol) break;
      if ((points.col(i) - points.col(j)).lpNorm<Eigen::Infinity>() <= tol)
        return std::make_pair(std::min(i, j), std::max(i, j));
    }
  }
  return std::nullopt;
}

WeightedDesign::WeightedDesign(Space space, Eigen::MatrixXd points, Eigen::VectorXd weights, std::string name,
                               std::optional<int> claimed_strength)
    : space_(space),
      points_(std::move(points)),
      weights_(std::move(weights)),
      name_(std::move(name)),
      claimed_strength_(claimed_strength) {
  if (points_.cols() == 0) throw std::invalid_argument("a design needs at least one point");
  if (points_.rows() != space_.ambient_dim())
    throw std::invalid_argument("points have " + std::to_string(points_.rows()) + " coordinates, " +
                                space_.to_string() + " needs " + std::to_string(space_.ambient_dim()));
  if (weights_.size() != points_.cols())
    throw std::invalid_argument("weight count " + std::to_string(weights_.size()) + " does not match point count " +
                                std::to_string(points_.cols()));
  if ((weights_.array() <= 0.0).any() || !weights_.allFinite())
    throw std::invalid_argument("weights must be positive");
  if (std::abs(weights_.sum() - 1.0) > kWeightSumTolerance)
    throw std::invalid_argument("weights must sum to 1 (got " + std::to_string(weights_.sum()) + ")");
  for (Eigen::Index i = 0; i < points_.cols(); ++i) {
    if (!on_unit_sphere(points_.col(i)))
      throw std::invalid_argument("point " + std::to_string(i) + " is not a unit vector");
    if (space_.is_projective()) points_.col(i) = canonicalize(points_.col(i), space_.algebra());
  }
  if (auto pair = find_coincident_pair(points_, equality_tolerance<double>()))
    throw std::invalid_argument("points " + std::to_string(pair->first) + " and " + std::to_string(pair->second) +
                                " coincide");
}

WeightedDesign WeightedDesign::uniform(Space space, Eigen::MatrixXd points, std::string name,
                                       std::optional<int> claimed_strength) {
  const Eigen::Index n = points.cols();
  Eigen::VectorXd weights = Eigen::VectorXd::Constant(n, n > 0 ? 1.0 / static_cast<double>(n) : 0.0);
  return WeightedDesign(space, std::move(points), std::move(weights), std::move(name), claimed_strength);
}

bool WeightedDesign::is_uniform() const {
  return (weights_.array() == weights_[0]).all();
}

WeightedDesign WeightedDesign::renamed(std::string name, std::optional<int> claimed_strength) const {
  WeightedDesign copy = *this;
  copy.name_ = std::move(name);
  copy.claimed_strength_ = claimed_strength;
  return copy;
}

ProjectivePoint<double> WeightedDesign::projective_point(Eigen::Index i) const {
  if (!space_.is_projective()) throw std::invalid_argument("not a projective design");
  return ProjectivePoint<double>(space_, points_.col(i));
}

}  // namespace fiberdesign
