#include "fiberdesign/construct.hpp"

#include "fiberdesign/errors.hpp"
#include "fiberdesign/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace fiberdesign {

namespace {

// Pairs of images farther apart than the equality tolerance but closer than
// this are reported as ambiguous instead of being grouped or separated.
constexpr double kAmbiguityBand = 1e-6;

std::string describe(const WeightedDesign& d) {
  return d.name().empty() ? d.space().to_string() : d.name();
}

Eigen::VectorXd random_unit(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> normal;
  Eigen::VectorXd v(dim);
  do {
    for (int i = 0; i < dim; ++i) v[i] = normal(rng);
  } while (v.norm() < 1e-3);
  return v.normalized();
}

class DisjointSets {
 public:
  explicit DisjointSets(Eigen::Index n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), Eigen::Index{0});
  }
  Eigen::Index find(Eigen::Index i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }
  void unite(Eigen::Index a, Eigen::Index b) { parent_[find(a)] = find(b); }

 private:
  std::vector<Eigen::Index> parent_;
};

// Cluster id per column; ids are assigned in order of first occurrence.
std::vector<Eigen::Index> group_images(const Eigen::MatrixXd& images, double tol) {
  const Eigen::Index n = images.cols();
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) { return images(0, a) < images(0, b); });
  DisjointSets sets(n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = a + 1; b < n; ++b) {
      const Eigen::Index i = order[a], j = order[b];
      if (images(0, j) - images(0, i) > kAmbiguityBand) break;
      const double dist = (images.col(i) - images.col(j)).lpNorm<Eigen::Infinity>();
      if (dist <= tol) {
        sets.unite(i, j);
      } else if (dist < kAmbiguityBand) {
        throw GroupingAmbiguity("images of points " + std::to_string(std::min(i, j)) + " and " +
                                std::to_string(std::max(i, j)) + " differ by " + std::to_string(dist) +
                                ", too close to separate and too far to merge; supply more accurate coordinates");
      }
    }
  }
  std::vector<Eigen::Index> cluster(n, -1), root_to_cluster(n, -1);
  Eigen::Index next = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index root = sets.find(i);
    if (root_to_cluster[root] < 0) root_to_cluster[root] = next++;
    cluster[i] = root_to_cluster[root];
  }
  return cluster;
}

}  // namespace

Algebra hopf_algebra_for_base(int m) {
  if (m != 1 && m != 2 && m != 4 && m != 8)
    throw std::invalid_argument("S^" + std::to_string(m) + " is not the base of a Hopf map (need m = 1, 2, 4 or 8)");
  return algebra_from_dimension(m);
}

Algebra hopf_algebra_for_total(int d) {
  if (d != 1 && d != 3 && d != 7 && d != 15)
    throw std::invalid_argument("S^" + std::to_string(d) +
                                " is not the total space of a Hopf map (need d = 1, 3, 7 or 15)");
  return algebra_from_dimension((d + 1) / 2);
}

Algebra LiftSpec::algebra() const {
  const Space& s = base.space();
  return s.is_projective() ? s.algebra() : hopf_algebra_for_base(s.m());
}

int LiftSpec::total_dim() const {
  const Space& s = base.space();
  return s.is_projective() ? s.d() : 2 * unit_sphere_dim(algebra()) + 1;
}

std::vector<Eigen::VectorXd> default_basepoints(const WeightedDesign& base) {
  std::vector<Eigen::VectorXd> out;
  out.reserve(static_cast<std::size_t>(base.size()));
  if (base.space().is_projective()) {
    for (Eigen::Index i = 0; i < base.size(); ++i) out.push_back(fiber_basepoint(base.projective_point(i)));
  } else {
    const Algebra algebra = hopf_algebra_for_base(base.space().m());
    for (Eigen::Index i = 0; i < base.size(); ++i) out.push_back(hopf_basepoint(base.point(i), algebra));
  }
  return out;
}

std::vector<Eigen::VectorXd> random_basepoints(const WeightedDesign& base, std::uint64_t seed) {
  const Algebra algebra = base.space().is_projective() ? base.space().algebra()
                                                       : hopf_algebra_for_base(base.space().m());
  std::mt19937_64 rng(seed);
  auto points = default_basepoints(base);
  for (auto& z : points) z = right_multiply(z, algebra, Element<double>(algebra, random_unit(rng, dimension(algebra))));
  return points;
}

WeightedDesign lift(const LiftSpec& spec) {
  const WeightedDesign& base = spec.base;
  const Algebra algebra = spec.algebra();
  const int k = unit_sphere_dim(algebra);
  const int d = spec.total_dim();
  const Eigen::Index ny = base.size();

  if (spec.fibers.size() != 1 && spec.fibers.size() != static_cast<std::size_t>(ny))
    throw std::invalid_argument("need one fibre design per base point or a single shared one");
  for (const auto& fiber : spec.fibers)
    if (fiber.space() != Space::sphere(k))
      throw std::invalid_argument("fibre design " + describe(fiber) + " lives on " + fiber.space().to_string() +
                                  ", the fibres of " + describe(base) + " are S^" + std::to_string(k));

  const std::vector<Eigen::VectorXd> basepoints = spec.basepoints.empty() ? default_basepoints(base) : spec.basepoints;
  if (basepoints.size() != static_cast<std::size_t>(ny))
    throw std::invalid_argument("need one base point per base design point");
  const double tol = equality_tolerance<double>();
  for (Eigen::Index y = 0; y < ny; ++y) {
    const Eigen::VectorXd& z = basepoints[y];
    if (z.size() != d + 1) throw std::invalid_argument("base point " + std::to_string(y) + " is not on S^" + std::to_string(d));
    require_unit(z, "base point");
    const bool in_fiber =
        base.space().is_projective()
            ? projective_map(z, base.space()).equals(base.projective_point(y), tol)
            : (hopf_map(z, algebra) - base.point(y)).lpNorm<Eigen::Infinity>() <= tol;
    if (!in_fiber) throw std::invalid_argument("base point " + std::to_string(y) + " is not in the fibre over its base point");
  }

  Eigen::Index total = 0;
  for (Eigen::Index y = 0; y < ny; ++y) total += spec.fibers[spec.fibers.size() == 1 ? 0 : y].size();
  Eigen::MatrixXd points(d + 1, total);
  Eigen::VectorXd weights(total);
  Eigen::Index col = 0;
  for (Eigen::Index y = 0; y < ny; ++y) {
    const WeightedDesign& fiber = spec.fibers[spec.fibers.size() == 1 ? 0 : y];
    for (Eigen::Index i = 0; i < fiber.size(); ++i, ++col) {
      points.col(col) = fiber_point(basepoints[y], algebra, Element<double>(algebra, fiber.point(i)));
      weights[col] = base.weight(y) * fiber.weight(i);
    }
  }
  if (auto pair = find_coincident_pair(points, tol))
    throw CollisionError("lifted points " + std::to_string(pair->first) + " and " + std::to_string(pair->second) +
                         " coincide; the lift must be a disjoint union");

  std::string name = "lift(" + describe(base) + ", " + describe(spec.fibers.front()) + ")";
  return WeightedDesign(Space::sphere(d), std::move(points), std::move(weights), std::move(name));
}

Space CollapseTarget::space() const {
  return kind == Kind::Projective ? Space::projective(algebra, n) : Space::sphere(unit_sphere_dim(algebra) + 1);
}

WeightedDesign collapse(const WeightedDesign& design, const CollapseTarget& target, int t,
                        const CollapseOptions& options) {
  if (t < 0) throw std::invalid_argument("strength must be nonnegative");
  const int d = target.kind == CollapseTarget::Kind::Projective ? Space::projective(target.algebra, target.n).d()
                                                                 : 2 * unit_sphere_dim(target.algebra) + 1;
  if (design.space() != Space::sphere(d))
    throw std::invalid_argument("collapse onto " + target.space().to_string() + " needs a design on S^" +
                                std::to_string(d) + ", got " + design.space().to_string());
  if (options.verify_input && !verify_spherical(design, t, options.tolerance).passed())
    throw std::invalid_argument(describe(design) + " is not a " + std::to_string(t) + "-design");

  const Space space = target.space();
  Eigen::MatrixXd images(space.ambient_dim(), design.size());
  for (Eigen::Index i = 0; i < design.size(); ++i) {
    if (target.kind == CollapseTarget::Kind::Projective)
      images.col(i) = projective_map(design.point(i), space).rep();
    else
      images.col(i) = hopf_map(design.point(i), target.algebra).normalized();
  }

  const std::vector<Eigen::Index> cluster = group_images(images, equality_tolerance<double>());
  const Eigen::Index groups = *std::max_element(cluster.begin(), cluster.end()) + 1;
  Eigen::MatrixXd points(space.ambient_dim(), groups);
  Eigen::VectorXd weights = Eigen::VectorXd::Zero(groups);
  std::vector<bool> seen(static_cast<std::size_t>(groups), false);
  for (Eigen::Index i = 0; i < design.size(); ++i) {
    const Eigen::Index g = cluster[i];
    if (!seen[g]) {
      points.col(g) = images.col(i);
      seen[g] = true;
    }
    weights[g] += design.weight(i);
  }
  return WeightedDesign(space, std::move(points), std::move(weights), "collapse(" + describe(design) + ")", t / 2);
}

WeightedDesign convert_to_sphere(const WeightedDesign& design) {
  const Space& space = design.space();
  if (!space.is_projective() || space.n() != 1)
    throw std::invalid_argument("convert_to_sphere needs a design on FP^1, got " + space.to_string());
  Eigen::MatrixXd points(space.k() + 2, design.size());
  for (Eigen::Index i = 0; i < design.size(); ++i) points.col(i) = hopf_chart(design.projective_point(i)).normalized();
  return WeightedDesign(Space::sphere(space.k() + 1), std::move(points), design.weights(), design.name(),
                        design.claimed_strength());
}

WeightedDesign convert_to_projective(const WeightedDesign& design, std::optional<Algebra> algebra) {
  const Space& space = design.space();
  if (!space.is_sphere()) throw std::invalid_argument("convert_to_projective needs a spherical design");
  const Algebra alg = algebra ? *algebra : hopf_algebra_for_base(space.m());
  if (space.m() != unit_sphere_dim(alg) + 1)
    throw std::invalid_argument(space.to_string() + " is not the Hopf base S^" + std::to_string(unit_sphere_dim(alg) + 1));
  const Space target = Space::projective(alg, 1);
  Eigen::MatrixXd points(target.ambient_dim(), design.size());
  for (Eigen::Index i = 0; i < design.size(); ++i) points.col(i) = hopf_chart_inverse(design.point(i), alg).rep();
  return WeightedDesign(target, std::move(points), design.weights(), design.name(), design.claimed_strength());
}

}  // namespace fiberdesign
