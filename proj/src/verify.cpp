#include "fiberdesign/verify.hpp"

#include "fiberdesign/catalog.hpp"
#include "fiberdesign/construct.hpp"
#include "fiberdesign/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace fiberdesign {

std::string method_name(Method method) {
  switch (method) {
    case Method::Moment: return "moment";
    case Method::Gegenbauer: return "gegenbauer";
    case Method::LiftOracle: return "lift-oracle";
    case Method::InnerProduct: return "innerproduct";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "moment") return Method::Moment;
  if (name == "gegenbauer") return Method::Gegenbauer;
  if (name == "lift-oracle") return Method::LiftOracle;
  if (name == "innerproduct") return Method::InnerProduct;
  throw std::invalid_argument("unknown verification method '" + std::string(name) + "'");
}

bool VerificationReport::passed() const {
  return std::all_of(degree_passed.begin(), degree_passed.end(), [](bool b) { return b; });
}

std::optional<int> VerificationReport::first_failure() const {
  for (std::size_t s = 0; s < degree_passed.size(); ++s)
    if (!degree_passed[s]) return static_cast<int>(s);
  return std::nullopt;
}

std::vector<int> VerificationReport::failing_degrees() const {
  std::vector<int> out;
  for (std::size_t s = 0; s < degree_passed.size(); ++s)
    if (!degree_passed[s]) out.push_back(static_cast<int>(s));
  return out;
}

namespace {

VerificationReport make_report(int t, Method method, double tol, std::vector<double> deviation) {
  VerificationReport report;
  report.tested_strength = t;
  report.method = method;
  report.tolerance = tol;
  report.degree_passed.reserve(deviation.size());
  for (double dev : deviation) report.degree_passed.push_back(dev <= tol);
  report.deviation = std::move(deviation);
  return report;
}

void require_strength(int t) {
  if (t < 0) throw std::invalid_argument("strength must be nonnegative");
}

// Depth-first walk over exponent vectors. `partial` holds
// lambda(x) * prod_{i < var} x_i^{alpha_i} for every point, so each monomial
// costs one multiply and one sum over the points.
class MomentWalk {
 public:
  MomentWalk(const WeightedDesign& design, int t)
      : points_(design.points()), m_(design.space().m()), t_(t), worst_(t + 1, 0.0), denominator_(t / 2 + 1, 1.0) {
    for (int j = 1; j <= t / 2; ++j) denominator_[j] = denominator_[j - 1] * (m_ + 1 + 2 * (j - 1));
    visit(0, 0, design.weights().array(), 1.0, true);
  }

  std::vector<double> take() { return std::move(worst_); }

 private:
  void visit(int var, int used, const Eigen::ArrayXd& partial, double numerator, bool all_even) {
    Eigen::ArrayXd current = partial;
    double double_factorial = 1.0;
    for (int e = 0; used + e <= t_; ++e) {
      if (e > 0) current *= points_.row(var).transpose().array();
      if (e >= 2 && e % 2 == 0) double_factorial *= e - 1;
      const bool even = all_even && e % 2 == 0;
      if (var == m_) {
        const int degree = used + e;
        const double exact = even ? numerator * double_factorial / denominator_[degree / 2] : 0.0;
        worst_[degree] = std::max(worst_[degree], std::abs(current.sum() - exact));
      } else {
        visit(var + 1, used + e, current, numerator * double_factorial, even);
      }
    }
  }

  const Eigen::MatrixXd& points_;
  int m_;
  int t_;
  std::vector<double> worst_;
  std::vector<double> denominator_;
};

VerificationReport verify_inner_product(const WeightedDesign& design, int t, double tol) {
  const Space& space = design.space();
  const Algebra algebra = space.algebra();
  if (algebra == Algebra::O)
    throw Unsupported("the inner-product test needs F in {R, C, H}; use --method lift-oracle for OP^1");
  const int count = space.n() + 1;

  std::vector<Eigen::VectorXd> probes;
  std::mt19937_64 rng(kInnerProductSeed);
  std::normal_distribution<double> normal;
  for (int i = 0; i < kInnerProductSamples; ++i) {
    Eigen::VectorXd x(space.ambient_dim());
    for (Eigen::Index j = 0; j < x.size(); ++j) x[j] = normal(rng);
    probes.push_back(x.normalized());
  }
  for (Eigen::Index i = 0; i < design.size(); ++i) probes.emplace_back(design.point(i));

  std::vector<double> target(t + 1);
  for (int s = 0; s <= t; ++s) target[s] = projective_power_average(algebra, space.n(), s);

  std::vector<double> worst(t + 1, 0.0);
  for (const auto& x : probes) {
    std::vector<double> sums(t + 1, 0.0);
    for (Eigen::Index y = 0; y < design.size(); ++y) {
      Element<double> inner(algebra);
      for (int i = 0; i < count; ++i)
        inner = inner + multiply(conjugate(component(x, algebra, i)), component(design.point(y), algebra, i));
      const double sq = inner.squaredNorm();
      double power = 1.0;
      for (int s = 0; s <= t; ++s) {
        sums[s] += design.weight(y) * power;
        power *= sq;
      }
    }
    for (int s = 0; s <= t; ++s) worst[s] = std::max(worst[s], std::abs(sums[s] - target[s]));
  }
  return make_report(t, Method::InnerProduct, tol, std::move(worst));
}

VerificationReport verify_lift_oracle(const WeightedDesign& design, int t, double tol, std::size_t cap) {
  const int k = design.space().k();
  const int strength = 2 * t + 1;
  const WeightedDesign lifted = lift(LiftSpec{design, {oracle_fiber_design(k, strength)}, {}});
  const VerificationReport sphere = verify_spherical(lifted, strength, tol, cap);
  std::vector<double> deviation(t + 1);
  for (int s = 0; s <= t; ++s) deviation[s] = std::max(sphere.deviation[2 * s], sphere.deviation[2 * s + 1]);
  return make_report(t, Method::LiftOracle, tol, std::move(deviation));
}

}  // namespace

VerificationReport verify_spherical(const WeightedDesign& design, int t, double tol, std::size_t cap) {
  require_strength(t);
  const Space& space = design.space();
  if (!space.is_sphere()) throw std::invalid_argument("verify_spherical needs a design on a sphere");
  const std::size_t count = monomial_count(space.m(), t);
  if (count > cap)
    throw CapExceeded(std::to_string(count) + " monomials of degree <= " + std::to_string(t) + " on " +
                      space.to_string() + " exceed the cap of " + std::to_string(cap) +
                      "; use the gegenbauer method instead");
  MomentWalk walk(design, t);
  return make_report(t, Method::Moment, tol, walk.take());
}

VerificationReport verify_spherical_gegenbauer(const WeightedDesign& design, int t, double tol) {
  require_strength(t);
  const Space& space = design.space();
  if (!space.is_sphere()) throw std::invalid_argument("verify_spherical_gegenbauer needs a design on a sphere");
  const int m = space.m();
  const Eigen::MatrixXd gram = design.points().transpose() * design.points();
  const Eigen::VectorXd& w = design.weights();
  std::vector<double> energy(t + 1, 0.0);
  Eigen::VectorXd kernels(t + 1);
  for (Eigen::Index i = 0; i < design.size(); ++i) {
    for (Eigen::Index j = i; j < design.size(); ++j) {
      const double factor = (i == j ? 1.0 : 2.0) * w[i] * w[j];
      gegenbauer_kernels(m, std::clamp(gram(i, j), -1.0, 1.0), kernels);
      for (int l = 1; l <= t; ++l) energy[l] += factor * kernels[l];
    }
  }
  std::vector<double> deviation(t + 1);
  deviation[0] = std::abs(w.sum() - 1.0);
  for (int l = 1; l <= t; ++l) deviation[l] = std::abs(energy[l]);
  return make_report(t, Method::Gegenbauer, tol, std::move(deviation));
}

WeightedDesign oracle_fiber_design(int k, int strength) {
  if (k == 0) return poles(0);
  if (k == 1) return polygon(strength + 1);
  if (k == 3 && strength <= 5) return d4_roots();
  if (k == 7 && strength <= 7) return e8_roots();
  return gauss_product(k, strength);
}

VerificationReport verify_projective(const WeightedDesign& design, int t, double tol, Method method,
                                     std::size_t cap) {
  require_strength(t);
  if (!design.space().is_projective()) throw std::invalid_argument("verify_projective needs a projective design");
  switch (method) {
    case Method::LiftOracle: return verify_lift_oracle(design, t, tol, cap);
    case Method::InnerProduct: return verify_inner_product(design, t, tol);
    default:
      throw Unsupported("method " + method_name(method) + " applies to spherical designs only");
  }
}

VerificationReport verify(const WeightedDesign& design, int t, double tol, std::optional<Method> method,
                          std::size_t cap) {
  if (design.space().is_projective()) return verify_projective(design, t, tol, method.value_or(Method::LiftOracle), cap);
  switch (method.value_or(Method::Moment)) {
    case Method::Moment: return verify_spherical(design, t, tol, cap);
    case Method::Gegenbauer: return verify_spherical_gegenbauer(design, t, tol);
    default:
      throw Unsupported("method " + method_name(*method) + " applies to projective designs only");
  }
}

}  // namespace fiberdesign
