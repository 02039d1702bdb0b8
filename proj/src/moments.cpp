#include "fiberdesign/moments.hpp"

#include "fiberdesign/errors.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fiberdesign {

MultiIndex::MultiIndex(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_) {
    if (e < 0) throw std::invalid_argument("multi-index exponents must be nonnegative");
    degree_ += e;
  }
}

double sphere_monomial_average(int m, const MultiIndex& alpha) {
  if (alpha.size() != m + 1)
    throw std::invalid_argument("multi-index length " + std::to_string(alpha.size()) + " does not match S^" +
                                std::to_string(m));
  double numerator = 1.0;
  for (int e : alpha.exponents()) {
    if (e % 2 != 0) return 0.0;
    for (int odd = e - 1; odd > 1; odd -= 2) numerator *= odd;
  }
  double denominator = 1.0;
  for (int j = 0; j < alpha.degree() / 2; ++j) denominator *= m + 1 + 2 * j;
  return numerator / denominator;
}

std::size_t monomial_count(int m, int t) {
  if (m < 0 || t < 0) return 0;
  // C(m+1+t, t) = prod_{i=1}^{t} (m+1+i)/i, exact at every step.
  std::size_t count = 1;
  for (int i = 1; i <= t; ++i) {
    const std::size_t factor = static_cast<std::size_t>(m + 1 + i);
    if (count > std::numeric_limits<std::size_t>::max() / factor) return std::numeric_limits<std::size_t>::max();
    count = count * factor / static_cast<std::size_t>(i);
  }
  return count;
}

namespace {

void enumerate_degree(int vars, int remaining, std::vector<int>& current, int position,
                      std::vector<MultiIndex>& out) {
  if (position == vars - 1) {
    current[position] = remaining;
    out.emplace_back(current);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[position] = e;
    enumerate_degree(vars, remaining - e, current, position + 1, out);
  }
  current[position] = 0;
}

}  // namespace

std::vector<MultiIndex> enumerate_monomials(int m, int t, std::size_t cap) {
  if (m < 0) throw std::invalid_argument("sphere dimension must be nonnegative");
  if (t < 0) throw std::invalid_argument("degree must be nonnegative");
  const std::size_t count = monomial_count(m, t);
  if (count > cap)
    throw CapExceeded(std::to_string(count) + " monomials of degree <= " + std::to_string(t) + " on S^" +
                      std::to_string(m) + " exceed the cap of " + std::to_string(cap));
  std::vector<MultiIndex> out;
  out.reserve(count);
  std::vector<int> current(m + 1, 0);
  for (int degree = 0; degree <= t; ++degree) enumerate_degree(m + 1, degree, current, 0, out);
  return out;
}

MomentTable::MomentTable(int m, int t, std::size_t cap) : m_(m), t_(t) {
  for (auto& alpha : enumerate_monomials(m, t, cap)) {
    const double avg = sphere_monomial_average(m, alpha);
    entries_.emplace(std::move(alpha), avg);
  }
}

double MomentTable::operator()(const MultiIndex& alpha) const {
  auto it = entries_.find(alpha);
  if (it == entries_.end()) throw std::out_of_range("monomial not in moment table");
  return it->second;
}

void gegenbauer_kernels(int m, double u, Eigen::Ref<Eigen::VectorXd> p) {
  if (m < 0) throw std::invalid_argument("gegenbauer_kernels: negative dimension");
  const Eigen::Index lmax = p.size() - 1;
  if (lmax < 0) return;
  p.setZero();
  p[0] = 1.0;
  if (lmax == 0) return;
  p[1] = u;
  if (m == 0) return;
  // Normalized recurrence (l + 2 lambda) P_{l+1} = 2 (l + lambda) u P_l - l P_{l-1}.
  const double lambda = 0.5 * (m - 1);
  for (Eigen::Index l = 1; l < lmax; ++l)
    p[l + 1] = (2.0 * (l + lambda) * u * p[l] - l * p[l - 1]) / (l + 2.0 * lambda);
}

Eigen::VectorXd gegenbauer_kernels(int m, int lmax, double u) {
  if (lmax < 0) throw std::invalid_argument("gegenbauer_kernels: negative degree");
  Eigen::VectorXd p(lmax + 1);
  gegenbauer_kernels(m, u, p);
  return p;
}

double gegenbauer_kernel(int m, int l, double u) {
  if (l < 0) throw std::invalid_argument("gegenbauer_kernel: negative degree");
  return gegenbauer_kernels(m, l, u)[l];
}

double projective_power_average(Algebra algebra, int n, int s) {
  const Space space = Space::projective(algebra, n);
  const double a = 0.5 * (space.k() + 1);
  const double b = 0.5 * (space.d() + 1);
  double value = 1.0;
  for (int i = 0; i < s; ++i) value *= (a + i) / (b + i);
  return value;
}

double fiber_average(const SphereFunction& f, const Eigen::VectorXd& basepoint, Algebra algebra,
                     const WeightedDesign& quadrature) {
  if (!quadrature.space().is_sphere() || quadrature.space().m() != unit_sphere_dim(algebra))
    throw std::invalid_argument("fibre quadrature must live on S^" + std::to_string(unit_sphere_dim(algebra)));
  double sum = 0.0;
  for (Eigen::Index i = 0; i < quadrature.size(); ++i) {
    const Element<double> z(algebra, quadrature.point(i));
    sum += quadrature.weight(i) * f(fiber_point(basepoint, algebra, z));
  }
  return sum;
}

double fiber_average(const SphereFunction& f, const ProjectivePoint<double>& w, const WeightedDesign& quadrature) {
  return fiber_average(f, fiber_basepoint(w), w.algebra(), quadrature);
}

double hopf_fiber_average(const SphereFunction& f, const Eigen::VectorXd& s, Algebra algebra,
                          const WeightedDesign& quadrature) {
  return fiber_average(f, hopf_basepoint(s, algebra), algebra, quadrature);
}

}  // namespace fiberdesign
