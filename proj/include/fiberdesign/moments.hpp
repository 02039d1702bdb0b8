#pragma once

#include "fiberdesign/algebra.hpp"
#include "fiberdesign/weighted_design.hpp"

#include <Eigen/Core>

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <vector>

namespace fiberdesign {

/// Default cap on the number of monomials a verifier may enumerate.
inline constexpr std::size_t kDefaultMonomialCap = 5'000'000;

/// Exponent vector of a monomial x^alpha in m+1 real variables.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents);

  int size() const { return static_cast<int>(exponents_.size()); }
  int degree() const { return degree_; }
  int operator[](int i) const { return exponents_[i]; }
  const std::vector<int>& exponents() const { return exponents_; }

  /// x^alpha at a point.
  template <typename Derived>
  double evaluate(const Eigen::MatrixBase<Derived>& x) const {
    double value = 1.0;
    for (int i = 0; i < size(); ++i)
      for (int e = 0; e < exponents_[i]; ++e) value *= x[i];
    return value;
  }

  auto operator<=>(const MultiIndex& other) const { return exponents_ <=> other.exponents_; }
  bool operator==(const MultiIndex& other) const = default;

 private:
  std::vector<int> exponents_;
  int degree_ = 0;
};

/// Average of x^alpha over S^m with respect to the normalized surface measure:
/// zero if any exponent is odd, otherwise prod (alpha_i - 1)!! / prod_{j<|alpha|/2} (m + 1 + 2j).
double sphere_monomial_average(int m, const MultiIndex& alpha);

/// C(m + 1 + t, t), saturating at SIZE_MAX.
std::size_t monomial_count(int m, int t);

/// All multi-indices in m+1 variables of degree <= t, by increasing degree and,
/// within a degree, lexicographically descending.
std::vector<MultiIndex> enumerate_monomials(int m, int t, std::size_t cap = kDefaultMonomialCap);

/// Sphere averages of every monomial of degree <= t on S^m.
class MomentTable {
 public:
  MomentTable(int m, int t, std::size_t cap = kDefaultMonomialCap);

  int m() const { return m_; }
  int t() const { return t_; }
  std::size_t size() const { return entries_.size(); }
  double operator()(const MultiIndex& alpha) const;
  const std::map<MultiIndex, double>& entries() const { return entries_; }

 private:
  int m_;
  int t_;
  std::map<MultiIndex, double> entries_;
};

/// Gegenbauer polynomial C_l^{(m-1)/2}(u) normalized to 1 at u = 1 (Chebyshev
/// T_l for m = 1). On S^0 only degrees 0 and 1 carry harmonics, so l >= 2 gives 0.
double gegenbauer_kernel(int m, int l, double u);

/// Kernels for l = 0..lmax at u.
Eigen::VectorXd gegenbauer_kernels(int m, int lmax, double u);

/// Same, written into `out` (size lmax + 1) without allocating.
void gegenbauer_kernels(int m, double u, Eigen::Ref<Eigen::VectorXd> out);

/// Average of |<x, y>_F|^{2s} over y in FP^n for fixed x:
/// prod_{i<s} ((k+1)/2 + i) / ((d+1)/2 + i).
double projective_power_average(Algebra algebra, int n, int s);

using SphereFunction = std::function<double(const Eigen::VectorXd&)>;

/// Fibre average sum_z lambda(z) f(z_w z) using a quadrature on S^k, for the
/// fibre through `basepoint` (a point of S^d viewed in F^{n+1}).
double fiber_average(const SphereFunction& f, const Eigen::VectorXd& basepoint, Algebra algebra,
                     const WeightedDesign& quadrature);

/// Fibre average over Pi_F^{-1}(w) for a projective point.
double fiber_average(const SphereFunction& f, const ProjectivePoint<double>& w, const WeightedDesign& quadrature);

/// Fibre average over pi_F^{-1}(s) for a point s on S^{k+1}.
double hopf_fiber_average(const SphereFunction& f, const Eigen::VectorXd& s, Algebra algebra,
                          const WeightedDesign& quadrature);

}  // namespace fiberdesign
