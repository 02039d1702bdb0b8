#pragma once

#include "fiberdesign/algebra.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fiberdesign {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Unit-norm tolerance for points on spheres (1e-12 for double).
template <typename Scalar>
Scalar unit_tolerance() {
  return Eigen::NumTraits<Scalar>::dummy_precision();
}

/// Tolerance for comparing canonical representatives (1e-10 for double).
template <typename Scalar>
Scalar equality_tolerance() {
  return Scalar(100) * Eigen::NumTraits<Scalar>::dummy_precision();
}

/// A sphere S^m or a projective space FP^n. For FP^n, k = (F:R) - 1 and
/// d = (k+1)n + k, so representatives live on S^d.
class Space {
 public:
  enum class Kind { Sphere, Projective };

  static Space sphere(int m) {
    if (m < 0) throw std::invalid_argument("sphere dimension must be nonnegative");
    return Space(Kind::Sphere, m, Algebra::R, 0);
  }

  static Space projective(Algebra algebra, int n) {
    if (n < 1) throw std::invalid_argument("projective dimension must be at least 1");
    if (algebra == Algebra::O && n != 1)
      throw std::invalid_argument("octonionic projective spaces are supported only for n = 1");
    return Space(Kind::Projective, 0, algebra, n);
  }

  Kind kind() const { return kind_; }
  bool is_sphere() const { return kind_ == Kind::Sphere; }
  bool is_projective() const { return kind_ == Kind::Projective; }

  /// Sphere dimension m (for FP^n, the dimension d of the covering sphere).
  int m() const { return is_sphere() ? m_ : d(); }
  Algebra algebra() const { return algebra_; }
  int n() const { return n_; }
  int k() const { return unit_sphere_dim(algebra_); }
  int d() const { return (k() + 1) * n_ + k(); }

  /// Number of real coordinates of a point (or representative).
  int ambient_dim() const { return m() + 1; }

  bool operator==(const Space&) const = default;

  std::string to_string() const {
    if (is_sphere()) return "S^" + std::to_string(m_);
    return std::string(1, algebra_symbol(algebra_)) + "P^" + std::to_string(n_);
  }

 private:
  Space(Kind kind, int m, Algebra algebra, int n) : kind_(kind), m_(m), algebra_(algebra), n_(n) {}

  Kind kind_;
  int m_;
  Algebra algebra_;
  int n_;
};

template <typename Derived>
bool on_unit_sphere(const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  return std::abs(v.norm() - Scalar(1)) <= unit_tolerance<Scalar>();
}

template <typename Derived>
void require_unit(const Eigen::MatrixBase<Derived>& v, const char* what) {
  if (!on_unit_sphere(v)) throw std::invalid_argument(std::string(what) + " is not a unit vector");
}

/// The i-th F-coordinate of a tuple in F^{n+1} stored as consecutive real blocks.
template <typename Derived>
Element<typename Derived::Scalar> component(const Eigen::MatrixBase<Derived>& v, Algebra algebra, int i) {
  const int dim = dimension(algebra);
  return Element<typename Derived::Scalar>(algebra, v.segment(i * dim, dim));
}

template <typename Derived>
int tuple_length(const Eigen::MatrixBase<Derived>& v, Algebra algebra) {
  const int dim = dimension(algebra);
  if (v.size() % dim != 0) throw std::invalid_argument("coordinate count is not a multiple of the algebra dimension");
  return static_cast<int>(v.size()) / dim;
}

/// Componentwise right product (w_1 z, ..., w_{n+1} z).
template <typename Derived>
Vector<typename Derived::Scalar> right_multiply(const Eigen::MatrixBase<Derived>& w, Algebra algebra,
                                                const Element<typename Derived::Scalar>& z) {
  using Scalar = typename Derived::Scalar;
  const int dim = dimension(algebra);
  const int count = tuple_length(w, algebra);
  Vector<Scalar> out(w.size());
  for (int i = 0; i < count; ++i) out.segment(i * dim, dim) = multiply(component(w, algebra, i), z).coeffs();
  return out;
}

/// Index of the F-coordinate used for canonicalization: the last one whose
/// norm exceeds the zero threshold. The norms |w_i| are constant on a class.
template <typename Derived>
int pivot_index(const Eigen::MatrixBase<Derived>& w, Algebra algebra) {
  using Scalar = typename Derived::Scalar;
  const int dim = dimension(algebra);
  for (int i = tuple_length(w, algebra) - 1; i >= 0; --i)
    if (w.segment(i * dim, dim).norm() > unit_tolerance<Scalar>()) return i;
  throw std::invalid_argument("cannot canonicalize the zero vector");
}

/// (w conj(w_j)) / |w_j| at the pivot j, so the pivot coordinate is real positive.
template <typename Derived>
Vector<typename Derived::Scalar> canonicalize(const Eigen::MatrixBase<Derived>& w, Algebra algebra) {
  using Scalar = typename Derived::Scalar;
  const int j = pivot_index(w, algebra);
  const Element<Scalar> wj = component(w, algebra, j);
  if (wj[0] > Scalar(0) && wj.coeffs().tail(wj.dim() - 1).isZero(Scalar(0))) return w;
  const Element<Scalar> phase = conjugate(wj) / wj.norm();
  Vector<Scalar> out = right_multiply(w, algebra, phase);
  // The pivot is |w_j| up to rounding; store it exactly real.
  const int dim = dimension(algebra);
  out.segment(j * dim, dim).setZero();
  out[j * dim] = wj.norm();
  return out;
}

/// A point of FP^n held by its canonical representative on S^d.
template <typename Scalar>
class ProjectivePoint {
 public:
  template <typename Derived>
  ProjectivePoint(const Space& space, const Eigen::MatrixBase<Derived>& representative) : space_(space) {
    if (!space.is_projective()) throw std::invalid_argument("ProjectivePoint needs a projective space");
    if (representative.size() != space.ambient_dim())
      throw std::invalid_argument("representative has " + std::to_string(representative.size()) +
                                  " coordinates, " + space.to_string() + " needs " +
                                  std::to_string(space.ambient_dim()));
    require_unit(representative, "projective representative");
    rep_ = canonicalize(representative, space.algebra());
  }

  const Space& space() const { return space_; }
  Algebra algebra() const { return space_.algebra(); }
  const Vector<Scalar>& rep() const { return rep_; }

  bool equals(const ProjectivePoint& other, Scalar tol = equality_tolerance<Scalar>()) const {
    return space_ == other.space_ && (rep_ - other.rep_).template lpNorm<Eigen::Infinity>() <= tol;
  }

 private:
  Space space_;
  Vector<Scalar> rep_;
};

/// Pi_F : S^d -> FP^n.
template <typename Derived>
ProjectivePoint<typename Derived::Scalar> projective_map(const Eigen::MatrixBase<Derived>& omega, const Space& target) {
  if (!target.is_projective()) throw std::invalid_argument("projective_map target must be projective");
  if (omega.size() != target.ambient_dim())
    throw std::invalid_argument("dimension mismatch: point on S^" + std::to_string(omega.size() - 1) +
                                " cannot map to " + target.to_string());
  return ProjectivePoint<typename Derived::Scalar>(target, omega);
}

/// (|w_1|^2 - |w_2|^2, 2 w_1 conj(w_2)) from a pair (w_1, w_2) given as real
/// coordinates; no unit check.
template <typename Derived>
Vector<typename Derived::Scalar> hopf_formula(const Eigen::MatrixBase<Derived>& omega, Algebra algebra) {
  using Scalar = typename Derived::Scalar;
  const int dim = dimension(algebra);
  if (omega.size() != 2 * dim) throw std::invalid_argument("Hopf map needs a point of F^2");
  const Element<Scalar> a = component(omega, algebra, 0);
  const Element<Scalar> b = component(omega, algebra, 1);
  Vector<Scalar> out(dim + 1);
  out[0] = a.squaredNorm() - b.squaredNorm();
  out.tail(dim) = (Scalar(2) * multiply(a, conjugate(b))).coeffs();
  return out;
}

/// pi_F : S^{2k+1} -> S^{k+1}.
template <typename Derived>
Vector<typename Derived::Scalar> hopf_map(const Eigen::MatrixBase<Derived>& omega, Algebra algebra) {
  require_unit(omega, "Hopf map input");
  return hopf_formula(omega, algebra);
}

/// h_F : FP^1 -> S^{k+1}, evaluated on the canonical representative.
template <typename Scalar>
Vector<Scalar> hopf_chart(const ProjectivePoint<Scalar>& p) {
  if (p.space().n() != 1) throw std::invalid_argument("hopf_chart is defined on FP^1 only");
  return hopf_formula(p.rep(), p.algebra());
}

/// Base point of the Hopf fibre over s = (xi, eta) in R x F: the z = 1 member
/// (sqrt((1+xi)/2), conj(eta)/sqrt(2(1+xi))) of the explicit fibre, written as
/// (sqrt((1+xi)/2), conj(eta)/|eta| * sqrt((1-xi)/2)). Over xi = -1 this is (0, 1).
template <typename Derived>
Vector<typename Derived::Scalar> hopf_basepoint(const Eigen::MatrixBase<Derived>& s, Algebra algebra) {
  using Scalar = typename Derived::Scalar;
  const int dim = dimension(algebra);
  if (s.size() != dim + 1) throw std::invalid_argument("Hopf base point must lie on S^{k+1}");
  require_unit(s, "Hopf base point");
  const Scalar xi = std::clamp(s[0], Scalar(-1), Scalar(1));
  const Element<Scalar> eta(algebra, s.tail(dim));
  const Scalar eta_norm = eta.norm();
  Vector<Scalar> out = Vector<Scalar>::Zero(2 * dim);
  if (eta_norm == Scalar(0)) {
    out[xi >= 0 ? 0 : dim] = Scalar(1);
    return out;
  }
  // a^2 = (1+xi)/2, b^2 = (1-xi)/2 and 2ab = |eta|; take the root of the larger
  // one so the other does not cancel.
  if (xi >= Scalar(0)) {
    const Scalar a = std::sqrt((Scalar(1) + xi) / Scalar(2));
    out[0] = a;
    out.tail(dim) = (conjugate(eta) / (Scalar(2) * a)).coeffs();
  } else {
    const Scalar b = std::sqrt((Scalar(1) - xi) / Scalar(2));
    out[0] = eta_norm / (Scalar(2) * b);
    out.tail(dim) = (conjugate(eta) * (b / eta_norm)).coeffs();
  }
  return out;
}

/// h_F^{-1} : S^{k+1} -> FP^1.
template <typename Derived>
ProjectivePoint<typename Derived::Scalar> hopf_chart_inverse(const Eigen::MatrixBase<Derived>& s, Algebra algebra) {
  using Scalar = typename Derived::Scalar;
  const int dim = dimension(algebra);
  const Space target = Space::projective(algebra, 1);
  if (s.size() != dim + 1) throw std::invalid_argument("hopf_chart_inverse needs a point on S^{k+1}");
  require_unit(s, "Hopf base point");
  const Scalar xi = std::clamp(s[0], Scalar(-1), Scalar(1));
  if (xi >= Scalar(0)) return ProjectivePoint<Scalar>(target, hopf_basepoint(s, algebra));
  // Equivalent representative with real second coordinate, stable near xi = -1.
  Vector<Scalar> rep(2 * dim);
  rep.head(dim) = s.tail(dim) / std::sqrt(Scalar(2) * (Scalar(1) - xi));
  rep.tail(dim).setZero();
  rep[dim] = std::sqrt((Scalar(1) - xi) / Scalar(2));
  rep /= rep.norm();
  return ProjectivePoint<Scalar>(target, rep);
}

/// Default base point z_w of the fibre over a projective point.
template <typename Scalar>
Vector<Scalar> fiber_basepoint(const ProjectivePoint<Scalar>& w) {
  return w.rep();
}

/// zeta_w(z) = z_w z for a base point z_w and unit z in F.
template <typename Derived>
Vector<typename Derived::Scalar> fiber_point(const Eigen::MatrixBase<Derived>& basepoint, Algebra algebra,
                                             const Element<typename Derived::Scalar>& z) {
  return right_multiply(basepoint, algebra, z);
}

template <typename Scalar>
Vector<Scalar> fiber_point(const ProjectivePoint<Scalar>& w, const Element<Scalar>& z) {
  return right_multiply(w.rep(), w.algebra(), z);
}

/// Phi_F([w], z) = ((w conj(w_{n+1})) z) / |w_{n+1}| for any representative w
/// with w_{n+1} != 0.
template <typename Derived>
Vector<typename Derived::Scalar> local_trivialization(const Eigen::MatrixBase<Derived>& omega, Algebra algebra,
                                                      const Element<typename Derived::Scalar>& z) {
  using Scalar = typename Derived::Scalar;
  const int dim = dimension(algebra);
  const int count = tuple_length(omega, algebra);
  const Element<Scalar> last = component(omega, algebra, count - 1);
  if (last.norm() <= unit_tolerance<Scalar>())
    throw std::invalid_argument("local trivialization needs a nonzero last coordinate");
  const Element<Scalar> last_conj = conjugate(last);
  Vector<Scalar> out(omega.size());
  for (int i = 0; i < count; ++i)
    out.segment(i * dim, dim) = (multiply(multiply(component(omega, algebra, i), last_conj), z) / last.norm()).coeffs();
  return out;
}

}  // namespace fiberdesign
