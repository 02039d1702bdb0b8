#pragma once

#include <Eigen/Core>

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fiberdesign {

/// The four normed division algebras over the reals.
enum class Algebra { R, C, H, O };

/// Real dimension (F : R).
constexpr int dimension(Algebra a) {
  switch (a) {
    case Algebra::R: return 1;
    case Algebra::C: return 2;
    case Algebra::H: return 4;
    case Algebra::O: return 8;
  }
  return 0;
}

/// Dimension k of the sphere of unit elements, k = (F : R) - 1.
constexpr int unit_sphere_dim(Algebra a) { return dimension(a) - 1; }

inline Algebra algebra_from_dimension(int dim) {
  switch (dim) {
    case 1: return Algebra::R;
    case 2: return Algebra::C;
    case 4: return Algebra::H;
    case 8: return Algebra::O;
    default:
      throw std::invalid_argument("no normed division algebra of real dimension " +
                                  std::to_string(dim));
  }
}

inline char algebra_symbol(Algebra a) {
  constexpr std::array<char, 4> symbols{'R', 'C', 'H', 'O'};
  return symbols[static_cast<int>(a)];
}

inline Algebra parse_algebra(std::string_view s) {
  if (s == "R") return Algebra::R;
  if (s == "C") return Algebra::C;
  if (s == "H") return Algebra::H;
  if (s == "O") return Algebra::O;
  throw std::invalid_argument("unknown algebra '" + std::string(s) + "' (expected R, C, H or O)");
}

namespace detail {

struct UnitProduct {
  int sign;
  int index;
};

using UnitTable = std::array<std::array<UnitProduct, 8>, 8>;

// e_i e_j = sign * e_index. Each Fano line (a, b, c) gives e_a e_b = e_c
// cyclically and anticommutes; e_i^2 = -1 for i != 0. Restricting to indices
// below 2 or 4 gives the complex and quaternion tables.
constexpr UnitTable make_unit_table() {
  UnitTable table{};
  for (int i = 0; i < 8; ++i) {
    table[0][i] = {1, i};
    table[i][0] = {1, i};
  }
  for (int i = 1; i < 8; ++i) table[i][i] = {-1, 0};
  constexpr int lines[7][3] = {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 4, 7},
                               {1, 7, 6}, {2, 5, 7}, {3, 6, 5}};
  for (const auto& line : lines) {
    for (int r = 0; r < 3; ++r) {
      const int a = line[r], b = line[(r + 1) % 3], c = line[(r + 2) % 3];
      table[a][b] = {1, c};
      table[b][a] = {-1, c};
    }
  }
  return table;
}

inline constexpr UnitTable kUnitTable = make_unit_table();

}  // namespace detail

/// An element of R, C, H or O stored as real coefficients over e_0..e_{dim-1}.
/// Immutable; arithmetic returns new values.
template <typename Scalar>
class Element {
 public:
  using Coeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1, 0, 8, 1>;

  explicit Element(Algebra algebra) : algebra_(algebra), coeffs_(Coeffs::Zero(dimension(algebra))) {}

  template <typename Derived>
  Element(Algebra algebra, const Eigen::MatrixBase<Derived>& coeffs)
      : algebra_(algebra), coeffs_(coeffs) {
    if (coeffs_.size() != dimension(algebra))
      throw std::invalid_argument("coefficient count does not match algebra dimension");
  }

  static Element unit(Algebra algebra, int index) {
    if (index < 0 || index >= dimension(algebra)) throw std::out_of_range("basis index out of range");
    Element e(algebra);
    e.coeffs_[index] = Scalar(1);
    return e;
  }

  static Element real(Algebra algebra, Scalar value) {
    Element e(algebra);
    e.coeffs_[0] = value;
    return e;
  }

  Algebra algebra() const { return algebra_; }
  int dim() const { return static_cast<int>(coeffs_.size()); }
  const Coeffs& coeffs() const { return coeffs_; }
  Scalar operator[](int i) const { return coeffs_[i]; }

  Scalar squaredNorm() const { return coeffs_.squaredNorm(); }
  Scalar norm() const { return coeffs_.norm(); }

  Element operator+(const Element& other) const {
    check_same(other);
    return Element(algebra_, Coeffs(coeffs_ + other.coeffs_));
  }
  Element operator-(const Element& other) const {
    check_same(other);
    return Element(algebra_, Coeffs(coeffs_ - other.coeffs_));
  }
  Element operator-() const { return Element(algebra_, Coeffs(-coeffs_)); }
  Element operator*(Scalar s) const { return Element(algebra_, Coeffs(coeffs_ * s)); }
  Element operator/(Scalar s) const { return Element(algebra_, Coeffs(coeffs_ / s)); }
  friend Element operator*(Scalar s, const Element& e) { return e * s; }

  void check_same(const Element& other) const {
    if (algebra_ != other.algebra_)
      throw std::invalid_argument("algebra mismatch in element arithmetic");
  }

 private:
  Algebra algebra_;
  Coeffs coeffs_;
};

template <typename Scalar>
Element<Scalar> multiply(const Element<Scalar>& a, const Element<Scalar>& b) {
  a.check_same(b);
  const int n = a.dim();
  typename Element<Scalar>::Coeffs out = Element<Scalar>::Coeffs::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (a[i] == Scalar(0)) continue;
    for (int j = 0; j < n; ++j) {
      const auto& p = detail::kUnitTable[i][j];
      out[p.index] += Scalar(p.sign) * a[i] * b[j];
    }
  }
  return Element<Scalar>(a.algebra(), out);
}

template <typename Scalar>
Element<Scalar> operator*(const Element<Scalar>& a, const Element<Scalar>& b) {
  return multiply(a, b);
}

template <typename Scalar>
Element<Scalar> conjugate(const Element<Scalar>& a) {
  typename Element<Scalar>::Coeffs c = -a.coeffs();
  c[0] = a[0];
  return Element<Scalar>(a.algebra(), c);
}

/// Coefficient of e_index.
template <typename Scalar>
Scalar real_part_extract(const Element<Scalar>& a, int index) {
  if (index < 0 || index >= a.dim()) throw std::out_of_range("coefficient index out of range");
  return a[index];
}

}  // namespace fiberdesign
