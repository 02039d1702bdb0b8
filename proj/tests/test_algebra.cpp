#include "fiberdesign/algebra.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace fiberdesign;

namespace {

using Coeffs = Eigen::VectorXd;

Coeffs cd_conjugate(const Coeffs& a) {
  Coeffs c = -a;
  c[0] = a[0];
  return c;
}

// Cayley-Dickson doubling: (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)).
Coeffs cd_multiply(const Coeffs& x, const Coeffs& y) {
  const Eigen::Index n = x.size();
  if (n == 1) return Coeffs::Constant(1, x[0] * y[0]);
  const Eigen::Index h = n / 2;
  const Coeffs a = x.head(h), b = x.tail(h), c = y.head(h), d = y.tail(h);
  Coeffs out(n);
  out.head(h) = cd_multiply(a, c) - cd_multiply(cd_conjugate(d), b);
  out.tail(h) = cd_multiply(d, a) + cd_multiply(b, cd_conjugate(c));
  return out;
}

const std::vector<Algebra> kAlgebras{Algebra::R, Algebra::C, Algebra::H, Algebra::O};

Element<double> random_element(std::mt19937_64& rng, Algebra a) {
  std::normal_distribution<double> normal;
  Coeffs c(dimension(a));
  for (auto& v : c) v = normal(rng);
  return Element<double>(a, c);
}

double dist(const Element<double>& a, const Element<double>& b) {
  return (a.coeffs() - b.coeffs()).lpNorm<Eigen::Infinity>();
}

}  // namespace

TEST_CASE("dimensions and parsing") {
  CHECK(dimension(Algebra::R) == 1);
  CHECK(dimension(Algebra::O) == 8);
  CHECK(unit_sphere_dim(Algebra::H) == 3);
  CHECK(algebra_from_dimension(4) == Algebra::H);
  CHECK_THROWS_AS(algebra_from_dimension(3), std::invalid_argument);
  CHECK(parse_algebra("O") == Algebra::O);
  CHECK_THROWS_AS(parse_algebra("Q"), std::invalid_argument);
  for (Algebra a : kAlgebras) CHECK(parse_algebra(std::string(1, algebra_symbol(a))) == a);
}

TEST_CASE("unit products") {
  for (Algebra a : kAlgebras) {
    const int n = dimension(a);
    for (int i = 1; i < n; ++i) {
      const auto sq = multiply(Element<double>::unit(a, i), Element<double>::unit(a, i));
      CHECK(dist(sq, Element<double>::real(a, -1.0)) == 0.0);
    }
    for (int i = 0; i < n; ++i) {
      const auto e = Element<double>::unit(a, i);
      CHECK(dist(multiply(Element<double>::unit(a, 0), e), e) == 0.0);
      CHECK(dist(multiply(e, Element<double>::unit(a, 0)), e) == 0.0);
    }
  }
  // Fano lines of the octonion table.
  const int lines[7][3] = {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 4, 7}, {1, 7, 6}, {2, 5, 7}, {3, 6, 5}};
  for (const auto& l : lines) {
    const auto ei = Element<double>::unit(Algebra::O, l[0]);
    const auto ej = Element<double>::unit(Algebra::O, l[1]);
    const auto ek = Element<double>::unit(Algebra::O, l[2]);
    CHECK(dist(ei * ej, ek) == 0.0);
    CHECK(dist(ej * ei, -ek) == 0.0);
    CHECK(dist(ej * ek, ei) == 0.0);
    CHECK(dist(ek * ei, ej) == 0.0);
  }
  for (int i = 1; i < 8; ++i)
    for (int j = 1; j < 8; ++j)
      if (i != j) {
        const auto ei = Element<double>::unit(Algebra::O, i), ej = Element<double>::unit(Algebra::O, j);
        CHECK(dist(ei * ej, -(ej * ei)) == 0.0);
      }
}

TEST_CASE("product agrees with Cayley-Dickson doubling") {
  std::mt19937_64 rng(11);
  for (Algebra a : kAlgebras) {
    for (int i = 0; i < dimension(a); ++i)
      for (int j = 0; j < dimension(a); ++j) {
        const auto ei = Element<double>::unit(a, i), ej = Element<double>::unit(a, j);
        CHECK((multiply(ei, ej).coeffs() - cd_multiply(ei.coeffs(), ej.coeffs())).norm() == 0.0);
      }
    for (int s = 0; s < 200; ++s) {
      const auto x = random_element(rng, a), y = random_element(rng, a);
      CHECK((multiply(x, y).coeffs() - cd_multiply(x.coeffs(), y.coeffs())).norm() < 1e-12);
    }
  }
}

TEST_CASE("quaternion table is the standard one") {
  const auto i = Element<double>::unit(Algebra::H, 1), j = Element<double>::unit(Algebra::H, 2),
             k = Element<double>::unit(Algebra::H, 3);
  CHECK(dist(i * j, k) == 0.0);
  CHECK(dist(j * k, i) == 0.0);
  CHECK(dist(k * i, j) == 0.0);
}

TEST_CASE("norm multiplicativity, alternativity, Artin identities") {
  std::mt19937_64 rng(2024);
  for (Algebra a : kAlgebras) {
    CAPTURE(algebra_symbol(a));
    for (int s = 0; s < 1000; ++s) {
      auto x = random_element(rng, a), y = random_element(rng, a);
      x = x / x.norm();
      y = y / y.norm();
      CHECK(std::abs((x * y).norm() - x.norm() * y.norm()) < 1e-12);
      CHECK(dist(x * (x * y), (x * x) * y) < 1e-12);
      CHECK(dist(x * (y * y), (x * y) * y) < 1e-12);
      CHECK(dist(x * (y * x), (x * y) * x) < 1e-12);
      CHECK(dist(x * (y * (x * y)), (x * y) * (x * y)) < 1e-12);
      CHECK(dist(conjugate(x) * (x * y), x.squaredNorm() * y) < 1e-12);
      CHECK(dist(conjugate(x * y), conjugate(y) * conjugate(x)) < 1e-12);
    }
  }
}

TEST_CASE("associativity holds for R, C, H and fails for O") {
  std::mt19937_64 rng(7);
  for (Algebra a : {Algebra::R, Algebra::C, Algebra::H}) {
    for (int s = 0; s < 1000; ++s) {
      const auto x = random_element(rng, a), y = random_element(rng, a), z = random_element(rng, a);
      CHECK(dist((x * y) * z, x * (y * z)) < 1e-12);
    }
  }
  const auto e1 = Element<double>::unit(Algebra::O, 1), e2 = Element<double>::unit(Algebra::O, 2),
             e4 = Element<double>::unit(Algebra::O, 4);
  // (e1 e2) e4 = e3 e4 = e7 while e1 (e2 e4) = e1 e6 = -e7.
  CHECK(dist((e1 * e2) * e4, Element<double>::unit(Algebra::O, 7)) == 0.0);
  CHECK(dist(e1 * (e2 * e4), -Element<double>::unit(Algebra::O, 7)) == 0.0);
  int violations = 0;
  for (int s = 0; s < 1000; ++s) {
    const auto x = random_element(rng, Algebra::O), y = random_element(rng, Algebra::O),
               z = random_element(rng, Algebra::O);
    if (dist((x * y) * z, x * (y * z)) > 1e-6) ++violations;
  }
  CHECK(violations == 1000);
}

TEST_CASE("conjugate and coefficient extraction") {
  for (Algebra a : kAlgebras) {
    CHECK(dist(conjugate(Element<double>::unit(a, 0)), Element<double>::unit(a, 0)) == 0.0);
    for (int i = 1; i < dimension(a); ++i)
      CHECK(dist(conjugate(Element<double>::unit(a, i)), -Element<double>::unit(a, i)) == 0.0);
  }
  const Element<double> x(Algebra::C, Eigen::Vector2d(3.0, 2.0));
  CHECK(real_part_extract(x, 1) == 2.0);
  CHECK(real_part_extract(Element<double>::unit(Algebra::O, 0), 0) == 1.0);
  CHECK_THROWS_AS(real_part_extract(x, 2), std::out_of_range);
  CHECK_THROWS_AS(real_part_extract(x, -1), std::out_of_range);

  std::mt19937_64 rng(3);
  for (Algebra a : kAlgebras) {
    for (int s = 0; s < 200; ++s) {
      const auto y = random_element(rng, a);
      CHECK(dist(y * conjugate(y), Element<double>::real(a, y.squaredNorm())) < 1e-12);
      CHECK(dist(0.5 * (conjugate(y) + y), Element<double>::real(a, y[0])) < 1e-12);
      for (int i = 1; i < dimension(a); ++i) {
        const auto ei = Element<double>::unit(a, i);
        // y_i e_0 = (e_i conj(y) - y e_i) / 2.
        CHECK(dist(0.5 * (ei * conjugate(y) - y * ei), Element<double>::real(a, real_part_extract(y, i))) < 1e-12);
      }
    }
  }
}

TEST_CASE("mismatched algebras are rejected") {
  CHECK_THROWS_AS(multiply(Element<double>::unit(Algebra::C, 1), Element<double>::unit(Algebra::H, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(Element<double>(Algebra::H, Eigen::Vector2d(1, 0)), std::invalid_argument);
  CHECK_THROWS_AS(Element<double>::unit(Algebra::C, 2), std::out_of_range);
}

TEST_CASE("works for other scalar types") {
  const auto x = Element<float>::unit(Algebra::O, 3) * Element<float>::unit(Algebra::O, 4);
  CHECK(x[7] == 1.0f);
  const Element<long double> y(Algebra::H, Eigen::Matrix<long double, 4, 1>(1, 2, 3, 4));
  CHECK(std::abs(double((y * conjugate(y))[0]) - 30.0) < 1e-15);
}
