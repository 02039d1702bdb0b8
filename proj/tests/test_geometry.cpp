#include "fiberdesign/geometry.hpp"

#include <doctest.h>

#include <numbers>
#include <random>
#include <vector>

using namespace fiberdesign;

namespace {

const std::vector<Algebra> kAlgebras{Algebra::R, Algebra::C, Algebra::H, Algebra::O};

Eigen::VectorXd random_unit(std::mt19937_64& rng, int size) {
  std::normal_distribution<double> normal;
  Eigen::VectorXd v(size);
  for (auto& x : v) x = normal(rng);
  return v.normalized();
}

Element<double> random_unit_scalar(std::mt19937_64& rng, Algebra a) {
  return Element<double>(a, random_unit(rng, dimension(a)));
}

double maxdiff(const Eigen::VectorXd& a, const Eigen::VectorXd& b) { return (a - b).lpNorm<Eigen::Infinity>(); }

Eigen::VectorXd vec(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

}  // namespace

TEST_CASE("spaces") {
  const Space cp2 = Space::projective(Algebra::C, 2);
  CHECK(cp2.k() == 1);
  CHECK(cp2.d() == 5);
  CHECK(cp2.ambient_dim() == 6);
  CHECK(cp2.to_string() == "CP^2");
  CHECK(Space::projective(Algebra::O, 1).d() == 15);
  CHECK(Space::projective(Algebra::H, 3).d() == 15);
  CHECK(Space::projective(Algebra::R, 4).d() == 4);
  CHECK(Space::sphere(3).to_string() == "S^3");
  CHECK(Space::sphere(2) == Space::sphere(2));
  CHECK_FALSE(Space::sphere(3) == Space::projective(Algebra::C, 1));
  CHECK_THROWS_AS(Space::projective(Algebra::O, 2), std::invalid_argument);
  CHECK_THROWS_AS(Space::projective(Algebra::C, 0), std::invalid_argument);
  CHECK_THROWS_AS(Space::sphere(-1), std::invalid_argument);
}

TEST_CASE("projective map examples") {
  const Space cp1 = Space::projective(Algebra::C, 1);
  const auto p = projective_map(vec({1, 0, 0, 0}), cp1);
  CHECK(maxdiff(p.rep(), vec({1, 0, 0, 0})) == 0.0);
  const auto q = projective_map(vec({0, 1, 0, 0}), cp1);
  CHECK(p.equals(q));
  const auto r = projective_map(vec({0, 0, 0, 1}), cp1);
  CHECK(maxdiff(r.rep(), vec({0, 0, 1, 0})) < 1e-15);
  CHECK_FALSE(p.equals(r));
  CHECK_THROWS_AS(projective_map(vec({1, 0, 0}), cp1), std::invalid_argument);
  CHECK_THROWS_AS(projective_map(vec({1, 1, 0, 0}), cp1), std::invalid_argument);
  CHECK_THROWS_AS(projective_map(vec({1, 0}), Space::sphere(1)), std::invalid_argument);
}

TEST_CASE("canonical form") {
  std::mt19937_64 rng(5);
  for (Algebra a : kAlgebras) {
    const int n = a == Algebra::O ? 1 : 2;
    const Space space = Space::projective(a, n);
    for (int s = 0; s < 200; ++s) {
      const Eigen::VectorXd w = random_unit(rng, space.ambient_dim());
      const Eigen::VectorXd c = canonicalize(w, a);
      const int dim = dimension(a);
      CHECK(c[n * dim] > 0.0);
      CHECK(c.segment(n * dim + 1, dim - 1).isZero(0.0));
      CHECK(std::abs(c.norm() - 1.0) < 1e-13);
      const Eigen::VectorXd cc = canonicalize(c, a);
      CHECK((cc.array() == c.array()).all());
    }
    // Vanishing last coordinate: the last nonzero one becomes real positive.
    Eigen::VectorXd w = Eigen::VectorXd::Zero(space.ambient_dim());
    w.head(dimension(a)) = random_unit(rng, dimension(a));
    const Eigen::VectorXd c = canonicalize(w, a);
    CHECK(std::abs(c[0] - 1.0) < 1e-15);
    CHECK(c.tail(c.size() - 1).isZero(0.0));
  }
}

TEST_CASE("projective map is constant on classes") {
  std::mt19937_64 rng(6);
  for (Algebra a : {Algebra::R, Algebra::C, Algebra::H}) {
    for (int n = 1; n <= 3; ++n) {
      const Space space = Space::projective(a, n);
      for (int s = 0; s < 100; ++s) {
        const Eigen::VectorXd w = random_unit(rng, space.ambient_dim());
        const auto z = random_unit_scalar(rng, a);
        CHECK(projective_map(right_multiply(w, a, z), space).equals(projective_map(w, space)));
      }
    }
  }
  // Over O the class of w is the set of right multiples of its canonical
  // representative, not of w itself.
  const Space op1 = Space::projective(Algebra::O, 1);
  for (int s = 0; s < 200; ++s) {
    const auto w = projective_map(random_unit(rng, 16), op1);
    const auto z = random_unit_scalar(rng, Algebra::O);
    CHECK(projective_map(right_multiply(w.rep(), Algebra::O, z), op1).equals(w));
  }
  bool witness = false;
  for (int s = 0; s < 20 && !witness; ++s) {
    const Eigen::VectorXd w = random_unit(rng, 16);
    const auto z = random_unit_scalar(rng, Algebra::O);
    witness = !projective_map(right_multiply(w, Algebra::O, z), op1).equals(projective_map(w, op1));
  }
  CHECK(witness);
}

TEST_CASE("Hopf map") {
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(maxdiff(hopf_map(vec({1, 0, 0, 0}), Algebra::C), vec({1, 0, 0})) == 0.0);
  CHECK(maxdiff(hopf_map(vec({r, 0, r, 0}), Algebra::C), vec({0, 1, 0})) < 1e-15);
  CHECK(maxdiff(hopf_map(vec({0, 0, 1, 0}), Algebra::C), vec({-1, 0, 0})) == 0.0);
  CHECK(maxdiff(hopf_map(vec({r, r}), Algebra::R), vec({0, 1})) < 1e-15);
  CHECK_THROWS_AS(hopf_map(vec({1, 1, 0, 0}), Algebra::C), std::invalid_argument);
  CHECK_THROWS_AS(hopf_map(vec({1, 0, 0}), Algebra::C), std::invalid_argument);

  std::mt19937_64 rng(8);
  for (Algebra a : kAlgebras) {
    const int dim = dimension(a);
    for (int s = 0; s < 300; ++s) {
      const Eigen::VectorXd w = random_unit(rng, 2 * dim);
      const Eigen::VectorXd h = hopf_map(w, a);
      CHECK(h.size() == dim + 1);
      CHECK(std::abs(h.norm() - 1.0) < 1e-13);
      // h_F o Pi_F = pi_F.
      CHECK(maxdiff(hopf_chart(projective_map(w, Space::projective(a, 1))), h) < 1e-13);
    }
  }
}

TEST_CASE("Hopf chart and its inverse") {
  const Space cp1 = Space::projective(Algebra::C, 1);
  CHECK(maxdiff(hopf_chart(projective_map(vec({1, 0, 0, 0}), cp1)), vec({1, 0, 0})) == 0.0);
  CHECK(maxdiff(hopf_chart(projective_map(vec({0, 0, 1, 0}), cp1)), vec({-1, 0, 0})) == 0.0);
  CHECK_THROWS_AS(hopf_chart(projective_map(vec({1, 0, 0, 0, 0, 0}), Space::projective(Algebra::C, 2))),
                  std::invalid_argument);

  const double r = 1.0 / std::sqrt(2.0);
  CHECK(maxdiff(hopf_chart_inverse(vec({1, 0, 0}), Algebra::C).rep(), vec({1, 0, 0, 0})) == 0.0);
  CHECK(maxdiff(hopf_chart_inverse(vec({-1, 0, 0}), Algebra::C).rep(), vec({0, 0, 1, 0})) == 0.0);
  CHECK(maxdiff(hopf_chart_inverse(vec({0, 1, 0}), Algebra::C).rep(), vec({r, 0, r, 0})) < 1e-15);

  std::mt19937_64 rng(9);
  for (Algebra a : kAlgebras) {
    const int dim = dimension(a);
    for (int s = 0; s < 300; ++s) {
      Eigen::VectorXd x = random_unit(rng, dim + 1);
      if (s % 3 == 1) {
        // Near the south pole.
        x.tail(dim) *= 1e-7;
        x[0] = -1.0;
        x.normalize();
      }
      CHECK(maxdiff(hopf_chart(hopf_chart_inverse(x, a)), x) < 1e-12);
      const auto p = projective_map(random_unit(rng, 2 * dim), Space::projective(a, 1));
      CHECK(hopf_chart_inverse(hopf_chart(p), a).equals(p));
    }
  }
}

TEST_CASE("fibres") {
  CHECK(maxdiff(hopf_basepoint(vec({1, 0, 0}), Algebra::C), vec({1, 0, 0, 0})) == 0.0);
  CHECK(maxdiff(hopf_basepoint(vec({-1, 0, 0}), Algebra::C), vec({0, 0, 1, 0})) == 0.0);
  const double angle = 2.0 * std::numbers::pi / 3.0;
  const Element<double> z(Algebra::C, Eigen::Vector2d(std::cos(angle), std::sin(angle)));
  CHECK(maxdiff(fiber_point(hopf_basepoint(vec({-1, 0, 0}), Algebra::C), Algebra::C, z),
                vec({0, 0, std::cos(angle), std::sin(angle)})) < 1e-15);
  const auto w = projective_map(vec({0.6, 0, 0, 0.8}), Space::projective(Algebra::C, 1));
  CHECK(maxdiff(fiber_basepoint(w), w.rep()) == 0.0);
  CHECK(maxdiff(fiber_point(w, Element<double>::unit(Algebra::C, 0)), w.rep()) == 0.0);

  std::mt19937_64 rng(10);
  for (Algebra a : kAlgebras) {
    const int dim = dimension(a);
    for (int s = 0; s < 200; ++s) {
      const Eigen::VectorXd x = random_unit(rng, dim + 1);
      const auto u = random_unit_scalar(rng, a);
      const Eigen::VectorXd p = fiber_point(hopf_basepoint(x, a), a, u);
      CHECK(std::abs(p.norm() - 1.0) < 1e-13);
      CHECK(maxdiff(hopf_map(p, a), x) < 1e-12);
    }
    const int n = a == Algebra::O ? 1 : 2;
    const Space space = Space::projective(a, n);
    for (int s = 0; s < 200; ++s) {
      const auto y = projective_map(random_unit(rng, space.ambient_dim()), space);
      const auto u = random_unit_scalar(rng, a);
      CHECK(projective_map(fiber_point(y, u), space).equals(y));
    }
  }
}

TEST_CASE("local trivialization matches the fibre parametrization") {
  std::mt19937_64 rng(12);
  for (Algebra a : kAlgebras) {
    const int n = a == Algebra::O ? 1 : 2;
    const Space space = Space::projective(a, n);
    for (int s = 0; s < 200; ++s) {
      const Eigen::VectorXd w = random_unit(rng, space.ambient_dim());
      const auto u = random_unit_scalar(rng, a);
      CHECK(maxdiff(local_trivialization(w, a, u), fiber_point(projective_map(w, space), u)) < 1e-13);
    }
    Eigen::VectorXd last_zero = Eigen::VectorXd::Zero(space.ambient_dim());
    last_zero[0] = 1.0;
    CHECK_THROWS_AS(local_trivialization(last_zero, a, Element<double>::unit(a, 0)), std::invalid_argument);
  }
}

TEST_CASE("templated on the scalar type") {
  Eigen::Matrix<long double, 4, 1> w(0.6L, 0.0L, 0.0L, 0.8L);
  const auto h = hopf_map(w, Algebra::C);
  CHECK(std::abs(double(h[0] + 0.28L)) < 1e-18);
  const Eigen::Vector4f wf(0.0f, 0.6f, 0.8f, 0.0f);
  const auto p = projective_map(wf, Space::projective(Algebra::C, 1));
  CHECK(std::abs(p.rep()[2] - 0.8f) < 1e-6f);
}
