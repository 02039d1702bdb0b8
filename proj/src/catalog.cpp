#include "fiberdesign/catalog.hpp"

#include "fiberdesign/algebra.hpp"

#include <Eigen/Eigenvalues>

#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

namespace fiberdesign {

namespace {

std::string with_args(std::string_view name, std::initializer_list<int> args) {
  std::string out(name);
  out += '(';
  bool first = true;
  for (int a : args) {
    if (!first) out += ',';
    out += std::to_string(a);
    first = false;
  }
  return out + ')';
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

// Nodes and normalized weights of the n-point Gauss rule for the weight
// (1 - u^2)^{lambda - 1/2} on [-1, 1], by Golub-Welsch.
std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_gegenbauer(int n, double lambda) {
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    const double b = i * (i + 2.0 * lambda - 1.0) / (4.0 * (i + lambda) * (i + lambda - 1.0));
    jacobi(i, i - 1) = jacobi(i - 1, i) = std::sqrt(b);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  Eigen::VectorXd weights = solver.eigenvectors().row(0).transpose().array().square();
  return {solver.eigenvalues(), weights / weights.sum()};
}

}  // namespace

WeightedDesign polygon(int n) {
  require(n >= 1, "polygon needs N >= 1");
  Eigen::MatrixXd points(2, n);
  for (int i = 0; i < n; ++i) {
    const double angle = 2.0 * std::numbers::pi * i / n;
    points.col(i) << std::cos(angle), std::sin(angle);
  }
  return WeightedDesign::uniform(Space::sphere(1), std::move(points), with_args("polygon", {n}), n - 1);
}

WeightedDesign single_point(int m) {
  require(m >= 0, "point needs m >= 0");
  Eigen::MatrixXd points = Eigen::MatrixXd::Zero(m + 1, 1);
  points(0, 0) = 1.0;
  return WeightedDesign::uniform(Space::sphere(m), std::move(points), with_args("point", {m}), 0);
}

WeightedDesign poles(int m) {
  require(m >= 0, "poles needs m >= 0");
  Eigen::MatrixXd points = Eigen::MatrixXd::Zero(m + 1, 2);
  points(0, 0) = 1.0;
  points(0, 1) = -1.0;
  // {+-1} is all of S^0, hence a design of every strength.
  const std::optional<int> strength = m == 0 ? std::nullopt : std::optional<int>(1);
  return WeightedDesign::uniform(Space::sphere(m), std::move(points), with_args("poles", {m}), strength);
}

WeightedDesign cross_polytope(int m) {
  require(m >= 0, "cross_polytope needs m >= 0");
  Eigen::MatrixXd points = Eigen::MatrixXd::Zero(m + 1, 2 * (m + 1));
  for (int i = 0; i <= m; ++i) {
    points(i, 2 * i) = 1.0;
    points(i, 2 * i + 1) = -1.0;
  }
  const std::optional<int> strength = m == 0 ? std::nullopt : std::optional<int>(3);
  return WeightedDesign::uniform(Space::sphere(m), std::move(points), with_args("cross_polytope", {m}), strength);
}

WeightedDesign octahedron() {
  return cross_polytope(2).renamed("octahedron", 3);
}

WeightedDesign tetrahedron() {
  Eigen::MatrixXd points(3, 4);
  points << 1, 1, -1, -1,
            1, -1, 1, -1,
            1, -1, -1, 1;
  points /= std::sqrt(3.0);
  return WeightedDesign::uniform(Space::sphere(2), std::move(points), "tetrahedron", 2);
}

WeightedDesign d4_roots() {
  using Quaternion = Element<double>;
  // The 24 Hurwitz units.
  std::vector<Eigen::Vector4d> units;
  for (int i = 0; i < 4; ++i)
    for (double s : {1.0, -1.0}) {
      Eigen::Vector4d v = Eigen::Vector4d::Zero();
      v[i] = s;
      units.push_back(v);
    }
  for (int signs = 0; signs < 16; ++signs) {
    Eigen::Vector4d v;
    for (int i = 0; i < 4; ++i) v[i] = (signs >> i & 1) ? -0.5 : 0.5;
    units.push_back(v);
  }
  // Rotation q v conj(q) taking (e1 + e2 + e3)/sqrt(3) to e1, about (e2 - e3)/sqrt(2).
  // It maps the order-6 unit (1 + e1 + e2 + e3)/2 to exp(pi e1 / 3), so the
  // units split into four hexagons on complex fibres.
  const double cos_theta = 1.0 / std::sqrt(3.0);
  const double c = std::sqrt((1.0 + cos_theta) / 2.0);
  const double s = std::sqrt((1.0 - cos_theta) / 2.0) / std::sqrt(2.0);
  const Quaternion q(Algebra::H, Eigen::Vector4d(c, 0.0, s, -s));
  const Quaternion q_conj = conjugate(q);
  Eigen::MatrixXd points(4, 24);
  for (int i = 0; i < 24; ++i) {
    const Quaternion v(Algebra::H, units[i]);
    points.col(i) = multiply(multiply(q, v), q_conj).coeffs();
  }
  return WeightedDesign::uniform(Space::sphere(3), std::move(points), "d4_roots", 5);
}

WeightedDesign e8_roots() {
  Eigen::MatrixXd points(8, 240);
  int col = 0;
  const double a = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (double si : {1.0, -1.0})
        for (double sj : {1.0, -1.0}) {
          points.col(col).setZero();
          points(i, col) = si * a;
          points(j, col) = sj * a;
          ++col;
        }
  const double b = 0.5 * a;
  for (int signs = 0; signs < 256; ++signs) {
    if (__builtin_popcount(static_cast<unsigned>(signs)) % 2 != 0) continue;
    for (int i = 0; i < 8; ++i) points(i, col) = (signs >> i & 1) ? -b : b;
    ++col;
  }
  return WeightedDesign::uniform(Space::sphere(7), std::move(points), "e8_roots", 7);
}

WeightedDesign gauss_product(int m, int t) {
  require(m >= 0 && t >= 0, "gauss_product needs m >= 0 and t >= 0");
  if (m == 0) return poles(0).renamed(with_args("gauss_product", {m, t}), t);
  if (m == 1) return polygon(t + 1).renamed(with_args("gauss_product", {m, t}), t);
  const WeightedDesign sub = gauss_product(m - 1, t);
  const auto [nodes, node_weights] = gauss_gegenbauer(t / 2 + 1, 0.5 * (m - 1));
  const Eigen::Index count = nodes.size() * sub.size();
  Eigen::MatrixXd points(m + 1, count);
  Eigen::VectorXd weights(count);
  Eigen::Index col = 0;
  for (Eigen::Index j = 0; j < nodes.size(); ++j) {
    const double radius = std::sqrt(std::max(0.0, 1.0 - nodes[j] * nodes[j]));
    for (Eigen::Index i = 0; i < sub.size(); ++i, ++col) {
      points(0, col) = nodes[j];
      points.col(col).tail(m) = radius * sub.point(i);
      weights[col] = node_weights[j] * sub.weight(i);
    }
  }
  for (Eigen::Index i = 0; i < count; ++i) points.col(i).normalize();
  weights /= weights.sum();
  return WeightedDesign(Space::sphere(m), std::move(points), std::move(weights), with_args("gauss_product", {m, t}), t);
}

namespace {

struct ParsedSpec {
  std::string name;
  std::vector<int> args;
};

ParsedSpec parse_spec(std::string_view spec) {
  ParsedSpec out;
  const auto open = spec.find('(');
  if (open == std::string_view::npos) {
    out.name = std::string(spec);
    return out;
  }
  if (spec.back() != ')') throw std::invalid_argument("malformed catalog name '" + std::string(spec) + "'");
  out.name = std::string(spec.substr(0, open));
  std::string_view inner = spec.substr(open + 1, spec.size() - open - 2);
  while (!inner.empty()) {
    const auto comma = inner.find(',');
    std::string_view token = inner.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw std::invalid_argument("malformed catalog argument '" + std::string(token) + "'");
    out.args.push_back(value);
    if (comma == std::string_view::npos) break;
    inner.remove_prefix(comma + 1);
  }
  return out;
}

void expect_args(const ParsedSpec& p, std::size_t n) {
  if (p.args.size() != n)
    throw std::invalid_argument(p.name + " takes " + std::to_string(n) + " argument(s), got " +
                                std::to_string(p.args.size()));
}

}  // namespace

WeightedDesign catalog(std::string_view spec) {
  const ParsedSpec p = parse_spec(spec);
  if (p.name == "polygon") return expect_args(p, 1), polygon(p.args[0]);
  if (p.name == "point") return expect_args(p, 1), single_point(p.args[0]);
  if (p.name == "poles") {
    if (p.args.empty()) return poles(1);
    return expect_args(p, 1), poles(p.args[0]);
  }
  if (p.name == "pole_pair_s2") return expect_args(p, 0), poles(2).renamed("pole_pair_s2", 1);
  if (p.name == "cross_polytope") return expect_args(p, 1), cross_polytope(p.args[0]);
  if (p.name == "octahedron") return expect_args(p, 0), octahedron();
  if (p.name == "tetrahedron") return expect_args(p, 0), tetrahedron();
  if (p.name == "d4_roots") return expect_args(p, 0), d4_roots();
  if (p.name == "e8_roots") return expect_args(p, 0), e8_roots();
  if (p.name == "gauss_product") return expect_args(p, 2), gauss_product(p.args[0], p.args[1]);
  throw std::invalid_argument("unknown catalog design '" + std::string(spec) + "'");
}

std::vector<CatalogEntry> catalog_entries() {
  return {
      {"polygon(N)", "polygon(8)", "regular N-gon V_N on S^1"},
      {"point(m)", "point(2)", "single point e_0 on S^m"},
      {"poles(m)", "poles(2)", "antipodal pair +-e_0 on S^m; bare 'poles' is S^1"},
      {"pole_pair_s2", "pole_pair_s2", "poles of S^2 (C-Hopf base)"},
      {"cross_polytope(m)", "cross_polytope(7)", "+-e_i on S^m"},
      {"octahedron", "octahedron", "cross-polytope on S^2"},
      {"tetrahedron", "tetrahedron", "regular tetrahedron on S^2"},
      {"d4_roots", "d4_roots", "D4 root system, four Hopf hexagons"},
      {"e8_roots", "e8_roots", "E8 root system"},
      {"gauss_product(m,t)", "gauss_product(3,7)", "weighted Gauss-Gegenbauer product rule"},
  };
}

}  // namespace fiberdesign
