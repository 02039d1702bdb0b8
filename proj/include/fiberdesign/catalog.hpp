#pragma once

#include "fiberdesign/weighted_design.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace fiberdesign {

// Named designs. Each carries its certified strength as claimed_strength;
// the unit tests re-verify every one and check it fails one degree higher.

/// V_N: vertices of the regular N-gon on S^1, strength N - 1.
WeightedDesign polygon(int n);
/// {e_0} on S^m, strength 0.
WeightedDesign single_point(int m);
/// {+e_0, -e_0} on S^m, strength 1 (for m >= 1).
WeightedDesign poles(int m);
/// {+-e_i} on S^m, strength 3 (for m >= 1).
WeightedDesign cross_polytope(int m);
/// Cross-polytope on S^2.
WeightedDesign octahedron();
/// Regular tetrahedron on S^2, strength 2.
WeightedDesign tetrahedron();
/// D_4 roots on S^3 (24 points, strength 5), oriented so that the root system
/// is four regular hexagons on complex Hopf fibres.
WeightedDesign d4_roots();
/// E_8 roots on S^7 (240 points, strength 7).
WeightedDesign e8_roots();
/// Weighted product rule on S^m of strength t: Gauss-Gegenbauer nodes in the
/// first coordinate times a strength-t rule on S^{m-1}, down to V_{t+1} on S^1.
WeightedDesign gauss_product(int m, int t);

/// Look up a design by name with optional parameters, e.g. "polygon(8)",
/// "cross_polytope(7)", "d4_roots", "gauss_product(3,7)".
WeightedDesign catalog(std::string_view spec);

struct CatalogEntry {
  std::string usage;
  std::string example;
  std::string description;
};

std::vector<CatalogEntry> catalog_entries();

}  // namespace fiberdesign
