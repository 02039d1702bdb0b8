#include "fiberdesign/table1.hpp"

#include "fiberdesign/catalog.hpp"
#include "fiberdesign/construct.hpp"

namespace fiberdesign {

namespace {

struct Reference {
  int t;
  int base_size;
  int size;
  int putative_minimum;
};

constexpr Reference kReference[] = {
    {0, 1, 1, 1},   {1, 1, 2, 2},   {2, 2, 6, 5},    {3, 2, 8, 8},     {4, 4, 20, 20},
    {5, 4, 24, 24}, {6, 6, 42, 42}, {7, 6, 48, 48}, {8, 12, 108, 96}, {11, 12, 144, 120},
};

// Smallest catalog design on S^2 of strength floor(t/2).
std::optional<WeightedDesign> base_for(int t) {
  switch (t / 2) {
    case 0: return single_point(2);
    case 1: return poles(2);
    case 2: return tetrahedron();
    case 3: return octahedron();
    default: return std::nullopt;
  }
}

}  // namespace

bool Table1Row::matches() const {
  if (!constructed()) return true;
  return *base_size == expected_base_size && *size == expected_size && report && report->passed();
}

std::vector<Table1Row> table1(double tol) {
  std::vector<Table1Row> rows;
  for (const Reference& ref : kReference) {
    Table1Row row;
    row.t = ref.t;
    row.expected_base_size = ref.base_size;
    row.expected_size = ref.size;
    row.putative_minimum = ref.putative_minimum;
    row.fiber_size = ref.t + 1;
    if (auto base = base_for(ref.t)) {
      const WeightedDesign lifted = lift(LiftSpec{*base, {polygon(ref.t + 1)}, {}});
      row.base_name = base->name();
      row.base_size = static_cast<int>(base->size());
      row.size = static_cast<int>(lifted.size());
      row.report = verify_spherical(lifted, ref.t, tol);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace fiberdesign
