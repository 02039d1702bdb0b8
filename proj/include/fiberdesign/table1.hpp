#pragma once

#include "fiberdesign/verify.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fiberdesign {

/// One row of the size table for t-designs on S^3 built over C-Hopf bases
/// with V_{t+1} fibres.
struct Table1Row {
  int t = 0;
  int expected_base_size = 0;
  int expected_size = 0;
  int putative_minimum = 0;

  /// Empty when the base coordinates are not available (the row is then
  /// size arithmetic |Y| (t + 1) only).
  std::string base_name;
  int fiber_size = 0;
  std::optional<int> base_size;
  std::optional<int> size;
  std::optional<VerificationReport> report;

  bool constructed() const { return size.has_value(); }
  /// Sizes agree with the expected values and, if constructed, X verifies at t.
  bool matches() const;
};

/// Rows t = 0..8 and 11; rows with catalog bases are lifted and verified.
std::vector<Table1Row> table1(double tol = kDefaultTolerance);

}  // namespace fiberdesign
