#pragma once

#include <stdexcept>
#include <string>

namespace fiberdesign {

/// A size limit (monomial count, point count) would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two lifted points coincide; the lifted set must be a disjoint union.
class CollisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Images under a projection cannot be grouped unambiguously.
class GroupingAmbiguity : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested method does not apply to this space.
class Unsupported : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fiberdesign
