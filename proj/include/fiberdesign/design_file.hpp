#pragma once

#include "fiberdesign/weighted_design.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fiberdesign {

inline constexpr int kDesignSchemaVersion = 1;

/// Malformed or unreadable design file.
class DesignFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"schema": 1, "space": {...}, "points": [[...], ...], "weights": [...],
///  "meta": {"name": ..., "claimed_strength": ...}}. Weights are omitted for
/// uniform designs.
nlohmann::json design_to_json(const WeightedDesign& design);
WeightedDesign design_from_json(const nlohmann::json& doc);

nlohmann::json space_to_json(const Space& space);
Space space_from_json(const nlohmann::json& doc);

WeightedDesign load_design(const std::filesystem::path& path);
void save_design(const WeightedDesign& design, const std::filesystem::path& path);

/// "catalog:<name>" or a path to a design file.
WeightedDesign resolve_design(std::string_view source);

}  // namespace fiberdesign
