#include "fiberdesign/design_file.hpp"

#include "fiberdesign/catalog.hpp"

#include <fstream>

namespace fiberdesign {

using nlohmann::json;

namespace {

const json& require(const json& doc, const char* key, const char* where) {
  auto it = doc.find(key);
  if (it == doc.end()) throw DesignFileError(std::string(where) + ": missing \"" + key + "\"");
  return *it;
}

int require_int(const json& doc, const char* key, const char* where) {
  const json& v = require(doc, key, where);
  if (!v.is_number_integer()) throw DesignFileError(std::string(where) + ": \"" + key + "\" must be an integer");
  return v.get<int>();
}

double require_number(const json& v, const std::string& where) {
  if (!v.is_number()) throw DesignFileError(where + " must be a number");
  return v.get<double>();
}

}  // namespace

json space_to_json(const Space& space) {
  if (space.is_sphere()) return {{"kind", "sphere"}, {"m", space.m()}};
  return {{"kind", "projective"}, {"algebra", std::string(1, algebra_symbol(space.algebra()))}, {"n", space.n()}};
}

Space space_from_json(const json& doc) {
  if (!doc.is_object()) throw DesignFileError("space: expected an object");
  const json& kind = require(doc, "kind", "space");
  if (!kind.is_string()) throw DesignFileError("space: \"kind\" must be a string");
  try {
    if (kind == "sphere") {
      const int m = require_int(doc, "m", "space");
      if (m < 0) throw DesignFileError("space: sphere dimension must be nonnegative");
      return Space::sphere(m);
    }
    if (kind == "projective") {
      const json& alg = require(doc, "algebra", "space");
      if (!alg.is_string()) throw DesignFileError("space: \"algebra\" must be one of R, C, H, O");
      return Space::projective(parse_algebra(alg.get<std::string>()), require_int(doc, "n", "space"));
    }
  } catch (const std::invalid_argument& e) {
    throw DesignFileError(std::string("space: ") + e.what());
  }
  throw DesignFileError("space: unknown kind '" + kind.get<std::string>() + "'");
}

json design_to_json(const WeightedDesign& design) {
  json points = json::array();
  for (Eigen::Index i = 0; i < design.size(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < design.points().rows(); ++j) row.push_back(design.points()(j, i));
    points.push_back(std::move(row));
  }
  json doc = {{"schema", kDesignSchemaVersion}, {"space", space_to_json(design.space())}, {"points", std::move(points)}};
  if (!design.is_uniform()) doc["weights"] = std::vector<double>(design.weights().begin(), design.weights().end());
  json meta = json::object();
  if (!design.name().empty()) meta["name"] = design.name();
  if (design.claimed_strength()) meta["claimed_strength"] = *design.claimed_strength();
  doc["meta"] = std::move(meta);
  return doc;
}

WeightedDesign design_from_json(const json& doc) {
  if (!doc.is_object()) throw DesignFileError("design: expected a JSON object");
  if (auto it = doc.find("schema"); it != doc.end() && *it != kDesignSchemaVersion)
    throw DesignFileError("design: unsupported schema " + it->dump());
  const Space space = space_from_json(require(doc, "space", "design"));

  const json& rows = require(doc, "points", "design");
  if (!rows.is_array() || rows.empty()) throw DesignFileError("points: expected a nonempty array");
  const Eigen::Index dim = space.ambient_dim();
  Eigen::MatrixXd points(dim, static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const json& row = rows[i];
    const std::string where = "points[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim)
      throw DesignFileError(where + ": expected " + std::to_string(dim) + " coordinates for " + space.to_string());
    for (Eigen::Index j = 0; j < dim; ++j)
      points(j, static_cast<Eigen::Index>(i)) = require_number(row[j], where + "[" + std::to_string(j) + "]");
  }

  std::string name;
  std::optional<int> strength;
  if (auto it = doc.find("meta"); it != doc.end()) {
    if (!it->is_object()) throw DesignFileError("meta: expected an object");
    if (auto n = it->find("name"); n != it->end() && !n->is_null()) {
      if (!n->is_string()) throw DesignFileError("meta: \"name\" must be a string");
      name = n->get<std::string>();
    }
    if (auto s = it->find("claimed_strength"); s != it->end() && !s->is_null()) {
      if (!s->is_number_integer()) throw DesignFileError("meta: \"claimed_strength\" must be an integer");
      strength = s->get<int>();
    }
  }

  try {
    auto it = doc.find("weights");
    if (it == doc.end() || it->is_null()) return WeightedDesign::uniform(space, std::move(points), name, strength);
    if (!it->is_array() || it->size() != rows.size())
      throw DesignFileError("weights: expected " + std::to_string(rows.size()) + " numbers, one per point");
    Eigen::VectorXd weights(points.cols());
    for (std::size_t i = 0; i < it->size(); ++i)
      weights[static_cast<Eigen::Index>(i)] = require_number((*it)[i], "weights[" + std::to_string(i) + "]");
    return WeightedDesign(space, std::move(points), std::move(weights), name, strength);
  } catch (const std::invalid_argument& e) {
    throw DesignFileError(std::string("design: ") + e.what());
  }
}

WeightedDesign load_design(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DesignFileError("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DesignFileError(path.string() + ": " + e.what());
  }
  try {
    return design_from_json(doc);
  } catch (const DesignFileError& e) {
    throw DesignFileError(path.string() + ": " + e.what());
  }
}

void save_design(const WeightedDesign& design, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DesignFileError("cannot write " + path.string());
  out << design_to_json(design).dump(2) << '\n';
  if (!out) throw DesignFileError("error writing " + path.string());
}

WeightedDesign resolve_design(std::string_view source) {
  constexpr std::string_view prefix = "catalog:";
  if (source.starts_with(prefix)) {
    try {
      return catalog(source.substr(prefix.size()));
    } catch (const std::invalid_argument& e) {
      throw DesignFileError(e.what());
    }
  }
  return load_design(std::filesystem::path(std::string(source)));
}

}  // namespace fiberdesign
