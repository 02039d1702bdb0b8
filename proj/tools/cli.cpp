#include "cli.hpp"

#include "fiberdesign/catalog.hpp"
#include "fiberdesign/construct.hpp"
#include "fiberdesign/design_file.hpp"
#include "fiberdesign/errors.hpp"
#include "fiberdesign/table1.hpp"
#include "fiberdesign/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>

namespace fiberdesign::cli {

namespace {

using nlohmann::json;

std::string sci(double v) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(3) << v;
  return s.str();
}

std::string describe(const WeightedDesign& d) {
  std::ostringstream s;
  s << (d.name().empty() ? "(unnamed)" : d.name()) << " on " << d.space().to_string() << ", " << d.size()
    << (d.size() == 1 ? " point" : " points");
  if (!d.is_uniform()) s << ", weighted";
  return s.str();
}

// A file path, "catalog:<name>", or a bare catalog name.
WeightedDesign load_source(const std::string& source) {
  if (source.starts_with("catalog:") || std::filesystem::is_regular_file(source)) return resolve_design(source);
  try {
    return catalog(source);
  } catch (const std::invalid_argument& e) {
    throw DesignFileError("'" + source + "' is neither a readable file nor a catalog design (" + e.what() + ")");
  }
}

// Writes to `path`, or as JSON to `out` when no path is given.
void emit(const WeightedDesign& design, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-")
    out << design_to_json(design).dump(2) << '\n';
  else
    save_design(design, path);
}

// Summary lines go to stdout unless stdout carries the design itself.
std::ostream& info_stream(const std::string& path, std::ostream& out, std::ostream& err) {
  return path.empty() || path == "-" ? err : out;
}

void print_report(const VerificationReport& report, std::ostream& out) {
  out << "method   " << method_name(report.method) << ", tolerance " << sci(report.tolerance) << '\n';
  out << "degree  deviation  verdict\n";
  for (std::size_t s = 0; s < report.deviation.size(); ++s)
    out << std::setw(6) << s << "  " << std::setw(9) << sci(report.deviation[s]) << "  "
        << (report.degree_passed[s] ? "pass" : "FAIL") << '\n';
  if (report.passed())
    out << "PASS: weighted " << report.tested_strength << "-design\n";
  else
    out << "FAIL: first failing degree " << *report.first_failure() << '\n';
}

json report_json(const WeightedDesign& design, const VerificationReport& report) {
  json degrees = json::array();
  for (std::size_t s = 0; s < report.deviation.size(); ++s)
    degrees.push_back({{"degree", s}, {"deviation", report.deviation[s]}, {"pass", bool(report.degree_passed[s])}});
  json doc = {{"design", design.name()},
              {"space", space_to_json(design.space())},
              {"size", design.size()},
              {"t", report.tested_strength},
              {"method", method_name(report.method)},
              {"tolerance", report.tolerance},
              {"degrees", std::move(degrees)},
              {"passed", report.passed()}};
  if (auto f = report.first_failure()) doc["first_failure"] = *f;
  return doc;
}

std::optional<Method> optional_method(const std::string& name) {
  if (name.empty()) return std::nullopt;
  return parse_method(name);
}

std::vector<Eigen::VectorXd> parse_basepoints(const std::string& mode, const WeightedDesign& base) {
  if (mode == "default") return {};
  if (mode == "random") return random_basepoints(base, 1);
  if (mode.starts_with("random:")) {
    const std::string seed = mode.substr(7);
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(seed, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (seed.empty() || used != seed.size()) throw std::invalid_argument("bad seed in --basepoints " + mode);
    return random_basepoints(base, value);
  }
  throw std::invalid_argument("--basepoints must be default, random or random:<seed>");
}

void print_points(const WeightedDesign& d, std::ostream& out) {
  out << "  weight     point\n";
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    out << "  " << std::fixed << std::setprecision(6) << d.weight(i) << "  (";
    for (Eigen::Index j = 0; j < d.points().rows(); ++j)
      out << (j ? ", " : "") << std::showpos << std::setprecision(6) << d.points()(j, i) << std::noshowpos;
    out << ")\n";
  }
  out << std::defaultfloat;
}

struct VerifyArgs {
  std::string design;
  int t = 0;
  std::string method;
  double tol = kDefaultTolerance;
  bool json = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const WeightedDesign design = load_source(a.design);
  const VerificationReport report = verify(design, a.t, a.tol, optional_method(a.method));
  if (a.json) {
    out << report_json(design, report).dump(2) << '\n';
  } else {
    out << "design   " << describe(design) << '\n';
    print_report(report, out);
  }
  return report.passed() ? kPass : kFail;
}

struct LiftArgs {
  std::string base;
  std::string fiber;
  std::optional<int> t;
  std::string basepoints = "default";
  std::string output;
  std::string method;
};

int cmd_lift(const LiftArgs& a, std::ostream& out, std::ostream& err) {
  const WeightedDesign base = load_source(a.base);
  const WeightedDesign fiber = load_source(a.fiber);
  const WeightedDesign lifted = lift(LiftSpec{base, {fiber}, parse_basepoints(a.basepoints, base)});
  std::ostream& info = info_stream(a.output, out, err);
  info << "lift: |Y| = " << base.size() << ", |Z| = " << fiber.size() << ", |X| = " << lifted.size() << " on "
       << lifted.space().to_string() << '\n';
  int code = kPass;
  std::optional<int> strength;
  if (a.t) {
    const VerificationReport report = verify(lifted, *a.t, kDefaultTolerance, optional_method(a.method));
    print_report(report, info);
    if (report.passed())
      strength = *a.t;
    else
      code = kFail;
  }
  emit(lifted.renamed(lifted.name(), strength), a.output, out);
  return code;
}

struct CollapseArgs {
  std::string design;
  std::string target = "hopf-base";
  std::string algebra;
  std::optional<int> n;
  int t = 0;
  std::string output;
  bool skip_input_check = false;
};

int cmd_collapse(const CollapseArgs& a, std::ostream& out, std::ostream& err) {
  const WeightedDesign design = load_source(a.design);
  if (!design.space().is_sphere()) throw std::invalid_argument("collapse needs a spherical design");
  const int d = design.space().m();
  CollapseTarget target = CollapseTarget::hopf_base(Algebra::C);
  if (a.target == "hopf-base") {
    const Algebra alg = a.algebra.empty() ? hopf_algebra_for_total(d) : parse_algebra(a.algebra);
    target = CollapseTarget::hopf_base(alg);
  } else if (a.target == "projective") {
    if (a.algebra.empty()) throw std::invalid_argument("--target projective needs --algebra R|C|H|O");
    const Algebra alg = parse_algebra(a.algebra);
    const int dim = dimension(alg);
    if ((d + 1) % dim != 0)
      throw std::invalid_argument("S^" + std::to_string(d) + " is not the total space of a projective map over " +
                                  std::string(1, algebra_symbol(alg)));
    const int n = (d + 1) / dim - 1;
    if (a.n && *a.n != n) throw std::invalid_argument("--n " + std::to_string(*a.n) + " does not match S^" + std::to_string(d));
    target = CollapseTarget::projective(alg, n);
  } else {
    throw std::invalid_argument("--target must be projective or hopf-base");
  }

  CollapseOptions options;
  options.verify_input = !a.skip_input_check;
  const WeightedDesign base = collapse(design, target, a.t, options);
  std::ostream& info = info_stream(a.output, out, err);
  info << "collapse: |X| = " << design.size() << " -> |Y| = " << base.size() << " on " << base.space().to_string()
       << '\n';
  print_points(base, info);
  const VerificationReport report = verify(base, a.t / 2);
  print_report(report, info);
  emit(base, a.output, out);
  return report.passed() ? kPass : kFail;
}

struct ConvertArgs {
  std::string design;
  std::string algebra;
  std::string output;
};

int cmd_convert(const ConvertArgs& a, std::ostream& out, std::ostream& err) {
  const WeightedDesign design = load_source(a.design);
  const WeightedDesign converted =
      design.space().is_projective()
          ? convert_to_sphere(design)
          : convert_to_projective(design, a.algebra.empty() ? std::nullopt : std::optional(parse_algebra(a.algebra)));
  info_stream(a.output, out, err) << "convert: " << design.space().to_string() << " -> "
                                  << converted.space().to_string() << ", " << converted.size() << " points\n";
  emit(converted, a.output, out);
  return kPass;
}

int cmd_catalog_list(std::ostream& out) {
  out << std::left << std::setw(20) << "name" << std::setw(20) << "example" << std::setw(7) << "space"
      << std::setw(8) << "points" << std::setw(10) << "strength" << "description\n";
  for (const auto& entry : catalog_entries()) {
    const WeightedDesign d = catalog(entry.example);
    const std::string strength = d.claimed_strength() ? std::to_string(*d.claimed_strength()) : "any";
    out << std::setw(20) << entry.usage << std::setw(20) << entry.example << std::setw(7) << d.space().to_string()
        << std::setw(8) << d.size() << std::setw(10) << strength << entry.description << '\n';
  }
  out << std::right;
  return kPass;
}

int cmd_table1(std::ostream& out) {
  out << std::setw(3) << "t" << std::setw(5) << "|Y|" << std::setw(6) << "|X|" << std::setw(10) << "expected"
      << std::setw(9) << "minimum" << "  base            status\n";
  bool ok = true;
  for (const Table1Row& row : table1()) {
    std::ostringstream expected;
    expected << row.expected_base_size << "/" << row.expected_size;
    out << std::setw(3) << row.t;
    if (row.constructed()) {
      out << std::setw(5) << *row.base_size << std::setw(6) << *row.size;
    } else {
      out << std::setw(5) << row.expected_base_size << std::setw(6) << row.expected_base_size * row.fiber_size;
    }
    out << std::setw(10) << expected.str() << std::setw(9) << row.putative_minimum << "  " << std::left
        << std::setw(16) << (row.constructed() ? row.base_name : "-") << std::right;
    if (!row.constructed())
      out << "arithmetic only, base coordinates external\n";
    else if (row.matches())
      out << "verified " << row.t << "-design\n";
    else
      out << "MISMATCH\n";
    ok = ok && row.matches();
  }
  return ok ? kPass : kFail;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct and verify weighted spherical and projective t-designs via Hopf and projective maps",
               "fiberdesign"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  const std::string method_help = "moment | gegenbauer (spheres), lift-oracle | innerproduct (projective)";

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check a design's strength; exit 0 iff it is a t-design");
  verify_cmd->add_option("design", verify_args.design, "Design file, catalog:<name> or catalog name")->required();
  verify_cmd->add_option("--t", verify_args.t, "Strength to test")->required()->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--method", verify_args.method, method_help);
  verify_cmd->add_option("--tol", verify_args.tol, "Absolute tolerance per degree")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", verify_args.json, "Machine-readable report");

  LiftArgs lift_args;
  auto* lift_cmd = app.add_subcommand("lift", "Lift a base design with fibre designs to a sphere design");
  lift_cmd->add_option("base", lift_args.base, "Base design on FP^n or S^{k+1}")->required();
  lift_cmd->add_option("--fiber", lift_args.fiber, "Fibre design on S^k")->required();
  lift_cmd->add_option("--t", lift_args.t, "Verify the lifted design at this strength")->check(CLI::NonNegativeNumber);
  lift_cmd->add_option("--basepoints", lift_args.basepoints, "default | random | random:<seed>");
  lift_cmd->add_option("--method", lift_args.method, method_help);
  lift_cmd->add_option("-o,--output", lift_args.output, "Output file (default: JSON on stdout)");

  CollapseArgs collapse_args;
  auto* collapse_cmd = app.add_subcommand("collapse", "Project a sphere t-design to a weighted floor(t/2)-design");
  collapse_cmd->add_option("design", collapse_args.design, "Design on S^d")->required();
  collapse_cmd->add_option("--target", collapse_args.target, "projective | hopf-base");
  collapse_cmd->add_option("--algebra", collapse_args.algebra, "R | C | H | O (inferred for hopf-base)");
  collapse_cmd->add_option("--n", collapse_args.n, "Projective dimension (inferred from d)");
  collapse_cmd->add_option("--t", collapse_args.t, "Strength of the input design")->required()->check(CLI::NonNegativeNumber);
  collapse_cmd->add_flag("--no-input-check", collapse_args.skip_input_check, "Skip verifying the input at t");
  collapse_cmd->add_option("-o,--output", collapse_args.output, "Output file (default: JSON on stdout)");

  ConvertArgs convert_args;
  auto* convert_cmd = app.add_subcommand("convert", "Move a design between FP^1 and S^{k+1} through h_F");
  convert_cmd->add_option("design", convert_args.design, "Design on FP^1 or S^{k+1}")->required();
  convert_cmd->add_option("--algebra", convert_args.algebra, "Target algebra for sphere input");
  convert_cmd->add_option("-o,--output", convert_args.output, "Output file (default: JSON on stdout)");

  auto* catalog_cmd = app.add_subcommand("catalog", "List or emit catalog designs");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "List catalog designs");
  std::string emit_name, emit_output;
  auto* emit_cmd = catalog_cmd->add_subcommand("emit", "Write a catalog design as a design file");
  emit_cmd->add_option("name", emit_name, "Catalog name, e.g. polygon(8)")->required();
  emit_cmd->add_option("-o,--output", emit_output, "Output file (default: stdout)");

  auto* table_cmd = app.add_subcommand("table1", "Sizes of S^3 designs lifted from C-Hopf bases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (verify_cmd->parsed()) return cmd_verify(verify_args, out);
    if (lift_cmd->parsed()) return cmd_lift(lift_args, out, err);
    if (collapse_cmd->parsed()) return cmd_collapse(collapse_args, out, err);
    if (convert_cmd->parsed()) return cmd_convert(convert_args, out, err);
    if (list_cmd->parsed()) return cmd_catalog_list(out);
    if (emit_cmd->parsed()) {
      const WeightedDesign d = load_source(emit_name.starts_with("catalog:") ? emit_name : "catalog:" + emit_name);
      emit(d, emit_output, out);
      if (!emit_output.empty()) out << "wrote " << describe(d) << " to " << emit_output << '\n';
      return kPass;
    }
    if (table_cmd->parsed()) return cmd_table1(out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace fiberdesign::cli
