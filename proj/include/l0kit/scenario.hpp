#pragma once

// JSON scenarios and reports for the batch front end.
//
// A scenario names a finite space, a set, builtin map families with per-atom
// parameters and a solver. Reports carry schema_version 1, atom-ordered lists
// and reals printed with round-trip precision.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "l0kit/solvers.hpp"

namespace l0kit {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Exit codes of the command line tool.
enum class Exit : int { Ok = 0, Failed = 1, BadInput = 2, Unsupported = 3 };

/// Unsupported -> 3; solver-side failures (NoConvergence, NotSelfMap,
/// hypothesis and certificate violations) -> 1; everything else is a
/// malformed or invalid input -> 2.
Exit exit_for(Errc code) noexcept;

struct Scenario {
  std::string name;
  SpacePtr space;
  std::size_t dim = 0;
  std::optional<SetSpec> set;
  /// "contraction", "schauder_approx", "schauder", "krasnoselskii" or "random_operator".
  std::string solver;
  std::vector<AtomMap> T;  // the map (empty for pure contraction scenarios)
  std::vector<AtomMap> S;  // contraction part, when present
  std::optional<RandomScalar> alpha;
  std::optional<RandomPoint> shift;
  std::optional<RandomPoint> x0;
  std::vector<RandomScalar> schedule;
  std::optional<RandomScalar> net_eps;  // default epsilon for `net`
  std::optional<RandomScalar> tol;  // always set by parse_scenario
  std::uint64_t seed = 0;
  std::size_t max_iter = 100000;

  const RandomScalar& tolerance() const { return *tol; }
};

/// Throws Error(BadValue, ...) on schema problems; library validation errors
/// (DimMismatch, BadEpsilon, ...) propagate unchanged.
Scenario parse_scenario(const Json& doc);
/// Reads and parses a file; JSON syntax errors become BadValue.
Scenario load_scenario(const std::string& path);

/// Builds one atom's map from a family description such as
/// {"family": "affine", "A": [[...]], "b": [...]}.
AtomMap make_family_map(const Json& params, std::size_t dim);

struct Outcome {
  Json report;
  Exit exit = Exit::Ok;
};

Json report_json(const FixedPointReport& report);
Json error_json(const Error& e);

/// Runs the scenario's solver. Errors are captured in the report.
Outcome run_scenario(const Scenario& sc);
/// Runs the module solver and the per-atom classical pipeline side by side.
Outcome compare_with_oracle(const Scenario& sc);
/// build_net on the scenario set plus a verify_net sampling report.
Outcome emit_net(const Scenario& sc, std::optional<double> eps, std::size_t samples);

/// Twelve approximate fixed-point scenarios (rotations, affine maps, constants).
std::vector<Json> builtin_suite();
/// Contraction scenarios with closed-form answers (I - A)^{-1} shift.
std::vector<Json> builtin_contraction_suite();
/// Splitting scenarios S + T with alpha <= 0.9.
std::vector<Json> builtin_splitting_suite();

}  // namespace l0kit
