#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "parageo/algebra/graded_algebra.hpp"

namespace parageo {

using Json = nlohmann::json;

struct ExperimentConfig {
  std::string command;  // catalog | verify | jets | fiber | family | reparam | classify
  std::string algebra;
  std::string type_spec;
  std::optional<int> grid;         // defaults to 2
  std::optional<unsigned> orders;  // defaults to depth + 3
  std::string suite;               // verify: lemmas | brackets | safety | all
  std::string x;                   // direction; empty picks a member of the type
  std::string z;                   // reparam: p_+ element; empty sweeps the grid
  std::string second;              // reparam: target direction; empty reuses x
  std::string output_path;         // empty writes to stdout
  std::string format = "json";     // json | md

  Json to_json() const;
  /// Throws Usage on unknown keys or wrong value types.
  static ExperimentConfig from_json(const Json& j);
  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Element from "E21 + (1/2)*E32 - 3*E31" (labels matched longest first) or
/// from a bracketed coordinate list "[1,0,1/2]" over n.
AlgElem parse_element(const GradedAlgebra& g, const std::string& text);

Json scalar_json(const Scalar& s);
Json vector_json(const Vector& v);
/// Nonzero coordinates keyed by basis label.
Json element_json(const AlgElem& x);

struct RunResult {
  Json report;
  int exit_code = 0;  // 0 pass, 1 a checked assertion failed
};

/// Validates the config (Usage / ParseError / catalog errors propagate) and
/// runs it. workers = 0 uses PARAGEO_WORKERS or the hardware concurrency.
RunResult run(const ExperimentConfig& config, unsigned workers = 0);

/// Worker count from PARAGEO_WORKERS (positive integer) capped at the
/// hardware concurrency. Throws Usage on a malformed value.
unsigned default_workers();

/// Canonical JSON (sorted keys, two-space indent, trailing newline) or Markdown.
std::string emit(const Json& report, const std::string& format);

}  // namespace parageo
