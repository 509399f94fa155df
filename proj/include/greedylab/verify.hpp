#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "greedylab/constants.hpp"
#include "greedylab/core.hpp"
#include "greedylab/gaps.hpp"
#include "greedylab/spaces.hpp"

namespace greedylab {

struct BoundCheck {
  std::string id;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  std::string status;  // pass | fail | warn
  std::string note;
  json inputs;

  json to_json() const;
};

struct InstanceConfig {
  std::string name;
  json space_json;
  SpacePtr space;
  GapSequence gaps;
  SearchBudget budget;
  int lhs_cap = 4;       // cardinality cap for the unrestricted-side estimates
  bool relaxed = false;  // relaxed-parameter instance: checks warn, never fail
  double falsify_rhs_scale = 1.0;  // test hook; 1.0 in real configs

  json to_json() const;
  static InstanceConfig from_json(const json& j);
};

struct SuiteConfig {
  std::vector<InstanceConfig> instances;
  std::vector<std::string> suite;  // check-id prefixes; empty = run everything
  std::uint64_t seed = 12345;

  json to_json() const;
  static SuiteConfig from_json(const json& j);
};

// The shipped configuration: l2, the Oikhberg-variant toy, the pq block
// space, the single-level functional-class instance, and the unconditional
// variant.
json default_config_json();

struct VerificationReport {
  std::vector<BoundCheck> checks;
  json config;
  std::uint64_t seed = 0;

  bool ok() const;  // no failing check
  json to_json() const;
  std::string to_csv() const;
};

VerificationReport run_suite(const SuiteConfig& cfg, int jobs = 1);

/// Soundness shape of each check, auditable by tests: either a class-exact
/// lower value against a proven upper bound, an explicit witness value against
/// a proven lower bound (inequality reversed), or an exact-value comparison
/// encoded as |deviation| <= tolerance.
enum class CheckDirection { LowerVsUpperBound, WitnessVsLowerBound, ExactValue };

// (check id prefix, direction); every emitted check id matches one entry.
const std::vector<std::pair<std::string, CheckDirection>>& check_directions();

}  // namespace greedylab
