#pragma once

// Suite orchestration and report rendering behind the sixv-verify tool.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sixv/params.hpp"
#include "sixv/report.hpp"
#include "sixv/roots_of_unity.hpp"

namespace sixv {

enum class Suite { Structural, Dwbc, Functional, Theorem, Zeros, Rou };

std::string_view to_string(Suite s);
/// Throws ConfigError for unknown names.
Suite parse_suite(std::string_view name);
/// All suites in execution order.
std::vector<Suite> all_suites();
/// All suites, leaving out rou unless a root of unity is configured.
std::vector<Suite> default_suites(bool with_root);

enum class MuMode { Zero, Random, Explicit };

struct RunConfig {
  int L = 2;
  cplx gamma{0.5, 0.3};
  std::optional<RootOfUnitySpec> root;  // overrides gamma when set
  MuMode mu_mode = MuMode::Random;
  std::vector<cplx> mu_values;          // MuMode::Explicit
  std::uint64_t seed = 42;
  std::vector<Suite> suites = default_suites(false);
  std::map<std::string, double> tol_overrides;
  int draws = 3;
  std::string output_path;
};

/// Throws ConfigError on an invalid configuration.
void validate_config(const RunConfig& cfg);

/// Canonical one-line text of the configuration (hashed into the report header).
std::string config_text(const RunConfig& cfg);

/// Model parameters for the run, deterministic in cfg.seed.
/// Throws GenericityExhausted after 1000 rejected draws.
ModelParams sample_params(const RunConfig& cfg);

/// Re-judges records whose name matches an override key. A key ending in '*'
/// matches by prefix. Conjecture records keep their verdict.
void apply_tolerance_overrides(CheckReport& report, const std::map<std::string, double>& overrides);

struct RunResult {
  CheckReport report;
  std::vector<std::string> notes;  // e.g. states excluded for lack of k0
  int exit_code = 0;               // 0 all pass, 1 any failure
};

/// Runs the selected suites in the order structural, dwbc, functional,
/// theorem, zeros, rou. Module errors become failed records.
/// Throws ConfigError for invalid configurations.
RunResult run(const RunConfig& cfg);

/// Header line, note lines and one formatted record per line.
std::string render_report(const RunConfig& cfg, const RunResult& result);

std::string_view version();

}  // namespace sixv
