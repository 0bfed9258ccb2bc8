#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fueter/quadrature.hpp"
#include "json.hpp"

namespace fueter {

enum class Mode { exact, floating };

std::string_view mode_name(Mode m);
Mode mode_from_name(std::string_view name);

struct SuiteConfig {
  std::string suite;
  /// Dimensions to run; empty selects the suite default.
  std::vector<unsigned> n_values;
  std::optional<long> m;
  std::optional<long> beta;
  unsigned trials = 10;
  Mode mode = Mode::exact;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  /// Extra float-only dimensions (special-cases defaults to {9}).
  std::optional<std::vector<unsigned>> spot_n;
  double spot_tol = 1e-8;
  unsigned jobs = 0;  // 0: hardware concurrency
  long hn_max = 12;
  unsigned nodes = 256;
  unsigned series_terms = 60;
  unsigned quad_points = 5;
};

nlohmann::json to_json(const SuiteConfig& c);
/// Reads the keys produced by to_json; unknown keys raise InvalidParams.
void apply_json(SuiteConfig& c, const nlohmann::json& j);

struct CaseResult {
  std::string key;
  nlohmann::json params;
  nlohmann::json point;
  double residual = 0.0;
  bool pass = false;
  std::optional<bool> expected_match;
  bool flagged = false;
  std::string note;
  double wall_time = 0.0;
};

struct Summary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t flagged = 0;
};

struct VerificationReport {
  std::string suite;
  SuiteConfig config;
  std::vector<CaseResult> cases;
  std::vector<ConvergenceRow> convergence;
  Summary summary;

  /// True iff no unflagged case failed.
  bool ok() const { return summary.failed == 0; }
  nlohmann::json to_json(bool with_timing = true) const;
  std::string to_text() const;
};

const std::vector<std::string>& suite_names();
/// Runs one suite; throws InvalidParams for an unknown suite or bad config.
VerificationReport run_suite(const SuiteConfig& config);

}  // namespace fueter
