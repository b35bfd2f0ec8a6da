#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace linfsym {

inline constexpr const char* kToolVersion = "linfsym 1.0.0";

/// Suites: operators, chain, kevin (the Alt defect lemma), linfty-symplectic,
/// linfty-volume, poisson, coefficients, all.
struct CampaignConfig {
  std::string suite = "all";
  std::vector<int> half_dims{1, 2};
  std::vector<int> volume_dims{3, 4};
  int degree = 3;
  double density = 0.5;
  int trials = 25;
  std::uint64_t seed = 7;
  int arity_max = 5;
  int volume_arity_max = 4;
  int k_max = 9;
  bool timing = false;
  /// Deliberately wrong a_k^j (+1) in the chain and symplectic checks, to
  /// exercise failure reporting.
  std::optional<std::pair<int, int>> perturb;

  /// Throws std::invalid_argument.
  void validate() const;
};

std::vector<std::string> suite_names();

struct Counterexample {
  std::vector<std::string> inputs;  // exterior_core grammar, replayable
  std::string residual;
};

struct CheckResult {
  CheckResult() = default;
  CheckResult(std::string suite_name, std::string check_name)
      : suite(std::move(suite_name)), name(std::move(check_name)) {}

  std::string suite;
  std::string name;
  int trials = 0;
  int failures = 0;
  std::vector<Counterexample> counterexamples;  // first few only
  std::string note;
  bool passed() const { return failures == 0; }
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  int total_failures() const;
  bool passed() const { return total_failures() == 0; }
  const CheckResult* find(const std::string& name) const;

  /// Byte-stable for a fixed config unless config.timing is set.
  std::string to_json() const;
  std::string to_text() const;
};

CampaignReport run_campaign(const CampaignConfig& config);

}  // namespace linfsym
