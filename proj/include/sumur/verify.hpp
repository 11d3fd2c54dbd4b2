#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sumur {

struct VerifyConfig {
  std::size_t trials = 10000;
  std::vector<std::size_t> dims{2, 3, 4, 8};
  std::size_t n_lo = 2;
  std::size_t n_hi = 6;
  std::uint64_t seed = 42;
  double tolerance = 1e-9;
  double mixed_frac = 0.3;
  /// Fraction of trials built around a common eigenstate of all observables,
  /// which is where the zero-bound properties become checkable.
  double eigenstate_frac = 0.05;
  unsigned threads = 1;
};

/// Throws InvalidArgument unless trials >= 1, dims non-empty within [2, 64],
/// 2 <= n_lo <= n_hi, tolerance >= 0 and both fractions lie in [0, 1].
void validate(const VerifyConfig& cfg);

struct Violation {
  std::string property;
  std::uint64_t seed;        // per-trial seed: cfg.seed ^ trial
  std::size_t trial;
  std::string instance;      // e.g. "dim=3 n=4 state=mixed"
  double slack;
};

struct PropertyStats {
  std::size_t evaluated = 0;
  double min_slack = 0.0;
};

struct VerifySummary {
  std::size_t trials_run = 0;
  std::vector<Violation> violations;            // ordered by trial, then property
  std::map<std::string, PropertyStats> properties;
  double elapsed_seconds = 0.0;
};

/// Per-trial slacks for every property applicable to one drawn instance.
/// Properties are named after the inequality they check; a slack below
/// -tolerance is a violation.
struct TrialOutcome {
  std::string instance;
  std::vector<std::pair<std::string, double>> slacks;
};

TrialOutcome run_trial(const VerifyConfig& cfg, std::size_t trial);

/// Runs every trial (in parallel when cfg.threads != 1) and folds outcomes in
/// trial order, so the summary does not depend on scheduling.
VerifySummary random_verify(const VerifyConfig& cfg);

}  // namespace sumur
