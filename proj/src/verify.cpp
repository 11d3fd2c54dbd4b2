#include "sumur/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include <fmt/core.h>

#include "sumur/bounds.hpp"
#include "sumur/error.hpp"
#include "sumur/families.hpp"
#include "sumur/parallel.hpp"

namespace sumur {
namespace {

constexpr double kZeroBound = 1e-9;
constexpr double kZeroDeviation = 1e-4;

struct Instance {
  ObservableSet set;
  QuantumState state;
  std::string descriptor;
};

// Observables diagonal in a random basis U, state supported on the first
// column (pure) or on the first two columns with tied eigenvalues (mixed),
// so the state is a common eigenstate of every observable.
Instance common_eigenstate_instance(std::size_t dim, std::size_t n, bool mixed, Rng& rng) {
  const ComplexMatrix u = random_unitary(dim, rng.next());
  std::vector<Observable> obs;
  for (std::size_t i = 0; i < n; ++i) {
    ComplexMatrix diag(dim);
    for (std::size_t k = 0; k < dim; ++k) diag(k, k) = rng.gaussian_pair().first;
    if (mixed) diag(1, 1) = diag(0, 0);
    ComplexMatrix a = u * diag * u.adjoint();
    for (std::size_t r = 0; r < dim; ++r) {
      a(r, r) = a(r, r).real();
      for (std::size_t c = r + 1; c < dim; ++c) a(c, r) = std::conj(a(r, c));
    }
    obs.push_back(validate_observable(std::move(a)));
  }
  CVector u0(dim), u1(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    u0[r] = u(r, 0);
    u1[r] = u(r, 1);
  }
  if (!mixed) return {ObservableSet(std::move(obs)), validate_pure(std::move(u0)), ""};
  const double p = rng.uniform();
  ComplexMatrix rho = cplx(p) * ComplexMatrix::outer(u0, u0) + cplx(1.0 - p) * ComplexMatrix::outer(u1, u1);
  return {ObservableSet(std::move(obs)), validate_density(std::move(rho)), ""};
}

Instance random_instance(std::size_t dim, std::size_t n, bool mixed, Rng& rng) {
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<Observable> obs;
  for (std::size_t i = 0; i < n; ++i) obs.push_back(random_hermitian(dim, rng.next(), scale));
  auto state = mixed ? random_density(dim, rng.next()) : random_pure(dim, rng.next());
  return {ObservableSet(std::move(obs)), std::move(state), ""};
}

// The quantities every bound is built from, for the shift and pure/mixed
// agreement checks.
std::vector<double> bound_values(const ObservableSet& set, const QuantumState& s) {
  const auto r = bound_report(set, s);
  std::vector<double> out{r.lhs_variance, r.lhs_stddev, r.tb1, r.tb2};
  for (const auto& v : {r.cb1, r.cb3, r.pair_variance, r.pair_stddev, r.robertson}) {
    if (v) out.push_back(*v);
  }
  return out;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double identity_slack(const VectorTuple& t) {
  const auto [lhs, rhs] = identity_sides(t);
  return -std::abs(lhs - rhs) / std::max(1.0, rhs);
}

}  // namespace

void validate(const VerifyConfig& cfg) {
  const auto bad = [](const std::string& msg) { throw Error(ErrorKind::InvalidArgument, msg); };
  if (cfg.trials < 1) bad("trials must be >= 1");
  if (cfg.dims.empty()) bad("dims must not be empty");
  for (auto d : cfg.dims) {
    if (d < 2 || d > 64) bad(fmt::format("dimension {} outside [2, 64]", d));
  }
  if (cfg.n_lo < 2 || cfg.n_hi < cfg.n_lo) bad(fmt::format("invalid N range {}..{}", cfg.n_lo, cfg.n_hi));
  if (!(cfg.tolerance >= 0.0) || !std::isfinite(cfg.tolerance)) bad("tolerance must be finite and >= 0");
  if (!(cfg.mixed_frac >= 0.0 && cfg.mixed_frac <= 1.0)) bad("mixed fraction must lie in [0, 1]");
  if (!(cfg.eigenstate_frac >= 0.0 && cfg.eigenstate_frac <= 1.0)) bad("eigenstate fraction must lie in [0, 1]");
}

TrialOutcome run_trial(const VerifyConfig& cfg, std::size_t trial) {
  Rng rng(cfg.seed ^ static_cast<std::uint64_t>(trial));
  const std::size_t dim = cfg.dims[rng.below(cfg.dims.size())];
  const std::size_t n = cfg.n_lo + rng.below(cfg.n_hi - cfg.n_lo + 1);
  const bool mixed = rng.uniform() < cfg.mixed_frac;
  const bool eigen = rng.uniform() < cfg.eigenstate_frac;

  Instance inst = eigen ? common_eigenstate_instance(dim, n, mixed, rng) : random_instance(dim, n, mixed, rng);
  const auto& set = inst.set;
  const auto& state = inst.state;

  TrialOutcome out;
  out.instance = fmt::format("dim={} n={} state={}{}", dim, n, mixed ? "mixed" : "pure",
                             eigen ? " common-eigenstate" : "");
  auto record = [&](const char* name, double slack) { out.slacks.emplace_back(name, slack); };

  const auto r = bound_report(set, state);
  const auto pairs = pair_sum_stddevs(set, state);

  record("tb1_variance", r.lhs_variance - r.tb1);
  record("tb2_stddev", r.lhs_stddev - r.tb2);
  if (n >= 3) {
    record("cb1_variance", r.lhs_variance - *r.cb1);
    record("cb3_stddev", r.lhs_stddev - *r.cb3);
    record("order_cb1_tb1", *r.cb1 - r.tb1);
    record("order_cb3_tb2", *r.cb3 - r.tb2);
  }

  double pair_var = std::numeric_limits<double>::infinity();
  double pair_sd = pair_var;
  double robertson = pair_var;
  for (std::size_t i = 0, k = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      pair_var = std::min(pair_var, r.variances[i] + r.variances[j] - 0.5 * pairs[k] * pairs[k]);
      pair_sd = std::min(pair_sd, r.stddevs[i] + r.stddevs[j] - bound_pair_stddev(set[i], set[j], state));
      robertson = std::min(robertson, r.stddevs[i] * r.stddevs[j] - bound_robertson(set[i], set[j], state));
    }
  record("pair_variance", pair_var);
  record("pair_stddev", pair_sd);
  record("robertson", robertson);

  // Centered Hilbert-Schmidt vectors behind the sum bounds.
  std::vector<HSVector> proof;
  const ComplexMatrix root = state.is_pure() ? ComplexMatrix{} : psd_sqrt(state.density());
  double hs_mismatch = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    proof.push_back(centered_vector(set[i], state, root));
    const double norm = hs_norm(proof.back());
    hs_mismatch = std::max(hs_mismatch, std::abs(norm * norm - variance_trace_form(set[i], state)));
  }
  const VectorTuple proof_tuple(std::move(proof));
  record("norm_identity", identity_slack(proof_tuple));
  record("hlawka", hlawka_slack(proof_tuple));
  record("hs_variance", -hs_mismatch);

  std::vector<HSVector> generic;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t i = 0; i < n; ++i) generic.push_back(HSVector{cplx(scale) * random_gaussian_matrix(dim, rng)});
  const VectorTuple generic_tuple(std::move(generic));
  record("random_identity", identity_slack(generic_tuple));
  record("random_hlawka", hlawka_slack(generic_tuple));

  if (n >= 3 && *r.cb1 <= kZeroBound) {
    record("zero_forcing_variance", kZeroDeviation - *std::max_element(pairs.begin(), pairs.end()));
  }
  if (n >= 3 && *r.cb3 <= kZeroBound) {
    double pair_total = 0.0;
    for (double x : pairs) pair_total += x;
    record("zero_forcing_stddev", kZeroDeviation - std::max(r.tb2, pair_total));
  }

  const auto base = bound_values(set, state);
  {
    std::vector<Observable> moved = set.observables();
    const std::size_t which = rng.below(n);
    moved[which] = shifted(moved[which], rng.gaussian_pair().first);
    record("shift_invariance", -max_abs_diff(base, bound_values(ObservableSet(std::move(moved)), state)));
  }
  if (state.is_pure()) {
    record("pure_mixed_agreement", -max_abs_diff(base, bound_values(set, as_mixed(state))));
  }
  return out;
}

VerifySummary random_verify(const VerifyConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  std::vector<TrialOutcome> outcomes(cfg.trials);
  parallel_for(cfg.trials, cfg.threads, [&](std::size_t t) { outcomes[t] = run_trial(cfg, t); });

  VerifySummary summary;
  summary.trials_run = cfg.trials;
  for (std::size_t t = 0; t < outcomes.size(); ++t) {
    for (const auto& [name, slack] : outcomes[t].slacks) {
      auto [it, inserted] = summary.properties.try_emplace(name);
      auto& stats = it->second;
      stats.min_slack = inserted ? slack : std::min(stats.min_slack, slack);
      ++stats.evaluated;
      if (slack < -cfg.tolerance) {
        summary.violations.push_back(
            {name, cfg.seed ^ static_cast<std::uint64_t>(t), t, outcomes[t].instance, slack});
      }
    }
  }
  summary.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace sumur
