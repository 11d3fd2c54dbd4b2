#include "sumur/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/core.h>

#include "sumur/error.hpp"

namespace sumur {
namespace {

void require_dim(const ObservableSet& set, const QuantumState& s) {
  if (set.dim() != s.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("observables have dimension {}, state has {}", set.dim(), s.dim()));
  }
}

void require_dim(const Observable& a, const Observable& b, const QuantumState& s) {
  if (a.dim() != b.dim() || a.dim() != s.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("dimensions {}, {} and state {} differ", a.dim(), b.dim(), s.dim()));
  }
}

void require_three(const ObservableSet& set, const char* name) {
  if (set.size() < 3) {
    throw Error(ErrorKind::NTooSmall,
                fmt::format("{} needs N >= 3 observables (got {}); use the pair bounds", name, set.size()));
  }
}

double sum_of(const std::vector<double>& xs) { return std::accumulate(xs.begin(), xs.end(), 0.0); }

double sum_of_squares(const std::vector<double>& xs) {
  return std::accumulate(xs.begin(), xs.end(), 0.0, [](double acc, double x) { return acc + x * x; });
}

double cb1_from_pairs(std::size_t n, const std::vector<double>& pairs) {
  const double nm1 = static_cast<double>(n - 1);
  const double total = sum_of(pairs);
  return (sum_of_squares(pairs) - total * total / (nm1 * nm1)) / static_cast<double>(n - 2);
}

double tb1_from_pairs(std::size_t n, const std::vector<double>& pairs) {
  return sum_of_squares(pairs) / (2.0 * static_cast<double>(n - 1));
}

double cb3_from_pairs(std::size_t n, const std::vector<double>& pairs, double total_dev) {
  return (sum_of(pairs) - total_dev) / static_cast<double>(n - 2);
}

void require_tuple_dims(const std::vector<HSVector>& v) {
  for (const auto& x : v) {
    if (x.matrix.dim() != v.front().matrix.dim()) {
      throw Error(ErrorKind::DimensionMismatch, "vector tuple entries differ in dimension");
    }
  }
}

}  // namespace

ObservableSet::ObservableSet(std::vector<Observable> observables) : obs_(std::move(observables)) {
  if (obs_.size() < 2) {
    throw Error(ErrorKind::NTooSmall, fmt::format("an observable set needs N >= 2, got {}", obs_.size()));
  }
  for (const auto& a : obs_) {
    if (a.dim() != obs_.front().dim()) {
      throw Error(ErrorKind::DimensionMismatch, "observables in a set must share one dimension");
    }
  }
}

Observable ObservableSet::total() const {
  Observable acc = obs_.front();
  for (std::size_t i = 1; i < obs_.size(); ++i) acc = acc + obs_[i];
  return acc;
}

double lhs_variance_sum(const ObservableSet& set, const QuantumState& s) {
  require_dim(set, s);
  double acc = 0.0;
  for (const auto& a : set.observables()) acc += variance(a, s);
  return acc;
}

double lhs_stddev_sum(const ObservableSet& set, const QuantumState& s) {
  require_dim(set, s);
  double acc = 0.0;
  for (const auto& a : set.observables()) acc += stddev(a, s);
  return acc;
}

std::vector<double> pair_sum_stddevs(const ObservableSet& set, const QuantumState& s) {
  require_dim(set, s);
  std::vector<double> out;
  out.reserve(set.size() * (set.size() - 1) / 2);
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j) out.push_back(stddev(set[i] + set[j], s));
  return out;
}

double bound_cb1(const ObservableSet& set, const QuantumState& s) {
  require_three(set, "bound_cb1");
  return cb1_from_pairs(set.size(), pair_sum_stddevs(set, s));
}

double bound_tb1(const ObservableSet& set, const QuantumState& s) {
  return tb1_from_pairs(set.size(), pair_sum_stddevs(set, s));
}

double bound_cb3(const ObservableSet& set, const QuantumState& s) {
  require_three(set, "bound_cb3");
  return cb3_from_pairs(set.size(), pair_sum_stddevs(set, s), bound_tb2(set, s));
}

double bound_tb2(const ObservableSet& set, const QuantumState& s) {
  require_dim(set, s);
  return stddev(set.total(), s);
}

double bound_pair_variance(const Observable& a, const Observable& b, const QuantumState& s) {
  require_dim(a, b, s);
  return 0.5 * variance(a + b, s);
}

double bound_pair_stddev(const Observable& a, const Observable& b, const QuantumState& s) {
  require_dim(a, b, s);
  return std::max(stddev(a + b, s), stddev(a - b, s));
}

double bound_robertson(const Observable& a, const Observable& b, const QuantumState& s) {
  require_dim(a, b, s);
  return 0.5 * commutator_expectation(a, b, s);
}

VectorTuple::VectorTuple(std::vector<HSVector> vectors) : v_(std::move(vectors)) {
  if (v_.size() < 2) {
    throw Error(ErrorKind::NTooSmall, fmt::format("a vector tuple needs N >= 2, got {}", v_.size()));
  }
  require_tuple_dims(v_);
}

IdentitySides identity_sides(const VectorTuple& t) {
  const auto& v = t.vectors();
  const double n = static_cast<double>(v.size());
  HSVector total = v.front();
  double norms_sq = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) total = hs_add(total, v[i]);
    const double ni = hs_norm(v[i]);
    norms_sq += ni * ni;
  }
  const double total_norm = hs_norm(total);
  double pairs_sq = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const double nij = hs_norm(hs_add(v[i], v[j]));
      pairs_sq += nij * nij;
    }
  return {total_norm * total_norm + (n - 2.0) * norms_sq, pairs_sq};
}

double identity_residual(const VectorTuple& t) {
  const auto [lhs, rhs] = identity_sides(t);
  const double residual = std::abs(lhs - rhs);
  if (residual > kInequalitySlack * std::max(1.0, rhs)) {
    throw Error(ErrorKind::IdentityViolated,
                fmt::format("norm identity residual {:.3e} exceeds tolerance (rhs {:.6g})", residual, rhs));
  }
  return residual;
}

double hlawka_slack(const VectorTuple& t) {
  const auto& v = t.vectors();
  const double n = static_cast<double>(v.size());
  HSVector total = v.front();
  double norms = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) total = hs_add(total, v[i]);
    norms += hs_norm(v[i]);
  }
  double pairs = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) pairs += hs_norm(hs_add(v[i], v[j]));
  return hs_norm(total) + (n - 2.0) * norms - pairs;
}

BoundReport bound_report(const ObservableSet& set, const QuantumState& s) {
  require_dim(set, s);
  BoundReport r;
  r.n = set.size();
  r.dim = set.dim();
  for (const auto& a : set.observables()) {
    const double var = variance(a, s);
    r.variances.push_back(var);
    r.stddevs.push_back(std::sqrt(var));
  }
  r.lhs_variance = sum_of(r.variances);
  r.lhs_stddev = sum_of(r.stddevs);

  const auto pairs = pair_sum_stddevs(set, s);
  r.tb1 = tb1_from_pairs(r.n, pairs);
  r.tb2 = bound_tb2(set, s);
  r.gaps.tb1 = r.lhs_variance - r.tb1;
  r.gaps.tb2 = r.lhs_stddev - r.tb2;

  if (r.n >= 3) {
    r.cb1 = cb1_from_pairs(r.n, pairs);
    r.cb3 = cb3_from_pairs(r.n, pairs, r.tb2);
    r.gaps.cb1 = r.lhs_variance - *r.cb1;
    r.gaps.cb3 = r.lhs_stddev - *r.cb3;
    r.ordering.cb1_ge_tb1 = *r.cb1 >= r.tb1 - kInequalitySlack;
    r.ordering.cb3_ge_tb2 = *r.cb3 >= r.tb2 - kInequalitySlack;
  } else {
    const auto& a = set[0];
    const auto& b = set[1];
    r.pair_variance = bound_pair_variance(a, b, s);
    r.pair_stddev = bound_pair_stddev(a, b, s);
    r.robertson = bound_robertson(a, b, s);
    r.stddev_product = r.stddevs[0] * r.stddevs[1];
    r.gaps.pair_variance = r.lhs_variance - *r.pair_variance;
    r.gaps.pair_stddev = r.lhs_stddev - *r.pair_stddev;
    r.gaps.robertson = *r.stddev_product - *r.robertson;
  }

  const auto& g = r.gaps;
  for (const auto& gap : {std::optional<double>(g.tb1), std::optional<double>(g.tb2), g.cb1, g.cb3,
                          g.pair_variance, g.pair_stddev, g.robertson}) {
    if (gap && *gap < -kInequalitySlack) r.gaps_ok = false;
  }
  r.ordering_ok = r.ordering.cb1_ge_tb1.value_or(true) && r.ordering.cb3_ge_tb2.value_or(true);
  return r;
}

}  // namespace sumur
