#pragma once

#include <optional>
#include <vector>

#include "sumur/hermitian.hpp"

namespace sumur {

inline constexpr double kInequalitySlack = 1e-9;

/// Ordered list of N >= 2 observables sharing one dimension.
class ObservableSet {
 public:
  /// Throws NTooSmall when fewer than two observables are given and
  /// DimensionMismatch when dimensions differ.
  explicit ObservableSet(std::vector<Observable> observables);

  std::size_t size() const noexcept { return obs_.size(); }
  std::size_t dim() const noexcept { return obs_.front().dim(); }
  const Observable& operator[](std::size_t i) const { return obs_[i]; }
  const std::vector<Observable>& observables() const noexcept { return obs_; }

  /// A_1 + ... + A_N.
  Observable total() const;

 private:
  std::vector<Observable> obs_;
};

double lhs_variance_sum(const ObservableSet& set, const QuantumState& s);
double lhs_stddev_sum(const ObservableSet& set, const QuantumState& s);

/// Delta(A_i + A_j) for all i < j, in lexicographic (i, j) order.
std::vector<double> pair_sum_stddevs(const ObservableSet& set, const QuantumState& s);

/// Variance-based sum bound for N >= 3:
///   1/(N-2) [ sum_{i<j} D(A_i+A_j)^2 - (sum_{i<j} D(A_i+A_j))^2 / (N-1)^2 ].
/// Throws NTooSmall for N = 2.
double bound_cb1(const ObservableSet& set, const QuantumState& s);
/// Pairwise-lifted variance bound: sum_{i<j} D(A_i+A_j)^2 / (2(N-1)).
double bound_tb1(const ObservableSet& set, const QuantumState& s);
/// Standard-deviation sum bound for N >= 3:
///   1/(N-2) [ sum_{i<j} D(A_i+A_j) - D(sum_i A_i) ].
double bound_cb3(const ObservableSet& set, const QuantumState& s);
/// D(sum_i A_i).
double bound_tb2(const ObservableSet& set, const QuantumState& s);

/// D(A+B)^2 / 2, a lower bound on (DA)^2 + (DB)^2.
double bound_pair_variance(const Observable& a, const Observable& b, const QuantumState& s);
/// max{D(A+B), D(A-B)}, a lower bound on DA + DB.
double bound_pair_stddev(const Observable& a, const Observable& b, const QuantumState& s);
/// |<[A,B]>| / 2, a lower bound on the product DA * DB.
double bound_robertson(const Observable& a, const Observable& b, const QuantumState& s);

/// N >= 2 Hilbert-Schmidt vectors of one dimension.
class VectorTuple {
 public:
  explicit VectorTuple(std::vector<HSVector> vectors);
  std::size_t size() const noexcept { return v_.size(); }
  const std::vector<HSVector>& vectors() const noexcept { return v_; }

 private:
  std::vector<HSVector> v_;
};

struct IdentitySides {
  double lhs;  // ||sum a_i||^2 + (N-2) sum ||a_i||^2
  double rhs;  // sum_{i<j} ||a_i + a_j||^2
};

IdentitySides identity_sides(const VectorTuple& t);
/// |lhs - rhs| of the norm identity. Throws IdentityViolated if it exceeds
/// 1e-9 * max(1, rhs); that can only come from corrupted arithmetic.
double identity_residual(const VectorTuple& t);
/// ||sum a_i|| + (N-2) sum ||a_i|| - sum_{i<j} ||a_i + a_j||, never negative
/// beyond rounding.
double hlawka_slack(const VectorTuple& t);

struct BoundGaps {
  std::optional<double> cb1;
  double tb1 = 0.0;
  std::optional<double> cb3;
  double tb2 = 0.0;
  std::optional<double> pair_variance;
  std::optional<double> pair_stddev;
  std::optional<double> robertson;
};

struct BoundOrdering {
  std::optional<bool> cb1_ge_tb1;
  std::optional<bool> cb3_ge_tb2;
};

/// Everything computable for one (set, state) instance. cb1/cb3 are filled
/// for N >= 3; the pair bounds and Robertson bound for N = 2.
struct BoundReport {
  std::size_t n = 0;
  std::size_t dim = 0;
  std::vector<double> variances;
  std::vector<double> stddevs;
  double lhs_variance = 0.0;
  double lhs_stddev = 0.0;
  std::optional<double> cb1;
  double tb1 = 0.0;
  std::optional<double> cb3;
  double tb2 = 0.0;
  std::optional<double> pair_variance;
  std::optional<double> pair_stddev;
  std::optional<double> robertson;
  std::optional<double> stddev_product;  // DA * DB, compared against robertson
  BoundGaps gaps;
  BoundOrdering ordering;
  bool gaps_ok = true;
  bool ordering_ok = true;
};

BoundReport bound_report(const ObservableSet& set, const QuantumState& s);

}  // namespace sumur
