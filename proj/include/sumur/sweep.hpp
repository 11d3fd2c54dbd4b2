#pragma once

#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "sumur/bounds.hpp"
#include "sumur/families.hpp"

namespace sumur {

enum class SweepKind { Variance, Stddev };
enum class BoundId { CB1, CB3, TB1, TB2 };
/// Any curve of a family plot: the uncertainty sum or one of the bounds.
enum class Curve { Lhs, CB1, CB3, TB1, TB2 };

std::string_view to_string(SweepKind k);
std::string_view to_string(BoundId b);
SweepKind parse_kind(std::string_view s);
BoundId parse_bound(std::string_view s);

/// The observable triple each reference family is measured with:
/// {X, Y, Z} for the qubit family, {J_x, J_y, J_z} for the qutrit family.
struct FamilyInstance {
  ObservableSet observables;
  std::vector<std::string> labels;
};
FamilyInstance family_instance(Family f);

struct SweepSpec {
  Family family = Family::QubitPaper;
  SweepKind kind = SweepKind::Variance;
  std::size_t points = 1000;
  double theta_lo = 0.0;
  double theta_hi = 2.0 * std::numbers::pi;
};

struct SweepRow {
  double theta;
  double lhs;
  double cb_bound;
  double tb_bound;
};

struct SweepResult {
  Family family;
  SweepKind kind;
  std::vector<std::string> labels;
  std::vector<SweepRow> rows;
};

/// Evaluates the uncertainty sum with its cb and tb bounds (cb1/tb1 for
/// variance, cb3/tb2 for stddev) at theta_k = lo + k (hi - lo) / points,
/// k = 0 .. points-1. The range is half-open. Throws InvalidArgument when
/// points < 2 or lo >= hi.
SweepResult sweep(const SweepSpec& spec, unsigned threads = 1);

/// Value of a single curve at theta.
double curve_value(Family f, SweepKind kind, Curve c, double theta);
/// lhs(theta) - bound(theta). The bound must belong to the kind
/// (cb1/tb1 with variance, cb3/tb2 with stddev), else InvalidArgument.
double gap_value(Family f, SweepKind kind, BoundId bound, double theta);

struct SaturationOptions {
  std::size_t scan_points = 10000;
  double gap_threshold = 1e-7;
  double theta_tol = 1e-9;
  double dedup_tol = 1e-6;
};

/// All theta in [lo, hi) where the gap closes. Local minima of the gap on a
/// uniform pre-scan are refined by golden-section search; minima whose gap
/// stays above the threshold are discarded, as is any minimum that converges
/// onto the excluded endpoint hi. Sorted and deduplicated.
std::vector<double> find_saturation(Family f, SweepKind kind, BoundId bound, double lo, double hi,
                                    const SaturationOptions& opt = {});

struct Extremum {
  double theta;
  double value;
};

/// Global maximum of a curve on [lo, hi): best pre-scan sample refined by
/// golden-section search over its neighbouring samples.
Extremum maximize_curve(Family f, SweepKind kind, Curve c, double lo, double hi,
                        std::size_t scan_points = 10000, double theta_tol = 1e-10);

}  // namespace sumur
