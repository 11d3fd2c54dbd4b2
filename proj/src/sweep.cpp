#include "sumur/sweep.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

#include "sumur/error.hpp"
#include "sumur/golden.hpp"
#include "sumur/parallel.hpp"

namespace sumur {
namespace {

void require_range(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw Error(ErrorKind::InvalidArgument, fmt::format("invalid theta range [{}, {})", lo, hi));
  }
}

void require_kind_match(SweepKind kind, BoundId bound) {
  const bool variance_bound = bound == BoundId::CB1 || bound == BoundId::TB1;
  if (variance_bound != (kind == SweepKind::Variance)) {
    throw Error(ErrorKind::InvalidArgument,
                fmt::format("bound {} does not bound the {} sum", to_string(bound), to_string(kind)));
  }
}

Curve as_curve(BoundId b) {
  switch (b) {
    case BoundId::CB1: return Curve::CB1;
    case BoundId::CB3: return Curve::CB3;
    case BoundId::TB1: return Curve::TB1;
    case BoundId::TB2: return Curve::TB2;
  }
  return Curve::Lhs;
}

std::vector<double> scan_grid(double lo, double hi, std::size_t points) {
  std::vector<double> grid(points);
  const double step = (hi - lo) / static_cast<double>(points);
  for (std::size_t k = 0; k < points; ++k) grid[k] = lo + static_cast<double>(k) * step;
  return grid;
}

}  // namespace

std::string_view to_string(SweepKind k) { return k == SweepKind::Variance ? "variance" : "stddev"; }

std::string_view to_string(BoundId b) {
  switch (b) {
    case BoundId::CB1: return "cb1";
    case BoundId::CB3: return "cb3";
    case BoundId::TB1: return "tb1";
    case BoundId::TB2: return "tb2";
  }
  return "?";
}

SweepKind parse_kind(std::string_view s) {
  if (s == "variance") return SweepKind::Variance;
  if (s == "stddev") return SweepKind::Stddev;
  throw Error(ErrorKind::InvalidArgument, fmt::format("unknown kind '{}'", s));
}

BoundId parse_bound(std::string_view s) {
  if (s == "cb1") return BoundId::CB1;
  if (s == "cb3") return BoundId::CB3;
  if (s == "tb1") return BoundId::TB1;
  if (s == "tb2") return BoundId::TB2;
  throw Error(ErrorKind::InvalidArgument, fmt::format("unknown bound '{}'", s));
}

FamilyInstance family_instance(Family f) {
  if (f == Family::QubitPaper) {
    return {ObservableSet({pauli(Pauli::X), pauli(Pauli::Y), pauli(Pauli::Z)}), {"X", "Y", "Z"}};
  }
  auto j = spin1_ops();
  return {ObservableSet({j.x, j.y, j.z}), {"Jx", "Jy", "Jz"}};
}

double curve_value(Family f, SweepKind kind, Curve c, double theta) {
  const auto inst = family_instance(f);
  const auto state = family_state(f, theta);
  const auto& set = inst.observables;
  switch (c) {
    case Curve::Lhs:
      return kind == SweepKind::Variance ? lhs_variance_sum(set, state) : lhs_stddev_sum(set, state);
    case Curve::CB1: return bound_cb1(set, state);
    case Curve::CB3: return bound_cb3(set, state);
    case Curve::TB1: return bound_tb1(set, state);
    case Curve::TB2: return bound_tb2(set, state);
  }
  return 0.0;
}

double gap_value(Family f, SweepKind kind, BoundId bound, double theta) {
  require_kind_match(kind, bound);
  return curve_value(f, kind, Curve::Lhs, theta) - curve_value(f, kind, as_curve(bound), theta);
}

SweepResult sweep(const SweepSpec& spec, unsigned threads) {
  if (spec.points < 2) {
    throw Error(ErrorKind::InvalidArgument, fmt::format("sweep needs at least 2 points, got {}", spec.points));
  }
  require_range(spec.theta_lo, spec.theta_hi);
  const auto inst = family_instance(spec.family);
  const auto grid = scan_grid(spec.theta_lo, spec.theta_hi, spec.points);

  SweepResult out{spec.family, spec.kind, inst.labels, std::vector<SweepRow>(spec.points)};
  parallel_for(spec.points, threads, [&](std::size_t k) {
    const auto state = family_state(spec.family, grid[k]);
    const auto r = bound_report(inst.observables, state);
    out.rows[k] = spec.kind == SweepKind::Variance
                      ? SweepRow{grid[k], r.lhs_variance, *r.cb1, r.tb1}
                      : SweepRow{grid[k], r.lhs_stddev, *r.cb3, r.tb2};
  });
  return out;
}

std::vector<double> find_saturation(Family f, SweepKind kind, BoundId bound, double lo, double hi,
                                    const SaturationOptions& opt) {
  require_range(lo, hi);
  require_kind_match(kind, bound);
  if (opt.scan_points < 3) throw Error(ErrorKind::InvalidArgument, "saturation scan needs >= 3 points");

  const auto gap = [&](double theta) { return gap_value(f, kind, bound, theta); };
  const auto grid = scan_grid(lo, hi, opt.scan_points);
  std::vector<double> g(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) g[k] = gap(grid[k]);

  std::vector<double> found;
  const std::size_t last = grid.size() - 1;
  for (std::size_t k = 0; k <= last; ++k) {
    const bool left_ok = k == 0 || g[k] <= g[k - 1];
    const bool right_ok = k == last || g[k] <= g[k + 1];
    if (!left_ok || !right_ok) continue;
    const double a = k == 0 ? lo : grid[k - 1];
    const double b = k == last ? hi : grid[k + 1];
    const auto [theta, value] = golden_section_minimize(gap, a, b, opt.theta_tol);
    if (value > opt.gap_threshold) continue;
    if (hi - theta < opt.dedup_tol) continue;  // the excluded endpoint
    found.push_back(theta);
  }

  std::sort(found.begin(), found.end());
  std::vector<double> unique;
  for (double t : found) {
    if (unique.empty() || t - unique.back() > opt.dedup_tol) unique.push_back(t);
  }
  return unique;
}

Extremum maximize_curve(Family f, SweepKind kind, Curve c, double lo, double hi, std::size_t scan_points,
                        double theta_tol) {
  require_range(lo, hi);
  if (scan_points < 2) throw Error(ErrorKind::InvalidArgument, "maximize needs >= 2 scan points");
  const auto neg = [&](double theta) { return -curve_value(f, kind, c, theta); };
  const auto grid = scan_grid(lo, hi, scan_points);
  std::size_t best = 0;
  double best_value = neg(grid[0]);
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const double v = neg(grid[k]);
    if (v < best_value) {
      best_value = v;
      best = k;
    }
  }
  const double a = best == 0 ? lo : grid[best - 1];
  const double b = best + 1 == grid.size() ? hi : grid[best + 1];
  const auto [theta, value] = golden_section_minimize(neg, a, b, theta_tol);
  return {theta, -value};
}

}  // namespace sumur
