#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sumur/bounds.hpp"
#include "sumur/sweep.hpp"
#include "sumur/verify.hpp"

namespace sumur {

// File schemas (JSON). Complex entries are two-element [re, im] arrays.
//
// Observable file:
//   {"dim": 2,
//    "labels": ["X", "Z"],                      (optional)
//    "matrices": [ [[[0,0],[1,0]], [[1,0],[0,0]]], ... ]}
//
// State file:
//   {"type": "pure",    "vector": [[1,0],[0,0]]}
//   {"type": "density", "matrix": [[[0.5,0],[0,0]], [[0,0],[0.5,0]]]}

struct ObservableFile {
  std::size_t dim = 0;
  std::vector<Observable> observables;
  std::vector<std::string> labels;
};

/// Parse errors carry ErrorKind::Parse; validation failures keep their own
/// kind. Every message is prefixed with the offending field, e.g.
/// "matrices[1]: matrix is not Hermitian ...".
ObservableFile parse_observable_file(std::string_view text);
QuantumState parse_state_file(std::string_view text);

nlohmann::json observable_file_json(const ObservableFile& f);
nlohmann::json state_file_json(const QuantumState& s);

nlohmann::json report_json(const BoundReport& r, const std::vector<std::string>& labels = {});
/// Deterministic: wall-clock time is deliberately left out.
nlohmann::json summary_json(const VerifySummary& s, const VerifyConfig& cfg);

/// Header `theta,lhs,cb_bound,tb_bound`, one row per grid point, values with
/// 12 significant digits, '\n' line endings.
void write_sweep_csv(const SweepResult& r, std::ostream& out);

/// Nine decimals, locale-independent.
std::string format_angle(double theta);

}  // namespace sumur
