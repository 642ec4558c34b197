#pragma once

#include "octodfm/field.hpp"
#include "octodfm/octree.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace octodfm {

/// Volume-weighted mean sum(C_j V_j) / sum(V_j).
/// Throws EmptyField, LengthMismatch, ZeroTotalVolume, NonPositiveVolume.
double local_mean(std::span<const double> values, std::span<const double> volumes);

/// Throws EmptyField.
double local_max(std::span<const double> values);

/// w_j = V_j / sum(V); the last weight closes the sum to exactly 1.
/// Throws NonPositiveVolume, EmptyInput.
std::vector<double> module_weights(std::span<const double> volumes);

/// sum(w_j C_j). Throws LengthMismatch, BadWeights (sum off 1 by > 1e-9).
double total_index(std::span<const double> values, std::span<const double> weights);

/// Highest value over modules. Throws EmptyInput.
double total_max(std::span<const double> values);

enum class Process { Machining, Additive };

std::string_view to_string(Process p);
/// Throws ConfigError.
Process parse_process(std::string_view text);

/// Max/mean of one local index, with the per-leaf data when available.
struct LocalSummary {
  std::vector<std::size_t> leaves;
  std::vector<double> values;
  std::vector<double> volumes;
  double max = 0.0;
  double mean = 0.0;

  static LocalSummary from_field(const LocalIndexField& field);
  bool operator==(const LocalSummary&) const = default;
};

/// Scalar ids derived from a local index id: "C(f)-" -> "C(f)max-".
std::string max_id(std::string_view local_id);
std::string mean_id(std::string_view local_id);

/// Result of one manufacturability analysis of one design.
struct IndexReport {
  std::string design;
  Process process = Process::Machining;
  std::map<std::string, double> globals;
  std::map<std::string, LocalSummary> locals;
  std::optional<OctreeFingerprint> octree;
  /// Part measurements (volume_mm3, surface_area_mm2, ...).
  std::map<std::string, double> part;
  /// Analysis settings and inputs (profile, depth, samples, ...).
  std::map<std::string, std::string> provenance;

  /// Globals plus max/mean of every local index.
  std::map<std::string, double> scalars() const;
  bool operator==(const IndexReport&) const = default;
};

struct ComparisonRow {
  std::string id;
  std::optional<double> baseline;
  std::optional<double> candidate;
  std::optional<double> delta;    // candidate - baseline
  std::optional<double> percent;  // 100 * delta / baseline

  bool operator==(const ComparisonRow&) const = default;
};

struct ComparisonReport {
  std::string baseline_design;
  std::string candidate_design;
  Process baseline_process = Process::Machining;
  Process candidate_process = Process::Machining;
  /// Union of scalar ids, sorted. Deltas only where both sides have a value.
  std::vector<ComparisonRow> rows;
  /// Per-leaf candidate - baseline, only when octree fingerprints match.
  std::map<std::string, std::vector<double>> field_deltas;

  bool cross_process() const { return baseline_process != candidate_process; }
  bool operator==(const ComparisonReport&) const = default;
};

/// Percent changes are relative to the baseline. A zero baseline gives 0%
/// when the candidate is also zero and no percentage otherwise.
/// Throws NoSharedIndexes when same-process reports share no scalar id.
ComparisonReport compare(const IndexReport& baseline, const IndexReport& candidate);

struct AssemblyModule {
  std::string id;
  Process process = Process::Machining;
  double volume = 0.0;  // mm^3

  bool operator==(const AssemblyModule&) const = default;
};

/// Module reports gathered into totals. Totals exist only when every module
/// uses the same process; mixed assemblies stay side by side.
struct AssemblyTotals {
  std::string design;
  std::vector<AssemblyModule> modules;
  std::vector<double> weights;
  std::vector<IndexReport> module_reports;
  std::optional<IndexReport> total;

  bool mixed() const;
  bool operator==(const AssemblyTotals&) const = default;
};

/// Globals and local means are weight-summed, local maxima take the highest
/// module value. Only ids present in every module are totaled.
/// Throws EmptyInput, LengthMismatch, NonPositiveVolume.
AssemblyTotals total_assembly(std::string design, std::vector<IndexReport> reports,
                              std::span<const double> volumes);

}  // namespace octodfm
