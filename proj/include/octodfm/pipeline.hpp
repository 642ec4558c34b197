#pragma once

#include "octodfm/aggregation.hpp"
#include "octodfm/difficulty_map.hpp"
#include "octodfm/errors.hpp"
#include "octodfm/profile.hpp"
#include "octodfm/report.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace octodfm {

struct AnalysisOptions {
  OctreeOptions octree;
  /// Enables the hardness index when set.
  std::optional<std::string> material;
  /// Required surface roughness Ra in um; enables the roughness index.
  std::optional<double> roughness_um;
  ToolAccessOptions tool_access;
};

struct ProcessAnalysis {
  IndexReport report;
  std::vector<LocalIndexField> fields;
};

/// Every index of one process over a prebuilt octree. Throws ConfigError
/// when the profiles lack the process.
ProcessAnalysis analyze_process(const TriMesh& mesh, const Octree& octree, Process process,
                                const MachineProfiles& profiles, const AnalysisOptions& options,
                                std::string design);

/// "machining", "additive" or "both". Throws ConfigError.
std::vector<Process> parse_process_selection(std::string_view text);

struct OutputOptions {
  ColorScale scale;
  /// JSON reports are always written; this adds CSV copies.
  bool csv = false;
  bool ply = true;
  bool vtk = true;
  bool dump_octree = false;
};

/// One octree shared by all processes. Files: report_<process>.json,
/// <index>_map.ply / .vtk, optionally octree.jsonl.
OutputFiles analyze_outputs(const TriMesh& mesh, const std::string& design, std::span<const Process> processes,
                            const MachineProfiles& profiles, const AnalysisOptions& options,
                            const OutputOptions& output);

struct ModuleInput {
  std::string design;
  TriMesh mesh;
  Process process = Process::Machining;
};

struct AssemblyRun {
  AssemblyTotals totals;
  /// <module>/report_<process>.json, <module>/<index>_map.*, totals.json.
  OutputFiles files;
};

/// Module weights come from the module mesh volumes.
AssemblyRun analyze_assembly(const std::string& design, const std::vector<ModuleInput>& modules,
                             const MachineProfiles& profiles, const AnalysisOptions& options,
                             const OutputOptions& output);

/// comparison.json, plus comparison.csv when requested.
OutputFiles compare_outputs(const IndexReport& baseline, const IndexReport& candidate, bool csv);

/// Process exit status for an error: 2 configuration, 3 mesh, 4 analysis,
/// 5 report schema, 1 I/O.
int exit_code(ErrorCode code);

}  // namespace octodfm
