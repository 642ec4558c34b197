#include "octodfm/pipeline.hpp"

#include "octodfm/errors.hpp"

#include <cstdio>
#include <sstream>

namespace octodfm {

namespace {

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

void describe_part(const TriMesh& mesh, const Octree& octree, IndexReport& r) {
  const MeshMetrics& m = mesh.metrics();
  const Vec3 e = m.extent();
  r.part = {{"volume_mm3", m.volume},  {"surface_area_mm2", m.surface_area}, {"bbox_x_mm", e.x()},
            {"bbox_y_mm", e.y()},      {"bbox_z_mm", e.z()},                 {"max_dimension_mm", m.max_dimension},
            {"octree_volume_mm3", octree.total_part_volume()}};
  r.octree = octree.fingerprint();
  r.provenance["mesh_fingerprint"] = hex(mesh.fingerprint());
  r.provenance["triangles"] = std::to_string(mesh.triangle_count());
  r.provenance["depth"] = std::to_string(octree.max_depth());
  r.provenance["samples"] = std::to_string(octree.options().samples);
  r.provenance["margin"] = format_number(octree.options().margin);
  r.provenance["seed"] = hex(octree.options().seed);
}

}  // namespace

ProcessAnalysis analyze_process(const TriMesh& mesh, const Octree& octree, Process process,
                                const MachineProfiles& profiles, const AnalysisOptions& options,
                                std::string design) {
  ProcessAnalysis out;
  IndexReport& r = out.report;
  r.design = std::move(design);
  r.process = process;
  describe_part(mesh, octree, r);
  const MeshMetrics& metrics = mesh.metrics();

  if (process == Process::Machining) {
    if (!profiles.machining) throw Error(ErrorCode::ConfigError, "profile has no [machining] section");
    const SubtractiveProfile& p = *profiles.machining;
    r.provenance["profile"] = p.name;
    r.globals[std::string(index_id::kMaxDimensionSub)] = c_d_sub(metrics, p);
    r.globals[std::string(index_id::kChips)] = c_c(metrics);
    if (options.material) {
      r.globals[std::string(index_id::kHardness)] = c_m(*options.material, p);
      r.provenance["material"] = *options.material;
    }
    if (options.roughness_um) {
      r.globals[std::string(index_id::kRoughness)] = c_r(*options.roughness_um, p);
      r.provenance["roughness_um"] = format_number(*options.roughness_um);
    }
    out.fields.push_back(c_f(mesh, octree, p, options.tool_access, options.octree.workers));
  } else {
    if (!profiles.additive) throw Error(ErrorCode::ConfigError, "profile has no [additive] section");
    const AdditiveProfile& p = *profiles.additive;
    r.provenance["profile"] = p.name;
    r.globals[std::string(index_id::kMaxDimensionAdd)] = c_d_add(metrics, p);
    r.globals[std::string(index_id::kVolume)] = c_v(metrics, p);
    r.globals[std::string(index_id::kSkin)] = c_s(metrics, p);
    out.fields.push_back(c_h(octree, p));
    out.fields.push_back(c_rho(octree, p));
  }
  for (const auto& field : out.fields) r.locals[field.id] = LocalSummary::from_field(field);
  return out;
}

std::vector<Process> parse_process_selection(std::string_view text) {
  if (text == "both") return {Process::Machining, Process::Additive};
  return {parse_process(text)};
}

namespace {

void add_analysis_files(const TriMesh& mesh, const Octree& octree, const ProcessAnalysis& analysis,
                        const OutputOptions& output, const std::string& prefix, OutputFiles& files) {
  const std::string name = prefix + "report_" + std::string(to_string(analysis.report.process));
  files[name + ".json"] = to_json(analysis.report);
  if (output.csv) files[name + ".csv"] = to_csv(analysis.report);
  for (const auto& field : analysis.fields) {
    const std::string stem = prefix + index_stem(field.id) + "_map";
    if (output.ply) files[stem + ".ply"] = render_ply(mesh, octree, field, output.scale);
    if (output.vtk) files[stem + ".vtk"] = render_vtk(octree, field);
  }
}

}  // namespace

OutputFiles analyze_outputs(const TriMesh& mesh, const std::string& design, std::span<const Process> processes,
                            const MachineProfiles& profiles, const AnalysisOptions& options,
                            const OutputOptions& output) {
  if (processes.empty()) throw Error(ErrorCode::ConfigError, "no process selected");
  // Missing profile sections are configuration errors; catch them before the slow part.
  for (Process p : processes) {
    if (p == Process::Machining && !profiles.machining) {
      throw Error(ErrorCode::ConfigError, "profile has no [machining] section");
    }
    if (p == Process::Additive && !profiles.additive) {
      throw Error(ErrorCode::ConfigError, "profile has no [additive] section");
    }
  }
  const Octree octree = build_octree(mesh, options.octree);
  OutputFiles files;
  for (Process p : processes) {
    add_analysis_files(mesh, octree, analyze_process(mesh, octree, p, profiles, options, design), output, "",
                       files);
  }
  if (output.dump_octree) {
    std::ostringstream dump;
    octree.dump_jsonl(dump);
    files["octree.jsonl"] = dump.str();
  }
  return files;
}

AssemblyRun analyze_assembly(const std::string& design, const std::vector<ModuleInput>& modules,
                             const MachineProfiles& profiles, const AnalysisOptions& options,
                             const OutputOptions& output) {
  if (modules.empty()) throw Error(ErrorCode::EmptyInput, "assembly needs at least one module");
  AssemblyRun run;
  std::vector<IndexReport> reports;
  std::vector<double> volumes;
  for (const ModuleInput& m : modules) {
    const Octree octree = build_octree(m.mesh, options.octree);
    const ProcessAnalysis analysis = analyze_process(m.mesh, octree, m.process, profiles, options, m.design);
    add_analysis_files(m.mesh, octree, analysis, output, m.design + "/", run.files);
    reports.push_back(analysis.report);
    volumes.push_back(m.mesh.metrics().volume);
  }
  run.totals = total_assembly(design, std::move(reports), volumes);
  run.files["totals.json"] = to_json(run.totals);
  if (output.csv) run.files["totals.csv"] = to_csv(run.totals);
  return run;
}

OutputFiles compare_outputs(const IndexReport& baseline, const IndexReport& candidate, bool csv) {
  const ComparisonReport report = compare(baseline, candidate);
  OutputFiles files;
  files["comparison.json"] = to_json(report);
  if (csv) files["comparison.csv"] = to_csv(report);
  return files;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::ConfigError:
    case ErrorCode::DepthOutOfRange:
    case ErrorCode::UnknownMaterial:
    case ErrorCode::NonPositiveRoughness:
      return 2;
    case ErrorCode::ParseError:
    case ErrorCode::EmptyMesh:
    case ErrorCode::NotWatertight:
      return 3;
    case ErrorCode::SchemaMismatch:
      return 5;
    case ErrorCode::IoError:
      return 1;
    default:
      return 4;
  }
}

}  // namespace octodfm
