// octodfm: manufacturability indexes for machining and additive processes.

#include "octodfm/errors.hpp"
#include "octodfm/pipeline.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <set>

namespace fs = std::filesystem;
using namespace octodfm;

namespace {

struct CommonFlags {
  std::string profile;
  int depth = OctreeOptions{}.max_depth;
  int samples = OctreeOptions{}.samples;
  double margin = OctreeOptions{}.margin;
  unsigned workers = 0;
  std::string scale = "auto";
  std::string format = "json";
  std::string out = ".";
  std::string material;
  double roughness = 0.0;
  bool dump_octree = false;
  bool no_maps = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--profile", f.profile, "Machine profile file")->required();
  cmd->add_option("--depth", f.depth, "Octree max depth (1-10)")->capture_default_str();
  cmd->add_option("--samples", f.samples, "Volume samples per axis in grey leaves")->capture_default_str();
  cmd->add_option("--margin", f.margin, "Root box inflation, relative to the largest extent")
      ->capture_default_str();
  cmd->add_option("--workers", f.workers, "Worker threads, 0 = all cores")->capture_default_str();
  cmd->add_option("--scale", f.scale, "Color scale: auto or LO:HI")->capture_default_str();
  cmd->add_option("--format", f.format, "Report format: json, or csv for JSON plus CSV")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", f.out, "Output directory")->capture_default_str();
  cmd->add_option("--material", f.material, "Material name for the hardness index");
  cmd->add_option("--roughness", f.roughness, "Required Ra in um for the roughness index");
  cmd->add_flag("--dump-octree", f.dump_octree, "Also write octree.jsonl");
  cmd->add_flag("--no-maps", f.no_maps, "Skip the PLY and VTK difficulty maps");
}

AnalysisOptions analysis_options(const CommonFlags& f, const CLI::App* cmd) {
  AnalysisOptions o;
  o.octree.max_depth = f.depth;
  o.octree.samples = f.samples;
  o.octree.margin = f.margin;
  o.octree.workers = f.workers;
  if (cmd->count("--material") > 0) o.material = f.material;
  if (cmd->count("--roughness") > 0) o.roughness_um = f.roughness;
  return o;
}

OutputOptions output_options(const CommonFlags& f) {
  OutputOptions o;
  o.scale = ColorScale::parse(f.scale);
  o.csv = f.format == "csv";
  o.ply = o.vtk = !f.no_maps;
  o.dump_octree = f.dump_octree;
  return o;
}

void report_written(const fs::path& dir, const OutputFiles& files) {
  for (const auto& [name, contents] : files) std::cout << (dir / name).string() << "\n";
}

int run_analyze(const std::string& mesh_path, const std::string& process, const CommonFlags& f,
                const CLI::App* cmd) {
  const auto processes = parse_process_selection(process);
  const MachineProfiles profiles = load_profiles(f.profile);
  const AnalysisOptions options = analysis_options(f, cmd);
  const OutputOptions output = output_options(f);
  const TriMesh mesh = load_mesh(mesh_path);
  const OutputFiles files =
      analyze_outputs(mesh, fs::path(mesh_path).stem().string(), processes, profiles, options, output);
  write_files_atomic(f.out, files);
  report_written(f.out, files);
  return 0;
}

int run_assembly(const std::vector<std::string>& specs, const std::string& name, const CommonFlags& f,
                 const CLI::App* cmd) {
  const MachineProfiles profiles = load_profiles(f.profile);
  const AnalysisOptions options = analysis_options(f, cmd);
  const OutputOptions output = output_options(f);

  std::vector<ModuleInput> modules;
  std::set<std::string> used;
  for (const std::string& spec : specs) {
    const auto colon = spec.rfind(':');
    if (colon == std::string::npos) {
      throw Error(ErrorCode::ConfigError, "module '" + spec + "' must be MESH:PROCESS");
    }
    const std::string path = spec.substr(0, colon);
    const Process process = parse_process(spec.substr(colon + 1));
    std::string design = fs::path(path).stem().string();
    for (int k = 2; used.contains(design); ++k) design = fs::path(path).stem().string() + "_" + std::to_string(k);
    used.insert(design);
    modules.push_back({design, load_mesh(path), process});
  }
  const AssemblyRun run = analyze_assembly(name, modules, profiles, options, output);
  write_files_atomic(f.out, run.files);
  report_written(f.out, run.files);
  if (run.totals.mixed()) {
    std::cerr << "octodfm: warning[MixedProcessTotals]: modules use different processes; "
                 "no totals were computed\n";
  }
  return 0;
}

int run_compare(const std::string& baseline, const std::string& candidate, const std::string& out,
                const std::string& format) {
  const OutputFiles files =
      compare_outputs(read_comparable_report(baseline), read_comparable_report(candidate), format == "csv");
  write_files_atomic(out, files);
  report_written(out, files);
  return 0;
}

int run_profile_validate(const std::string& path) {
  const MachineProfiles profiles = load_profiles(path);
  if (profiles.machining) {
    const auto& p = *profiles.machining;
    std::cout << "machining: " << p.name << ", " << p.tool_diameters.size() << " tools, "
              << p.hardness_hb.size() << " materials\n";
  }
  if (profiles.additive) std::cout << "additive: " << profiles.additive->name << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Manufacturability indexes for machining and additive manufacturing"};
  app.require_subcommand(1);

  CommonFlags analyze_flags;
  std::string mesh_path;
  std::string process = "machining";
  auto* analyze = app.add_subcommand("analyze", "Analyze one design");
  analyze->add_option("mesh", mesh_path, "Part mesh (STL or OFF)")->required();
  analyze->add_option("--process", process, "machining, additive or both")->capture_default_str();
  add_common(analyze, analyze_flags);

  CommonFlags assembly_flags;
  std::vector<std::string> module_specs;
  std::string assembly_name = "assembly";
  auto* assembly = app.add_subcommand("analyze-assembly", "Analyze a modular design and total its indexes");
  assembly->add_option("modules", module_specs, "Modules as MESH:PROCESS")->required();
  assembly->add_option("--name", assembly_name, "Assembly design name")->capture_default_str();
  add_common(assembly, assembly_flags);

  std::string baseline, candidate, compare_out = ".", compare_format = "json";
  auto* cmp = app.add_subcommand("compare", "Compare two reports (index report or assembly totals)");
  cmp->add_option("baseline", baseline, "Baseline report")->required();
  cmp->add_option("candidate", candidate, "Candidate report")->required();
  cmp->add_option("--out", compare_out, "Output directory")->capture_default_str();
  cmp->add_option("--format", compare_format, "json, or csv for JSON plus CSV")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  std::string profile_path;
  auto* validate = app.add_subcommand("profile-validate", "Check a machine profile file");
  validate->add_option("profile", profile_path, "Profile file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : 2;
  }

  try {
    if (*analyze) return run_analyze(mesh_path, process, analyze_flags, analyze);
    if (*assembly) return run_assembly(module_specs, assembly_name, assembly_flags, assembly);
    if (*cmp) return run_compare(baseline, candidate, compare_out, compare_format);
    if (*validate) return run_profile_validate(profile_path);
  } catch (const Error& e) {
    std::cerr << "octodfm: error[" << to_string(e.code()) << "]: " << e.message() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "octodfm: error[Internal]: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
