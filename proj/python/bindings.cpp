// Python extension: thin wrappers over the C++ engine. Reports cross the
// boundary as JSON text; the package __init__ decodes them.

#include "octodfm/pipeline.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

namespace py = pybind11;
using namespace octodfm;

namespace {

py::dict metrics_dict(const MeshMetrics& m) {
  py::dict d;
  d["bbox_min"] = std::vector<double>{m.bbox_min.x(), m.bbox_min.y(), m.bbox_min.z()};
  d["bbox_max"] = std::vector<double>{m.bbox_max.x(), m.bbox_max.y(), m.bbox_max.z()};
  d["max_dimension"] = m.max_dimension;
  d["surface_area"] = m.surface_area;
  d["volume"] = m.volume;
  d["watertight"] = m.watertight;
  return d;
}

TriMesh mesh_from_arrays(const std::vector<std::array<double, 3>>& vertices,
                         const std::vector<std::array<std::uint32_t, 3>>& triangles) {
  std::vector<Vec3> v;
  v.reserve(vertices.size());
  for (const auto& p : vertices) v.emplace_back(p[0], p[1], p[2]);
  return TriMesh(std::move(v), {triangles.begin(), triangles.end()});
}

AnalysisOptions analysis_options(int depth, int samples, double margin, unsigned workers,
                                 const std::optional<std::string>& material, const std::optional<double>& roughness) {
  AnalysisOptions o;
  o.octree.max_depth = depth;
  o.octree.samples = samples;
  o.octree.margin = margin;
  o.octree.workers = workers;
  o.material = material;
  o.roughness_um = roughness;
  return o;
}

}  // namespace

PYBIND11_MODULE(_octodfm, m) {
  m.doc() = "Manufacturability indexes for machining and additive processes";

  // Messages start with "[<ErrorCode>] " so callers can tell failures apart.
  static py::handle error = py::exception<Error>(m, "Error", PyExc_RuntimeError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string msg = "[" + std::string(to_string(e.code())) + "] " + e.message();
      PyErr_SetString(error.ptr(), msg.c_str());
    }
  });

  py::class_<TriMesh>(m, "Mesh")
      .def(py::init(&mesh_from_arrays), py::arg("vertices"), py::arg("triangles"))
      .def_property_readonly("vertex_count", &TriMesh::vertex_count)
      .def_property_readonly("triangle_count", &TriMesh::triangle_count)
      .def_property_readonly("metrics", [](const TriMesh& t) { return metrics_dict(t.metrics()); })
      .def("contains", [](const TriMesh& t, double x, double y, double z) {
        return point_in_mesh(t, Vec3(x, y, z)) == Location::Inside;
      });

  m.def("load_mesh", [](const std::filesystem::path& path) { return load_mesh(path); }, py::arg("path"));
  m.def("parse_mesh", [](const py::bytes& data) { return parse_mesh(std::string(data)); }, py::arg("data"));

  m.def(
      "octree_summary",
      [](const TriMesh& mesh, int depth, int samples, double margin, unsigned workers) {
        OctreeOptions o;
        o.max_depth = depth;
        o.samples = samples;
        o.margin = margin;
        o.workers = workers;
        const Octree t = build_octree(mesh, o);
        py::dict d;
        d["leaf_count"] = t.leaves().size();
        d["grey_count"] = t.grey_leaves().size();
        d["part_volume"] = t.total_part_volume();
        d["hash"] = t.fingerprint().hash;
        return d;
      },
      py::arg("mesh"), py::arg("depth") = 5, py::arg("samples") = 4, py::arg("margin") = 0.01,
      py::arg("workers") = 0);

  m.def(
      "validate_profile", [](const std::string& text) { parse_profiles(text, "profile"); }, py::arg("text"));

  m.def(
      "analyze_json",
      [](const TriMesh& mesh, const std::string& design, const std::string& process, const std::string& profile,
         int depth, int samples, double margin, unsigned workers, const std::optional<std::string>& material,
         const std::optional<double>& roughness) {
        const MachineProfiles profiles = parse_profiles(profile, "profile");
        const auto processes = parse_process_selection(process);
        const AnalysisOptions opt = analysis_options(depth, samples, margin, workers, material, roughness);
        const Octree t = build_octree(mesh, opt.octree);
        std::vector<std::string> out;
        for (Process p : processes) out.push_back(to_json(analyze_process(mesh, t, p, profiles, opt, design).report));
        return out;
      },
      py::arg("mesh"), py::arg("design"), py::arg("process"), py::arg("profile"), py::arg("depth") = 5,
      py::arg("samples") = 4, py::arg("margin") = 0.01, py::arg("workers") = 0, py::arg("material") = py::none(),
      py::arg("roughness") = py::none());

  m.def(
      "compare_json",
      [](const std::string& baseline, const std::string& candidate) {
        return to_json(compare(parse_index_report(baseline), parse_index_report(candidate)));
      },
      py::arg("baseline"), py::arg("candidate"));

  m.def(
      "total_assembly_json",
      [](const std::string& design, const std::vector<std::string>& reports, const std::vector<double>& volumes) {
        std::vector<IndexReport> parsed;
        for (const auto& r : reports) parsed.push_back(parse_index_report(r));
        return to_json(total_assembly(design, std::move(parsed), volumes));
      },
      py::arg("design"), py::arg("reports"), py::arg("volumes"));

  m.def(
      "local_mean", [](const std::vector<double>& c, const std::vector<double>& v) { return local_mean(c, v); },
      py::arg("values"), py::arg("volumes"));
  m.def("module_weights", [](const std::vector<double>& v) { return module_weights(v); }, py::arg("volumes"));
  m.def(
      "total_index", [](const std::vector<double>& c, const std::vector<double>& w) { return total_index(c, w); },
      py::arg("values"), py::arg("weights"));
}
