#include "octodfm/report.hpp"

#include "octodfm/errors.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace octodfm {

using nlohmann::json;

ReportFormat parse_report_format(std::string_view text) {
  if (text == "json") return ReportFormat::Json;
  if (text == "csv") return ReportFormat::Csv;
  throw Error(ErrorCode::ConfigError, "unknown report format '" + std::string(text) + "' (json|csv)");
}

std::string_view extension(ReportFormat format) { return format == ReportFormat::Json ? ".json" : ".csv"; }

std::string format_number(double v) {
  std::array<char, 32> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::vector<std::string> ordered_ids(const std::vector<std::string>& ids) {
  static const std::array<std::string_view, 13> known = {
      "C(d)-", "C(c)-", "C(f)max-", "C(f)mean-", "C(m)-", "C(r)-", "C(d)+",
      "C(v)+", "C(s)+", "C(h)max+", "C(h)mean+", "C(rho)max+", "C(rho)mean+"};
  const std::set<std::string> pending(ids.begin(), ids.end());
  std::vector<std::string> out;
  for (std::string_view id : known) {
    if (pending.contains(std::string(id))) out.emplace_back(id);
  }
  for (const auto& id : pending) {
    if (std::find(known.begin(), known.end(), id) == known.end()) out.push_back(id);
  }
  return out;
}

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorCode::SchemaMismatch, what); }

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> read_optional(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

json report_json(const IndexReport& r) {
  json j;
  j["schema"] = kIndexReportSchema;
  j["design"] = r.design;
  j["process"] = to_string(r.process);
  j["globals"] = r.globals;
  json locals = json::object();
  for (const auto& [id, s] : r.locals) {
    locals[id] = {{"leaves", s.leaves}, {"values", s.values}, {"volumes", s.volumes},
                  {"max", s.max},       {"mean", s.mean}};
  }
  j["locals"] = std::move(locals);
  j["scalars"] = r.scalars();
  if (r.octree) {
    j["octree"] = {{"max_depth", r.octree->max_depth}, {"leaf_count", r.octree->leaf_count},
                   {"hash", r.octree->hash}};
  } else {
    j["octree"] = nullptr;
  }
  j["part"] = r.part;
  j["provenance"] = r.provenance;
  return j;
}

IndexReport report_from_json(const json& j) {
  if (j.at("schema").get<std::string>() != kIndexReportSchema) {
    schema_error("expected schema " + std::string(kIndexReportSchema) + ", got " +
                 j.at("schema").get<std::string>());
  }
  IndexReport r;
  r.design = j.at("design").get<std::string>();
  r.process = parse_process(j.at("process").get<std::string>());
  r.globals = j.at("globals").get<std::map<std::string, double>>();
  for (const auto& [id, s] : j.at("locals").items()) {
    LocalSummary summary;
    summary.leaves = s.at("leaves").get<std::vector<std::size_t>>();
    summary.values = s.at("values").get<std::vector<double>>();
    summary.volumes = s.at("volumes").get<std::vector<double>>();
    summary.max = s.at("max").get<double>();
    summary.mean = s.at("mean").get<double>();
    r.locals[id] = std::move(summary);
  }
  const json& octree = j.at("octree");
  if (!octree.is_null()) {
    r.octree = OctreeFingerprint{octree.at("max_depth").get<int>(), octree.at("leaf_count").get<std::size_t>(),
                                 octree.at("hash").get<std::string>()};
  }
  r.part = j.at("part").get<std::map<std::string, double>>();
  r.provenance = j.at("provenance").get<std::map<std::string, std::string>>();
  return r;
}

template <class Fn>
auto with_json(std::string_view text, Fn&& fn) {
  try {
    return fn(json::parse(text));
  } catch (const json::exception& e) {
    schema_error(std::string("malformed report: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SchemaMismatch) throw;
    schema_error(std::string("malformed report: ") + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) line += ',';
    line += csv_field(cells[i]);
  }
  return line + "\r\n";
}

std::string cell(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

std::vector<std::string> keys(const std::map<std::string, double>& m) {
  std::vector<std::string> out;
  for (const auto& [k, v] : m) out.push_back(k);
  return out;
}

std::optional<double> lookup(const std::map<std::string, double>& m, const std::string& id) {
  const auto it = m.find(id);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

}  // namespace

std::string to_json(const IndexReport& report) { return dump(report_json(report)); }

std::string to_json(const ComparisonReport& report) {
  json j;
  j["schema"] = kComparisonSchema;
  j["baseline"] = {{"design", report.baseline_design}, {"process", to_string(report.baseline_process)}};
  j["candidate"] = {{"design", report.candidate_design}, {"process", to_string(report.candidate_process)}};
  j["cross_process"] = report.cross_process();
  json rows = json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"id", row.id},
                    {"baseline", optional_number(row.baseline)},
                    {"candidate", optional_number(row.candidate)},
                    {"delta", optional_number(row.delta)},
                    {"percent", optional_number(row.percent)}});
  }
  j["rows"] = std::move(rows);
  j["field_deltas"] = report.field_deltas;
  return dump(j);
}

std::string to_json(const AssemblyTotals& totals) {
  json j;
  j["schema"] = kAssemblySchema;
  j["design"] = totals.design;
  j["mixed_processes"] = totals.mixed();
  json modules = json::array();
  for (std::size_t i = 0; i < totals.modules.size(); ++i) {
    const auto& m = totals.modules[i];
    modules.push_back({{"id", m.id},
                       {"process", to_string(m.process)},
                       {"volume_mm3", m.volume},
                       {"weight", totals.weights[i]}});
  }
  j["modules"] = std::move(modules);
  json reports = json::array();
  for (const auto& r : totals.module_reports) reports.push_back(report_json(r));
  j["module_reports"] = std::move(reports);
  j["total"] = totals.total ? report_json(*totals.total) : json(nullptr);
  json warnings = json::array();
  if (totals.mixed()) {
    warnings.push_back("MixedProcessTotals: modules use different processes; indexes are listed side by side");
  }
  j["warnings"] = std::move(warnings);
  return dump(j);
}

std::string to_csv(const IndexReport& report) {
  const auto scalars = report.scalars();
  std::string out = csv_row({"index", report.design});
  for (const auto& id : ordered_ids(keys(scalars))) out += csv_row({id, format_number(scalars.at(id))});
  return out;
}

std::string to_csv(const ComparisonReport& report) {
  std::string out = csv_row({"index", "baseline", "candidate", "delta", "percent"});
  std::map<std::string, const ComparisonRow*> by_id;
  for (const auto& row : report.rows) by_id[row.id] = &row;
  std::vector<std::string> ids;
  for (const auto& [id, row] : by_id) ids.push_back(id);
  for (const auto& id : ordered_ids(ids)) {
    const ComparisonRow& row = *by_id.at(id);
    out += csv_row({id, cell(row.baseline), cell(row.candidate), cell(row.delta), cell(row.percent)});
  }
  return out;
}

std::string to_csv(const AssemblyTotals& totals) {
  std::vector<std::string> header = {"index"};
  for (const auto& m : totals.modules) header.push_back(m.id);
  header.push_back("total");
  std::string out = csv_row(header);

  std::vector<std::string> weight_row = {"weight"};
  for (double w : totals.weights) weight_row.push_back(format_number(w));
  weight_row.push_back("1");
  out += csv_row(weight_row);

  std::vector<std::map<std::string, double>> columns;
  std::set<std::string> ids;
  for (const auto& r : totals.module_reports) {
    columns.push_back(r.scalars());
    for (const auto& [id, v] : columns.back()) ids.insert(id);
  }
  const auto total = totals.total ? totals.total->scalars() : std::map<std::string, double>{};
  for (const auto& id : ordered_ids({ids.begin(), ids.end()})) {
    std::vector<std::string> row = {id};
    for (const auto& c : columns) row.push_back(cell(lookup(c, id)));
    row.push_back(cell(lookup(total, id)));
    out += csv_row(row);
  }
  return out;
}

IndexReport parse_index_report(std::string_view text) {
  return with_json(text, [](const json& j) { return report_from_json(j); });
}

ComparisonReport parse_comparison(std::string_view text) {
  return with_json(text, [](const json& j) {
    if (j.at("schema").get<std::string>() != kComparisonSchema) {
      schema_error("expected schema " + std::string(kComparisonSchema));
    }
    ComparisonReport r;
    r.baseline_design = j.at("baseline").at("design").get<std::string>();
    r.baseline_process = parse_process(j.at("baseline").at("process").get<std::string>());
    r.candidate_design = j.at("candidate").at("design").get<std::string>();
    r.candidate_process = parse_process(j.at("candidate").at("process").get<std::string>());
    for (const auto& row : j.at("rows")) {
      r.rows.push_back({row.at("id").get<std::string>(), read_optional(row.at("baseline")),
                        read_optional(row.at("candidate")), read_optional(row.at("delta")),
                        read_optional(row.at("percent"))});
    }
    r.field_deltas = j.at("field_deltas").get<std::map<std::string, std::vector<double>>>();
    return r;
  });
}

AssemblyTotals parse_assembly(std::string_view text) {
  return with_json(text, [](const json& j) {
    if (j.at("schema").get<std::string>() != kAssemblySchema) {
      schema_error("expected schema " + std::string(kAssemblySchema));
    }
    AssemblyTotals t;
    t.design = j.at("design").get<std::string>();
    for (const auto& m : j.at("modules")) {
      t.modules.push_back({m.at("id").get<std::string>(), parse_process(m.at("process").get<std::string>()),
                           m.at("volume_mm3").get<double>()});
      t.weights.push_back(m.at("weight").get<double>());
    }
    for (const auto& r : j.at("module_reports")) t.module_reports.push_back(report_from_json(r));
    if (!j.at("total").is_null()) t.total = report_from_json(j.at("total"));
    return t;
  });
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  return buffer.str();
}

IndexReport read_comparable_report(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  const std::string schema = with_json(text, [](const json& j) { return j.at("schema").get<std::string>(); });
  if (schema == kIndexReportSchema) return parse_index_report(text);
  if (schema == kAssemblySchema) {
    AssemblyTotals totals = parse_assembly(text);
    if (!totals.total) schema_error(path.string() + ": assembly mixes processes and has no total");
    return *totals.total;
  }
  schema_error(path.string() + ": unsupported schema '" + schema + "'");
}

void write_files_atomic(const std::filesystem::path& dir, const OutputFiles& files) {
  namespace fs = std::filesystem;
  std::vector<std::pair<fs::path, fs::path>> staged;  // temp, final
  auto discard = [&staged] {
    std::error_code ignored;
    for (const auto& [tmp, final_path] : staged) fs::remove(tmp, ignored);
  };
  try {
    for (const auto& [name, contents] : files) {
      const fs::path target = dir / name;
      fs::create_directories(target.parent_path());
      fs::path tmp = target;
      tmp += ".octodfm-tmp";
      staged.emplace_back(tmp, target);
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
      out.close();
      if (!out) throw Error(ErrorCode::IoError, "cannot write " + target.string());
    }
    for (auto it = staged.begin(); it != staged.end();) {
      fs::rename(it->first, it->second);
      it = staged.erase(it);
    }
  } catch (const fs::filesystem_error& e) {
    discard();
    throw Error(ErrorCode::IoError, e.what());
  } catch (...) {
    discard();
    throw;
  }
}

}  // namespace octodfm
