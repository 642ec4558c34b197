#include "octodfm/aggregation.hpp"

#include "octodfm/errors.hpp"

#include <cmath>
#include <numeric>
#include <set>

namespace octodfm {

double local_mean(std::span<const double> values, std::span<const double> volumes) {
  if (values.empty()) throw Error(ErrorCode::EmptyField, "local_mean of an empty field");
  if (values.size() != volumes.size()) {
    throw Error(ErrorCode::LengthMismatch, "local_mean: values and volumes differ in length");
  }
  double weighted = 0.0;
  double total = 0.0;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (volumes[j] < 0.0) throw Error(ErrorCode::NonPositiveVolume, "local_mean: negative leaf volume");
    weighted += values[j] * volumes[j];
    total += volumes[j];
  }
  if (!(total > 0.0)) throw Error(ErrorCode::ZeroTotalVolume, "local_mean: leaf volumes sum to zero");
  // A weighted mean lies within the field's range; clamp away rounding.
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return std::clamp(weighted / total, *lo, *hi);
}

double local_max(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::EmptyField, "local_max of an empty field");
  return *std::max_element(values.begin(), values.end());
}

std::vector<double> module_weights(std::span<const double> volumes) {
  if (volumes.empty()) throw Error(ErrorCode::EmptyInput, "module_weights needs at least one module");
  double total = 0.0;
  for (double v : volumes) {
    if (!(v > 0.0)) throw Error(ErrorCode::NonPositiveVolume, "module volumes must be > 0");
    total += v;
  }
  std::vector<double> w(volumes.size());
  double partial = 0.0;
  for (std::size_t j = 0; j + 1 < volumes.size(); ++j) {
    w[j] = volumes[j] / total;
    partial += w[j];
  }
  w.back() = 1.0 - partial;
  return w;
}

double total_index(std::span<const double> values, std::span<const double> weights) {
  if (values.size() != weights.size()) {
    throw Error(ErrorCode::LengthMismatch, "total_index: values and weights differ in length");
  }
  if (values.empty()) throw Error(ErrorCode::EmptyInput, "total_index needs at least one module");
  double sum_w = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw Error(ErrorCode::BadWeights, "weights must be >= 0");
    sum_w += w;
  }
  if (std::abs(sum_w - 1.0) > 1e-9) throw Error(ErrorCode::BadWeights, "weights must sum to 1");
  double total = 0.0;
  for (std::size_t j = 0; j < values.size(); ++j) total += weights[j] * values[j];
  return total;
}

double total_max(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::EmptyInput, "total_max needs at least one module");
  return *std::max_element(values.begin(), values.end());
}

std::string_view to_string(Process p) {
  return p == Process::Machining ? "machining" : "additive";
}

Process parse_process(std::string_view text) {
  if (text == "machining") return Process::Machining;
  if (text == "additive") return Process::Additive;
  throw Error(ErrorCode::ConfigError, "unknown process '" + std::string(text) + "'");
}

LocalSummary LocalSummary::from_field(const LocalIndexField& field) {
  LocalSummary s;
  s.leaves = field.leaves;
  s.values = field.values;
  s.volumes = field.volumes;
  if (!field.values.empty()) {
    s.max = field.max();
    s.mean = field.mean();
  }
  return s;
}

namespace {

std::string with_suffix(std::string_view local_id, std::string_view suffix) {
  std::string id(local_id);
  // Keep the trailing process sign: "C(f)-" -> "C(f)max-".
  if (!id.empty() && (id.back() == '-' || id.back() == '+')) {
    id.insert(id.size() - 1, suffix);
  } else {
    id += suffix;
  }
  return id;
}

}  // namespace

std::string max_id(std::string_view local_id) { return with_suffix(local_id, "max"); }
std::string mean_id(std::string_view local_id) { return with_suffix(local_id, "mean"); }

std::map<std::string, double> IndexReport::scalars() const {
  std::map<std::string, double> out = globals;
  for (const auto& [id, summary] : locals) {
    out[max_id(id)] = summary.max;
    out[mean_id(id)] = summary.mean;
  }
  return out;
}

ComparisonReport compare(const IndexReport& baseline, const IndexReport& candidate) {
  ComparisonReport report;
  report.baseline_design = baseline.design;
  report.candidate_design = candidate.design;
  report.baseline_process = baseline.process;
  report.candidate_process = candidate.process;

  const auto base = baseline.scalars();
  const auto cand = candidate.scalars();
  std::set<std::string> ids;
  bool shared = false;
  for (const auto& [id, v] : base) ids.insert(id);
  for (const auto& [id, v] : cand) {
    ids.insert(id);
    shared = shared || base.contains(id);
  }
  if (!shared && !report.cross_process()) {
    throw Error(ErrorCode::NoSharedIndexes, "reports '" + baseline.design + "' and '" + candidate.design +
                                                "' have no index in common");
  }

  for (const auto& id : ids) {
    ComparisonRow row;
    row.id = id;
    if (auto it = base.find(id); it != base.end()) row.baseline = it->second;
    if (auto it = cand.find(id); it != cand.end()) row.candidate = it->second;
    if (row.baseline && row.candidate) {
      row.delta = *row.candidate - *row.baseline;
      if (*row.baseline != 0.0) {
        row.percent = 100.0 * *row.delta / *row.baseline;
      } else if (*row.candidate == 0.0) {
        row.percent = 0.0;
      }
    }
    report.rows.push_back(std::move(row));
  }

  if (baseline.octree && candidate.octree && *baseline.octree == *candidate.octree) {
    for (const auto& [id, b] : baseline.locals) {
      const auto it = candidate.locals.find(id);
      if (it == candidate.locals.end()) continue;
      const LocalSummary& c = it->second;
      if (b.values.empty() || b.leaves != c.leaves || b.values.size() != c.values.size()) continue;
      std::vector<double> delta(b.values.size());
      for (std::size_t j = 0; j < delta.size(); ++j) delta[j] = c.values[j] - b.values[j];
      report.field_deltas[id] = std::move(delta);
    }
  }
  return report;
}

bool AssemblyTotals::mixed() const {
  return std::any_of(modules.begin(), modules.end(),
                     [&](const AssemblyModule& m) { return m.process != modules.front().process; });
}

AssemblyTotals total_assembly(std::string design, std::vector<IndexReport> reports,
                              std::span<const double> volumes) {
  if (reports.empty()) throw Error(ErrorCode::EmptyInput, "assembly needs at least one module");
  if (reports.size() != volumes.size()) {
    throw Error(ErrorCode::LengthMismatch, "one volume per module report is required");
  }
  AssemblyTotals out;
  out.design = std::move(design);
  out.weights = module_weights(volumes);
  for (std::size_t j = 0; j < reports.size(); ++j) {
    out.modules.push_back({reports[j].design, reports[j].process, volumes[j]});
  }
  out.module_reports = std::move(reports);
  if (out.mixed()) return out;

  const auto& mods = out.module_reports;
  IndexReport total;
  total.design = out.design;
  total.process = mods.front().process;

  for (const auto& [id, first] : mods.front().globals) {
    std::vector<double> values;
    for (const auto& m : mods) {
      const auto it = m.globals.find(id);
      if (it == m.globals.end()) break;
      values.push_back(it->second);
    }
    if (values.size() == mods.size()) total.globals[id] = total_index(values, out.weights);
  }
  for (const auto& [id, first] : mods.front().locals) {
    std::vector<double> maxima, means;
    for (const auto& m : mods) {
      const auto it = m.locals.find(id);
      if (it == m.locals.end()) break;
      maxima.push_back(it->second.max);
      means.push_back(it->second.mean);
    }
    if (maxima.size() != mods.size()) continue;
    LocalSummary s;
    s.max = total_max(maxima);
    s.mean = total_index(means, out.weights);
    total.locals[id] = std::move(s);
  }

  double volume = 0.0;
  std::string names;
  for (const auto& m : out.modules) {
    volume += m.volume;
    names += (names.empty() ? "" : ",") + m.id;
  }
  total.part["volume_mm3"] = volume;
  total.provenance["kind"] = "assembly_total";
  total.provenance["modules"] = names;
  out.total = std::move(total);
  return out;
}

}  // namespace octodfm
