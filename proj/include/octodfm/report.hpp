#pragma once

#include "octodfm/aggregation.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace octodfm {

inline constexpr std::string_view kIndexReportSchema = "octodfm.index_report/1";
inline constexpr std::string_view kComparisonSchema = "octodfm.comparison/1";
inline constexpr std::string_view kAssemblySchema = "octodfm.assembly/1";

enum class ReportFormat { Json, Csv };

/// Throws ConfigError.
ReportFormat parse_report_format(std::string_view text);
std::string_view extension(ReportFormat format);  // ".json" / ".csv"

/// Shortest decimal that reads back to the same double.
std::string format_number(double v);

/// Display order for scalar ids: the machining and additive indexes in
/// their usual order, then anything else alphabetically.
std::vector<std::string> ordered_ids(const std::vector<std::string>& ids);

// JSON output is key-sorted with no timestamps, so equal reports give equal bytes.
std::string to_json(const IndexReport& report);
std::string to_json(const ComparisonReport& report);
std::string to_json(const AssemblyTotals& totals);

/// index,<design> rows over report.scalars().
std::string to_csv(const IndexReport& report);
/// index,baseline,candidate,delta,percent; missing cells are empty.
std::string to_csv(const ComparisonReport& report);
/// index,<module ids...>,total with a leading weight row.
std::string to_csv(const AssemblyTotals& totals);

// Parsers throw SchemaMismatch on malformed input or a different schema.
IndexReport parse_index_report(std::string_view json);
ComparisonReport parse_comparison(std::string_view json);
AssemblyTotals parse_assembly(std::string_view json);

/// Reads an index report, or the total of an assembly file. Throws IoError,
/// SchemaMismatch (also for assemblies without a total).
IndexReport read_comparable_report(const std::filesystem::path& path);

/// Contents of several files, keyed by path relative to an output directory.
using OutputFiles = std::map<std::string, std::string>;

/// Writes every file to a temporary sibling, then renames all of them into
/// place. On failure the temporaries are removed. Throws IoError.
void write_files_atomic(const std::filesystem::path& dir, const OutputFiles& files);

/// Throws IoError.
std::string read_file(const std::filesystem::path& path);

}  // namespace octodfm
