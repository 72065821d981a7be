#pragma once

// Report rendering. Layouts are frozen: identical inputs yield
// byte-identical output, and all three formats carry the same numbers.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "disco/deps.hpp"
#include "disco/iaa.hpp"
#include "disco/stats.hpp"

namespace disco {

enum class ReportFormat { Tsv, Markdown, Json };

std::optional<ReportFormat> parse_report_format(std::string_view name);

std::string_view to_string(UnitMode m);
std::optional<UnitMode> parse_unit_mode(std::string_view name);

// Ratios and percentages print with four decimals, ties to even.
std::string format_ratio(double v);
// Same rounding applied to JSON numbers so every format carries the same
// value.
double round4(double v);

std::string render_stats_report(const DistributionTable& table,
                                const CorpusSummary& summary,
                                ReportFormat format);

std::string render_deps_report(const DependencyTable& table,
                               ReportFormat format);

struct IaaReport {
  UnitMode mode = UnitMode::Char;
  bool trim_boundaries = false;
  std::map<RealizationType, double> realization;
  // level -> type -> ratio in [0,1]; rendered as percent
  std::map<int, std::map<RealizationType, double>> sense_by_level;
  ArgumentAgreement argument;
  std::map<std::string, ArgumentAgreement> per_document;
};

// levels selects which sense levels to compute (each in 1..3).
IaaReport compute_iaa_report(const Corpus& corpus_a, const Corpus& corpus_b,
                             const std::vector<int>& levels, UnitMode mode,
                             bool trim_boundaries);

std::string render_iaa_report(const IaaReport& report, ReportFormat format);

}  // namespace disco
