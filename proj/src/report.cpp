#include "disco/report.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace disco {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kMissing = "_";

// The three realization columns of the sense-agreement table.
constexpr std::array<RealizationType, 3> kSenseColumns = {
    RealizationType::Explicit, RealizationType::Implicit,
    RealizationType::AltLex};

std::string u64(std::uint64_t v) { return std::to_string(v); }

// One table row in the target format. The first cell is the stub column.
std::string row(const std::vector<std::string>& cells, ReportFormat format) {
  std::string out;
  if (format == ReportFormat::Tsv) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += '\t';
      out += cells[i];
    }
  } else {
    for (const std::string& c : cells) {
      out += "| ";
      out += c;
      out += ' ';
    }
    out += '|';
  }
  out += '\n';
  return out;
}

// Markdown alignment line: stub left, numbers right.
std::string md_align(std::size_t columns) {
  std::string out = "| --- ";
  for (std::size_t i = 1; i < columns; ++i) out += "| ---: ";
  out += "|\n";
  return out;
}

std::string heading(std::string_view title, ReportFormat format) {
  if (format == ReportFormat::Tsv) return {};
  return "## " + std::string(title) + "\n\n";
}

ordered_json kappa_json(const KappaResult& k) {
  return {{"kappa", round4(k.kappa)}, {"p_o", round4(k.p_o)},
          {"p_e", round4(k.p_e)},     {"n11", k.table.n11},
          {"n10", k.table.n10},       {"n01", k.table.n01},
          {"n00", k.table.n00},       {"units", k.table.units}};
}

std::vector<std::string> kappa_cells(std::string stub, const KappaResult& k) {
  return {std::move(stub),     format_ratio(k.kappa), format_ratio(k.p_o),
          format_ratio(k.p_e), u64(k.table.n11),      u64(k.table.n10),
          u64(k.table.n01),    u64(k.table.n00),      u64(k.table.units)};
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "tsv") return ReportFormat::Tsv;
  if (name == "md") return ReportFormat::Markdown;
  if (name == "json") return ReportFormat::Json;
  return std::nullopt;
}

std::string_view to_string(UnitMode m) {
  return m == UnitMode::Char ? "char" : "word";
}

std::optional<UnitMode> parse_unit_mode(std::string_view name) {
  if (name == "char") return UnitMode::Char;
  if (name == "word") return UnitMode::Word;
  return std::nullopt;
}

std::string format_ratio(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

double round4(double v) {
  // nearbyint under the default FE_TONEAREST mode rounds ties to even,
  // matching printf's decimal rounding.
  return std::nearbyint(v * 10000.0) / 10000.0;
}

namespace {

const std::vector<std::string> kDistributionHeader = {
    "realization", "Expansion", "Temporal", "Comparison",
    "Contingency", "no_sense",  "Total"};

std::string render_stats_tables(const DistributionTable& table,
                                const CorpusSummary& summary,
                                ReportFormat format) {
  std::string out;

  out += heading("Realization by Level-1 sense", format);
  out += row(kDistributionHeader, format);
  if (format == ReportFormat::Markdown) {
    out += md_align(kDistributionHeader.size());
  }
  for (RealizationType t : kAllRealizationTypes) {
    const std::size_t r = distribution_row(t);
    std::vector<std::string> cells = {std::string(to_string(t))};
    for (std::size_t c = 0; c < DistributionTable::kCols; ++c) {
      cells.push_back(u64(table.cells[r][c]));
    }
    cells.push_back(u64(table.row_total(r)));
    out += row(cells, format);
  }
  {
    std::vector<std::string> cells = {"Total"};
    for (std::size_t c = 0; c < DistributionTable::kCols; ++c) {
      cells.push_back(u64(table.col_total(c)));
    }
    cells.push_back(u64(table.grand_total()));
    out += row(cells, format);
  }
  out += '\n';

  out += heading("Summary", format);
  out += row({"realization", "count", "percent"}, format);
  if (format == ReportFormat::Markdown) out += md_align(3);
  for (RealizationType t : kAllRealizationTypes) {
    const auto pct = summary.percentages.find(t);
    out += row({std::string(to_string(t)), u64(summary.counts.at(t)),
                pct == summary.percentages.end() ? std::string(kMissing)
                                                 : format_ratio(pct->second)},
               format);
  }
  out += row({"Total", u64(summary.total),
              summary.total > 0 ? format_ratio(100.0) : std::string(kMissing)},
             format);
  out += '\n';

  out += heading("Ratio", format);
  out += row({"metric", "value"}, format);
  if (format == ReportFormat::Markdown) out += md_align(2);
  out += row({"explicit_implicit_ratio",
              summary.explicit_implicit_ratio
                  ? format_ratio(*summary.explicit_implicit_ratio)
                  : std::string(kMissing)},
             format);
  return out;
}

std::string render_stats_json(const DistributionTable& table,
                              const CorpusSummary& summary) {
  ordered_json rows = ordered_json::object();
  for (RealizationType t : kAllRealizationTypes) {
    const std::size_t r = distribution_row(t);
    ordered_json row_json = ordered_json::object();
    for (std::size_t c = 0; c < 4; ++c) {
      row_json[std::string(to_string(kDistributionSenseColumns[c]))] =
          table.cells[r][distribution_col(kDistributionSenseColumns[c])];
    }
    row_json["no_sense"] = table.cells[r][kNoSenseCol];
    row_json["total"] = table.row_total(r);
    rows[std::string(to_string(t))] = std::move(row_json);
  }
  ordered_json col_totals = ordered_json::object();
  for (std::size_t c = 0; c < 4; ++c) {
    col_totals[std::string(to_string(kDistributionSenseColumns[c]))] =
        table.col_total(distribution_col(kDistributionSenseColumns[c]));
  }
  col_totals["no_sense"] = table.col_total(kNoSenseCol);

  ordered_json counts = ordered_json::object();
  for (RealizationType t : kAllRealizationTypes) {
    counts[std::string(to_string(t))] = summary.counts.at(t);
  }
  ordered_json summary_json = {{"counts", std::move(counts)},
                               {"total", summary.total}};
  if (!summary.percentages.empty()) {
    ordered_json pct = ordered_json::object();
    for (RealizationType t : kAllRealizationTypes) {
      pct[std::string(to_string(t))] = round4(summary.percentages.at(t));
    }
    summary_json["percentages"] = std::move(pct);
  }
  if (summary.explicit_implicit_ratio) {
    summary_json["explicit_implicit_ratio"] =
        round4(*summary.explicit_implicit_ratio);
  }

  return dump({{"distribution",
                {{"rows", std::move(rows)},
                 {"column_totals", std::move(col_totals)},
                 {"grand_total", table.grand_total()}}},
               {"summary", std::move(summary_json)}});
}

}  // namespace

std::string render_stats_report(const DistributionTable& table,
                                const CorpusSummary& summary,
                                ReportFormat format) {
  if (format == ReportFormat::Json) return render_stats_json(table, summary);
  return render_stats_tables(table, summary, format);
}

namespace {

const std::vector<std::string> kDepsHeader = {
    "pattern", "Exp-Exp", "Exp-Imp", "Imp-Exp",
    "Sub-Total", "Imp-Imp", "Total",   "row_percent"};

std::string deps_percent(std::uint64_t part, std::uint64_t whole) {
  if (whole == 0) return std::string(kMissing);
  return format_ratio(100.0 * static_cast<double>(part) /
                      static_cast<double>(whole));
}

std::vector<std::string> deps_row_cells(std::string stub,
                                        const DependencyTable& t,
                                        std::size_t r) {
  return {std::move(stub),
          u64(t.cells[r][0]),
          u64(t.cells[r][1]),
          u64(t.cells[r][2]),
          u64(t.row_sub_total(r)),
          u64(t.cells[r][3]),
          u64(t.row_total(r)),
          deps_percent(t.row_total(r), t.grand_total())};
}

std::string render_deps_tables(const DependencyTable& t, ReportFormat format) {
  std::string out;
  out += heading("Dependency patterns", format);
  out += row(kDepsHeader, format);
  if (format == ReportFormat::Markdown) out += md_align(kDepsHeader.size());
  for (std::size_t r = 0; r < DependencyTable::kRows; ++r) {
    out += row(deps_row_cells(std::string(to_string(kPatternRows[r])), t, r),
               format);
  }
  const std::uint64_t sub_total =
      t.col_total(0) + t.col_total(1) + t.col_total(2);
  out += row({"Total", u64(t.col_total(0)), u64(t.col_total(1)),
              u64(t.col_total(2)), u64(sub_total), u64(t.col_total(3)),
              u64(t.grand_total()),
              deps_percent(t.grand_total(), t.grand_total())},
             format);
  out += '\n';

  out += heading("Diagnostics", format);
  out += row({"diagnostic", "count"}, format);
  if (format == ReportFormat::Markdown) out += md_align(2);
  out += row({"other_overlap", u64(t.other_overlap)}, format);
  out += row({"none", u64(t.none)}, format);
  out += row({"linked_skipped", u64(t.linked_skipped)}, format);
  out += row({"adjacent_pairs", u64(t.adjacent_pairs)}, format);
  return out;
}

std::string render_deps_json(const DependencyTable& t) {
  ordered_json patterns = ordered_json::object();
  for (std::size_t r = 0; r < DependencyTable::kRows; ++r) {
    ordered_json row_json = {{"Exp-Exp", t.cells[r][0]},
                             {"Exp-Imp", t.cells[r][1]},
                             {"Imp-Exp", t.cells[r][2]},
                             {"sub_total", t.row_sub_total(r)},
                             {"Imp-Imp", t.cells[r][3]},
                             {"total", t.row_total(r)}};
    if (t.grand_total() > 0) {
      row_json["row_percent"] =
          round4(100.0 * static_cast<double>(t.row_total(r)) /
                 static_cast<double>(t.grand_total()));
    }
    patterns[std::string(to_string(kPatternRows[r]))] = std::move(row_json);
  }
  ordered_json col_totals = {
      {"Exp-Exp", t.col_total(0)},
      {"Exp-Imp", t.col_total(1)},
      {"Imp-Exp", t.col_total(2)},
      {"sub_total", t.col_total(0) + t.col_total(1) + t.col_total(2)},
      {"Imp-Imp", t.col_total(3)},
      {"total", t.grand_total()}};
  return dump({{"patterns", std::move(patterns)},
               {"column_totals", std::move(col_totals)},
               {"diagnostics",
                {{"other_overlap", t.other_overlap},
                 {"none", t.none},
                 {"linked_skipped", t.linked_skipped},
                 {"adjacent_pairs", t.adjacent_pairs}}}});
}

}  // namespace

std::string render_deps_report(const DependencyTable& table,
                               ReportFormat format) {
  if (format == ReportFormat::Json) return render_deps_json(table);
  return render_deps_tables(table, format);
}

IaaReport compute_iaa_report(const Corpus& corpus_a, const Corpus& corpus_b,
                             const std::vector<int>& levels, UnitMode mode,
                             bool trim_boundaries) {
  IaaReport report;
  report.mode = mode;
  report.trim_boundaries = trim_boundaries;
  report.realization = realization_agreement(corpus_a, corpus_b);
  for (int level : levels) {
    report.sense_by_level[level] = sense_agreement(corpus_a, corpus_b, level);
  }
  report.argument =
      argument_span_agreement(corpus_a, corpus_b, mode, trim_boundaries);
  report.per_document = argument_span_agreement_by_document(
      corpus_a, corpus_b, mode, trim_boundaries);
  return report;
}

namespace {

std::string render_iaa_tables(const IaaReport& report, ReportFormat format) {
  std::string out;

  out += heading("Settings", format);
  out += row({"setting", "value"}, format);
  if (format == ReportFormat::Markdown) out += md_align(2);
  out += row({"unit_mode", std::string(to_string(report.mode))}, format);
  out += row({"trim_boundaries", report.trim_boundaries ? "on" : "off"},
             format);
  out += '\n';

  out += heading("Realization agreement", format);
  out += row({"realization", "agreement"}, format);
  if (format == ReportFormat::Markdown) out += md_align(2);
  for (RealizationType t : kAllRealizationTypes) {
    const auto it = report.realization.find(t);
    if (it == report.realization.end()) continue;
    out += row({std::string(to_string(t)), format_ratio(it->second)}, format);
  }
  out += '\n';

  out += heading("Sense agreement (percent)", format);
  {
    std::vector<std::string> header = {"level"};
    for (RealizationType t : kSenseColumns) {
      header.push_back(std::string(to_string(t)));
    }
    out += row(header, format);
    if (format == ReportFormat::Markdown) out += md_align(header.size());
  }
  for (const auto& [level, by_type] : report.sense_by_level) {
    std::vector<std::string> cells = {std::to_string(level)};
    for (RealizationType t : kSenseColumns) {
      const auto it = by_type.find(t);
      cells.push_back(it == by_type.end() ? std::string(kMissing)
                                          : format_ratio(100.0 * it->second));
    }
    out += row(cells, format);
  }
  out += '\n';

  out += heading("Argument span agreement", format);
  out += row({"argument", "kappa", "p_o", "p_e", "n11", "n10", "n01", "n00",
              "units"},
             format);
  if (format == ReportFormat::Markdown) out += md_align(9);
  out += row(kappa_cells("Arg1", report.argument.arg1), format);
  out += row(kappa_cells("Arg2", report.argument.arg2), format);
  out += '\n';

  out += heading("Per-document kappa", format);
  out += row({"doc_id", "arg1_kappa", "arg2_kappa"}, format);
  if (format == ReportFormat::Markdown) out += md_align(3);
  for (const auto& [doc_id, agreement] : report.per_document) {
    out += row({doc_id, format_ratio(agreement.arg1.kappa),
                format_ratio(agreement.arg2.kappa)},
               format);
  }
  return out;
}

std::string render_iaa_json(const IaaReport& report) {
  ordered_json realization = ordered_json::object();
  for (RealizationType t : kAllRealizationTypes) {
    const auto it = report.realization.find(t);
    if (it == report.realization.end()) continue;
    realization[std::string(to_string(t))] = round4(it->second);
  }

  ordered_json sense = ordered_json::object();
  for (const auto& [level, by_type] : report.sense_by_level) {
    ordered_json level_json = ordered_json::object();
    for (RealizationType t : kSenseColumns) {
      const auto it = by_type.find(t);
      if (it == by_type.end()) continue;
      level_json[std::string(to_string(t))] = round4(100.0 * it->second);
    }
    sense[std::to_string(level)] = std::move(level_json);
  }

  ordered_json per_doc = ordered_json::object();
  for (const auto& [doc_id, agreement] : report.per_document) {
    per_doc[doc_id] = {{"arg1", kappa_json(agreement.arg1)},
                       {"arg2", kappa_json(agreement.arg2)}};
  }

  return dump(
      {{"settings",
        {{"unit_mode", std::string(to_string(report.mode))},
         {"trim_boundaries", report.trim_boundaries}}},
       {"realization_agreement", std::move(realization)},
       {"sense_agreement_percent", std::move(sense)},
       {"argument_span_kappa",
        {{"Arg1", kappa_json(report.argument.arg1)},
         {"Arg2", kappa_json(report.argument.arg2)}}},
       {"per_document_kappa", std::move(per_doc)}});
}

}  // namespace

std::string render_iaa_report(const IaaReport& report, ReportFormat format) {
  if (format == ReportFormat::Json) return render_iaa_json(report);
  return render_iaa_tables(report, format);
}

}  // namespace disco
