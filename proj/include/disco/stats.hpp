#pragma once

// Distribution reports over a single corpus and headline summary figures.

#include <array>
#include <cstdint>
#include <map>
#include <optional>

#include "disco/model.hpp"

namespace disco {

// FirstSense counts each token once under its first listed sense, so row
// totals equal token counts. EverySense counts every listed sense and is
// an analysis-only mode with different total semantics.
enum class SenseCounting { FirstSense, EverySense };

// Realization types (rows, report order) crossed with Level-1 sense
// classes plus a "no sense tag" column.
struct DistributionTable {
  static constexpr std::size_t kRows = 6;
  static constexpr std::size_t kCols = 5;  // 4 Level-1 classes + no-sense

  std::array<std::array<std::uint64_t, kCols>, kRows> cells{};

  std::uint64_t row_total(std::size_t row) const;
  std::uint64_t col_total(std::size_t col) const;
  std::uint64_t grand_total() const;

  bool operator==(const DistributionTable&) const = default;
};

constexpr std::size_t kNoSenseCol = DistributionTable::kCols - 1;

// Row index of a realization type (same order as kAllRealizationTypes).
std::size_t distribution_row(RealizationType t);
// Column index of a Level-1 class in report order.
std::size_t distribution_col(Level1Sense s);

// Level-1 classes in report column order.
extern const std::array<Level1Sense, 4> kDistributionSenseColumns;

DistributionTable realization_by_sense_table(
    const Corpus& corpus, SenseCounting counting = SenseCounting::FirstSense);

struct CorpusSummary {
  std::map<RealizationType, std::uint64_t> counts;  // all six types present
  std::uint64_t total = 0;
  // Percent of total per type; empty when the corpus has no tokens.
  std::map<RealizationType, double> percentages;
  // |Explicit| / |Implicit|, present only when |Implicit| > 0.
  std::optional<double> explicit_implicit_ratio;

  bool operator==(const CorpusSummary&) const = default;
};

CorpusSummary summary(const Corpus& corpus);

}  // namespace disco
