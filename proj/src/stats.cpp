#include "disco/stats.hpp"

namespace disco {

std::uint64_t DistributionTable::row_total(std::size_t row) const {
  std::uint64_t s = 0;
  for (std::uint64_t v : cells[row]) s += v;
  return s;
}

std::uint64_t DistributionTable::col_total(std::size_t col) const {
  std::uint64_t s = 0;
  for (std::size_t row = 0; row < kRows; ++row) s += cells[row][col];
  return s;
}

std::uint64_t DistributionTable::grand_total() const {
  std::uint64_t s = 0;
  for (std::size_t row = 0; row < kRows; ++row) s += row_total(row);
  return s;
}

std::size_t distribution_row(RealizationType t) {
  return static_cast<std::size_t>(t);
}

std::size_t distribution_col(Level1Sense s) {
  switch (s) {
    case Level1Sense::Expansion: return 0;
    case Level1Sense::Temporal: return 1;
    case Level1Sense::Comparison: return 2;
    case Level1Sense::Contingency: return 3;
  }
  return 0;
}

const std::array<Level1Sense, 4> kDistributionSenseColumns = {
    Level1Sense::Expansion,
    Level1Sense::Temporal,
    Level1Sense::Comparison,
    Level1Sense::Contingency,
};

DistributionTable realization_by_sense_table(const Corpus& corpus,
                                             SenseCounting counting) {
  DistributionTable table;
  for (const auto& [id, doc] : corpus.documents) {
    for (const DiscourseRelation& r : doc.relations) {
      auto& row = table.cells[distribution_row(r.realization)];
      if (r.senses.empty()) {
        ++row[kNoSenseCol];
      } else if (counting == SenseCounting::FirstSense) {
        ++row[distribution_col(r.senses.front().level1())];
      } else {
        for (const SensePath& s : r.senses) ++row[distribution_col(s.level1())];
      }
    }
  }
  return table;
}

CorpusSummary summary(const Corpus& corpus) {
  CorpusSummary out;
  for (RealizationType t : kAllRealizationTypes) out.counts[t] = 0;
  for (const auto& [id, doc] : corpus.documents) {
    for (const DiscourseRelation& r : doc.relations) {
      ++out.counts[r.realization];
      ++out.total;
    }
  }
  if (out.total > 0) {
    for (RealizationType t : kAllRealizationTypes) {
      out.percentages[t] = 100.0 * static_cast<double>(out.counts[t]) /
                           static_cast<double>(out.total);
    }
  }
  const std::uint64_t implicit = out.counts[RealizationType::Implicit];
  if (implicit > 0) {
    out.explicit_implicit_ratio =
        static_cast<double>(out.counts[RealizationType::Explicit]) /
        static_cast<double>(implicit);
  }
  return out;
}

}  // namespace disco
