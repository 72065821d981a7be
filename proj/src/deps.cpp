#include "disco/deps.hpp"

#include <algorithm>
#include <stdexcept>

namespace disco {

std::string_view to_string(PatternKind k) {
  switch (k) {
    case PatternKind::SharedArgument: return "SharedArgument";
    case PatternKind::FullEmbedding: return "FullEmbedding";
    case PatternKind::ProperContainment: return "ProperContainment";
    case PatternKind::OtherOverlap: return "OtherOverlap";
    case PatternKind::None: return "None";
  }
  return "?";
}

std::string_view to_string(WhichRelation w) {
  return w == WhichRelation::First ? "first" : "second";
}

std::string_view to_string(WhichArg w) {
  return w == WhichArg::Arg1 ? "arg1" : "arg2";
}

std::vector<const DiscourseRelation*> eligible_relations(
    const AnnotatedDocument& doc) {
  std::vector<const DiscourseRelation*> out;
  for (const DiscourseRelation& r : doc.relations) {
    if (r.realization == RealizationType::Explicit ||
        r.realization == RealizationType::Implicit) {
      out.push_back(&r);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const DiscourseRelation* a, const DiscourseRelation* b) {
              return sort_key(*a) < sort_key(*b);
            });
  return out;
}

AdjacencyScan scan_adjacent(const AnnotatedDocument& doc) {
  AdjacencyScan scan;
  const auto eligible = eligible_relations(doc);
  for (std::size_t i = 0; i + 1 < eligible.size(); ++i) {
    const DiscourseRelation* a = eligible[i];
    const DiscourseRelation* b = eligible[i + 1];
    ++scan.total_adjacent;
    if (a->link && b->link && *a->link == *b->link) {
      // same multi-sense relation annotated twice, not a real adjacency
      ++scan.linked_skipped;
      continue;
    }
    scan.pairs.emplace_back(a, b);
  }
  return scan;
}

std::vector<std::pair<const DiscourseRelation*, const DiscourseRelation*>>
adjacent_pairs(const AnnotatedDocument& doc) {
  return scan_adjacent(doc).pairs;
}

DependencyLabel classify_pair(const DiscourseRelation& r1,
                              const DiscourseRelation& r2) {
  if (sort_key(r2) < sort_key(r1)) {
    throw std::invalid_argument("classify_pair: '" + r1.id +
                                "' does not precede '" + r2.id + "'");
  }

  const std::array<const Span*, 2> args1 = {&r1.arg1_span, &r1.arg2_span};
  const std::array<const Span*, 2> args2 = {&r2.arg1_span, &r2.arg2_span};
  const std::array<WhichArg, 2> which = {WhichArg::Arg1, WhichArg::Arg2};

  DependencyLabel label;

  // 1. SharedArgument
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      if (*args1[i] == *args2[j]) {
        label.kind = PatternKind::SharedArgument;
        label.outer = WhichRelation::First;
        label.outer_arg = which[i];
        label.inner_arg = which[j];
        return label;
      }
    }
  }

  const Span ext1 = extent(r1);
  const Span ext2 = extent(r2);

  // 2. FullEmbedding
  for (std::size_t i = 0; i < 2; ++i) {
    if (*args1[i] == ext2) {
      label.kind = PatternKind::FullEmbedding;
      label.outer = WhichRelation::First;
      label.outer_arg = which[i];
      return label;
    }
  }
  for (std::size_t j = 0; j < 2; ++j) {
    if (*args2[j] == ext1) {
      label.kind = PatternKind::FullEmbedding;
      label.outer = WhichRelation::Second;
      label.outer_arg = which[j];
      return label;
    }
  }

  // 3. ProperContainment
  for (std::size_t i = 0; i < 2; ++i) {
    if (args1[i]->strictly_covers(ext2)) {
      label.kind = PatternKind::ProperContainment;
      label.outer = WhichRelation::First;
      label.outer_arg = which[i];
      return label;
    }
  }
  for (std::size_t j = 0; j < 2; ++j) {
    if (args2[j]->strictly_covers(ext1)) {
      label.kind = PatternKind::ProperContainment;
      label.outer = WhichRelation::Second;
      label.outer_arg = which[j];
      return label;
    }
  }

  // 4/5. OtherOverlap or None
  label.kind =
      ext1.intersects(ext2) ? PatternKind::OtherOverlap : PatternKind::None;
  return label;
}

std::uint64_t DependencyTable::row_total(std::size_t row) const {
  std::uint64_t s = 0;
  for (std::uint64_t v : cells[row]) s += v;
  return s;
}

std::uint64_t DependencyTable::row_sub_total(std::size_t row) const {
  return cells[row][0] + cells[row][1] + cells[row][2];
}

std::uint64_t DependencyTable::col_total(std::size_t col) const {
  std::uint64_t s = 0;
  for (std::size_t row = 0; row < kRows; ++row) s += cells[row][col];
  return s;
}

std::uint64_t DependencyTable::grand_total() const {
  std::uint64_t s = 0;
  for (std::size_t row = 0; row < kRows; ++row) s += row_total(row);
  return s;
}

std::size_t pattern_row(PatternKind k) {
  switch (k) {
    case PatternKind::SharedArgument: return 0;
    case PatternKind::FullEmbedding: return 1;
    case PatternKind::ProperContainment: return 2;
    default:
      throw std::invalid_argument("pattern kind has no table row");
  }
}

std::size_t pattern_col(RealizationType first, RealizationType second) {
  auto half = [](RealizationType t) -> std::size_t {
    switch (t) {
      case RealizationType::Explicit: return 0;
      case RealizationType::Implicit: return 1;
      default:
        throw std::invalid_argument("realization has no table column");
    }
  };
  return half(first) * 2 + half(second);
}

const std::array<PatternKind, DependencyTable::kRows> kPatternRows = {
    PatternKind::SharedArgument,
    PatternKind::FullEmbedding,
    PatternKind::ProperContainment,
};

const std::array<std::string_view, DependencyTable::kCols> kPatternColNames = {
    "Exp-Exp",
    "Exp-Imp",
    "Imp-Exp",
    "Imp-Imp",
};

DependencyTable dependency_table(const Corpus& corpus) {
  DependencyTable table;
  for (const auto& [id, doc] : corpus.documents) {
    const AdjacencyScan scan = scan_adjacent(doc);
    table.adjacent_pairs += scan.total_adjacent;
    table.linked_skipped += scan.linked_skipped;
    for (const auto& [a, b] : scan.pairs) {
      const DependencyLabel label = classify_pair(*a, *b);
      switch (label.kind) {
        case PatternKind::OtherOverlap:
          ++table.other_overlap;
          break;
        case PatternKind::None:
          ++table.none;
          break;
        default:
          ++table.cells[pattern_row(label.kind)]
                       [pattern_col(a->realization, b->realization)];
      }
    }
  }
  return table;
}

}  // namespace disco
