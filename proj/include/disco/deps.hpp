#pragma once

// Dependency patterns between adjacent connective-anchored relations:
// shared arguments, full embedding, proper containment.

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "disco/model.hpp"

namespace disco {

enum class PatternKind {
  SharedArgument,
  FullEmbedding,
  ProperContainment,
  OtherOverlap,
  None,
};

std::string_view to_string(PatternKind k);

enum class WhichRelation { First, Second };
enum class WhichArg { Arg1, Arg2 };

std::string_view to_string(WhichRelation w);
std::string_view to_string(WhichArg w);

// Classification outcome for one ordered pair of adjacent relations.
// outer/outer_arg are set for the three tabulated kinds; inner_arg only
// for SharedArgument (the matching argument on the second relation).
struct DependencyLabel {
  PatternKind kind = PatternKind::None;
  std::optional<WhichRelation> outer;
  std::optional<WhichArg> outer_arg;
  std::optional<WhichArg> inner_arg;

  bool operator==(const DependencyLabel&) const = default;
};

// Relations anchored by a discourse connective (Explicit or Implicit),
// sorted by sort_key. Everything else is out of scope for the analysis.
std::vector<const DiscourseRelation*> eligible_relations(
    const AnnotatedDocument& doc);

struct AdjacencyScan {
  // consecutive eligible pairs kept for classification, in text order
  std::vector<std::pair<const DiscourseRelation*, const DiscourseRelation*>>
      pairs;
  std::uint64_t linked_skipped = 0;  // pairs sharing a non-empty link value
  std::uint64_t total_adjacent = 0;  // kept + skipped
};

AdjacencyScan scan_adjacent(const AnnotatedDocument& doc);

// Just the kept pairs of scan_adjacent.
std::vector<std::pair<const DiscourseRelation*, const DiscourseRelation*>>
adjacent_pairs(const AnnotatedDocument& doc);

// Tests in precedence order, first hit wins:
//   1. SharedArgument   — an argument of r1 equals an argument of r2
//                         (charset equality), probed (a1,b1),(a1,b2),
//                         (a2,b1),(a2,b2);
//   2. FullEmbedding    — an argument of one relation equals the other
//                         relation's full extent (r1-outer direction
//                         first, arg1 before arg2);
//   3. ProperContainment— an argument of one relation strictly contains
//                         the other relation's extent (same direction
//                         and argument order);
//   4. OtherOverlap     — extents intersect some other way;
//   5. None             — extents disjoint.
// Throws std::invalid_argument unless r1 precedes r2 by sort_key.
DependencyLabel classify_pair(const DiscourseRelation& r1,
                              const DiscourseRelation& r2);

// Pattern tally. Rows are the three tabulated patterns; columns are the
// realization pair (DC1, DC2) in text order.
struct DependencyTable {
  static constexpr std::size_t kRows = 3;  // Shared, FullEmbedding, Containment
  static constexpr std::size_t kCols = 4;  // EE, EI, IE, II

  std::array<std::array<std::uint64_t, kCols>, kRows> cells{};
  std::uint64_t other_overlap = 0;
  std::uint64_t none = 0;
  std::uint64_t linked_skipped = 0;
  std::uint64_t adjacent_pairs = 0;  // all consecutive eligible pairs

  std::uint64_t row_total(std::size_t row) const;
  // Exp-Exp + Exp-Imp + Imp-Exp, the grouping of DC1-explicit
  // plus the mixed Imp-Exp cell.
  std::uint64_t row_sub_total(std::size_t row) const;
  std::uint64_t col_total(std::size_t col) const;
  std::uint64_t grand_total() const;

  bool operator==(const DependencyTable&) const = default;
};

// Row index of a tabulated kind; OtherOverlap/None have no row.
std::size_t pattern_row(PatternKind k);
// Column index for the (first, second) realization pair; both must be
// Explicit or Implicit.
std::size_t pattern_col(RealizationType first, RealizationType second);

extern const std::array<PatternKind, DependencyTable::kRows> kPatternRows;
// Column captions in table order.
extern const std::array<std::string_view, DependencyTable::kCols>
    kPatternColNames;

DependencyTable dependency_table(const Corpus& corpus);

}  // namespace disco
