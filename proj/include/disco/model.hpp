#ifndef DISCO_MODEL_HPP
#define DISCO_MODEL_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "disco/span.hpp"

namespace disco {

// The six ways a relation can be realized. Order matches the report layout.
enum class RealizationType {
  Implicit,
  Explicit,
  AltLex,
  EntRel,
  Hypophora,
  NoRel,
};

constexpr std::array<RealizationType, 6> kAllRealizationTypes = {
    RealizationType::Implicit,  RealizationType::Explicit,
    RealizationType::AltLex,    RealizationType::EntRel,
    RealizationType::Hypophora, RealizationType::NoRel,
};

std::string_view to_string(RealizationType t);
std::optional<RealizationType> parse_realization_type(std::string_view s);

// True for the realizations anchored by a discourse connective (overt or
// inserted); only these carry senses.
inline bool takes_senses(RealizationType t) {
  return t == RealizationType::Explicit || t == RealizationType::Implicit ||
         t == RealizationType::AltLex;
}

enum class Level1Sense { Expansion, Contingency, Comparison, Temporal };

constexpr std::array<Level1Sense, 4> kAllLevel1Senses = {
    Level1Sense::Expansion, Level1Sense::Contingency, Level1Sense::Comparison,
    Level1Sense::Temporal};

std::string_view to_string(Level1Sense s);
std::optional<Level1Sense> parse_level1_sense(std::string_view s);

// A hierarchical sense tag of depth 1-3. Level 1 is the closed four-class
// set; levels 2 and 3 are free labels validated structurally (nonempty, no
// '.'/';'/TAB/newline). Depth has no gaps: level 3 requires level 2.
class SensePath {
 public:
  explicit SensePath(Level1Sense level1) : level1_(level1) {}
  SensePath(Level1Sense level1, std::string level2);
  SensePath(Level1Sense level1, std::string level2, std::string level3);

  // Parses "Level1.Level2.Level3" with shorter paths allowed. On failure
  // returns nullopt and, if `error` is given, a human-readable reason.
  static std::optional<SensePath> parse(std::string_view dotted,
                                        std::string* error = nullptr);

  Level1Sense level1() const { return level1_; }
  const std::optional<std::string>& level2() const { return level2_; }
  const std::optional<std::string>& level3() const { return level3_; }

  int depth() const { return 1 + (level2_ ? 1 : 0) + (level3_ ? 1 : 0); }

  // Drops everything below `level` (1-3).
  SensePath truncated(int level) const;

  std::string to_string() const;

  bool operator==(const SensePath&) const = default;
  auto operator<=>(const SensePath&) const = default;

 private:
  Level1Sense level1_;
  std::optional<std::string> level2_;
  std::optional<std::string> level3_;
};

// One annotation token. Spans are character-offset standoff into the
// document text; arg2 is the argument hosting the connective.
struct DiscourseRelation {
  std::string id;
  RealizationType realization = RealizationType::Explicit;
  Span conn_span;
  std::string conn_text;  // UTF-8; the inserted connective for Implicit
  Span arg1_span;
  Span arg2_span;
  std::vector<SensePath> senses;
  std::optional<std::uint32_t> link;

  bool operator==(const DiscourseRelation&) const = default;
};

// The relation's full footprint: connective plus both arguments, with
// adjacent intervals merged.
Span extent(const DiscourseRelation& r);

enum class ViolationCode {
  EmptyArgument,
  ArgumentOverlap,
  ConnectiveOverlap,
  ConnSpanRequired,
  ConnSpanForbidden,
  ConnTextRequired,
  SensesRequired,
  SensesForbidden,
  SpanOutOfRange,
  DuplicateRelationId,
};

std::string_view to_string(ViolationCode c);

struct Violation {
  ViolationCode code;
  std::string field;
  std::string message;
};

// Checks every relation-level invariant; an empty result means the token is
// valid for a text of `text_len` characters. Violations are data, not
// failures.
std::vector<Violation> validate_relation(const DiscourseRelation& r,
                                         std::size_t text_len);

// (extent start, extent end, id): a strict total order over any document's
// relations. Pre: nonempty arguments.
std::tuple<CharOffset, CharOffset, std::string_view> sort_key(
    const DiscourseRelation& r);

struct AnnotatedDocument {
  std::string doc_id;
  std::u32string text;  // Unicode scalar values
  std::vector<DiscourseRelation> relations;  // token order

  bool operator==(const AnnotatedDocument&) const = default;
};

// Per-relation invariants plus id uniqueness across the document.
std::vector<Violation> validate_document(const AnnotatedDocument& d);

struct Corpus {
  std::map<std::string, AnnotatedDocument> documents;  // keyed by doc_id

  bool operator==(const Corpus&) const = default;
};

}  // namespace disco

#endif
