#ifndef DISCO_SPAN_HPP
#define DISCO_SPAN_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace disco {

// Offsets count Unicode scalar values, 0-based. Never bytes.
using CharOffset = std::uint32_t;

// Half-open interval [start, end). Must be nonempty.
struct CharInterval {
  CharOffset start = 0;
  CharOffset end = 0;

  std::size_t length() const { return end - start; }
  bool operator==(const CharInterval&) const = default;
  auto operator<=>(const CharInterval&) const = default;
};

// A possibly discontinuous set of characters, kept in canonical form:
// intervals sorted ascending, pairwise disjoint, never adjacent (the gap
// between consecutive intervals is at least one character). The canonical
// form is unique per character set, so operator== is charset equality.
class Span {
 public:
  Span() = default;

  // Sorts and merges arbitrary nonempty intervals into canonical form.
  // Throws std::invalid_argument on an empty interval (start >= end).
  static Span canonical(std::vector<CharInterval> intervals);

  // True iff the list is already canonical (all nonempty, sorted,
  // disjoint, no adjacency).
  static bool is_canonical(const std::vector<CharInterval>& intervals);

  const std::vector<CharInterval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }

  // Number of characters covered.
  std::size_t char_count() const;

  bool contains(CharOffset offset) const;

  // Charset superset / proper superset of `other`.
  bool covers(const Span& other) const;
  bool strictly_covers(const Span& other) const;

  // True iff the two charsets share at least one offset.
  bool intersects(const Span& other) const;

  // First covered offset / one past the last covered offset. Pre: !empty().
  CharOffset min_offset() const { return intervals_.front().start; }
  CharOffset max_end() const { return intervals_.back().end; }

  bool operator==(const Span&) const = default;
  auto operator<=>(const Span&) const = default;

 private:
  std::vector<CharInterval> intervals_;
};

// Charset union; adjacent intervals merge.
Span span_union(const Span& a, const Span& b);

// Materializes the covered offsets, ascending.
std::vector<CharOffset> charset(const Span& s);

// "start:end,start:end" rendering; empty span renders as "_".
std::string to_string(const Span& s);

}  // namespace disco

#endif
