#include "disco/span.hpp"

#include <algorithm>
#include <stdexcept>

namespace disco {

Span Span::canonical(std::vector<CharInterval> intervals) {
  for (const auto& iv : intervals) {
    if (iv.start >= iv.end) {
      throw std::invalid_argument("empty interval " + std::to_string(iv.start) +
                                  ":" + std::to_string(iv.end));
    }
  }
  std::sort(intervals.begin(), intervals.end());
  Span s;
  for (const auto& iv : intervals) {
    if (!s.intervals_.empty() && iv.start <= s.intervals_.back().end) {
      s.intervals_.back().end = std::max(s.intervals_.back().end, iv.end);
    } else {
      s.intervals_.push_back(iv);
    }
  }
  return s;
}

bool Span::is_canonical(const std::vector<CharInterval>& intervals) {
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (intervals[i].start >= intervals[i].end) return false;
    if (i > 0 && intervals[i].start <= intervals[i - 1].end) return false;
  }
  return true;
}

std::size_t Span::char_count() const {
  std::size_t n = 0;
  for (const auto& iv : intervals_) n += iv.length();
  return n;
}

bool Span::contains(CharOffset offset) const {
  auto it = std::partition_point(
      intervals_.begin(), intervals_.end(),
      [offset](const CharInterval& iv) { return iv.end <= offset; });
  return it != intervals_.end() && it->start <= offset;
}

bool Span::covers(const Span& other) const {
  // Canonical form: a covered interval cannot straddle two of ours.
  std::size_t i = 0;
  for (const auto& o : other.intervals_) {
    while (i < intervals_.size() && intervals_[i].end <= o.start) ++i;
    if (i == intervals_.size() || intervals_[i].start > o.start ||
        intervals_[i].end < o.end) {
      return false;
    }
  }
  return true;
}

bool Span::strictly_covers(const Span& other) const {
  return covers(other) && char_count() > other.char_count();
}

bool Span::intersects(const Span& other) const {
  std::size_t i = 0, j = 0;
  while (i < intervals_.size() && j < other.intervals_.size()) {
    const auto& a = intervals_[i];
    const auto& b = other.intervals_[j];
    if (a.end <= b.start) {
      ++i;
    } else if (b.end <= a.start) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

Span span_union(const Span& a, const Span& b) {
  std::vector<CharInterval> all = a.intervals();
  all.insert(all.end(), b.intervals().begin(), b.intervals().end());
  return Span::canonical(std::move(all));
}

std::vector<CharOffset> charset(const Span& s) {
  std::vector<CharOffset> out;
  out.reserve(s.char_count());
  for (const auto& iv : s.intervals()) {
    for (CharOffset c = iv.start; c < iv.end; ++c) out.push_back(c);
  }
  return out;
}

std::string to_string(const Span& s) {
  if (s.empty()) return "_";
  std::string out;
  for (const auto& iv : s.intervals()) {
    if (!out.empty()) out += ',';
    out += std::to_string(iv.start);
    out += ':';
    out += std::to_string(iv.end);
  }
  return out;
}

}  // namespace disco
