#include "disco/model.hpp"

#include <set>
#include <stdexcept>

namespace disco {

std::string_view to_string(RealizationType t) {
  switch (t) {
    case RealizationType::Implicit: return "Implicit";
    case RealizationType::Explicit: return "Explicit";
    case RealizationType::AltLex: return "AltLex";
    case RealizationType::EntRel: return "EntRel";
    case RealizationType::Hypophora: return "Hypophora";
    case RealizationType::NoRel: return "NoRel";
  }
  return "?";
}

std::optional<RealizationType> parse_realization_type(std::string_view s) {
  for (RealizationType t : kAllRealizationTypes) {
    if (s == to_string(t)) return t;
  }
  return std::nullopt;
}

std::string_view to_string(Level1Sense s) {
  switch (s) {
    case Level1Sense::Expansion: return "Expansion";
    case Level1Sense::Contingency: return "Contingency";
    case Level1Sense::Comparison: return "Comparison";
    case Level1Sense::Temporal: return "Temporal";
  }
  return "?";
}

std::optional<Level1Sense> parse_level1_sense(std::string_view s) {
  for (Level1Sense l : kAllLevel1Senses) {
    if (s == to_string(l)) return l;
  }
  return std::nullopt;
}

namespace {

bool valid_sense_label(std::string_view label) {
  if (label.empty()) return false;
  for (char c : label) {
    if (c == '.' || c == ';' || c == '\t' || c == '\n' || c == '\r') {
      return false;
    }
  }
  return true;
}

void check_sense_label(const std::string& label, const char* which) {
  if (!valid_sense_label(label)) {
    throw std::invalid_argument(std::string("bad ") + which +
                                " sense label: '" + label + "'");
  }
}

}  // namespace

SensePath::SensePath(Level1Sense level1, std::string level2)
    : level1_(level1) {
  check_sense_label(level2, "level-2");
  level2_ = std::move(level2);
}

SensePath::SensePath(Level1Sense level1, std::string level2, std::string level3)
    : level1_(level1) {
  check_sense_label(level2, "level-2");
  check_sense_label(level3, "level-3");
  level2_ = std::move(level2);
  level3_ = std::move(level3);
}

std::optional<SensePath> SensePath::parse(std::string_view dotted,
                                          std::string* error) {
  auto fail = [&](std::string why) -> std::optional<SensePath> {
    if (error) *error = std::move(why);
    return std::nullopt;
  };
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  while (true) {
    std::size_t dot = dotted.find('.', begin);
    if (dot == std::string_view::npos) {
      parts.push_back(dotted.substr(begin));
      break;
    }
    parts.push_back(dotted.substr(begin, dot - begin));
    begin = dot + 1;
  }
  if (parts.size() > 3) return fail("sense path deeper than 3 levels");
  auto l1 = parse_level1_sense(parts[0]);
  if (!l1) {
    return fail("unknown Level-1 sense '" + std::string(parts[0]) + "'");
  }
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (!valid_sense_label(parts[i])) {
      return fail("empty or malformed level-" + std::to_string(i + 1) +
                  " label in '" + std::string(dotted) + "'");
    }
  }
  if (parts.size() == 1) return SensePath(*l1);
  if (parts.size() == 2) return SensePath(*l1, std::string(parts[1]));
  return SensePath(*l1, std::string(parts[1]), std::string(parts[2]));
}

SensePath SensePath::truncated(int level) const {
  SensePath out(level1_);
  if (level >= 2) out.level2_ = level2_;
  if (level >= 3 && level2_) out.level3_ = level3_;
  return out;
}

std::string SensePath::to_string() const {
  std::string out{disco::to_string(level1_)};
  if (level2_) {
    out += '.';
    out += *level2_;
    if (level3_) {
      out += '.';
      out += *level3_;
    }
  }
  return out;
}

Span extent(const DiscourseRelation& r) {
  return span_union(span_union(r.conn_span, r.arg1_span), r.arg2_span);
}

std::string_view to_string(ViolationCode c) {
  switch (c) {
    case ViolationCode::EmptyArgument: return "EmptyArgument";
    case ViolationCode::ArgumentOverlap: return "ArgumentOverlap";
    case ViolationCode::ConnectiveOverlap: return "ConnectiveOverlap";
    case ViolationCode::ConnSpanRequired: return "ConnSpanRequired";
    case ViolationCode::ConnSpanForbidden: return "ConnSpanForbidden";
    case ViolationCode::ConnTextRequired: return "ConnTextRequired";
    case ViolationCode::SensesRequired: return "SensesRequired";
    case ViolationCode::SensesForbidden: return "SensesForbidden";
    case ViolationCode::SpanOutOfRange: return "SpanOutOfRange";
    case ViolationCode::DuplicateRelationId: return "DuplicateRelationId";
  }
  return "?";
}

std::vector<Violation> validate_relation(const DiscourseRelation& r,
                                         std::size_t text_len) {
  std::vector<Violation> out;
  auto add = [&](ViolationCode code, std::string field, std::string message) {
    out.push_back({code, std::move(field), std::move(message)});
  };

  if (r.arg1_span.empty()) {
    add(ViolationCode::EmptyArgument, "arg1_span", "argument 1 span is empty");
  }
  if (r.arg2_span.empty()) {
    add(ViolationCode::EmptyArgument, "arg2_span", "argument 2 span is empty");
  }
  if (r.arg1_span.intersects(r.arg2_span)) {
    add(ViolationCode::ArgumentOverlap, "arg1_span/arg2_span",
        "argument spans overlap");
  }
  if (r.conn_span.intersects(r.arg1_span)) {
    add(ViolationCode::ConnectiveOverlap, "conn_span/arg1_span",
        "connective span overlaps argument 1");
  }
  if (r.conn_span.intersects(r.arg2_span)) {
    add(ViolationCode::ConnectiveOverlap, "conn_span/arg2_span",
        "connective span overlaps argument 2");
  }

  switch (r.realization) {
    case RealizationType::Explicit:
    case RealizationType::AltLex:
      if (r.conn_span.empty()) {
        add(ViolationCode::ConnSpanRequired, "conn_span",
            std::string(to_string(r.realization)) +
                " requires a connective span");
      }
      break;
    case RealizationType::Implicit:
      if (!r.conn_span.empty()) {
        add(ViolationCode::ConnSpanForbidden, "conn_span",
            "Implicit must not carry a connective span");
      }
      if (r.conn_text.empty()) {
        add(ViolationCode::ConnTextRequired, "conn_text",
            "Implicit requires an inserted connective text");
      }
      break;
    case RealizationType::EntRel:
    case RealizationType::Hypophora:
    case RealizationType::NoRel:
      if (!r.conn_span.empty()) {
        add(ViolationCode::ConnSpanForbidden, "conn_span",
            std::string(to_string(r.realization)) +
                " must not carry a connective span");
      }
      if (!r.senses.empty()) {
        add(ViolationCode::SensesForbidden, "senses",
            std::string(to_string(r.realization)) + " must not carry senses");
      }
      break;
  }
  if (takes_senses(r.realization) && r.senses.empty()) {
    add(ViolationCode::SensesRequired, "senses",
        std::string(to_string(r.realization)) + " requires at least one sense");
  }

  auto check_range = [&](const Span& s, const char* field) {
    if (!s.empty() && s.max_end() > text_len) {
      add(ViolationCode::SpanOutOfRange, field,
          "span " + disco::to_string(s) + " exceeds text length " +
              std::to_string(text_len));
    }
  };
  check_range(r.conn_span, "conn_span");
  check_range(r.arg1_span, "arg1_span");
  check_range(r.arg2_span, "arg2_span");
  return out;
}

std::tuple<CharOffset, CharOffset, std::string_view> sort_key(
    const DiscourseRelation& r) {
  const Span ext = extent(r);
  return {ext.min_offset(), ext.max_end(), std::string_view(r.id)};
}

std::vector<Violation> validate_document(const AnnotatedDocument& d) {
  std::vector<Violation> out;
  std::set<std::string_view> seen;
  for (const auto& r : d.relations) {
    auto v = validate_relation(r, d.text.size());
    out.insert(out.end(), v.begin(), v.end());
    if (!seen.insert(r.id).second) {
      out.push_back({ViolationCode::DuplicateRelationId, "id",
                     "duplicate relation id '" + r.id + "'"});
    }
  }
  return out;
}

}  // namespace disco
