#include "disco/testkit.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

#include "disco/text.hpp"

namespace disco {

namespace {

// Region-relative layout. Strides are multiples of 9 so the text's space
// positions (absolute offset % 9 == 4) never land on a connective.
constexpr CharOffset kPatternStride = 54;
constexpr CharOffset kFillerStride = 27;

struct RegionPlan {
  int pattern_row;  // 0..2, or -1 for filler
  std::size_t col;
  RealizationType filler_type;
  CharOffset base;
};

std::string doc_name(std::uint32_t index) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "d%04u", index);
  return buf;
}

std::u32string make_text(CharOffset len, std::mt19937_64& rng) {
  std::u32string text(len, U'a');
  for (CharOffset p = 0; p < len; ++p) {
    text[p] = p % 9 == 4 ? U' '
                         : static_cast<char32_t>(U'a' + rng() % 26);
  }
  return text;
}

DiscourseRelation build_relation(std::string id, RealizationType type,
                                 CharInterval conn, Span arg1, Span arg2,
                                 const std::u32string& text) {
  DiscourseRelation r;
  r.id = std::move(id);
  r.realization = type;
  r.arg1_span = std::move(arg1);
  r.arg2_span = std::move(arg2);
  if (type == RealizationType::Explicit || type == RealizationType::AltLex) {
    r.conn_span = Span::canonical({conn});
    r.conn_text = encode_utf8(text.substr(conn.start, conn.end - conn.start));
  } else if (type == RealizationType::Implicit) {
    r.conn_text = "ve";  // inserted connective
  }
  if (takes_senses(type)) r.senses = {SensePath(Level1Sense::Expansion)};
  return r;
}

Span one(CharOffset start, CharOffset end) {
  return Span::canonical({CharInterval{start, end}});
}

struct PatternTokens {
  DiscourseRelation first;
  DiscourseRelation second;
  DependencyLabel label;
};

PatternTokens make_pattern(int first_id, const RegionPlan& plan,
                           const std::u32string& text) {
  const CharOffset b = plan.base;
  const RealizationType t1 =
      plan.col < 2 ? RealizationType::Explicit : RealizationType::Implicit;
  const RealizationType t2 =
      plan.col % 2 == 0 ? RealizationType::Explicit : RealizationType::Implicit;
  const std::string id1 = "r" + std::to_string(first_id);
  const std::string id2 = "r" + std::to_string(first_id + 1);

  PatternTokens out;
  out.label.outer = WhichRelation::First;
  out.label.outer_arg = WhichArg::Arg2;

  switch (plan.pattern_row) {
    case 0:  // shared argument: r1.arg2 selected again as r2.arg1
      out.first = build_relation(id1, t1, {b + 11, b + 12}, one(b, b + 10),
                                 one(b + 13, b + 23), text);
      out.second = build_relation(id2, t2, {b + 24, b + 25},
                                  one(b + 13, b + 23), one(b + 26, b + 36),
                                  text);
      out.label.kind = PatternKind::SharedArgument;
      out.label.inner_arg = WhichArg::Arg1;
      break;
    case 1: {  // full embedding: r1.arg2 is exactly extent(r2)
      out.second = build_relation(id2, t2, {b + 25, b + 26}, one(b + 14, b + 24),
                                  one(b + 27, b + 37), text);
      out.first = build_relation(id1, t1, {b + 11, b + 12}, one(b, b + 10),
                                 extent(out.second), text);
      out.label.kind = PatternKind::FullEmbedding;
      break;
    }
    default:  // proper containment: r1.arg2 strictly covers extent(r2)
      out.second = build_relation(id2, t2, {b + 25, b + 26}, one(b + 14, b + 24),
                                  one(b + 27, b + 37), text);
      out.first = build_relation(id1, t1, {b + 11, b + 12}, one(b, b + 10),
                                 one(b + 13, b + 39), text);
      out.label.kind = PatternKind::ProperContainment;
      break;
  }
  return out;
}

DiscourseRelation make_filler(int id_num, const RegionPlan& plan,
                              const std::u32string& text) {
  const CharOffset b = plan.base;
  return build_relation("r" + std::to_string(id_num), plan.filler_type,
                        {b + 7, b + 8}, one(b, b + 6), one(b + 9, b + 15),
                        text);
}

bool eligible_type(RealizationType t) {
  return t == RealizationType::Explicit || t == RealizationType::Implicit;
}

}  // namespace

PlantedCorpus plant_corpus(const PlantSpec& spec) {
  std::uint64_t requested = 0;
  for (const auto& row : spec.cells)
    for (std::uint64_t v : row) requested += 2 * v;
  for (const auto& [t, n] : spec.filler) requested += n;
  if (requested > 0 && spec.documents == 0) {
    throw std::invalid_argument(
        "infeasible plant spec: " + std::to_string(requested) +
        " relations requested but zero documents");
  }

  std::vector<std::vector<RegionPlan>> plans(spec.documents);
  std::vector<CharOffset> doc_len(spec.documents, 0);
  std::size_t next_doc = 0;
  auto place = [&](RegionPlan plan, CharOffset stride) {
    const std::size_t d = next_doc++ % spec.documents;
    plan.base = doc_len[d];
    doc_len[d] += stride;
    plans[d].push_back(plan);
  };
  for (std::size_t row = 0; row < DependencyTable::kRows; ++row) {
    for (std::size_t col = 0; col < DependencyTable::kCols; ++col) {
      for (std::uint64_t k = 0; k < spec.cells[row][col]; ++k) {
        place({static_cast<int>(row), col, RealizationType::Implicit, 0},
              kPatternStride);
      }
    }
  }
  for (RealizationType t : kAllRealizationTypes) {
    auto it = spec.filler.find(t);
    if (it == spec.filler.end()) continue;
    for (std::uint64_t k = 0; k < it->second; ++k) {
      place({-1, 0, t, 0}, kFillerStride);
    }
  }

  PlantedCorpus out;
  out.expected.cells = spec.cells;

  std::mt19937_64 rng(spec.seed);
  for (std::uint32_t d = 0; d < spec.documents; ++d) {
    AnnotatedDocument doc;
    doc.doc_id = doc_name(d);
    doc.text = make_text(doc_len[d], rng);

    // (region index, relation index) per eligible token, in text order
    std::vector<std::pair<std::size_t, std::size_t>> eligible;
    std::vector<DependencyLabel> region_label(plans[d].size());
    int next_id = 1;
    for (std::size_t ri = 0; ri < plans[d].size(); ++ri) {
      const RegionPlan& plan = plans[d][ri];
      if (plan.pattern_row < 0) {
        if (eligible_type(plan.filler_type)) {
          eligible.emplace_back(ri, doc.relations.size());
        }
        doc.relations.push_back(make_filler(next_id++, plan, doc.text));
      } else {
        PatternTokens tokens = make_pattern(next_id, plan, doc.text);
        next_id += 2;
        region_label[ri] = tokens.label;
        eligible.emplace_back(ri, doc.relations.size());
        doc.relations.push_back(std::move(tokens.first));
        eligible.emplace_back(ri, doc.relations.size());
        doc.relations.push_back(std::move(tokens.second));
      }
    }

    for (std::size_t i = 0; i + 1 < eligible.size(); ++i) {
      const auto [region_a, idx_a] = eligible[i];
      const auto [region_b, idx_b] = eligible[i + 1];
      PlantedPair pair;
      pair.doc_id = doc.doc_id;
      pair.first_id = doc.relations[idx_a].id;
      pair.second_id = doc.relations[idx_b].id;
      if (region_a == region_b) {
        pair.label = region_label[region_a];
      } else {
        pair.label.kind = PatternKind::None;  // regions are disjoint
        ++out.expected.none;
      }
      ++out.expected.adjacent_pairs;
      out.pairs.push_back(std::move(pair));
    }
    out.corpus.documents.emplace(doc.doc_id, std::move(doc));
  }
  return out;
}

namespace {

std::set<CharOffset> offsets_of(const Span& s) {
  std::set<CharOffset> out;
  for (const CharInterval& iv : s.intervals()) {
    for (CharOffset c = iv.start; c < iv.end; ++c) out.insert(c);
  }
  return out;
}

std::set<CharOffset> extent_offsets(const DiscourseRelation& r) {
  std::set<CharOffset> out = offsets_of(r.conn_span);
  for (CharOffset c : offsets_of(r.arg1_span)) out.insert(c);
  for (CharOffset c : offsets_of(r.arg2_span)) out.insert(c);
  return out;
}

bool subset(const std::set<CharOffset>& inner,
            const std::set<CharOffset>& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

bool overlaps(const std::set<CharOffset>& a, const std::set<CharOffset>& b) {
  return std::any_of(a.begin(), a.end(),
                     [&](CharOffset c) { return b.count(c) > 0; });
}

}  // namespace

DependencyLabel oracle_classify(const DiscourseRelation& r1,
                                const DiscourseRelation& r2) {
  const auto ext1 = extent_offsets(r1);
  const auto ext2 = extent_offsets(r2);
  if (ext1.empty() || ext2.empty()) {
    throw std::invalid_argument("oracle_classify: relation with empty extent");
  }
  const auto key = [](const std::set<CharOffset>& e, const std::string& id) {
    return std::tuple<CharOffset, CharOffset, const std::string&>(
        *e.begin(), *e.rbegin() + 1, id);
  };
  if (key(ext2, r2.id) < key(ext1, r1.id)) {
    throw std::invalid_argument("oracle_classify: '" + r1.id +
                                "' does not precede '" + r2.id + "'");
  }

  const std::array<std::set<CharOffset>, 2> a = {offsets_of(r1.arg1_span),
                                                 offsets_of(r1.arg2_span)};
  const std::array<std::set<CharOffset>, 2> b = {offsets_of(r2.arg1_span),
                                                 offsets_of(r2.arg2_span)};
  const std::array<WhichArg, 2> which = {WhichArg::Arg1, WhichArg::Arg2};

  DependencyLabel label;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      if (a[i] == b[j]) {
        label.kind = PatternKind::SharedArgument;
        label.outer = WhichRelation::First;
        label.outer_arg = which[i];
        label.inner_arg = which[j];
        return label;
      }
    }
  }
  for (std::size_t i = 0; i < 2; ++i) {
    if (a[i] == ext2) {
      label.kind = PatternKind::FullEmbedding;
      label.outer = WhichRelation::First;
      label.outer_arg = which[i];
      return label;
    }
  }
  for (std::size_t j = 0; j < 2; ++j) {
    if (b[j] == ext1) {
      label.kind = PatternKind::FullEmbedding;
      label.outer = WhichRelation::Second;
      label.outer_arg = which[j];
      return label;
    }
  }
  for (std::size_t i = 0; i < 2; ++i) {
    if (subset(ext2, a[i]) && a[i].size() > ext2.size()) {
      label.kind = PatternKind::ProperContainment;
      label.outer = WhichRelation::First;
      label.outer_arg = which[i];
      return label;
    }
  }
  for (std::size_t j = 0; j < 2; ++j) {
    if (subset(ext1, b[j]) && b[j].size() > ext1.size()) {
      label.kind = PatternKind::ProperContainment;
      label.outer = WhichRelation::Second;
      label.outer_arg = which[j];
      return label;
    }
  }
  label.kind = overlaps(ext1, ext2) ? PatternKind::OtherOverlap
                                    : PatternKind::None;
  return label;
}

double oracle_kappa(const std::vector<std::uint8_t>& coding_a,
                    const std::vector<std::uint8_t>& coding_b) {
  if (coding_a.size() != coding_b.size()) {
    throw std::invalid_argument("coding length mismatch: " +
                                std::to_string(coding_a.size()) + " vs " +
                                std::to_string(coding_b.size()));
  }
  if (coding_a.empty()) {
    throw std::invalid_argument("cannot compute kappa over zero units");
  }
  std::uint64_t ones_a = 0, ones_b = 0, both = 0;
  for (std::size_t i = 0; i < coding_a.size(); ++i) {
    ones_a += coding_a[i] != 0;
    ones_b += coding_b[i] != 0;
    both += coding_a[i] != 0 && coding_b[i] != 0;
  }
  const std::uint64_t total = coding_a.size();
  const double n11 = static_cast<double>(both);
  const double n10 = static_cast<double>(ones_a - both);
  const double n01 = static_cast<double>(ones_b - both);
  const double n00 = static_cast<double>(total - ones_a - ones_b + both);
  const double n = static_cast<double>(total);
  const double p_o = (n11 + n00) / n;
  const double p_e =
      ((n11 + n10) * (n11 + n01) + (n01 + n00) * (n10 + n00)) / (n * n);
  if (p_e == 1.0) return p_o == 1.0 ? 1.0 : 0.0;
  return (p_o - p_e) / (1.0 - p_e);
}

namespace {

std::size_t row_by_name(const std::string& name) {
  for (std::size_t row = 0; row < kPatternRows.size(); ++row) {
    if (to_string(kPatternRows[row]) == name) return row;
  }
  throw std::invalid_argument("unknown pattern row '" + name + "'");
}

std::size_t col_by_name(const std::string& name) {
  for (std::size_t col = 0; col < kPatternColNames.size(); ++col) {
    if (kPatternColNames[col] == name) return col;
  }
  throw std::invalid_argument("unknown pattern column '" + name + "'");
}

nlohmann::json cells_json(
    const std::array<std::array<std::uint64_t, DependencyTable::kCols>,
                     DependencyTable::kRows>& cells) {
  nlohmann::json out = nlohmann::json::object();
  for (std::size_t row = 0; row < DependencyTable::kRows; ++row) {
    nlohmann::json row_json = nlohmann::json::object();
    for (std::size_t col = 0; col < DependencyTable::kCols; ++col) {
      row_json[std::string(kPatternColNames[col])] = cells[row][col];
    }
    out[std::string(to_string(kPatternRows[row]))] = std::move(row_json);
  }
  return out;
}

std::uint64_t require_count(const nlohmann::json& j, const std::string& what) {
  if (!j.is_number_unsigned()) {
    throw std::invalid_argument(what + " must be a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

}  // namespace

nlohmann::json to_json(const PlantSpec& spec) {
  nlohmann::json filler = nlohmann::json::object();
  for (const auto& [t, n] : spec.filler) filler[std::string(to_string(t))] = n;
  return {{"cells", cells_json(spec.cells)},
          {"filler", std::move(filler)},
          {"documents", spec.documents},
          {"seed", spec.seed}};
}

PlantSpec plant_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("plant spec must be a JSON object");
  }
  PlantSpec spec;
  if (j.contains("cells")) {
    const nlohmann::json& cells = j.at("cells");
    if (!cells.is_object()) {
      throw std::invalid_argument("'cells' must be an object");
    }
    for (const auto& [row_name, row_json] : cells.items()) {
      const std::size_t row = row_by_name(row_name);
      if (!row_json.is_object()) {
        throw std::invalid_argument("row '" + row_name + "' must be an object");
      }
      for (const auto& [col_name, count] : row_json.items()) {
        spec.cells[row][col_by_name(col_name)] =
            require_count(count, "cell " + row_name + "/" + col_name);
      }
    }
  }
  if (j.contains("filler")) {
    const nlohmann::json& filler = j.at("filler");
    if (!filler.is_object()) {
      throw std::invalid_argument("'filler' must be an object");
    }
    for (const auto& [type_name, count] : filler.items()) {
      const auto type = parse_realization_type(type_name);
      if (!type) {
        throw std::invalid_argument("unknown realization type '" + type_name +
                                    "'");
      }
      spec.filler[*type] = require_count(count, "filler " + type_name);
    }
  }
  if (j.contains("documents")) {
    const std::uint64_t docs = require_count(j.at("documents"), "'documents'");
    if (docs > std::numeric_limits<std::uint32_t>::max()) {
      throw std::invalid_argument("'documents' out of range");
    }
    spec.documents = static_cast<std::uint32_t>(docs);
  }
  if (j.contains("seed")) {
    spec.seed = require_count(j.at("seed"), "'seed'");
  }
  return spec;
}

nlohmann::json ground_truth_json(const PlantSpec& spec,
                                 const PlantedCorpus& planted) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const PlantedPair& p : planted.pairs) {
    nlohmann::json pj = {{"doc", p.doc_id},
                         {"first", p.first_id},
                         {"second", p.second_id},
                         {"kind", std::string(to_string(p.label.kind))}};
    if (p.label.outer) pj["outer"] = std::string(to_string(*p.label.outer));
    if (p.label.outer_arg) {
      pj["outer_arg"] = std::string(to_string(*p.label.outer_arg));
    }
    if (p.label.inner_arg) {
      pj["inner_arg"] = std::string(to_string(*p.label.inner_arg));
    }
    pairs.push_back(std::move(pj));
  }
  const DependencyTable& t = planted.expected;
  return {{"spec", to_json(spec)},
          {"expected",
           {{"cells", cells_json(t.cells)},
            {"other_overlap", t.other_overlap},
            {"none", t.none},
            {"linked_skipped", t.linked_skipped},
            {"adjacent_pairs", t.adjacent_pairs}}},
          {"pairs", std::move(pairs)}};
}

}  // namespace disco
