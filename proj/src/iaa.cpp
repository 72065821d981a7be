#include "disco/iaa.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "disco/text.hpp"

namespace disco {

namespace {

void require_same_texts(const Corpus& a, const Corpus& b) {
  for (const auto& [id, doc] : a.documents) {
    auto it = b.documents.find(id);
    if (it == b.documents.end()) {
      throw std::invalid_argument("document '" + id +
                                  "' missing from second corpus");
    }
    if (it->second.text != doc.text) {
      throw std::invalid_argument("annotator texts differ for document '" + id +
                                  "'");
    }
  }
  for (const auto& [id, doc] : b.documents) {
    if (!a.documents.count(id)) {
      throw std::invalid_argument("document '" + id +
                                  "' missing from first corpus");
    }
  }
}

}  // namespace

MatchResult match_relations(const AnnotatedDocument& doc_a,
                            const AnnotatedDocument& doc_b) {
  if (doc_a.doc_id != doc_b.doc_id) {
    throw std::invalid_argument("matching across different documents: '" +
                                doc_a.doc_id + "' vs '" + doc_b.doc_id + "'");
  }
  if (doc_a.text != doc_b.text) {
    throw std::invalid_argument("annotator texts differ for document '" +
                                doc_a.doc_id + "'");
  }

  using Key = std::pair<Span, Span>;
  std::map<Key, std::deque<std::size_t>> pool_b;
  for (std::size_t i = 0; i < doc_b.relations.size(); ++i) {
    const auto& r = doc_b.relations[i];
    pool_b[{r.arg1_span, r.arg2_span}].push_back(i);
  }

  MatchResult result;
  std::vector<bool> taken(doc_b.relations.size(), false);
  for (const auto& ra : doc_a.relations) {
    auto it = pool_b.find({ra.arg1_span, ra.arg2_span});
    if (it != pool_b.end() && !it->second.empty()) {
      std::size_t j = it->second.front();
      it->second.pop_front();
      taken[j] = true;
      result.matched.push_back({&ra, &doc_b.relations[j], doc_a.doc_id});
    } else {
      result.only_a.push_back(&ra);
    }
  }
  for (std::size_t j = 0; j < doc_b.relations.size(); ++j) {
    if (!taken[j]) result.only_b.push_back(&doc_b.relations[j]);
  }
  return result;
}

std::map<RealizationType, double> realization_agreement(
    const Corpus& corpus_a, const Corpus& corpus_b) {
  require_same_texts(corpus_a, corpus_b);

  std::map<RealizationType, std::uint64_t> count_a, count_b, matched_both;
  for (const auto& [id, doc_a] : corpus_a.documents) {
    const auto& doc_b = corpus_b.documents.at(id);
    for (const auto& r : doc_a.relations) ++count_a[r.realization];
    for (const auto& r : doc_b.relations) ++count_b[r.realization];
    for (const MatchedPair& p : match_relations(doc_a, doc_b).matched) {
      if (p.token_a->realization == p.token_b->realization) {
        ++matched_both[p.token_a->realization];
      }
    }
  }

  std::map<RealizationType, double> out;
  for (RealizationType t : kAllRealizationTypes) {
    const std::uint64_t na = count_a.count(t) ? count_a.at(t) : 0;
    const std::uint64_t nb = count_b.count(t) ? count_b.at(t) : 0;
    if (na + nb == 0) continue;
    const std::uint64_t common = matched_both.count(t) ? matched_both.at(t) : 0;
    out[t] = static_cast<double>(common) / static_cast<double>(na + nb - common);
  }
  return out;
}

namespace {

std::set<SensePath> truncated_sense_set(const std::vector<SensePath>& senses,
                                        int level) {
  std::set<SensePath> out;
  for (const SensePath& s : senses) out.insert(s.truncated(level));
  return out;
}

}  // namespace

std::map<RealizationType, double> sense_agreement(const Corpus& corpus_a,
                                                  const Corpus& corpus_b,
                                                  int level) {
  if (level < 1 || level > 3) {
    throw std::invalid_argument("sense level must be 1, 2 or 3");
  }
  require_same_texts(corpus_a, corpus_b);

  std::map<RealizationType, std::uint64_t> pairs, agreeing;
  for (const auto& [id, doc_a] : corpus_a.documents) {
    const auto& doc_b = corpus_b.documents.at(id);
    for (const MatchedPair& p : match_relations(doc_a, doc_b).matched) {
      const RealizationType t = p.token_a->realization;
      if (t != p.token_b->realization || !takes_senses(t)) continue;
      ++pairs[t];
      if (truncated_sense_set(p.token_a->senses, level) ==
          truncated_sense_set(p.token_b->senses, level)) {
        ++agreeing[t];
      }
    }
  }

  std::map<RealizationType, double> out;
  for (const auto& [t, n] : pairs) {
    const std::uint64_t agree = agreeing.count(t) ? agreeing.at(t) : 0;
    out[t] = static_cast<double>(agree) / static_cast<double>(n);
  }
  return out;
}

std::string_view to_string(ArgCategory c) {
  return c == ArgCategory::Arg1 ? "arg1" : "arg2";
}

namespace {

// Shrinks each interval past boundary whitespace; intervals may vanish.
Span trim_span(const Span& s, const std::u32string& text) {
  std::vector<CharInterval> kept;
  for (CharInterval iv : s.intervals()) {
    while (iv.start < iv.end && is_space(text[iv.start])) ++iv.start;
    while (iv.end > iv.start && is_space(text[iv.end - 1])) --iv.end;
    if (iv.start < iv.end) kept.push_back(iv);
  }
  return kept.empty() ? Span() : Span::canonical(std::move(kept));
}

}  // namespace

std::vector<std::uint8_t> unitize_document(const AnnotatedDocument& doc,
                                           ArgCategory category, UnitMode mode,
                                           bool trim_boundaries) {
  std::vector<std::uint8_t> chars(doc.text.size(), 0);
  for (const DiscourseRelation& r : doc.relations) {
    const Span& raw =
        category == ArgCategory::Arg1 ? r.arg1_span : r.arg2_span;
    const Span span = trim_boundaries ? trim_span(raw, doc.text) : raw;
    for (const CharInterval& iv : span.intervals()) {
      for (CharOffset c = iv.start; c < iv.end; ++c) chars[c] = 1;
    }
  }
  if (mode == UnitMode::Char) return chars;

  std::vector<std::uint8_t> words;
  for (const CharInterval& w : word_units(doc.text)) {
    std::uint8_t hit = 0;
    for (CharOffset c = w.start; c < w.end && !hit; ++c) hit = chars[c];
    words.push_back(hit);
  }
  return words;
}

std::vector<std::uint8_t> unitize(const Corpus& corpus, ArgCategory category,
                                  UnitMode mode, bool trim_boundaries) {
  std::vector<std::uint8_t> out;
  for (const auto& [id, doc] : corpus.documents) {
    auto units = unitize_document(doc, category, mode, trim_boundaries);
    out.insert(out.end(), units.begin(), units.end());
  }
  return out;
}

KappaResult cohens_kappa(const std::vector<std::uint8_t>& coding_a,
                         const std::vector<std::uint8_t>& coding_b) {
  if (coding_a.size() != coding_b.size()) {
    throw std::invalid_argument("coding length mismatch: " +
                                std::to_string(coding_a.size()) + " vs " +
                                std::to_string(coding_b.size()));
  }
  if (coding_a.empty()) {
    throw std::invalid_argument("cannot compute kappa over zero units");
  }

  KappaResult res;
  auto& t = res.table;
  for (std::size_t i = 0; i < coding_a.size(); ++i) {
    const bool a = coding_a[i] != 0;
    const bool b = coding_b[i] != 0;
    if (a && b) ++t.n11;
    else if (a) ++t.n10;
    else if (b) ++t.n01;
    else ++t.n00;
  }
  t.units = coding_a.size();

  const double n = static_cast<double>(t.units);
  res.p_o = static_cast<double>(t.n11 + t.n00) / n;
  res.p_e = (static_cast<double>((t.n11 + t.n10) * (t.n11 + t.n01)) +
             static_cast<double>((t.n01 + t.n00) * (t.n10 + t.n00))) /
            (n * n);
  if (res.p_e == 1.0) {
    res.kappa = res.p_o == 1.0 ? 1.0 : 0.0;
  } else {
    res.kappa = (res.p_o - res.p_e) / (1.0 - res.p_e);
  }
  return res;
}

ArgumentAgreement argument_span_agreement(const Corpus& corpus_a,
                                          const Corpus& corpus_b,
                                          UnitMode mode,
                                          bool trim_boundaries) {
  require_same_texts(corpus_a, corpus_b);
  ArgumentAgreement out;
  out.arg1 =
      cohens_kappa(unitize(corpus_a, ArgCategory::Arg1, mode, trim_boundaries),
                   unitize(corpus_b, ArgCategory::Arg1, mode, trim_boundaries));
  out.arg2 =
      cohens_kappa(unitize(corpus_a, ArgCategory::Arg2, mode, trim_boundaries),
                   unitize(corpus_b, ArgCategory::Arg2, mode, trim_boundaries));
  return out;
}

std::map<std::string, ArgumentAgreement> argument_span_agreement_by_document(
    const Corpus& corpus_a, const Corpus& corpus_b, UnitMode mode,
    bool trim_boundaries) {
  require_same_texts(corpus_a, corpus_b);
  std::map<std::string, ArgumentAgreement> out;
  for (const auto& [id, doc_a] : corpus_a.documents) {
    const auto& doc_b = corpus_b.documents.at(id);
    if (doc_a.text.empty()) continue;  // no units to compare
    ArgumentAgreement agree;
    agree.arg1 = cohens_kappa(
        unitize_document(doc_a, ArgCategory::Arg1, mode, trim_boundaries),
        unitize_document(doc_b, ArgCategory::Arg1, mode, trim_boundaries));
    agree.arg2 = cohens_kappa(
        unitize_document(doc_a, ArgCategory::Arg2, mode, trim_boundaries),
        unitize_document(doc_b, ArgCategory::Arg2, mode, trim_boundaries));
    out.emplace(id, agree);
  }
  return out;
}

}  // namespace disco
