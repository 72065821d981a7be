#ifndef DISCO_IAA_HPP
#define DISCO_IAA_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "disco/model.hpp"

namespace disco {

// A relation annotated by both annotators: the exact-match criterion keys
// on the ordered pair (arg1 charset, arg2 charset). Realization type is
// deliberately not part of the key; type disagreement is measured, not
// filtered out.
struct MatchedPair {
  const DiscourseRelation* token_a = nullptr;
  const DiscourseRelation* token_b = nullptr;
  std::string doc_id;
};

struct MatchResult {
  std::vector<MatchedPair> matched;
  std::vector<const DiscourseRelation*> only_a;
  std::vector<const DiscourseRelation*> only_b;
};

// Pairs tokens with equal argument-span keys, greedily in input order so
// that linked multiples (several tokens over the same spans) pair one to
// one. Throws std::invalid_argument if the two documents differ in id or
// text. Returned pointers alias the inputs.
MatchResult match_relations(const AnnotatedDocument& doc_a,
                            const AnnotatedDocument& doc_b);

// Per realization type t: |matched pairs where both tokens are t| over
// |A_t| + |B_t| - |matched both-t|, pooled over the corpus. Types absent
// from both annotators are omitted.
std::map<RealizationType, double> realization_agreement(const Corpus& corpus_a,
                                                        const Corpus& corpus_b);

// Over matched pairs where both tokens share a realization type in
// {Explicit, Implicit, AltLex}: the fraction whose sense-path sets, each
// path truncated to depth <= level, are equal as sets. Ratios in [0, 1];
// types with no such pairs are omitted.
std::map<RealizationType, double> sense_agreement(const Corpus& corpus_a,
                                                  const Corpus& corpus_b,
                                                  int level);

enum class ArgCategory { Arg1, Arg2 };
enum class UnitMode { Char, Word };

std::string_view to_string(ArgCategory c);

// Binary selected/excluded coding of the whole corpus for one argument
// category. Char mode: one unit per character, documents concatenated in
// doc_id order. Word mode: one unit per maximal non-whitespace run; a word
// codes 1 iff any of its characters is selected. trim_boundaries drops
// leading/trailing whitespace characters from each span interval before
// coding.
std::vector<std::uint8_t> unitize(const Corpus& corpus, ArgCategory category,
                                  UnitMode mode, bool trim_boundaries);
std::vector<std::uint8_t> unitize_document(const AnnotatedDocument& doc,
                                           ArgCategory category, UnitMode mode,
                                           bool trim_boundaries);

struct ContingencyTable {
  std::uint64_t n11 = 0;  // both coders 1
  std::uint64_t n10 = 0;  // a=1, b=0
  std::uint64_t n01 = 0;  // a=0, b=1
  std::uint64_t n00 = 0;  // both coders 0
  std::uint64_t units = 0;

  bool operator==(const ContingencyTable&) const = default;
};

struct KappaResult {
  double kappa = 0.0;
  double p_o = 0.0;
  double p_e = 0.0;
  ContingencyTable table;
};

// Cohen's kappa over two equal-length binary codings. When p_e degenerates
// to 1 the formula is 0/0; defined as 1 if p_o = 1 else 0, preserving
// "identical codings give 1". Throws std::invalid_argument on length
// mismatch or empty input.
KappaResult cohens_kappa(const std::vector<std::uint8_t>& coding_a,
                         const std::vector<std::uint8_t>& coding_b);

struct ArgumentAgreement {
  KappaResult arg1;
  KappaResult arg2;
};

// unitize + cohens_kappa per argument category, units pooled across all
// documents. Throws std::invalid_argument if the corpora do not cover the
// same doc_ids with identical texts.
ArgumentAgreement argument_span_agreement(const Corpus& corpus_a,
                                          const Corpus& corpus_b,
                                          UnitMode mode, bool trim_boundaries);

// Same computation per document, as diagnostic output.
std::map<std::string, ArgumentAgreement> argument_span_agreement_by_document(
    const Corpus& corpus_a, const Corpus& corpus_b, UnitMode mode,
    bool trim_boundaries);

}  // namespace disco

#endif
