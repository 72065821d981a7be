#pragma once

// Synthetic corpora with planted dependency structures, plus brute-force
// oracles used to cross-check the analyzers.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "disco/deps.hpp"
#include "disco/model.hpp"

namespace disco {

// Target counts for a generated corpus. cells follows DependencyTable's
// row/column layout; filler relations are extra tokens with extents
// disjoint from everything else.
struct PlantSpec {
  std::array<std::array<std::uint64_t, DependencyTable::kCols>,
             DependencyTable::kRows>
      cells{};
  std::map<RealizationType, std::uint64_t> filler;
  std::uint32_t documents = 1;
  std::uint64_t seed = 0;

  bool operator==(const PlantSpec&) const = default;
};

// Ground truth for one adjacent pair of the generated corpus.
struct PlantedPair {
  std::string doc_id;
  std::string first_id;
  std::string second_id;
  DependencyLabel label;

  bool operator==(const PlantedPair&) const = default;
};

struct PlantedCorpus {
  Corpus corpus;
  std::vector<PlantedPair> pairs;  // every adjacent pair, in scan order
  DependencyTable expected;        // what dependency_table must report
};

// Deterministic in spec.seed. Throws std::invalid_argument on an
// infeasible spec (relations requested but documents == 0).
PlantedCorpus plant_corpus(const PlantSpec& spec);

// Same classification contract as classify_pair, recomputed by naive
// enumeration over explicit character sets. Kept deliberately simple and
// independent of the span algebra.
DependencyLabel oracle_classify(const DiscourseRelation& r1,
                                const DiscourseRelation& r2);

// Cohen's kappa recomputed by direct recount; agreement oracle for
// cohens_kappa. Same preconditions and degenerate-case rule.
double oracle_kappa(const std::vector<std::uint8_t>& coding_a,
                    const std::vector<std::uint8_t>& coding_b);

nlohmann::json to_json(const PlantSpec& spec);
// Throws std::invalid_argument on a malformed document.
PlantSpec plant_spec_from_json(const nlohmann::json& j);

// Ground-truth sidecar for the synth subcommand: the spec, the expected
// table and every adjacent pair's label.
nlohmann::json ground_truth_json(const PlantSpec& spec,
                                 const PlantedCorpus& planted);

}  // namespace disco
