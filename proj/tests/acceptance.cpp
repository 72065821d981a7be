// Acceptance gate for the toolkit. Eight checks, one pass/fail line each:
// oracle agreement for kappa and the dependency classifier, planted-corpus
// reproduction, perfect self-agreement, sense-level antitonicity, wire
// round-trips, golden report files, and CLI determinism.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "disco/annot_io.hpp"
#include "disco/deps.hpp"
#include "disco/iaa.hpp"
#include "disco/model.hpp"
#include "disco/stats.hpp"
#include "disco/testkit.hpp"
#include "disco/text.hpp"

namespace fs = std::filesystem;

using disco::AnnotatedDocument;
using disco::ArgCategory;
using disco::CharInterval;
using disco::CharOffset;
using disco::Corpus;
using disco::DependencyTable;
using disco::DiscourseRelation;
using disco::Level1Sense;
using disco::PatternKind;
using disco::PlantSpec;
using disco::RealizationType;
using disco::SensePath;
using disco::Span;
using disco::UnitMode;

namespace {

int g_failures = 0;

void report(bool ok, const std::string& name) {
  std::cout << (ok ? "PASS" : "FAIL") << ": " << name << std::endl;
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string read_file(const fs::path& p, bool& ok) {
  std::ifstream f(p, std::ios::binary);
  if (!f) {
    ok = false;
    return {};
  }
  std::ostringstream ss;
  ss << f.rdbuf();
  ok = true;
  return ss.str();
}

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() /
          ("disco-accept-" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
};

// Runs the CLI with stdout captured to `out`; returns the exit code.
int run_cli(const std::string& args, const fs::path& out) {
  const std::string cmd = std::string("\"") + DISCO_BIN_PATH + "\" " + args +
                          " > \"" + out.string() + "\" 2> \"" + out.string() +
                          ".stderr\"";
  const int rc = std::system(cmd.c_str());
  if (rc == -1 || !WIFEXITED(rc)) return -1;
  return WEXITSTATUS(rc);
}

// ---------------------------------------------------------------- 1 -----

bool kappa_oracle_check() {
  const auto t0 = std::chrono::steady_clock::now();

  std::vector<std::uint8_t> a(20, 0), b(20, 0);
  for (int i = 0; i < 10; ++i) a[i] = 1;
  for (int i = 5; i < 15; ++i) b[i] = 1;
  if (disco::cohens_kappa(a, a).kappa != 1.0) return false;
  if (disco::cohens_kappa(a, b).kappa != 0.0) return false;
  std::vector<std::uint8_t> c(20, 0);
  for (int i = 10; i < 20; ++i) c[i] = 1;
  if (disco::cohens_kappa(a, c).kappa != -1.0) return false;
  const std::vector<std::uint8_t> ones(13, 1);
  if (disco::cohens_kappa(ones, ones).kappa != 1.0) return false;

  std::mt19937_64 rng(20260814);
  for (int trial = 0; trial < 1200; ++trial) {
    const std::size_t n = 1 + rng() % 10000;
    const std::uint64_t pa = rng() % 1001, pb = rng() % 1001;
    std::vector<std::uint8_t> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = rng() % 1000 < pa;
      y[i] = rng() % 1000 < pb;
    }
    const double got = disco::cohens_kappa(x, y).kappa;
    const double want = disco::oracle_kappa(x, y);
    if (std::abs(got - want) > 1e-12) return false;
  }
  return seconds_since(t0) < 5.0;
}

// ---------------------------------------------------------------- 2 -----

Span random_span(std::mt19937_64& rng, CharOffset limit) {
  std::vector<CharInterval> ivs;
  CharOffset cursor = rng() % (limit / 4);
  const int n = 1 + rng() % 3;
  for (int i = 0; i < n && cursor + 2 < limit; ++i) {
    const CharOffset start = cursor;
    const CharOffset end =
        std::min<CharOffset>(start + 1 + rng() % 40, limit);
    ivs.push_back({start, end});
    cursor = end + 2 + rng() % 30;
  }
  return Span::canonical(std::move(ivs));
}

bool classifier_oracle_check() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(4711);

  for (int doc = 0; doc < 120; ++doc) {
    const CharOffset text_len = 200 + rng() % 1801;  // up to ~2000 chars
    const std::size_t n_rel = 1 + rng() % 50;
    std::vector<DiscourseRelation> rels;
    for (std::size_t i = 0; i < n_rel; ++i) {
      DiscourseRelation r;
      r.id = "r" + std::to_string(i);
      r.arg1_span = random_span(rng, text_len);
      r.arg2_span = random_span(rng, text_len);
      if (rng() % 2 == 0) {
        r.realization = RealizationType::Explicit;
        r.conn_span = random_span(rng, text_len);
        r.conn_text = "x";
      } else {
        r.realization = RealizationType::Implicit;
        r.conn_text = "ve";
      }
      r.senses = {SensePath(Level1Sense::Expansion)};
      rels.push_back(std::move(r));
    }
    std::sort(rels.begin(), rels.end(),
              [](const DiscourseRelation& a, const DiscourseRelation& b) {
                return sort_key(a) < sort_key(b);
              });
    for (std::size_t i = 0; i < rels.size(); ++i) {
      for (std::size_t j = i + 1; j < rels.size() && j <= i + 6; ++j) {
        if (!(disco::classify_pair(rels[i], rels[j]) ==
              disco::oracle_classify(rels[i], rels[j]))) {
          return false;
        }
      }
    }
  }
  return seconds_since(t0) < 10.0;
}

// ---------------------------------------------------------------- 3 -----

bool planted_table_check() {
  std::vector<PlantSpec> specs;
  {
    // the default synth shape, every tabulated cell class nonzero
    PlantSpec s;
    s.cells = {{{0, 1, 1, 6}, {1, 1, 5, 1}, {1, 1, 5, 2}}};
    s.filler = {{RealizationType::Implicit, 2},
                {RealizationType::Explicit, 2},
                {RealizationType::AltLex, 1},
                {RealizationType::EntRel, 1},
                {RealizationType::Hypophora, 1},
                {RealizationType::NoRel, 1}};
    for (std::uint32_t docs : {1u, 2u, 3u, 7u}) {
      s.documents = docs;
      s.seed = docs;
      specs.push_back(s);
    }
  }
  std::mt19937_64 rng(31337);
  while (specs.size() < 24) {
    PlantSpec s;
    for (auto& row : s.cells)
      for (auto& cell : row) cell = rng() % 4;
    for (RealizationType t : disco::kAllRealizationTypes) {
      if (rng() % 2 == 0) s.filler[t] = rng() % 3;
    }
    s.documents = 1 + rng() % 5;
    s.seed = rng();
    specs.push_back(std::move(s));
  }

  for (const PlantSpec& spec : specs) {
    const disco::PlantedCorpus planted = disco::plant_corpus(spec);
    if (planted.expected.cells != spec.cells) return false;
    if (!(disco::dependency_table(planted.corpus) == planted.expected)) {
      return false;
    }

    // every adjacent pair is labeled, and the labels rebuild the table
    DependencyTable rebuilt;
    for (const disco::PlantedPair& p : planted.pairs) {
      const AnnotatedDocument& doc = planted.corpus.documents.at(p.doc_id);
      const DiscourseRelation* first = nullptr;
      const DiscourseRelation* second = nullptr;
      for (const DiscourseRelation& r : doc.relations) {
        if (r.id == p.first_id) first = &r;
        if (r.id == p.second_id) second = &r;
      }
      if (!first || !second) return false;
      if (!(disco::classify_pair(*first, *second) == p.label)) return false;
      switch (p.label.kind) {
        case PatternKind::OtherOverlap:
          ++rebuilt.other_overlap;
          break;
        case PatternKind::None:
          ++rebuilt.none;
          break;
        default:
          ++rebuilt.cells[disco::pattern_row(p.label.kind)]
                         [disco::pattern_col(first->realization,
                                             second->realization)];
      }
      ++rebuilt.adjacent_pairs;
    }
    if (!(rebuilt == planted.expected)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- 4 -----

bool self_agreement_check(const Corpus& corpus) {
  for (const auto& [t, v] : disco::realization_agreement(corpus, corpus)) {
    if (v != 1.0) return false;
  }
  for (int level = 1; level <= 3; ++level) {
    for (const auto& [t, v] : disco::sense_agreement(corpus, corpus, level)) {
      if (v != 1.0) return false;
    }
  }
  for (UnitMode mode : {UnitMode::Char, UnitMode::Word}) {
    for (bool trim : {false, true}) {
      const auto agree =
          disco::argument_span_agreement(corpus, corpus, mode, trim);
      if (agree.arg1.kappa != 1.0 || agree.arg2.kappa != 1.0) return false;
      for (const auto& [id, per_doc] :
           disco::argument_span_agreement_by_document(corpus, corpus, mode,
                                                      trim)) {
        if (per_doc.arg1.kappa != 1.0 || per_doc.arg2.kappa != 1.0) {
          return false;
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------- 5 -----

bool monotone_sense_check() {
  std::mt19937_64 rng(271828);
  const std::vector<std::string> l2 = {"Alpha", "Beta"};
  const std::vector<std::string> l3 = {"One", "Two"};
  const std::array<Level1Sense, 4> l1 = {
      Level1Sense::Expansion, Level1Sense::Contingency,
      Level1Sense::Comparison, Level1Sense::Temporal};
  const std::array<RealizationType, 3> types = {RealizationType::Explicit,
                                                RealizationType::Implicit,
                                                RealizationType::AltLex};

  auto random_path = [&]() {
    const Level1Sense s = l1[rng() % l1.size()];
    switch (rng() % 3) {
      case 0: return SensePath(s);
      case 1: return SensePath(s, l2[rng() % l2.size()]);
      default: return SensePath(s, l2[rng() % l2.size()], l3[rng() % l3.size()]);
    }
  };

  for (int trial = 0; trial < 60; ++trial) {
    AnnotatedDocument doc_a, doc_b;
    doc_a.doc_id = doc_b.doc_id = "d";
    doc_a.text = doc_b.text = std::u32string(1000, U'x');
    for (int i = 0; i < 20; ++i) {
      DiscourseRelation r;
      r.id = "r" + std::to_string(i);
      r.realization = types[i % types.size()];
      const CharOffset b = static_cast<CharOffset>(i) * 40;
      r.arg1_span = Span::canonical({{b, b + 10}});
      r.arg2_span = Span::canonical({{b + 12, b + 20}});
      if (r.realization != RealizationType::Implicit) {
        r.conn_span = Span::canonical({{b + 22, b + 23}});
      }
      r.conn_text = "ve";
      r.senses = {random_path()};
      if (rng() % 4 == 0) r.senses.push_back(random_path());
      doc_a.relations.push_back(r);
      if (rng() % 3 == 0) r.senses = {random_path()};  // perturb
      doc_b.relations.push_back(std::move(r));
    }
    Corpus a, b;
    a.documents.emplace("d", std::move(doc_a));
    b.documents.emplace("d", std::move(doc_b));

    std::map<RealizationType, double> prev;
    for (int level = 1; level <= 3; ++level) {
      const auto now = disco::sense_agreement(a, b, level);
      for (const auto& [t, v] : now) {
        const auto it = prev.find(t);
        if (it != prev.end() && v > it->second) return false;
      }
      prev = now;
    }
  }
  return true;
}

// ---------------------------------------------------------------- 6 -----

bool roundtrip_document(const AnnotatedDocument& doc) {
  const auto parsed = disco::parse_document(disco::encode_utf8(doc.text),
                                            disco::serialize_document(doc),
                                            doc.doc_id);
  return parsed.ok() && *parsed.document == doc;
}

bool roundtrip_check(const Corpus& fixture) {
  for (const auto& [id, doc] : fixture.documents) {
    if (!roundtrip_document(doc)) return false;
  }

  std::mt19937_64 rng(60902);
  int docs_checked = 0;
  while (docs_checked < 100) {
    PlantSpec spec;
    for (auto& row : spec.cells)
      for (auto& cell : row) cell = rng() % 3;
    spec.filler[RealizationType::EntRel] = rng() % 3;
    spec.filler[RealizationType::AltLex] = rng() % 3;
    spec.filler[RealizationType::NoRel] = rng() % 2;
    spec.documents = 1 + rng() % 3;
    spec.seed = rng();
    disco::PlantedCorpus planted = disco::plant_corpus(spec);
    for (auto& [id, doc] : planted.corpus.documents) {
      // exercise the optional columns too
      for (DiscourseRelation& r : doc.relations) {
        if (rng() % 4 == 0) r.link = rng() % 9;
        if (!r.senses.empty() && rng() % 3 == 0) {
          r.senses.push_back(
              SensePath(Level1Sense::Temporal, "Asynchronous", "Precedence"));
        }
      }
      if (!roundtrip_document(doc)) return false;
      ++docs_checked;
    }
  }
  return true;
}

// ---------------------------------------------------------------- 7 -----

struct CliCase {
  std::string name;    // golden file stem, e.g. "stats.tsv"
  std::string args;    // CLI arguments
};

std::vector<CliCase> golden_cases() {
  const std::string fixtures = DISCO_FIXTURE_DIR;
  const std::string a = "\"" + fixtures + "/corpus_a\"";
  const std::string b = "\"" + fixtures + "/corpus_b\"";
  std::vector<CliCase> cases;
  for (const std::string fmt : {"tsv", "md", "json"}) {
    cases.push_back({"stats." + fmt,
                     "stats --corpus " + a + " --format " + fmt});
    cases.push_back({"deps." + fmt, "deps --corpus " + a + " --format " + fmt});
    cases.push_back({"iaa." + fmt, "iaa --corpus " + a + " --corpus-b " + b +
                                       " --format " + fmt});
  }
  return cases;
}

bool golden_report_check(const Scratch& scratch) {
  const fs::path golden_dir = fs::path(DISCO_FIXTURE_DIR) / "golden";
  for (const CliCase& c : golden_cases()) {
    const fs::path out = scratch.dir / ("g_" + c.name);
    if (run_cli(c.args, out) != 0) {
      std::cerr << "  command failed: " << c.args << '\n';
      return false;
    }
    bool ok_out = false, ok_gold = false;
    const std::string actual = read_file(out, ok_out);
    const std::string expected = read_file(golden_dir / c.name, ok_gold);
    if (!ok_out || !ok_gold || actual != expected) {
      std::cerr << "  wrong or missing output for " << c.name << '\n';
      return false;
    }
  }

  // both fixture corpora must pass validation
  const std::string fixtures = DISCO_FIXTURE_DIR;
  for (const std::string dir : {"corpus_a", "corpus_b"}) {
    const fs::path out = scratch.dir / ("validate_" + dir);
    if (run_cli("validate --corpus \"" + fixtures + "/" + dir + "\"", out) !=
        0) {
      return false;
    }
  }

  // cross-check the JSON goldens' internal arithmetic
  bool ok = false;
  const auto stats =
      nlohmann::json::parse(read_file(golden_dir / "stats.json", ok));
  if (!ok) return false;
  std::uint64_t row_sum = 0;
  for (const auto& [name, row] : stats.at("distribution").at("rows").items()) {
    row_sum += row.at("total").get<std::uint64_t>();
  }
  if (row_sum != stats.at("distribution").at("grand_total").get<std::uint64_t>())
    return false;
  double pct_sum = 0.0;
  for (const auto& [name, v] : stats.at("summary").at("percentages").items()) {
    pct_sum += v.get<double>();
  }
  if (std::abs(pct_sum - 100.0) > 0.01) return false;

  const auto deps =
      nlohmann::json::parse(read_file(golden_dir / "deps.json", ok));
  if (!ok) return false;
  const auto& diag = deps.at("diagnostics");
  const std::uint64_t accounted =
      deps.at("column_totals").at("total").get<std::uint64_t>() +
      diag.at("other_overlap").get<std::uint64_t>() +
      diag.at("none").get<std::uint64_t>() +
      diag.at("linked_skipped").get<std::uint64_t>();
  return accounted == diag.at("adjacent_pairs").get<std::uint64_t>();
}

// ---------------------------------------------------------------- 8 -----

bool determinism_check(const Scratch& scratch) {
  for (const CliCase& c : golden_cases()) {
    const fs::path out1 = scratch.dir / ("d1_" + c.name);
    const fs::path out2 = scratch.dir / ("d2_" + c.name);
    if (run_cli(c.args, out1) != 0 || run_cli(c.args, out2) != 0) return false;
    bool ok1 = false, ok2 = false;
    if (read_file(out1, ok1) != read_file(out2, ok2) || !ok1 || !ok2) {
      return false;
    }
  }

  const fs::path s1 = scratch.dir / "synth1";
  const fs::path s2 = scratch.dir / "synth2";
  const fs::path log = scratch.dir / "synth.log";
  if (run_cli("synth --out \"" + s1.string() + "\" --seed 4242", log) != 0)
    return false;
  if (run_cli("synth --out \"" + s2.string() + "\" --seed 4242", log) != 0)
    return false;
  std::vector<fs::path> names;
  for (const auto& e : fs::directory_iterator(s1)) {
    names.push_back(e.path().filename());
  }
  if (names.empty()) return false;
  std::sort(names.begin(), names.end());
  for (const fs::path& name : names) {
    bool ok1 = false, ok2 = false;
    const std::string c1 = read_file(s1 / name, ok1);
    const std::string c2 = read_file(s2 / name, ok2);
    if (!ok1 || !ok2 || c1 != c2) return false;
  }
  return true;
}

}  // namespace

int main() {
  Scratch scratch;

  report(kappa_oracle_check(), "kappa agrees with the brute-force oracle");
  report(classifier_oracle_check(),
         "dependency classifier agrees with the brute-force oracle");
  report(planted_table_check(),
         "planted corpora reproduce their dependency tables exactly");

  disco::CorpusLoadResult fixture =
      disco::load_corpus(fs::path(DISCO_FIXTURE_DIR) / "corpus_a");
  const bool fixture_ok = fixture.ok();
  report(fixture_ok && self_agreement_check(*fixture.corpus),
         "self-comparison yields perfect agreement everywhere");
  report(monotone_sense_check(), "sense agreement is antitone in the level");
  report(fixture_ok && roundtrip_check(*fixture.corpus),
         "wire format round-trips losslessly");
  report(golden_report_check(scratch),
         "fixture reports match the golden files byte for byte");
  report(determinism_check(scratch), "CLI output is deterministic");

  if (g_failures > 0) {
    std::cout << g_failures << " acceptance criteria failed" << std::endl;
    return 1;
  }
  std::cout << "all acceptance criteria passed" << std::endl;
  return 0;
}
