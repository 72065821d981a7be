#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "disco/annot_io.hpp"
#include "disco/deps.hpp"
#include "disco/iaa.hpp"
#include "disco/report.hpp"
#include "disco/stats.hpp"
#include "disco/testkit.hpp"
#include "disco/text.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFindings = 1;
constexpr int kExitIo = 2;

namespace fs = std::filesystem;

bool has_io_error(const std::vector<disco::ParseDiagnostic>& diags) {
  for (const auto& d : diags) {
    if (d.code == disco::DiagnosticCode::IoError) return true;
  }
  return false;
}

void print_diagnostics(const std::vector<disco::ParseDiagnostic>& diags,
                       std::ostream& os) {
  for (const auto& d : diags) os << disco::format_diagnostic(d) << '\n';
}

// Loads a corpus for an analysis subcommand; on failure prints the
// diagnostics to stderr and stores the exit code.
std::optional<disco::Corpus> load_or_fail(const std::string& dir,
                                          int& status) {
  disco::CorpusLoadResult res = disco::load_corpus(dir);
  if (!res.ok()) {
    print_diagnostics(res.diagnostics, std::cerr);
    status = has_io_error(res.diagnostics) ? kExitIo : kExitFindings;
    return std::nullopt;
  }
  status = kExitOk;
  return std::move(res.corpus);
}

int emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return kExitOk;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open output file: " << out_path << '\n';
    return kExitIo;
  }
  f << content;
  f.flush();
  if (!f) {
    std::cerr << "error writing output file: " << out_path << '\n';
    return kExitIo;
  }
  return kExitOk;
}

disco::ReportFormat format_of(const std::string& name) {
  return *disco::parse_report_format(name);  // choices pre-checked by CLI
}

int run_validate(const std::string& corpus_dir,
                 const std::string& inventory_path) {
  std::optional<disco::SenseInventory> inventory;
  if (!inventory_path.empty()) {
    disco::SenseInventory::LoadResult inv =
        disco::SenseInventory::load(inventory_path);
    if (!inv.diagnostics.empty()) {
      print_diagnostics(inv.diagnostics, std::cout);
      return has_io_error(inv.diagnostics) ? kExitIo : kExitFindings;
    }
    inventory = std::move(inv.inventory);
  }
  disco::CorpusLoadResult res = disco::load_corpus(
      corpus_dir, inventory ? &*inventory : nullptr);
  if (res.ok()) return kExitOk;
  print_diagnostics(res.diagnostics, std::cout);
  return has_io_error(res.diagnostics) ? kExitIo : kExitFindings;
}

int run_stats(const std::string& corpus_dir, const std::string& format,
              bool all_senses, const std::string& out_path) {
  int status = kExitOk;
  const auto corpus = load_or_fail(corpus_dir, status);
  if (!corpus) return status;
  const disco::DistributionTable table = disco::realization_by_sense_table(
      *corpus, all_senses ? disco::SenseCounting::EverySense
                          : disco::SenseCounting::FirstSense);
  return emit(disco::render_stats_report(table, disco::summary(*corpus),
                                         format_of(format)),
              out_path);
}

int run_deps(const std::string& corpus_dir, const std::string& format,
             const std::string& out_path) {
  int status = kExitOk;
  const auto corpus = load_or_fail(corpus_dir, status);
  if (!corpus) return status;
  return emit(disco::render_deps_report(disco::dependency_table(*corpus),
                                        format_of(format)),
              out_path);
}

int run_iaa(const std::string& corpus_dir, const std::string& corpus_b_dir,
            const std::string& format, int level, const std::string& unit,
            bool trim, const std::string& out_path) {
  int status = kExitOk;
  const auto corpus_a = load_or_fail(corpus_dir, status);
  if (!corpus_a) return status;
  const auto corpus_b = load_or_fail(corpus_b_dir, status);
  if (!corpus_b) return status;

  std::vector<int> levels;
  if (level == 0) {
    levels = {1, 2, 3};
  } else {
    levels = {level};
  }
  try {
    const disco::IaaReport report = disco::compute_iaa_report(
        *corpus_a, *corpus_b, levels, *disco::parse_unit_mode(unit), trim);
    return emit(disco::render_iaa_report(report, format_of(format)), out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFindings;
  }
}

// Default plant: every tabulated cell class nonzero plus a little filler
// of every realization type.
disco::PlantSpec default_plant_spec() {
  disco::PlantSpec spec;
  spec.cells = {{{0, 1, 1, 6}, {1, 1, 5, 1}, {1, 1, 5, 2}}};
  spec.filler = {{disco::RealizationType::Implicit, 2},
                 {disco::RealizationType::Explicit, 2},
                 {disco::RealizationType::AltLex, 1},
                 {disco::RealizationType::EntRel, 1},
                 {disco::RealizationType::Hypophora, 1},
                 {disco::RealizationType::NoRel, 1}};
  spec.documents = 3;
  return spec;
}

int run_synth(const std::string& out_dir, const std::string& plant_path,
              std::optional<std::uint64_t> seed) {
  disco::PlantSpec spec;
  if (plant_path.empty()) {
    spec = default_plant_spec();
  } else {
    std::ifstream f(plant_path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open plant spec: " << plant_path << '\n';
      return kExitIo;
    }
    try {
      spec = disco::plant_spec_from_json(
          nlohmann::json::parse(f, nullptr, true));
    } catch (const std::exception& e) {
      std::cerr << "bad plant spec: " << e.what() << '\n';
      return kExitFindings;
    }
  }
  if (seed) spec.seed = *seed;

  disco::PlantedCorpus planted;
  try {
    planted = disco::plant_corpus(spec);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFindings;
  }

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "cannot create " << out_dir << ": " << ec.message() << '\n';
    return kExitIo;
  }
  for (const auto& [doc_id, doc] : planted.corpus.documents) {
    const int txt = emit(disco::encode_utf8(doc.text),
                         (fs::path(out_dir) / (doc_id + ".txt")).string());
    if (txt != kExitOk) return txt;
    const int rel = emit(disco::serialize_document(doc),
                         (fs::path(out_dir) / (doc_id + ".rel")).string());
    if (rel != kExitOk) return rel;
  }
  const int gt =
      emit(disco::ground_truth_json(spec, planted).dump(2) + "\n",
           (fs::path(out_dir) / "ground_truth.json").string());
  if (gt != kExitOk) return gt;

  std::cout << "wrote " << planted.corpus.documents.size() << " documents, "
            << planted.pairs.size() << " adjacent pairs to " << out_dir
            << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discourse annotation toolkit: standoff relations, agreement "
               "metrics, dependency patterns"};
  app.require_subcommand(1);
  const auto format_choice =
      CLI::IsMember({"tsv", "md", "json"});

  std::string v_corpus, v_inventory;
  CLI::App* validate =
      app.add_subcommand("validate", "Check a corpus directory");
  validate->add_option("--corpus", v_corpus, "Corpus directory")->required();
  validate->add_option("--inventory", v_inventory,
                       "Allowed sense paths, one per line");

  std::string s_corpus, s_format = "tsv", s_out;
  bool s_all_senses = false;
  CLI::App* stats = app.add_subcommand(
      "stats", "Realization-by-sense distribution and summary");
  stats->add_option("--corpus", s_corpus, "Corpus directory")->required();
  stats->add_option("--format", s_format, "tsv|md|json")->check(format_choice);
  stats->add_flag("--all-senses", s_all_senses,
                  "Count every listed sense, not just the first");
  stats->add_option("--out", s_out, "Write the report to a file");

  std::string d_corpus, d_format = "tsv", d_out;
  CLI::App* deps =
      app.add_subcommand("deps", "Dependency patterns between adjacent "
                                 "connective-anchored relations");
  deps->add_option("--corpus", d_corpus, "Corpus directory")->required();
  deps->add_option("--format", d_format, "tsv|md|json")->check(format_choice);
  deps->add_option("--out", d_out, "Write the report to a file");

  std::string i_corpus, i_corpus_b, i_format = "tsv", i_unit = "char", i_out;
  int i_level = 0;
  bool i_trim = false;
  CLI::App* iaa = app.add_subcommand(
      "iaa", "Inter-annotator agreement between two parallel corpora");
  iaa->add_option("--corpus", i_corpus, "First annotator's corpus directory")
      ->required();
  iaa->add_option("--corpus-b", i_corpus_b,
                  "Second annotator's corpus directory")
      ->required();
  iaa->add_option("--format", i_format, "tsv|md|json")->check(format_choice);
  iaa->add_option("--level", i_level,
                  "Restrict sense agreement to one level (default: all)")
      ->check(CLI::Range(1, 3));
  iaa->add_option("--unitization", i_unit, "char|word")
      ->check(CLI::IsMember({"char", "word"}));
  iaa->add_flag("--trim-boundaries", i_trim,
                "Trim leading/trailing whitespace per span interval");
  iaa->add_option("--out", i_out, "Write the report to a file");

  std::string y_out, y_plant;
  std::uint64_t y_seed = 0;
  CLI::App* synth = app.add_subcommand(
      "synth", "Generate a synthetic corpus with planted dependencies");
  synth->add_option("--out", y_out, "Output corpus directory")->required();
  synth->add_option("--plant", y_plant, "Plant specification JSON file");
  synth->add_option("--seed", y_seed, "Override the generation seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitFindings;
  }

  if (validate->parsed()) return run_validate(v_corpus, v_inventory);
  if (stats->parsed()) return run_stats(s_corpus, s_format, s_all_senses, s_out);
  if (deps->parsed()) return run_deps(d_corpus, d_format, d_out);
  if (iaa->parsed()) {
    return run_iaa(i_corpus, i_corpus_b, i_format, i_level, i_unit, i_trim,
                   i_out);
  }
  if (synth->parsed()) {
    std::optional<std::uint64_t> seed;
    if (synth->count("--seed") > 0) seed = y_seed;
    return run_synth(y_out, y_plant, seed);
  }
  return kExitFindings;  // unreachable with require_subcommand(1)
}
