#include "disco/annot_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "disco/text.hpp"

namespace disco {

namespace {

constexpr std::string_view kEmptyField = "_";
constexpr std::string_view kHeader =
    "# ID\tTYPE\tCONN_SPANS\tCONN_TEXT\tARG1_SPANS\tARG2_SPANS\tSENSES\tLINK";

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t begin = 0;
  while (true) {
    std::size_t pos = s.find(sep, begin);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(begin));
      break;
    }
    out.push_back(s.substr(begin, pos - begin));
    begin = pos + 1;
  }
  return out;
}

std::optional<std::uint32_t> parse_u32(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

class LineParser {
 public:
  LineParser(std::string file, std::size_t line,
             std::vector<ParseDiagnostic>& diagnostics)
      : file_(std::move(file)), line_(line), diagnostics_(diagnostics) {}

  void add(DiagnosticCode code, std::string message) {
    diagnostics_.push_back({file_, line_, code, std::move(message)});
    failed_ = true;
  }

  bool failed() const { return failed_; }

  // Accepts only canonical span lists so that the wire form is unique per
  // charset and round-trips byte-exactly.
  Span parse_span_field(std::string_view field, std::string_view column,
                        std::size_t text_len) {
    if (field == kEmptyField) return {};
    std::vector<CharInterval> intervals;
    for (std::string_view part : split(field, ',')) {
      auto colon = part.find(':');
      if (colon == std::string_view::npos) {
        add(DiagnosticCode::MalformedSpan,
            std::string(column) + ": missing ':' in '" + std::string(part) + "'");
        return {};
      }
      auto start = parse_u32(part.substr(0, colon));
      auto end = parse_u32(part.substr(colon + 1));
      if (!start || !end) {
        add(DiagnosticCode::MalformedSpan,
            std::string(column) + ": non-numeric offset in '" +
                std::string(part) + "'");
        return {};
      }
      if (*start >= *end) {
        add(DiagnosticCode::MalformedSpan,
            std::string(column) + ": empty interval '" + std::string(part) + "'");
        return {};
      }
      intervals.push_back({*start, *end});
    }
    if (!Span::is_canonical(intervals)) {
      add(DiagnosticCode::MalformedSpan,
          std::string(column) +
              ": intervals must be ascending, disjoint and non-adjacent in '" +
              std::string(field) + "'");
      return {};
    }
    if (intervals.back().end > text_len) {
      add(DiagnosticCode::OffsetOutOfRange,
          std::string(column) + ": offset " +
              std::to_string(intervals.back().end) + " exceeds text length " +
              std::to_string(text_len));
      return {};
    }
    return Span::canonical(std::move(intervals));
  }

 private:
  std::string file_;
  std::size_t line_;
  std::vector<ParseDiagnostic>& diagnostics_;
  bool failed_ = false;
};

std::string rel_file_name(const std::string& doc_id) { return doc_id + ".rel"; }
std::string txt_file_name(const std::string& doc_id) { return doc_id + ".txt"; }

}  // namespace

std::string_view to_string(DiagnosticCode c) {
  switch (c) {
    case DiagnosticCode::MalformedLine: return "MalformedLine";
    case DiagnosticCode::MalformedSpan: return "MalformedSpan";
    case DiagnosticCode::OffsetOutOfRange: return "OffsetOutOfRange";
    case DiagnosticCode::UnknownType: return "UnknownType";
    case DiagnosticCode::BadSensePath: return "BadSensePath";
    case DiagnosticCode::InvariantViolation: return "InvariantViolation";
    case DiagnosticCode::DuplicateId: return "DuplicateId";
    case DiagnosticCode::BadLink: return "BadLink";
    case DiagnosticCode::OrphanFile: return "OrphanFile";
    case DiagnosticCode::BadText: return "BadText";
    case DiagnosticCode::IoError: return "IoError";
  }
  return "?";
}

std::string format_diagnostic(const ParseDiagnostic& d) {
  std::ostringstream out;
  out << d.file << ':' << d.line << ':' << to_string(d.code) << ": "
      << d.message;
  return out.str();
}

SenseInventory::LoadResult SenseInventory::load(
    const std::filesystem::path& file) {
  LoadResult result;
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    result.diagnostics.push_back({file.string(), 1, DiagnosticCode::IoError,
                                  "cannot open inventory file"});
    return result;
  }
  SenseInventory inv;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::string error;
    auto path = SensePath::parse(line, &error);
    if (!path) {
      result.diagnostics.push_back(
          {file.string(), lineno, DiagnosticCode::BadSensePath, error});
      continue;
    }
    inv.paths_.insert(path->to_string());
  }
  if (result.diagnostics.empty()) result.inventory = std::move(inv);
  return result;
}

DocumentParseResult parse_document(std::string_view text_content,
                                   std::string_view rel_content,
                                   const std::string& doc_id,
                                   const SenseInventory* inventory) {
  DocumentParseResult result;
  auto& diags = result.diagnostics;

  Utf8Decoded decoded = decode_utf8(text_content);
  if (!decoded.ok()) {
    diags.push_back({txt_file_name(doc_id), decoded.error_line,
                     DiagnosticCode::BadText,
                     "invalid UTF-8 at byte " +
                         std::to_string(*decoded.error_byte)});
    return result;
  }
  const std::size_t text_len = decoded.text.size();
  const std::string rel_file = rel_file_name(doc_id);

  AnnotatedDocument doc;
  doc.doc_id = doc_id;
  doc.text = std::move(decoded.text);

  std::map<std::string, std::size_t> seen_ids;  // id -> first line
  std::size_t lineno = 0;
  for (std::string_view raw : split(rel_content, '\n')) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (raw.empty() || raw[0] == '#') continue;

    LineParser lp(rel_file, lineno, diags);
    auto fields = split(raw, '\t');
    if (fields.size() != 8) {
      lp.add(DiagnosticCode::MalformedLine,
             "expected 8 tab-separated columns, found " +
                 std::to_string(fields.size()));
      continue;
    }

    DiscourseRelation rel;
    rel.id = std::string(fields[0]);
    if (rel.id.empty()) {
      lp.add(DiagnosticCode::MalformedLine, "empty ID column");
    } else {
      auto [it, inserted] = seen_ids.emplace(rel.id, lineno);
      if (!inserted) {
        lp.add(DiagnosticCode::DuplicateId,
               "id '" + rel.id + "' already used on line " +
                   std::to_string(it->second));
      }
    }

    auto type = parse_realization_type(fields[1]);
    if (type) {
      rel.realization = *type;
    } else {
      lp.add(DiagnosticCode::UnknownType,
             "unknown realization type '" + std::string(fields[1]) + "'");
    }

    rel.conn_span = lp.parse_span_field(fields[2], "CONN_SPANS", text_len);
    if (fields[3] != kEmptyField) rel.conn_text = std::string(fields[3]);
    rel.arg1_span = lp.parse_span_field(fields[4], "ARG1_SPANS", text_len);
    rel.arg2_span = lp.parse_span_field(fields[5], "ARG2_SPANS", text_len);

    if (fields[6] != kEmptyField) {
      for (std::string_view dotted : split(fields[6], ';')) {
        std::string error;
        auto sense = SensePath::parse(dotted, &error);
        if (!sense) {
          lp.add(DiagnosticCode::BadSensePath, error);
          continue;
        }
        if (inventory && !inventory->allows(*sense)) {
          lp.add(DiagnosticCode::BadSensePath,
                 "sense '" + sense->to_string() + "' not in inventory");
          continue;
        }
        rel.senses.push_back(std::move(*sense));
      }
    }

    if (fields[7] != kEmptyField) {
      auto link = parse_u32(fields[7]);
      if (link) {
        rel.link = *link;
      } else {
        lp.add(DiagnosticCode::BadLink,
               "LINK must be a non-negative integer or '_', got '" +
                   std::string(fields[7]) + "'");
      }
    }

    if (lp.failed()) continue;

    bool invariant_ok = true;
    for (const Violation& v : validate_relation(rel, text_len)) {
      diags.push_back({rel_file, lineno, DiagnosticCode::InvariantViolation,
                       std::string(to_string(v.code)) + " (" + v.field + "): " +
                           v.message});
      invariant_ok = false;
    }
    if (invariant_ok) doc.relations.push_back(std::move(rel));
  }

  if (diags.empty()) result.document = std::move(doc);
  return result;
}

std::string format_span_field(const Span& s) { return to_string(s); }

std::string serialize_document(const AnnotatedDocument& d) {
  std::ostringstream out;
  out << kHeader << '\n';
  for (const DiscourseRelation& r : d.relations) {
    out << r.id << '\t' << to_string(r.realization) << '\t'
        << format_span_field(r.conn_span) << '\t'
        << (r.conn_text.empty() ? std::string(kEmptyField) : r.conn_text)
        << '\t' << format_span_field(r.arg1_span) << '\t'
        << format_span_field(r.arg2_span) << '\t';
    if (r.senses.empty()) {
      out << kEmptyField;
    } else {
      for (std::size_t i = 0; i < r.senses.size(); ++i) {
        if (i) out << ';';
        out << r.senses[i].to_string();
      }
    }
    out << '\t';
    if (r.link) {
      out << *r.link;
    } else {
      out << kEmptyField;
    }
    out << '\n';
  }
  return out.str();
}

namespace {

std::optional<std::string> read_file(const std::filesystem::path& p,
                                     std::string* error) {
  std::ifstream in(p, std::ios::binary);
  if (!in) {
    *error = "cannot open file";
    return std::nullopt;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    *error = "read failure";
    return std::nullopt;
  }
  return buf.str();
}

}  // namespace

CorpusLoadResult load_corpus(const std::filesystem::path& dir,
                             const SenseInventory* inventory) {
  CorpusLoadResult result;
  auto& diags = result.diagnostics;

  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    diags.push_back({dir.string(), 1, DiagnosticCode::IoError,
                     "not a directory"});
    return result;
  }

  struct DocFiles {
    std::optional<std::filesystem::path> txt;
    std::optional<std::filesystem::path> rel;
  };
  std::map<std::string, DocFiles> found;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (!entry.is_regular_file()) continue;
    const auto& p = entry.path();
    if (p.extension() == ".txt") {
      found[p.stem().string()].txt = p;
    } else if (p.extension() == ".rel") {
      found[p.stem().string()].rel = p;
    }
  }
  if (ec) {
    diags.push_back(
        {dir.string(), 1, DiagnosticCode::IoError, ec.message()});
    return result;
  }

  Corpus corpus;
  for (const auto& [doc_id, files] : found) {
    if (!files.txt || !files.rel) {
      const auto& present = files.txt ? *files.txt : *files.rel;
      diags.push_back({present.string(), 1, DiagnosticCode::OrphanFile,
                       std::string("missing counterpart .") +
                           (files.txt ? "rel" : "txt") + " file"});
      continue;
    }
    std::string error;
    auto text = read_file(*files.txt, &error);
    if (!text) {
      diags.push_back(
          {files.txt->string(), 1, DiagnosticCode::IoError, error});
      continue;
    }
    auto rel = read_file(*files.rel, &error);
    if (!rel) {
      diags.push_back(
          {files.rel->string(), 1, DiagnosticCode::IoError, error});
      continue;
    }
    auto parsed = parse_document(*text, *rel, doc_id, inventory);
    if (!parsed.ok()) {
      // Re-point diagnostics at the real paths.
      for (ParseDiagnostic& d : parsed.diagnostics) {
        if (d.file == doc_id + ".rel") {
          d.file = files.rel->string();
        } else if (d.file == doc_id + ".txt") {
          d.file = files.txt->string();
        }
        diags.push_back(std::move(d));
      }
      continue;
    }
    corpus.documents.emplace(doc_id, std::move(*parsed.document));
  }

  if (diags.empty()) result.corpus = std::move(corpus);
  return result;
}

}  // namespace disco
