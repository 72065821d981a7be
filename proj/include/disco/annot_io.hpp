#ifndef DISCO_ANNOT_IO_HPP
#define DISCO_ANNOT_IO_HPP

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "disco/model.hpp"

namespace disco {

// Canonical standoff format, one document = two files:
//
//   <doc_id>.txt   UTF-8 text, LF newlines.
//   <doc_id>.rel   TSV, one relation per line, 8 columns:
//                  ID  TYPE  CONN_SPANS  CONN_TEXT  ARG1_SPANS  ARG2_SPANS
//                  SENSES  LINK
//
// Span syntax "start:end(,start:end)*" in canonical order (ascending,
// disjoint, non-adjacent); offsets count Unicode scalar values, 0-based,
// end-exclusive. "_" is the empty field. SENSES holds semicolon-separated
// dotted paths; LINK a non-negative integer. Lines starting with '#' and
// blank lines are skipped; the serializer emits one '#' header line.

enum class DiagnosticCode {
  MalformedLine,
  MalformedSpan,
  OffsetOutOfRange,
  UnknownType,
  BadSensePath,
  InvariantViolation,
  DuplicateId,
  BadLink,
  OrphanFile,
  BadText,
  IoError,
};

std::string_view to_string(DiagnosticCode c);

struct ParseDiagnostic {
  std::string file;
  std::size_t line = 1;  // 1-based
  DiagnosticCode code = DiagnosticCode::MalformedLine;
  std::string message;
};

// "file:line:Code: message"
std::string format_diagnostic(const ParseDiagnostic& d);

// Optional whitelist of allowed dotted sense paths (any depth), one per
// line; '#' comments and blank lines are skipped. When present, every
// parsed sense path must appear verbatim.
class SenseInventory {
 public:
  struct LoadResult;
  static LoadResult load(const std::filesystem::path& file);

  bool allows(const SensePath& p) const { return paths_.count(p.to_string()) > 0; }
  std::size_t size() const { return paths_.size(); }

 private:
  std::set<std::string> paths_;
};

// Out of line: the optional needs the class complete.
struct SenseInventory::LoadResult {
  std::optional<SenseInventory> inventory;
  std::vector<ParseDiagnostic> diagnostics;
};

struct DocumentParseResult {
  // Present iff diagnostics is empty.
  std::optional<AnnotatedDocument> document;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

// Parses one document from raw file contents. Collects every diagnostic it
// can find rather than stopping at the first; any diagnostic suppresses the
// document. Token order is input line order.
DocumentParseResult parse_document(std::string_view text_content,
                                   std::string_view rel_content,
                                   const std::string& doc_id,
                                   const SenseInventory* inventory = nullptr);

// Renders the .rel side of a document. parse_document() over the same text
// reproduces the document field-for-field.
std::string serialize_document(const AnnotatedDocument& d);

struct CorpusLoadResult {
  std::optional<Corpus> corpus;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

// Loads every <doc_id>.txt / <doc_id>.rel pair in `dir` (non-recursive,
// other files ignored). A .txt or .rel without its counterpart is an
// OrphanFile diagnostic. An empty directory is an empty corpus.
CorpusLoadResult load_corpus(const std::filesystem::path& dir,
                             const SenseInventory* inventory = nullptr);

// Wire form of a span list ("_" when empty).
std::string format_span_field(const Span& s);

}  // namespace disco

#endif
