#pragma once

// Repository walking, function extraction, exact-duplicate removal and the
// identifier vocabulary used for renaming.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cloneforge/ast.hpp"
#include "cloneforge/common.hpp"

namespace cloneforge::corpus {

inline constexpr std::size_t kDefaultMaxFunctionBytes = 100 * 1024;
inline constexpr std::string_view kDedupPolicy = "sha256-whitespace-normalized-v1";

struct IngestOptions {
  std::vector<Language> languages = {Language::C, Language::Cpp, Language::Java};
  std::size_t max_function_bytes = kDefaultMaxFunctionBytes;
  /// 0 picks the hardware concurrency.
  std::size_t threads = 0;
};

struct CorpusFunction {
  ast::SourceFunction function;
  /// Root directory name joined with the path below it, '/'-separated.
  std::string path;
  Span byte_span;
};

struct SourceStats {
  std::string root;
  Language language = Language::C;
  std::size_t files = 0;
  std::size_t functions = 0;
};

/// Every extracted function lands in exactly one of emitted / duplicates /
/// oversized / parse_errors.
struct IngestCounts {
  std::size_t files = 0;
  std::size_t unreadable_files = 0;
  std::size_t extracted = 0;
  std::size_t emitted = 0;
  std::size_t duplicates = 0;
  std::size_t oversized = 0;
  std::size_t parse_errors = 0;
};

struct CorpusManifest {
  std::vector<SourceStats> sources;
  std::string dedup_policy{kDedupPolicy};
  std::size_t identifier_vocab_size = 0;
  std::size_t max_function_bytes = kDefaultMaxFunctionBytes;
  IngestCounts counts;
  /// SHA-256 of the corpus JSON-lines bytes.
  std::string corpus_sha256;

  std::string to_json() const;
};

struct IngestResult {
  std::vector<CorpusFunction> functions;
  CorpusManifest manifest;
  /// Per-file problems (unreadable files, skipped functions), in path order.
  std::vector<std::string> log;
};

/// Walks every root recursively, keeps files whose extension matches one of
/// the requested languages and emits their top-level functions in (path, byte
/// offset) order. A function is skipped when it does not re-parse on its own,
/// exceeds the size limit, or repeats an earlier body after whitespace
/// normalisation.
IngestResult ingest(std::span<const std::filesystem::path> roots, const IngestOptions& options = {});

/// Runs of whitespace collapsed to one space, ends trimmed.
std::string normalize_whitespace(std::string_view text);

struct IdentifierCount {
  std::string name;
  std::uint64_t count = 0;
};

/// Every `identifier` terminal, most frequent first, ties by name.
std::vector<IdentifierCount> build_identifier_vocab(std::span<const ast::SourceFunction> corpus);
std::vector<IdentifierCount> build_identifier_vocab(std::span<const CorpusFunction> corpus);

/// Names only, in vocabulary order.
std::vector<std::string> identifier_names(std::span<const IdentifierCount> vocab);

/// "name<TAB>count" lines.
void write_identifier_vocab(std::ostream& out, std::span<const IdentifierCount> vocab);
std::vector<IdentifierCount> read_identifier_vocab(std::istream& in);

/// JSON-lines {id, language, path, byte_span, text}.
std::string to_json_line(const CorpusFunction& fn);
CorpusFunction corpus_function_from_json(std::string_view line);
void write_corpus(std::ostream& out, std::span<const CorpusFunction> corpus);
std::vector<CorpusFunction> read_corpus(std::istream& in);
std::vector<CorpusFunction> read_corpus_file(const std::filesystem::path& path);

}  // namespace cloneforge::corpus
