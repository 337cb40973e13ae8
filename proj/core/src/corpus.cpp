#include "cloneforge/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "cloneforge/syntax.hpp"
#include "parallel.hpp"
#include "json.hpp"

namespace cloneforge::corpus {
namespace fs = std::filesystem;
namespace {

struct SourceFile {
  fs::path full;
  std::string display;  // root name + relative path
  std::size_t root = 0;
  Language language = Language::C;
};

struct Candidate {
  CorpusFunction fn;
  bool oversized = false;
  bool parse_error = false;
};

struct FileResult {
  bool readable = true;
  std::vector<Candidate> candidates;
};

std::vector<SourceFile> discover(std::span<const fs::path> roots, const IngestOptions& options) {
  std::vector<SourceFile> files;
  for (std::size_t r = 0; r < roots.size(); ++r) {
    const fs::path& root = roots[r];
    if (!fs::is_directory(root)) throw Error("not a readable directory: " + root.string());
    std::string root_name = fs::weakly_canonical(root).filename().generic_string();
    if (root_name.empty()) root_name = "root";
    std::error_code ec;
    for (fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec), end;
         it != end; it.increment(ec)) {
      if (ec) break;
      if (!it->is_regular_file(ec)) continue;
      const auto lang = language_from_extension(it->path());
      if (!lang || std::find(options.languages.begin(), options.languages.end(), *lang) ==
                       options.languages.end()) {
        continue;
      }
      files.push_back({it->path(),
                       root_name + "/" + fs::relative(it->path(), root).generic_string(), r, *lang});
    }
  }
  std::sort(files.begin(), files.end(), [](const SourceFile& a, const SourceFile& b) {
    return a.display != b.display ? a.display < b.display : a.root < b.root;
  });
  return files;
}

FileResult process(const SourceFile& file, const IngestOptions& options) {
  FileResult out;
  std::ifstream in(file.full, std::ios::binary);
  if (!in) {
    out.readable = false;
    return out;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  const ast::SyntaxTree tree = ast::parse_lenient(file.language, ss.str());
  for (const ast::AstNode* fn : tree.functions()) {
    Candidate c;
    c.fn.path = file.display;
    c.fn.byte_span = fn->span;
    c.fn.function.id = file.display + ":" + std::to_string(fn->span.start);
    c.fn.function.language = file.language;
    c.fn.function.text = std::string(tree.text(*fn));
    if (c.fn.function.text.size() > options.max_function_bytes) {
      c.oversized = true;
    } else {
      try {
        ast::parse(file.language, c.fn.function.text);
      } catch (const ast::ParseError&) {
        c.parse_error = true;
      }
    }
    out.candidates.push_back(std::move(c));
  }
  return out;
}

template <typename Fns, typename Get>
std::vector<IdentifierCount> count_identifiers(const Fns& fns, Get get) {
  std::map<std::string, std::uint64_t> counts;
  for (const auto& item : fns) {
    const ast::SourceFunction& fn = get(item);
    const ast::SyntaxTree tree = ast::parse_lenient(fn.language, fn.text);
    for (const ast::Token& t : ast::flatten_tokens(tree)) {
      if (t.kind == "identifier") ++counts[std::string(t.text)];
    }
  }
  std::vector<IdentifierCount> out;
  for (auto& [name, n] : counts) out.push_back({name, n});
  std::stable_sort(out.begin(), out.end(),
                   [](const IdentifierCount& a, const IdentifierCount& b) { return a.count > b.count; });
  return out;
}

}  // namespace

std::string normalize_whitespace(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += c;
  }
  return out;
}

IngestResult ingest(std::span<const fs::path> roots, const IngestOptions& options) {
  const std::vector<SourceFile> files = discover(roots, options);
  std::vector<FileResult> results(files.size());
  detail::parallel_for(files.size(), options.threads,
               [&](std::size_t i) { results[i] = process(files[i], options); });

  IngestResult out;
  CorpusManifest& m = out.manifest;
  m.max_function_bytes = options.max_function_bytes;
  m.counts.files = files.size();
  std::unordered_set<std::string> seen;
  std::map<std::pair<std::size_t, Language>, SourceStats> per_source;
  for (std::size_t i = 0; i < files.size(); ++i) {
    const SourceFile& f = files[i];
    SourceStats& s = per_source[{f.root, f.language}];
    s.root = f.display.substr(0, f.display.find('/'));
    s.language = f.language;
    ++s.files;
    if (!results[i].readable) {
      ++m.counts.unreadable_files;
      out.log.push_back(f.display + ": unreadable, skipped");
      continue;
    }
    for (Candidate& c : results[i].candidates) {
      ++m.counts.extracted;
      if (c.oversized) {
        ++m.counts.oversized;
        out.log.push_back(c.fn.function.id + ": larger than " +
                          std::to_string(options.max_function_bytes) + " bytes, skipped");
        continue;
      }
      if (c.parse_error) {
        ++m.counts.parse_errors;
        out.log.push_back(c.fn.function.id + ": does not parse on its own, skipped");
        continue;
      }
      if (!seen.insert(sha256_hex(normalize_whitespace(c.fn.function.text))).second) {
        ++m.counts.duplicates;
        continue;
      }
      ++m.counts.emitted;
      ++s.functions;
      out.functions.push_back(std::move(c.fn));
    }
  }
  for (auto& [key, s] : per_source) {
    if (s.functions > 0) m.sources.push_back(std::move(s));
  }
  m.identifier_vocab_size = build_identifier_vocab(out.functions).size();
  std::ostringstream corpus_bytes;
  write_corpus(corpus_bytes, out.functions);
  m.corpus_sha256 = sha256_hex(corpus_bytes.str());
  return out;
}

std::string CorpusManifest::to_json() const {
  nlohmann::ordered_json j;
  j["sources"] = nlohmann::json::array();
  for (const SourceStats& s : sources) {
    nlohmann::ordered_json e;
    e["root"] = s.root;
    e["language"] = std::string(to_string(s.language));
    e["files"] = s.files;
    e["functions"] = s.functions;
    j["sources"].push_back(e);
  }
  j["dedup"] = dedup_policy;
  j["identifier_vocab_size"] = identifier_vocab_size;
  j["max_function_bytes"] = max_function_bytes;
  j["counts"] = {{"files", counts.files},
                 {"unreadable_files", counts.unreadable_files},
                 {"extracted", counts.extracted},
                 {"emitted", counts.emitted},
                 {"duplicates", counts.duplicates},
                 {"oversized", counts.oversized},
                 {"parse_errors", counts.parse_errors}};
  j["corpus_sha256"] = corpus_sha256;
  return j.dump(2) + "\n";
}

std::vector<IdentifierCount> build_identifier_vocab(std::span<const ast::SourceFunction> corpus) {
  return count_identifiers(corpus, [](const ast::SourceFunction& f) -> const ast::SourceFunction& {
    return f;
  });
}

std::vector<IdentifierCount> build_identifier_vocab(std::span<const CorpusFunction> corpus) {
  return count_identifiers(corpus, [](const CorpusFunction& f) -> const ast::SourceFunction& {
    return f.function;
  });
}

std::vector<std::string> identifier_names(std::span<const IdentifierCount> vocab) {
  std::vector<std::string> out;
  out.reserve(vocab.size());
  for (const IdentifierCount& c : vocab) out.push_back(c.name);
  return out;
}

void write_identifier_vocab(std::ostream& out, std::span<const IdentifierCount> vocab) {
  for (const IdentifierCount& c : vocab) out << c.name << '\t' << c.count << '\n';
}

std::vector<IdentifierCount> read_identifier_vocab(std::istream& in) {
  std::vector<IdentifierCount> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) throw Error("malformed identifier vocabulary line: " + line);
    try {
      out.push_back({line.substr(0, tab), std::stoull(line.substr(tab + 1))});
    } catch (const std::logic_error&) {
      throw Error("malformed identifier vocabulary line: " + line);
    }
  }
  return out;
}

std::string to_json_line(const CorpusFunction& fn) {
  nlohmann::ordered_json j;
  j["id"] = fn.function.id;
  j["language"] = std::string(to_string(fn.function.language));
  j["path"] = fn.path;
  j["byte_span"] = {fn.byte_span.start, fn.byte_span.end};
  j["text"] = fn.function.text;
  return j.dump();
}

CorpusFunction corpus_function_from_json(std::string_view line) {
  CorpusFunction fn;
  try {
    const auto j = nlohmann::json::parse(line);
    fn.function.id = j.at("id").get<std::string>();
    const auto lang = language_from_name(j.at("language").get<std::string>());
    if (!lang) throw Error("unknown language in corpus record");
    fn.function.language = *lang;
    fn.function.text = j.at("text").get<std::string>();
    if (j.contains("path")) fn.path = j.at("path").get<std::string>();
    if (j.contains("byte_span")) {
      fn.byte_span = {j.at("byte_span").at(0).get<std::size_t>(), j.at("byte_span").at(1).get<std::size_t>()};
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed corpus record: ") + e.what());
  }
  return fn;
}

void write_corpus(std::ostream& out, std::span<const CorpusFunction> corpus) {
  for (const CorpusFunction& fn : corpus) out << to_json_line(fn) << '\n';
}

std::vector<CorpusFunction> read_corpus(std::istream& in) {
  std::vector<CorpusFunction> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(corpus_function_from_json(line));
    } catch (const Error& e) {
      throw Error("corpus line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<CorpusFunction> read_corpus_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  return read_corpus(in);
}

}  // namespace cloneforge::corpus
