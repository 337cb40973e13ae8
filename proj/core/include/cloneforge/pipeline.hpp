#pragma once

// Run configuration, triplet augmentation, training batches and the
// end-to-end run that ties ingest, augmentation, tokenisation, toy training
// and evaluation together.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cloneforge/ast.hpp"
#include "cloneforge/clone_gen.hpp"
#include "cloneforge/corpus.hpp"
#include "cloneforge/deviant_gen.hpp"
#include "cloneforge/objective.hpp"
#include "cloneforge/tokenizer.hpp"

namespace cloneforge::pipeline {

/// Key=value run configuration. Defaults are the pre-training values the
/// method was published with; the toy block and split sizes are local.
struct RunConfig {
  std::uint64_t seed = 0;
  std::vector<Language> languages = {Language::C, Language::Cpp, Language::Java};
  std::size_t vocab_size = tokenizer::kDefaultVocabSize;
  std::size_t max_len = tokenizer::kMaxSequenceLength;
  double mask_rate = tokenizer::kDefaultMaskRate;
  double tau = objective::kDefaultTau;
  objective::Lambdas lambdas;
  std::size_t toy_dim = 64;
  std::size_t toy_steps = 500;
  double toy_lr = 0.01;
  std::size_t toy_batch = 32;
  /// Fraction of functions held out from tokenizer and toy training.
  double eval_fraction = 0.2;
  /// Clones per held-out function for MAP@R; also its R.
  std::size_t map_r = 2;
  std::size_t max_function_bytes = corpus::kDefaultMaxFunctionBytes;
  std::size_t threads = 0;

  /// Ordered key=value lines, one per setting.
  std::string to_text() const;
};

/// Parses key=value lines; '#' starts a comment. Unknown keys and malformed
/// values throw Error. Keys left out keep their defaults.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::filesystem::path& path);

/// Source tokens and rendered local-AST labels of one program.
struct LabeledText {
  std::string text;
  std::vector<std::string> tokens;
  std::vector<std::string> labels;
};

LabeledText label_text(Language language, std::string text);

struct TripletRecord {
  std::string id;
  Language language = Language::C;
  LabeledText original;
  LabeledText clone;
  LabeledText deviant;
  std::vector<clone::AppliedTransform> transforms;
  deviant::InjectedBug bug;
  std::uint64_t seed = 0;
};

std::string to_json_line(const TripletRecord& t);
TripletRecord triplet_from_json(std::string_view line);
void write_triplets(std::ostream& out, std::span<const TripletRecord> triplets);
std::vector<TripletRecord> read_triplets(std::istream& in);
std::vector<TripletRecord> read_triplets_file(const std::filesystem::path& path);

/// Per-function seed derived from the run seed and the function id, so a
/// function's triplet does not depend on its position in the corpus.
std::uint64_t function_seed(std::uint64_t run_seed, std::string_view id);

struct AugmentResult {
  std::vector<TripletRecord> triplets;
  /// Reason code -> number of skipped functions.
  std::map<std::string, std::size_t> skipped;
  std::size_t inputs = 0;

  std::string summary_json() const;
};

/// One triplet per function that admits both a clone and a deviant. Reason
/// codes: parse_error, no_clone, no_deviant, degenerate (some pair of texts identical).
AugmentResult augment(std::span<const ast::SourceFunction> functions, std::uint64_t seed,
                      std::span<const std::string> identifier_vocab = {}, std::size_t threads = 0);
AugmentResult augment(std::span<const corpus::CorpusFunction> functions, std::uint64_t seed,
                      std::span<const std::string> identifier_vocab = {}, std::size_t threads = 0);

/// Seeded shuffle of the triplet indices cut into batches of n; the short tail is dropped.
std::vector<std::vector<std::size_t>> batch_stream(std::size_t triplet_count, std::size_t n,
                                                   std::uint64_t seed);

/// Sub-token ids of the three programs, without labels or masking.
objective::ToyTriplet toy_triplet(const tokenizer::SubwordModel& model, const TripletRecord& t,
                                  std::size_t max_len = tokenizer::kMaxSequenceLength);

struct EndToEndInputs {
  /// Either directories to ingest ...
  std::vector<std::filesystem::path> roots;
  /// ... or an already ingested corpus.
  std::vector<corpus::CorpusFunction> corpus;
};

struct EndToEndReport {
  /// Everything that is a pure function of (corpus bytes, config), as JSON.
  std::string metrics_json;
  /// Full report: config echo, metrics and a separate timing block.
  std::string report_json;
};

EndToEndReport run_end_to_end(const RunConfig& config, const EndToEndInputs& inputs);

}  // namespace cloneforge::pipeline
