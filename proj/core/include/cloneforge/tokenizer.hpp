#pragma once

// Byte-level BPE sub-tokenizer and model-ready sequences: [CLS]/[SEP]
// framing, label alignment, truncation and MLM masking.

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cloneforge/common.hpp"

namespace cloneforge::tokenizer {

class CorpusTooSmall : public Error {
 public:
  using Error::Error;
};

class SubwordModel {
 public:
  static constexpr std::int32_t kPad = 0;
  static constexpr std::int32_t kUnk = 1;
  static constexpr std::int32_t kCls = 2;
  static constexpr std::int32_t kSep = 3;
  static constexpr std::int32_t kMask = 4;
  static constexpr std::int32_t kFirstByte = 5;
  static constexpr std::size_t kSpecialCount = 5;
  static constexpr std::size_t kBaseSymbols = 256;

  /// A model with the byte alphabet and no merges.
  SubwordModel();

  /// All ids, specials included.
  std::size_t vocab_size() const { return pieces_.size(); }
  /// Byte symbols plus merged pieces; this is what the training target bounds.
  std::size_t learned_size() const { return pieces_.size() - kSpecialCount; }

  struct Merge {
    std::int32_t left;
    std::int32_t right;
    std::int32_t result;
  };
  /// In rank order. Two merges may share a result when their bytes coincide.
  const std::vector<Merge>& merges() const { return merges_; }
  /// Byte content of a sub-token (the bracketed name for specials).
  const std::string& piece(std::int32_t id) const { return pieces_.at(static_cast<std::size_t>(id)); }
  static bool is_special(std::int32_t id) { return id >= 0 && id < kFirstByte; }

  std::vector<std::int32_t> encode_token(std::string_view token) const;
  /// Concatenated bytes of non-special ids.
  std::string decode(std::span<const std::int32_t> ids) const;

  const std::string& corpus_hash() const { return corpus_hash_; }
  std::size_t target_vocab() const { return target_vocab_; }

  std::string to_text() const;
  static SubwordModel from_text(std::string_view text);
  void save(const std::filesystem::path& path) const;
  static SubwordModel load(const std::filesystem::path& path);

 private:
  friend SubwordModel train_subword(std::span<const std::vector<std::string>>, std::size_t,
                                    bool);
  std::int32_t add_merge(std::int32_t left, std::int32_t right);

  std::vector<std::string> pieces_;
  std::unordered_map<std::string, std::int32_t> piece_ids_;
  std::vector<Merge> merges_;
  std::unordered_map<std::uint64_t, std::uint32_t> rank_;
  std::string corpus_hash_;
  std::size_t target_vocab_ = 0;
};

inline constexpr std::size_t kDefaultVocabSize = 50000;
inline constexpr std::size_t kMaxSequenceLength = 512;
inline constexpr double kDefaultMaskRate = 0.15;

/// Learns merges until learned_size() reaches `target_vocab`. Pair-count ties
/// go to the lexicographically smallest (left, right) byte strings. When the
/// corpus runs out of pairs first the smaller model is returned, unless
/// `require_target` is set, in which case CorpusTooSmall is thrown.
SubwordModel train_subword(std::span<const std::vector<std::string>> corpus,
                           std::size_t target_vocab = kDefaultVocabSize,
                           bool require_target = false);

/// SHA-256 over the token streams (tokens newline-terminated, streams separated
/// by an empty line).
std::string corpus_hash(std::span<const std::vector<std::string>> corpus);

struct TokenizedSequence {
  std::vector<std::int32_t> ids;
  std::vector<std::int32_t> label_ids;
  std::vector<std::uint32_t> mask_positions;
  std::vector<std::int32_t> originals_at_mask;
  bool truncated = false;
  /// Source-token index of each position, -1 for [CLS]/[SEP]. Not serialized.
  std::vector<std::int32_t> token_index;

  /// Number of non-special positions.
  std::size_t content_length() const { return ids.size() < 2 ? 0 : ids.size() - 2; }
};

/// Frames the sub-tokens of `tokens` with [CLS]/[SEP]; each sub-token carries
/// its source token's label. Longer inputs keep their head: max_len - 1
/// positions, then [SEP].
TokenizedSequence encode(const SubwordModel& model, std::span<const std::string> tokens,
                         std::span<const std::int32_t> label_ids,
                         std::size_t max_len = kMaxSequenceLength);

/// max(1, round(rate * k)) for k >= 1 and rate > 0; zero otherwise.
std::size_t mask_count(std::size_t k, double rate);

/// Replaces mask_count(k, rate) uniformly chosen content positions by [MASK].
TokenizedSequence mask_for_mlm(TokenizedSequence seq, std::uint64_t rng_seed,
                               double rate = kDefaultMaskRate);

std::string to_json_line(const TokenizedSequence& seq);
TokenizedSequence from_json_line(std::string_view line);

}  // namespace cloneforge::tokenizer
