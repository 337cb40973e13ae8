#pragma once

// Per-token local AST labels ("terminal#parent") and their vocabulary.

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cloneforge/ast.hpp"

namespace cloneforge::labels {

struct AstLabel {
  std::string terminal_type;
  std::string parent_type;
  std::string rendered() const { return terminal_type + "#" + parent_type; }
};

/// One label per token of ast::flatten_tokens, in the same order.
std::vector<AstLabel> label_sequence(const ast::SyntaxTree& tree);

inline constexpr std::string_view kPadLabel = "[PAD]";
inline constexpr std::string_view kUnkLabel = "[UNK]";
inline constexpr std::string_view kClsLabel = "[CLS_LABEL]";
inline constexpr std::string_view kSepLabel = "[SEP_LABEL]";

class LabelVocab {
 public:
  static constexpr std::int32_t kPad = 0;
  static constexpr std::int32_t kUnk = 1;
  static constexpr std::int32_t kCls = 2;
  static constexpr std::int32_t kSep = 3;

  LabelVocab();
  /// Specials followed by `labels` in lexicographic order (duplicates dropped).
  explicit LabelVocab(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  /// Id of a rendered label; unknown labels map to kUnk.
  std::int32_t id_of(std::string_view label) const;
  bool contains(std::string_view label) const { return ids_.contains(label); }
  const std::string& label_of(std::int32_t id) const { return labels_.at(static_cast<std::size_t>(id)); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::vector<std::int32_t> encode(std::span<const AstLabel> labels) const;

  /// One label per line; the line number is the id.
  std::string to_text() const;
  static LabelVocab from_text(std::string_view text);
  void save(const std::filesystem::path& path) const;
  static LabelVocab load(const std::filesystem::path& path);

 private:
  std::vector<std::string> labels_;
  std::map<std::string, std::int32_t, std::less<>> ids_;
};

/// Exhaustive scan: the vocabulary holds every label of every function.
LabelVocab build_label_vocab(std::span<const ast::SourceFunction> corpus);

}  // namespace cloneforge::labels
