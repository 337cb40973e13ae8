#pragma once

// Typed syntax trees for C, C++ and Java functions.
//
// Trees are produced by the vendored tree-sitter grammars and copied into an
// owned, immutable node arena, so a SyntaxTree can be shared read-only across
// threads once constructed. Node kinds are the grammar's node-type names
// verbatim ("function_definition", "primitive_type", ";", ...).

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cloneforge/common.hpp"

namespace cloneforge::ast {

struct AstNode {
  std::string_view kind;
  /// Field name under which the parent holds this node ("condition", "body", ...); empty if none.
  std::string_view field;
  Span span;
  std::vector<const AstNode*> children;
  const AstNode* parent = nullptr;
  bool is_terminal = false;
  bool is_named = false;
  bool is_error = false;
  bool is_missing = false;
  /// Preorder position inside the owning tree.
  std::uint32_t index = 0;

  bool is(std::string_view k) const { return kind == k; }
  /// First child stored under `field_name`, or nullptr.
  const AstNode* child(std::string_view field_name) const;
  std::vector<const AstNode*> children_by_field(std::string_view field_name) const;
  std::vector<const AstNode*> named_children() const;
  /// True if `other` is this node or one of its descendants.
  bool encloses(const AstNode& other) const;
};

/// One function or method as it appears in the corpus.
struct SourceFunction {
  std::string id;
  Language language = Language::C;
  std::string text;
};

class ParseError : public Error {
 public:
  ParseError(std::string message, std::vector<Span> spans)
      : Error(std::move(message)), error_spans(std::move(spans)) {}
  std::vector<Span> error_spans;
};

class SyntaxTree {
 public:
  SyntaxTree(SyntaxTree&&) noexcept = default;
  SyntaxTree& operator=(SyntaxTree&&) noexcept = default;
  SyntaxTree(const SyntaxTree&) = delete;
  SyntaxTree& operator=(const SyntaxTree&) = delete;

  const AstNode& root() const { return nodes_.front(); }
  const std::string& source() const { return source_; }
  Language language() const { return language_; }
  std::string_view text(const AstNode& node) const;
  std::string_view text(Span span) const;

  bool has_error() const { return !error_spans_.empty(); }
  const std::vector<Span>& error_spans() const { return error_spans_; }

  /// All nodes in preorder; nodes()[n.index] == n.
  std::span<const AstNode> nodes() const { return nodes_; }
  /// The first function definition / method / constructor in the tree, or nullptr.
  const AstNode* function() const;
  /// Every top-level function definition (methods of nested classes excluded).
  std::vector<const AstNode*> functions() const;

 private:
  SyntaxTree() = default;
  friend SyntaxTree parse_lenient(Language, std::string);

  std::string source_;
  Language language_ = Language::C;
  std::vector<AstNode> nodes_;
  std::vector<Span> error_spans_;
};

/// Parses `text`; never throws on syntax errors (see has_error()).
SyntaxTree parse_lenient(Language language, std::string text);

/// Parses and rejects any tree containing ERROR or MISSING nodes.
/// Throws ParseError listing the (merged) error regions.
SyntaxTree parse(Language language, std::string text);
SyntaxTree parse(const SourceFunction& fn);

struct Token {
  std::string_view text;
  std::string_view kind;
  Span span;
  const AstNode* node = nullptr;
};

bool is_comment(const AstNode& node);

/// Terminals in source order, comments excluded. Views point into `tree`.
std::vector<Token> flatten_tokens(const SyntaxTree& tree);

/// Convenience: texts of flatten_tokens.
std::vector<std::string> token_texts(const SyntaxTree& tree);

}  // namespace cloneforge::ast
