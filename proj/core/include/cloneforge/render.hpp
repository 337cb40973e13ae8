#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cloneforge/ast.hpp"

namespace cloneforge::ast {

struct Edit {
  Span span;
  std::string replacement;
};

class OverlappingEdits : public Error {
 public:
  using Error::Error;
};

class PostEditParseFailure : public Error {
 public:
  PostEditParseFailure(std::string message, std::string text, std::vector<Span> spans)
      : Error(std::move(message)), text(std::move(text)), error_spans(std::move(spans)) {}
  std::string text;
  std::vector<Span> error_spans;
};

struct RenderOptions {
  bool reparse_check = true;
};

/// Applies non-overlapping edits to `source`, right to left. The result does not
/// depend on the order edits are listed in. Two insertions at the same offset,
/// or an insertion strictly inside a replaced span, count as overlapping.
std::string apply_edits(std::string_view source, std::vector<Edit> edits);

/// apply_edits over the tree's source, followed by a re-parse in the tree's
/// language unless disabled.
std::string render(const SyntaxTree& tree, std::vector<Edit> edits, RenderOptions options = {});

}  // namespace cloneforge::ast
