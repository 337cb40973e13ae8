#include "cloneforge/render.hpp"

#include <algorithm>

namespace cloneforge::ast {

namespace {

bool conflicts(const Span& a, const Span& b) {
  if (a.empty() && b.empty()) return a.start == b.start;
  if (a.empty()) return b.start < a.start && a.start < b.end;
  if (b.empty()) return a.start < b.start && b.start < a.end;
  return a.start < b.end && b.start < a.end;
}

}  // namespace

std::string apply_edits(std::string_view source, std::vector<Edit> edits) {
  for (const Edit& e : edits) {
    if (e.span.start > e.span.end || e.span.end > source.size()) {
      throw OverlappingEdits("edit span [" + std::to_string(e.span.start) + ", " +
                             std::to_string(e.span.end) + ") lies outside the source");
    }
  }
  // Rightmost first; at equal starts the wider span goes first so that an
  // insertion at `p` lands in front of a replacement beginning at `p`.
  std::sort(edits.begin(), edits.end(), [](const Edit& a, const Edit& b) {
    if (a.span.start != b.span.start) return a.span.start > b.span.start;
    return a.span.end > b.span.end;
  });
  for (std::size_t i = 1; i < edits.size(); ++i) {
    if (conflicts(edits[i - 1].span, edits[i].span)) {
      throw OverlappingEdits("edits at [" + std::to_string(edits[i].span.start) + ", " +
                             std::to_string(edits[i].span.end) + ") and [" +
                             std::to_string(edits[i - 1].span.start) + ", " +
                             std::to_string(edits[i - 1].span.end) + ") overlap");
    }
  }
  std::string out(source);
  for (const Edit& e : edits) {
    out.replace(e.span.start, e.span.size(), e.replacement);
  }
  return out;
}

std::string render(const SyntaxTree& tree, std::vector<Edit> edits, RenderOptions options) {
  std::string out = apply_edits(tree.source(), std::move(edits));
  if (options.reparse_check) {
    SyntaxTree check = parse_lenient(tree.language(), out);
    if (check.has_error()) {
      throw PostEditParseFailure("edited source no longer parses", std::move(out),
                                 check.error_spans());
    }
  }
  return out;
}

}  // namespace cloneforge::ast
