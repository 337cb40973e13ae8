#include "cloneforge/ast.hpp"

#include <algorithm>
#include <memory>

#include <tree_sitter/api.h>

extern "C" {
const TSLanguage* tree_sitter_c(void);
const TSLanguage* tree_sitter_cpp(void);
const TSLanguage* tree_sitter_java(void);
}

namespace cloneforge::ast {

namespace {

const TSLanguage* grammar_for(Language lang) {
  switch (lang) {
    case Language::C:
      return tree_sitter_c();
    case Language::Cpp:
      return tree_sitter_cpp();
    case Language::Java:
      return tree_sitter_java();
  }
  return nullptr;
}

struct ParserDeleter {
  void operator()(TSParser* p) const { ts_parser_delete(p); }
};
struct TreeDeleter {
  void operator()(TSTree* t) const { ts_tree_delete(t); }
};

struct PendingNode {
  AstNode node;
  std::vector<std::uint32_t> children;
  std::uint32_t parent = UINT32_MAX;
};

bool is_function_kind(std::string_view kind) {
  return kind == "function_definition" || kind == "method_declaration" ||
         kind == "constructor_declaration";
}

std::vector<Span> merge_spans(std::vector<Span> spans) {
  std::sort(spans.begin(), spans.end());
  std::vector<Span> merged;
  for (const Span& s : spans) {
    if (!merged.empty() && s.start <= merged.back().end) {
      merged.back().end = std::max(merged.back().end, s.end);
    } else {
      merged.push_back(s);
    }
  }
  return merged;
}

}  // namespace

const AstNode* AstNode::child(std::string_view field_name) const {
  for (const AstNode* c : children) {
    if (c->field == field_name) return c;
  }
  return nullptr;
}

std::vector<const AstNode*> AstNode::children_by_field(std::string_view field_name) const {
  std::vector<const AstNode*> out;
  for (const AstNode* c : children) {
    if (c->field == field_name) out.push_back(c);
  }
  return out;
}

std::vector<const AstNode*> AstNode::named_children() const {
  std::vector<const AstNode*> out;
  for (const AstNode* c : children) {
    if (c->is_named) out.push_back(c);
  }
  return out;
}

bool AstNode::encloses(const AstNode& other) const {
  for (const AstNode* n = &other; n != nullptr; n = n->parent) {
    if (n == this) return true;
  }
  return false;
}

std::string_view SyntaxTree::text(const AstNode& node) const { return text(node.span); }

std::string_view SyntaxTree::text(Span span) const {
  return std::string_view(source_).substr(span.start, span.end - span.start);
}

const AstNode* SyntaxTree::function() const {
  for (const AstNode& n : nodes_) {
    if (is_function_kind(n.kind)) return &n;
  }
  return nullptr;
}

std::vector<const AstNode*> SyntaxTree::functions() const {
  std::vector<const AstNode*> out;
  for (const AstNode& n : nodes_) {
    if (!is_function_kind(n.kind)) continue;
    bool nested = false;
    for (const AstNode* p = n.parent; p != nullptr; p = p->parent) {
      if (is_function_kind(p->kind)) {
        nested = true;
        break;
      }
    }
    if (!nested) out.push_back(&n);
  }
  return out;
}

SyntaxTree parse_lenient(Language language, std::string text) {
  std::unique_ptr<TSParser, ParserDeleter> parser(ts_parser_new());
  if (!ts_parser_set_language(parser.get(), grammar_for(language))) {
    throw Error("tree-sitter rejected the grammar ABI");
  }
  std::unique_ptr<TSTree, TreeDeleter> ts_tree(ts_parser_parse_string(
      parser.get(), nullptr, text.data(), static_cast<std::uint32_t>(text.size())));
  if (!ts_tree) throw Error("tree-sitter failed to produce a tree");

  std::vector<PendingNode> pending;
  std::vector<Span> errors;

  TSTreeCursor cursor = ts_tree_cursor_new(ts_tree_root_node(ts_tree.get()));
  std::vector<std::uint32_t> stack;
  // Iterative preorder walk; `stack` holds the pending index of each ancestor.
  for (;;) {
    TSNode ts_node = ts_tree_cursor_current_node(&cursor);
    PendingNode p;
    p.node.kind = ts_node_type(ts_node);
    const char* field = ts_tree_cursor_current_field_name(&cursor);
    if (field != nullptr) p.node.field = field;
    p.node.span = {ts_node_start_byte(ts_node), ts_node_end_byte(ts_node)};
    p.node.is_named = ts_node_is_named(ts_node);
    p.node.is_missing = ts_node_is_missing(ts_node);
    p.node.is_error = ts_node_is_error(ts_node) || p.node.is_missing;
    p.node.is_terminal = ts_node_child_count(ts_node) == 0;
    if (p.node.is_error) errors.push_back(p.node.span);
    const auto index = static_cast<std::uint32_t>(pending.size());
    p.node.index = index;
    if (!stack.empty()) {
      p.parent = stack.back();
      pending[stack.back()].children.push_back(index);
    }
    pending.push_back(std::move(p));

    if (ts_tree_cursor_goto_first_child(&cursor)) {
      stack.push_back(index);
      continue;
    }
    bool advanced = false;
    while (!advanced) {
      if (ts_tree_cursor_goto_next_sibling(&cursor)) {
        advanced = true;
      } else if (ts_tree_cursor_goto_parent(&cursor)) {
        stack.pop_back();
      } else {
        break;
      }
    }
    if (!advanced) break;
  }
  ts_tree_cursor_delete(&cursor);

  SyntaxTree tree;
  tree.language_ = language;
  tree.source_ = std::move(text);
  tree.nodes_.reserve(pending.size());
  for (PendingNode& p : pending) tree.nodes_.push_back(std::move(p.node));
  for (std::size_t i = 0; i < pending.size(); ++i) {
    AstNode& n = tree.nodes_[i];
    if (pending[i].parent != UINT32_MAX) n.parent = &tree.nodes_[pending[i].parent];
    n.children.reserve(pending[i].children.size());
    for (std::uint32_t c : pending[i].children) n.children.push_back(&tree.nodes_[c]);
  }
  // Errors nested inside an ERROR region are reported once.
  tree.error_spans_ = merge_spans(std::move(errors));
  return tree;
}

SyntaxTree parse(Language language, std::string text) {
  if (text.empty()) throw ParseError("empty source", {});
  SyntaxTree tree = parse_lenient(language, std::move(text));
  if (tree.has_error()) {
    throw ParseError("source contains " + std::to_string(tree.error_spans().size()) +
                         " syntax error region(s)",
                     tree.error_spans());
  }
  return tree;
}

SyntaxTree parse(const SourceFunction& fn) { return parse(fn.language, fn.text); }

bool is_comment(const AstNode& node) {
  return node.kind == "comment" || node.kind == "line_comment" || node.kind == "block_comment";
}

std::vector<Token> flatten_tokens(const SyntaxTree& tree) {
  std::vector<Token> tokens;
  for (const AstNode& n : tree.nodes()) {
    if (!n.is_terminal || n.span.empty() || is_comment(n)) continue;
    tokens.push_back(Token{tree.text(n), n.kind, n.span, &n});
  }
  return tokens;
}

std::vector<std::string> token_texts(const SyntaxTree& tree) {
  std::vector<std::string> out;
  for (const Token& t : flatten_tokens(tree)) out.emplace_back(t.text);
  return out;
}

}  // namespace cloneforge::ast
