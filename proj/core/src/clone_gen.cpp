#include "cloneforge/clone_gen.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "cloneforge/render.hpp"
#include "cloneforge/rng.hpp"
#include "cloneforge/syntax.hpp"
#include "transform_util.hpp"

namespace cloneforge::clone {

using ast::AstNode;
using ast::Declaration;
using ast::ScopeInfo;
using ast::SyntaxTree;
using ast::TypeCategory;

std::string_view to_string(CloneTransformKind kind) {
  switch (kind) {
    case CloneTransformKind::RenameIdentifier:
      return "RenameIdentifier";
    case CloneTransformKind::RewriteStatement:
      return "RewriteStatement";
    case CloneTransformKind::RewriteBlock:
      return "RewriteBlock";
    case CloneTransformKind::InsertDeadCode:
      return "InsertDeadCode";
    case CloneTransformKind::PermuteDecls:
      return "PermuteDecls";
  }
  return "?";
}

std::string_view to_string(RewriteVariant variant) {
  switch (variant) {
    case RewriteVariant::None:
      return "none";
    case RewriteVariant::TernaryToIf:
      return "ternary-to-if";
    case RewriteVariant::Increment:
      return "increment";
    case RewriteVariant::MirrorComparison:
      return "mirror-comparison";
    case RewriteVariant::ForToWhile:
      return "for-to-while";
    case RewriteVariant::WhileToFor:
      return "while-to-for";
    case RewriteVariant::SwapIfElse:
      return "swap-if-else";
  }
  return "?";
}

using detail::contains_kind;
using detail::first_named;
using detail::function_nodes;
using detail::has_preprocessor;

namespace {

const std::vector<std::string>& fallback_vocabulary() {
  static const std::vector<std::string> words = {
      "tmp",   "val",  "res",    "cnt",   "idx",   "buf",   "acc",   "cur",  "len",
      "num",   "item", "data",   "value", "result", "count", "index", "temp", "node",
      "pos",   "flag", "total",  "sum",   "limit", "offset", "size",  "key",  "ptr",
      "state", "step", "target", "width", "depth", "left",  "right", "head", "tail"};
  return words;
}

std::string braced(const SyntaxTree& tree, const AstNode& stmt) {
  if (ast::is_block(stmt)) return std::string(tree.text(stmt));
  return "{ " + std::string(tree.text(stmt)) + " }";
}

// ---------------------------------------------------------------------------
// ① renaming

std::vector<std::string> split_words(std::string_view name, bool& snake) {
  std::vector<std::string> parts;
  snake = name.find('_') != std::string_view::npos;
  std::string cur;
  if (snake) {
    for (char c : name) {
      if (c == '_') {
        if (!cur.empty()) parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
  } else {
    for (std::size_t i = 0; i < name.size(); ++i) {
      const char c = name[i];
      const bool boundary = i > 0 && std::isupper(static_cast<unsigned char>(c)) &&
                            std::islower(static_cast<unsigned char>(name[i - 1]));
      if (boundary && !cur.empty()) {
        parts.push_back(cur);
        cur.clear();
      }
      cur += c;
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  return parts;
}

std::string join_words(const std::vector<std::string>& words, bool snake, bool pascal) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (snake) {
      if (i > 0) out += '_';
      out += words[i];
      continue;
    }
    std::string w = words[i];
    if (!w.empty()) {
      const bool upper = i > 0 || pascal;
      w[0] = static_cast<char>(upper ? std::toupper(static_cast<unsigned char>(w[0]))
                                     : std::tolower(static_cast<unsigned char>(w[0])));
    }
    out += w;
  }
  return out;
}

}  // namespace

std::vector<std::string> subword_variants(std::string_view name) {
  bool snake = false;
  std::vector<std::string> parts = split_words(name, snake);
  if (parts.size() < 2) return {};
  const bool pascal = std::isupper(static_cast<unsigned char>(name[0])) != 0;
  std::vector<std::string> out;
  auto add = [&](const std::vector<std::string>& words) {
    std::string candidate = join_words(words, snake, pascal);
    if (candidate != name && detail::is_valid_identifier(candidate) &&
        std::find(out.begin(), out.end(), candidate) == out.end()) {
      out.push_back(std::move(candidate));
    }
  };
  const std::size_t n = parts.size();
  if (n <= 4) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    while (std::next_permutation(order.begin(), order.end())) {
      std::vector<std::string> words;
      for (std::size_t i : order) words.push_back(parts[i]);
      add(words);
    }
  } else {
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::string> words(parts.begin() + static_cast<std::ptrdiff_t>(r),
                                     parts.end());
      words.insert(words.end(), parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(r));
      add(words);
    }
  }
  // order-preserving drops
  const std::size_t limit = n <= 5 ? (std::size_t{1} << n) - 1 : 0;
  for (std::size_t mask = 1; mask < limit; ++mask) {
    std::vector<std::string> words;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) words.push_back(parts[i]);
    }
    add(words);
  }
  if (n > 5) {
    for (std::size_t skip = 0; skip < n; ++skip) {
      std::vector<std::string> words;
      for (std::size_t i = 0; i < n; ++i) {
        if (i != skip) words.push_back(parts[i]);
      }
      add(words);
    }
  }
  return out;
}

namespace {

std::set<std::string, std::less<>> names_in_tree(const SyntaxTree& tree) {
  std::set<std::string, std::less<>> names;
  for (const AstNode& n : tree.nodes()) {
    if (!n.is_terminal) continue;
    const std::string_view t = tree.text(n);
    if (detail::is_valid_identifier(t)) names.emplace(t);
  }
  return names;
}

bool java_self_call(const SyntaxTree& tree, const AstNode& fn, std::string_view name) {
  const auto calls = ast::collect(fn, [&](const AstNode& n) {
    if (!n.is("method_invocation")) return false;
    const AstNode* callee = n.child("name");
    return callee != nullptr && tree.text(*callee) == name;
  });
  return !calls.empty();
}

std::vector<CloneSite> rename_sites(const SyntaxTree& tree, const ScopeInfo& scope) {
  std::vector<CloneSite> out;
  const AstNode* fn = tree.function();
  if (fn == nullptr || has_preprocessor(*fn)) return out;
  const auto& decls = scope.declarations();
  for (std::size_t i = 0; i < decls.size(); ++i) {
    const Declaration& d = decls[i];
    if (!fn->encloses(*d.name_node)) continue;
    if (detail::is_reserved_name(d.name)) continue;
    if (d.kind == ast::DeclKind::Function) {
      if (fn->is("constructor_declaration")) continue;
      if (tree.language() == Language::Java && java_self_call(tree, *fn, d.name)) continue;
    }
    out.push_back(CloneSite{CloneTransformKind::RenameIdentifier, RewriteVariant::None,
                            d.name_node->span, d.name_node->index,
                            static_cast<std::uint32_t>(i)});
  }
  return out;
}

CloneResult apply_rename(const CloneSite& site, const SyntaxTree& tree, const ScopeInfo& scope,
                         Rng& rng, const CloneOptions& options) {
  const Declaration& decl = scope.declarations().at(site.aux);
  const auto taken = names_in_tree(tree);
  auto usable = [&](const std::string& candidate) {
    return detail::is_valid_identifier(candidate) && !detail::is_reserved_name(candidate) &&
           !taken.contains(candidate);
  };
  auto first_usable = [&](std::vector<std::string> candidates) -> std::string {
    rng.shuffle(std::span<std::string>(candidates));
    for (const std::string& c : candidates) {
      if (usable(c)) return c;
    }
    return {};
  };

  std::string chosen;
  const std::string& name = decl.name;
  if (name.size() == 1 && std::isalpha(static_cast<unsigned char>(name[0]))) {
    std::vector<std::string> letters;
    const bool upper = std::isupper(static_cast<unsigned char>(name[0])) != 0;
    for (char c = 'a'; c <= 'z'; ++c) {
      const char l = upper ? static_cast<char>(std::toupper(c)) : c;
      if (l != name[0]) letters.emplace_back(1, l);
    }
    chosen = first_usable(std::move(letters));
  }
  if (chosen.empty()) chosen = first_usable(subword_variants(name));
  if (chosen.empty()) {
    const std::span<const std::string> vocab =
        options.vocabulary.empty() ? std::span<const std::string>(fallback_vocabulary())
                                   : options.vocabulary;
    for (int attempt = 0; attempt < 64 && chosen.empty(); ++attempt) {
      const std::string& c = vocab[rng.below(vocab.size())];
      if (usable(c)) chosen = c;
    }
    for (std::size_t suffix = 1; chosen.empty(); ++suffix) {
      std::string c = vocab[rng.below(vocab.size())] + std::to_string(suffix);
      if (usable(c)) chosen = std::move(c);
    }
  }

  std::vector<ast::Edit> edits{{decl.name_node->span, chosen}};
  for (const AstNode* use : scope.uses_of(site.aux)) edits.push_back({use->span, chosen});
  CloneResult r;
  r.text = ast::render(tree, std::move(edits));
  r.applied.push_back({CloneTransformKind::RenameIdentifier, site.span, name + " -> " + chosen});
  return r;
}

// ---------------------------------------------------------------------------
// ② statement rewrites

bool incrementable_local(const SyntaxTree& tree, const ScopeInfo& scope, const AstNode& operand) {
  if (!operand.is("identifier")) return false;
  const auto decl = scope.binding_of(operand);
  if (!decl) return false;
  const Declaration& d = scope.declarations()[*decl];
  if (d.kind == ast::DeclKind::Function) return false;
  const TypeCategory cat = ast::type_category(tree, d);
  if (tree.language() == Language::Java) {
    if (cat == TypeCategory::Floating) return true;
    if (cat != TypeCategory::Integral) return false;
    const AstNode* type = ast::declared_type_node(d);
    const std::string_view t = type != nullptr ? tree.text(*type) : "";
    return t == "int" || t == "long";
  }
  return cat == TypeCategory::Integral || cat == TypeCategory::Floating ||
         cat == TypeCategory::Pointer;
}

bool discarded_value(const AstNode& expr) {
  const AstNode* n = &expr;
  while (n->parent != nullptr && n->parent->is("comma_expression")) n = n->parent;
  const AstNode* p = n->parent;
  if (p == nullptr) return false;
  if (p->is("expression_statement")) return true;
  return p->is("for_statement") && n->field == "update";
}

const AstNode* ternary_of(const AstNode* n) {
  n = ast::strip_parens(n);
  if (n == nullptr || !ast::is_ternary(*n)) return nullptr;
  const AstNode* cons = n->child("consequence");
  const AstNode* alt = n->child("alternative");
  if (n->child("condition") == nullptr || cons == nullptr || alt == nullptr) return nullptr;
  for (const AstNode* branch : {cons, alt}) {
    if (branch->is("assignment_expression") || branch->is("comma_expression")) return nullptr;
  }
  return n;
}

bool mentions_name(const SyntaxTree& tree, const AstNode& n, std::string_view name) {
  for (const AstNode* id : ast::identifier_uses(n)) {
    if (tree.text(*id) == name) return true;
  }
  return false;
}

std::vector<CloneSite> statement_sites(const SyntaxTree& tree, const ScopeInfo& scope) {
  std::vector<CloneSite> out;
  auto add = [&](RewriteVariant v, const AstNode& n) {
    out.push_back(CloneSite{CloneTransformKind::RewriteStatement, v, n.span, n.index, 0});
  };
  for (const AstNode* n : function_nodes(tree)) {
    if (n->is("expression_statement")) {
      const AstNode* e = first_named(*n);
      if (e != nullptr && e->is("assignment_expression")) {
        const AstNode* left = e->child("left");
        const AstNode* right = e->child("right");
        if (left != nullptr && right != nullptr && !ast::has_side_effects(*left)) {
          if (ternary_of(right) != nullptr) add(RewriteVariant::TernaryToIf, *n);
          const AstNode* op = ast::operator_token(*e);
          if (op != nullptr && tree.text(*op) == "=" && right->is("update_expression")) {
            const AstNode* x = ast::update_operand(*right);
            if (x != nullptr && incrementable_local(tree, scope, *x) &&
                !mentions_name(tree, *left, tree.text(*x))) {
              add(RewriteVariant::Increment, *n);
            }
          }
        }
      }
    } else if (n->is("return_statement")) {
      const AstNode* e = first_named(*n);
      if (e != nullptr && ternary_of(e) != nullptr) add(RewriteVariant::TernaryToIf, *n);
    } else if (n->is("update_expression")) {
      const AstNode* x = ast::update_operand(*n);
      if (x != nullptr && discarded_value(*n) && incrementable_local(tree, scope, *x)) {
        add(RewriteVariant::Increment, *n);
      }
    } else if (n->is("binary_expression")) {
      const AstNode* op = ast::operator_token(*n);
      const AstNode* left = n->child("left");
      const AstNode* right = n->child("right");
      if (op == nullptr || left == nullptr || right == nullptr) continue;
      if (!detail::is_comparison(tree.text(*op))) continue;
      if (ast::has_side_effects(*left) || ast::has_side_effects(*right)) continue;
      if (contains_kind(*n, "template_argument_list")) continue;
      add(RewriteVariant::MirrorComparison, *n);
    }
  }
  return out;
}

std::string as_statements(const AstNode& stmt, const std::string& text) {
  if (detail::in_statement_list(stmt)) return text;
  return "{ " + text + " }";
}

std::string condition_in_parens(const SyntaxTree& tree, const AstNode& cond) {
  if (cond.is("parenthesized_expression")) return std::string(tree.text(cond));
  return "(" + std::string(tree.text(cond)) + ")";
}

CloneResult apply_statement(const CloneSite& site, const SyntaxTree& tree) {
  const AstNode& n = tree.nodes()[site.node];
  std::string replacement;
  std::string detail(to_string(site.variant));
  switch (site.variant) {
    case RewriteVariant::TernaryToIf: {
      const AstNode* e = first_named(n);
      if (n.is("return_statement")) {
        const AstNode* t = ternary_of(e);
        replacement = "if " + condition_in_parens(tree, *t->child("condition")) + " {return " +
                      std::string(tree.text(*t->child("consequence"))) + ";} else {return " +
                      std::string(tree.text(*t->child("alternative"))) + ";}";
      } else {
        const AstNode* t = ternary_of(e->child("right"));
        const std::string lhs = std::string(tree.text(*e->child("left"))) + " " +
                                std::string(tree.text(*ast::operator_token(*e))) + " ";
        replacement = "if " + condition_in_parens(tree, *t->child("condition")) + " {" + lhs +
                      std::string(tree.text(*t->child("consequence"))) + ";} else {" + lhs +
                      std::string(tree.text(*t->child("alternative"))) + ";}";
      }
      break;
    }
    case RewriteVariant::Increment: {
      if (n.is("update_expression")) {
        const std::string x(tree.text(*ast::update_operand(n)));
        const bool inc = tree.text(*ast::operator_token(n)) == "++";
        replacement = x + " = " + x + (inc ? " + 1" : " - 1");
      } else {
        const AstNode* e = first_named(n);
        const AstNode* upd = e->child("right");
        const std::string x(tree.text(*ast::update_operand(*upd)));
        const bool inc = tree.text(*ast::operator_token(*upd)) == "++";
        const std::string step = x + " = " + x + (inc ? " + 1;" : " - 1;");
        const std::string copy = std::string(tree.text(*e->child("left"))) + " = " + x + ";";
        replacement = as_statements(
            n, ast::is_prefix_update(*upd) ? step + " " + copy : copy + " " + step);
      }
      break;
    }
    case RewriteVariant::MirrorComparison: {
      const std::string_view op = tree.text(*ast::operator_token(n));
      const int prec = detail::binary_precedence(op);
      replacement = detail::operand_text(tree, *n.child("right"), prec) + " " +
                    std::string(detail::mirrored_comparison(op)) + " " +
                    detail::operand_text(tree, *n.child("left"), prec);
      break;
    }
    default:
      throw TransformFailed("not a statement rewrite");
  }
  CloneResult r;
  r.text = ast::render(tree, {{n.span, replacement}});
  r.applied.push_back({CloneTransformKind::RewriteStatement, site.span, detail});
  return r;
}

// ---------------------------------------------------------------------------
// ③ block rewrites

std::vector<const AstNode*> update_parts(const AstNode& loop) {
  std::vector<const AstNode*> parts;
  std::vector<const AstNode*> stack;
  for (const AstNode* u : loop.children_by_field("update")) stack.push_back(u);
  std::reverse(stack.begin(), stack.end());
  while (!stack.empty()) {
    const AstNode* cur = stack.back();
    stack.pop_back();
    if (cur->is("comma_expression")) {
      stack.push_back(cur->child("right"));
      stack.push_back(cur->child("left"));
    } else if (cur != nullptr) {
      parts.push_back(cur);
    }
  }
  return parts;
}

std::vector<const AstNode*> init_parts(const AstNode& loop) {
  auto parts = loop.children_by_field("initializer");
  for (const AstNode* p : loop.children_by_field("init")) parts.push_back(p);
  std::sort(parts.begin(), parts.end(),
            [](const AstNode* a, const AstNode* b) { return a->span.start < b->span.start; });
  return parts;
}

std::vector<const AstNode*> own_continues(const AstNode& loop) {
  const AstNode* body = loop.child("body");
  if (body == nullptr) return {};
  return ast::collect(*body, [&](const AstNode& c) {
    if (!c.is("continue_statement")) return false;
    for (const AstNode* k : c.children) {
      if (k->is("identifier")) return false;
    }
    return detail::jump_target(c, false) == &loop;
  });
}

bool simple_update(const AstNode& part) {
  if (ast::collect(part, [](const AstNode& c) { return ast::is_call(c); }).size() > 0) {
    return false;
  }
  if (part.is("update_expression")) return true;
  if (part.is("assignment_expression")) {
    const AstNode* left = part.child("left");
    return left != nullptr && left->is("identifier");
  }
  return false;
}

bool for_to_while_ok(const SyntaxTree& tree, const ScopeInfo& scope, const AstNode& loop) {
  const AstNode* body = loop.child("body");
  if (body == nullptr) return false;
  if (loop.parent != nullptr && loop.parent->is("labeled_statement")) return false;
  const AstNode* cond = loop.child("condition");
  if (cond != nullptr && (cond->is("declaration") || cond->is("condition_clause"))) return false;
  const auto updates = update_parts(loop);
  if (updates.empty()) return true;
  const auto continues = own_continues(loop);
  if (!continues.empty() && !std::all_of(updates.begin(), updates.end(),
                                          [](const AstNode* u) { return simple_update(*u); })) {
    return false;
  }
  std::set<std::string, std::less<>> used;
  for (const AstNode* u : updates) {
    for (const AstNode* id : ast::identifier_uses(*u)) used.emplace(tree.text(*id));
  }
  for (const Declaration& d : scope.declarations()) {
    if (body->encloses(*d.name_node) && used.contains(d.name)) return false;
  }
  if (tree.language() == Language::Java && detail::ends_abruptly(tree, *body)) return false;
  return true;
}

std::vector<CloneSite> block_sites(const SyntaxTree& tree, const ScopeInfo& scope) {
  std::vector<CloneSite> out;
  auto add = [&](RewriteVariant v, const AstNode& n) {
    out.push_back(CloneSite{CloneTransformKind::RewriteBlock, v, n.span, n.index, 0});
  };
  for (const AstNode* n : function_nodes(tree)) {
    if (n->is("for_statement")) {
      if (for_to_while_ok(tree, scope, *n)) add(RewriteVariant::ForToWhile, *n);
    } else if (n->is("while_statement")) {
      const AstNode* c = ast::condition_expression(*n);
      if (c != nullptr && !c->is("declaration") && n->child("body") != nullptr) {
        add(RewriteVariant::WhileToFor, *n);
      }
    } else if (n->is("if_statement")) {
      if (ast::else_branch(*n) == nullptr || ast::then_branch(*n) == nullptr) continue;
      const AstNode* c = ast::condition_expression(*n);
      if (c == nullptr || c->is("declaration")) continue;
      bool constexpr_if = false;
      for (const AstNode* k : n->children) {
        if (k->is("constexpr")) constexpr_if = true;
      }
      if (!constexpr_if) add(RewriteVariant::SwapIfElse, *n);
    }
  }
  return out;
}

std::string negate_condition(const SyntaxTree& tree, const ScopeInfo& scope,
                             const AstNode& cond) {
  const AstNode* c = ast::strip_parens(&cond);
  if (c != nullptr && c->is("binary_expression")) {
    const AstNode* op = ast::operator_token(*c);
    const std::string_view o = op != nullptr ? tree.text(*op) : "";
    const bool flip = o == "==" || o == "!=" ||
                      (detail::is_relational(o) && !detail::mentions_floating(tree, scope, *c));
    if (flip) {
      std::string text(tree.text(*c));
      const std::size_t at = op->span.start - c->span.start;
      text.replace(at, op->span.size(), detail::negated_comparison(o));
      return text;
    }
  }
  return "!(" + std::string(tree.text(cond)) + ")";
}

std::string for_to_while(const SyntaxTree& tree, const AstNode& loop) {
  const std::string_view src = tree.source();
  const std::string indent = detail::indent_at(src, loop.span.start);
  const AstNode& body = *loop.child("body");

  std::string updates;
  for (const AstNode* u : update_parts(loop)) {
    if (!updates.empty()) updates += ' ';
    updates += std::string(tree.text(*u)) + ";";
  }

  std::string new_body;
  if (updates.empty()) {
    new_body = std::string(tree.text(body));
  } else {
    std::vector<ast::Edit> edits;
    for (const AstNode* c : own_continues(loop)) {
      edits.push_back({Span{c->span.start - body.span.start, c->span.end - body.span.start},
                       "{ " + updates + " continue; }"});
    }
    if (ast::is_block(body)) {
      const AstNode* close = body.children.back();
      const std::size_t at = close->span.start;
      const std::string brace_indent = detail::indent_at(src, at);
      const std::size_t line_start = src.rfind('\n', at == 0 ? 0 : at - 1);
      const bool own_line = line_start != std::string_view::npos &&
                            line_start + 1 + brace_indent.size() == at;
      edits.push_back({Span{at - body.span.start, at - body.span.start},
                       own_line ? "  " + updates + "\n" + brace_indent : updates + " "});
      new_body = ast::apply_edits(tree.text(body), std::move(edits));
    } else {
      new_body = "{ " + ast::apply_edits(tree.text(body), std::move(edits)) + " " + updates + " }";
    }
  }

  const AstNode* cond = loop.child("condition");
  const std::string cond_text =
      cond != nullptr ? std::string(tree.text(*cond))
                      : std::string(ast::true_literal(tree.language()));
  const std::string loop_text = "while (" + cond_text + ") " + new_body;

  std::string init;
  for (const AstNode* p : init_parts(loop)) {
    if (!init.empty()) init += ' ';
    init += std::string(tree.text(*p));
    if (!p->is("declaration") && !p->is("local_variable_declaration")) init += ";";
  }
  if (init.empty()) return loop_text;
  return "{\n" + indent + "  " + init + "\n" + indent + "  " + loop_text + "\n" + indent + "}";
}

CloneResult apply_block(const CloneSite& site, const SyntaxTree& tree, const ScopeInfo& scope) {
  const AstNode& n = tree.nodes()[site.node];
  std::string replacement;
  switch (site.variant) {
    case RewriteVariant::ForToWhile:
      replacement = for_to_while(tree, n);
      break;
    case RewriteVariant::WhileToFor:
      replacement = "for (; " + std::string(tree.text(*ast::condition_expression(n))) + "; ) " +
                    std::string(tree.text(*n.child("body")));
      break;
    case RewriteVariant::SwapIfElse:
      replacement = "if (" + negate_condition(tree, scope, *ast::condition_expression(n)) +
                    ") " + braced(tree, *ast::else_branch(n)) + " else " +
                    braced(tree, *ast::then_branch(n));
      break;
    default:
      throw TransformFailed("not a block rewrite");
  }
  CloneResult r;
  r.text = ast::render(tree, {{n.span, replacement}});
  r.applied.push_back({CloneTransformKind::RewriteBlock, site.span,
                       std::string(to_string(site.variant))});
  return r;
}

// ---------------------------------------------------------------------------
// ④ dead code

bool run_is_portable(const std::vector<const AstNode*>& stmts) {
  if (stmts.back()->span.end - stmts.front()->span.start > 600) return false;
  for (const AstNode* s : stmts) {
    const auto bad = ast::collect(*s, [&](const AstNode& c) {
      if (c.is("labeled_statement") || c.is("goto_statement") || c.is("case_statement") ||
          c.is("switch_label") || c.is("local_class_declaration") ||
          c.is("class_declaration") || c.is("lambda_expression") ||
          c.is("field_declaration_list") || c.is("explicit_constructor_invocation") ||
          c.is("yield_statement") || c.kind.starts_with("preproc")) {
        return true;
      }
      if (c.is("break_statement") || c.is("continue_statement")) {
        for (const AstNode* k : c.children) {
          if (k->is("identifier")) return true;
        }
        const AstNode* target = detail::jump_target(c, c.is("break_statement"));
        return target == nullptr || !s->encloses(*target);
      }
      return false;
    });
    if (!bad.empty()) return false;
  }
  return true;
}

std::vector<std::vector<const AstNode*>> portable_runs(const SyntaxTree& tree) {
  std::vector<std::vector<const AstNode*>> runs;
  for (const AstNode* b : function_nodes(tree)) {
    if (!ast::is_block(*b)) continue;
    const auto stmts = ast::block_statements(*b);
    for (std::size_t i = 0; i < stmts.size(); ++i) {
      for (std::size_t len = 1; len <= 3 && i + len <= stmts.size(); ++len) {
        std::vector<const AstNode*> run(stmts.begin() + static_cast<std::ptrdiff_t>(i),
                                        stmts.begin() + static_cast<std::ptrdiff_t>(i + len));
        if (run_is_portable(run)) runs.push_back(run);
      }
    }
  }
  return runs;
}

bool run_fits_at(const SyntaxTree& tree, const ScopeInfo& scope,
                 const std::vector<const AstNode*>& run, std::size_t offset) {
  const Span extent{run.front()->span.start, run.back()->span.end};
  for (const AstNode* s : run) {
    for (const AstNode* id : ast::identifier_uses(*s)) {
      const auto decl = scope.binding_of(*id);
      const std::string_view name = tree.text(*id);
      if (decl) {
        const Declaration& d = scope.declarations()[*decl];
        if (extent.contains(d.name_node->span)) {
          // declared inside the copy; Java forbids shadowing an enclosing local
          if (tree.language() == Language::Java && d.name_node == id &&
              scope.resolve(name, offset)) {
            return false;
          }
          continue;
        }
        if (scope.resolve(name, offset) != decl) return false;
      } else if (scope.resolve(name, offset)) {
        return false;
      }
    }
  }
  return true;
}

struct Slot {
  const AstNode* block;
  std::size_t index;
  std::size_t offset;
};

std::vector<Slot> dead_code_slots(const SyntaxTree& tree) {
  std::vector<Slot> slots;
  for (const AstNode* b : function_nodes(tree)) {
    if (!ast::is_block(*b)) continue;
    if (b->parent != nullptr && b->parent->is("switch_statement")) continue;
    const auto stmts = ast::block_statements(*b);
    for (std::size_t k = 0; k <= stmts.size(); ++k) {
      if (k > 0 && detail::ends_abruptly(tree, *stmts[k - 1])) continue;
      if (k == 0 && !stmts.empty() && stmts[0]->is("explicit_constructor_invocation")) continue;
      std::size_t offset = 0;
      if (k < stmts.size()) {
        offset = stmts[k]->span.start;
      } else if (!stmts.empty()) {
        offset = stmts.back()->span.end;
      } else {
        offset = b->children.front()->span.end;
      }
      slots.push_back(Slot{b, k, offset});
    }
  }
  return slots;
}

std::vector<CloneSite> dead_code_sites(const SyntaxTree& tree, const ScopeInfo& scope) {
  std::vector<CloneSite> out;
  const auto runs = portable_runs(tree);
  if (runs.empty()) return out;
  for (const Slot& slot : dead_code_slots(tree)) {
    const bool any = std::any_of(runs.begin(), runs.end(), [&](const auto& run) {
      return run_fits_at(tree, scope, run, slot.offset);
    });
    if (any) {
      out.push_back(CloneSite{CloneTransformKind::InsertDeadCode, RewriteVariant::None,
                              Span{slot.offset, slot.offset}, slot.block->index,
                              static_cast<std::uint32_t>(slot.index)});
    }
  }
  return out;
}

CloneResult apply_dead_code(const CloneSite& site, const SyntaxTree& tree,
                            const ScopeInfo& scope, Rng& rng) {
  const std::size_t offset = site.span.start;
  std::vector<std::vector<const AstNode*>> fitting;
  for (auto& run : portable_runs(tree)) {
    if (run_fits_at(tree, scope, run, offset)) fitting.push_back(std::move(run));
  }
  if (fitting.empty()) throw TransformFailed("no statements can be copied to this point");
  const auto& run = fitting[rng.below(fitting.size())];

  std::vector<std::string_view> guards;
  switch (tree.language()) {
    case Language::C:
      guards = {"if (0)", "while (2 < 0)"};
      break;
    case Language::Cpp:
      guards = {"if (false)", "if (0)", "while (2 < 0)"};
      break;
    case Language::Java:
      guards = {"if (false)"};
      break;
  }
  const std::string_view guard = guards[rng.below(guards.size())];
  const std::string body(tree.text(Span{run.front()->span.start, run.back()->span.end}));
  const std::string block = std::string(guard) + " { " + body + " }";

  const AstNode& blk = tree.nodes()[site.node];
  const auto stmts = ast::block_statements(blk);
  std::string inserted;
  if (site.aux < stmts.size()) {
    inserted = block + "\n" + detail::indent_at(tree.source(), offset);
  } else {
    const std::string indent =
        stmts.empty() ? detail::indent_at(tree.source(), blk.span.start) + "  "
                      : detail::indent_at(tree.source(), stmts.back()->span.start);
    inserted = "\n" + indent + block;
  }
  CloneResult r;
  r.text = ast::render(tree, {{Span{offset, offset}, inserted}});
  r.applied.push_back({CloneTransformKind::InsertDeadCode, site.span, inserted});
  return r;
}

// ---------------------------------------------------------------------------
// ⑤ declaration permutation

bool permutable_type(const SyntaxTree& tree, const AstNode& decl) {
  const AstNode* type = decl.child("type");
  if (type == nullptr) return false;
  for (const AstNode* c : decl.children) {
    if (c->is("storage_class_specifier") && tree.text(*c) == "extern") return false;
  }
  switch (tree.language()) {
    case Language::C:
      return !contains_kind(*type, "field_declaration_list") &&
             !contains_kind(*type, "enumerator_list");
    case Language::Cpp:
      return type->is("primitive_type") || type->is("sized_type_specifier");
    case Language::Java: {
      const AstNode* base = type;
      if (type->is("array_type")) base = type->child("element");
      if (base == nullptr) return false;
      return base->is("integral_type") || base->is("floating_point_type") ||
             base->is("boolean_type") ||
             (base->is("type_identifier") && tree.text(*base) == "String");
    }
  }
  return false;
}

std::vector<const AstNode*> permutable_decls(const SyntaxTree& tree, const ScopeInfo& scope) {
  std::vector<const AstNode*> out;
  const AstNode* fn = tree.function();
  if (fn == nullptr) return out;
  const AstNode* body = ast::function_body(*fn);
  if (body == nullptr || !ast::is_block(*body)) return out;
  if (contains_kind(*fn, "goto_statement") || contains_kind(*fn, "labeled_statement") ||
      has_preprocessor(*fn)) {
    return out;
  }
  const auto independent = ast::independent_decls(tree, scope);
  for (const AstNode* stmt : ast::block_statements(*body)) {
    if (std::find(independent.begin(), independent.end(), stmt) == independent.end()) continue;
    if (!permutable_type(tree, *stmt)) continue;
    bool ok = true;
    for (const AstNode* d : ast::declarators(*stmt)) {
      const AstNode* name = ast::declarator_name(d);
      if (name == nullptr) {
        ok = false;
        break;
      }
      // only the declared name may appear as an identifier
      for (const AstNode* id : ast::collect(*d, [](const AstNode& c) {
             return c.is("identifier");
           })) {
        if (id != name) ok = false;
      }
      const AstNode* value = ast::declarator_value(*d);
      if (value != nullptr && ast::has_side_effects(*value)) ok = false;
      const std::string_view text = tree.text(*name);
      const auto& by_name = scope.declarations_by_name();
      if (auto it = by_name.find(text); it != by_name.end() && it->second.size() > 1) ok = false;
      for (const AstNode& n : tree.nodes()) {
        if (n.span.start >= stmt->span.start) break;
        if (n.is_terminal && n.span.start >= body->span.start && tree.text(n) == text) {
          ok = false;
        }
      }
    }
    if (ok) out.push_back(stmt);
  }
  return out;
}

bool is_leading_prefix(const std::vector<const AstNode*>& decls, const AstNode& body) {
  const auto stmts = ast::block_statements(body);
  if (decls.size() > stmts.size()) return false;
  return std::equal(decls.begin(), decls.end(), stmts.begin());
}

std::vector<CloneSite> permute_sites(const SyntaxTree& tree, const ScopeInfo& scope) {
  const auto decls = permutable_decls(tree, scope);
  if (decls.empty()) return {};
  const AstNode* body = ast::function_body(*tree.function());
  if (decls.size() == 1 && is_leading_prefix(decls, *body)) return {};
  return {CloneSite{CloneTransformKind::PermuteDecls, RewriteVariant::None, body->span,
                    body->index, 0}};
}

CloneResult apply_permute(const CloneSite& site, const SyntaxTree& tree, const ScopeInfo& scope,
                          Rng& rng) {
  const auto decls = permutable_decls(tree, scope);
  const AstNode& body = tree.nodes()[site.node];
  if (decls.empty()) throw TransformFailed("no permutable declarations");
  std::vector<const AstNode*> order = decls;
  rng.shuffle(std::span<const AstNode*>(order));
  if (order == decls && is_leading_prefix(decls, body)) {
    std::rotate(order.begin(), order.begin() + 1, order.end());
  }

  const std::string_view src = tree.source();
  const std::string indent = detail::indent_at(src, ast::block_statements(body).front()->span.start);
  std::vector<ast::Edit> edits;
  for (const AstNode* d : decls) {
    // delete together with the whitespace before it
    std::size_t from = d->span.start;
    while (from > body.span.start && std::isspace(static_cast<unsigned char>(src[from - 1]))) {
      --from;
    }
    edits.push_back({Span{from, d->span.end}, ""});
  }
  std::string inserted;
  std::string detail;
  for (const AstNode* d : order) {
    inserted += "\n" + indent + std::string(tree.text(*d));
    for (const AstNode* dd : ast::declarators(*d)) {
      if (!detail.empty()) detail += ',';
      detail += std::string(tree.text(*ast::declarator_name(dd)));
    }
  }
  const std::size_t open = body.children.front()->span.end;
  edits.push_back({Span{open, open}, inserted});
  CloneResult r;
  r.text = ast::render(tree, std::move(edits));
  r.applied.push_back({CloneTransformKind::PermuteDecls, site.span, detail});
  return r;
}

}  // namespace

std::vector<CloneSite> applicable(CloneTransformKind kind, const SyntaxTree& tree,
                                  const ScopeInfo& scope) {
  // a function without statements has nothing worth cloning, its name included
  const AstNode* fn = tree.function();
  if (fn == nullptr) return {};
  const AstNode* body = ast::function_body(*fn);
  if (body == nullptr || ast::block_statements(*body).empty()) return {};
  switch (kind) {
    case CloneTransformKind::RenameIdentifier:
      return rename_sites(tree, scope);
    case CloneTransformKind::RewriteStatement:
      return statement_sites(tree, scope);
    case CloneTransformKind::RewriteBlock:
      return block_sites(tree, scope);
    case CloneTransformKind::InsertDeadCode:
      return dead_code_sites(tree, scope);
    case CloneTransformKind::PermuteDecls:
      return permute_sites(tree, scope);
  }
  return {};
}

CloneResult apply_transform(const CloneSite& site, const SyntaxTree& tree,
                            const ScopeInfo& scope, std::uint64_t rng_seed,
                            const CloneOptions& options) {
  if (site.node >= tree.nodes().size()) throw TransformFailed("site does not belong to tree");
  Rng rng(rng_seed);
  try {
    CloneResult r;
    switch (site.kind) {
      case CloneTransformKind::RenameIdentifier:
        r = apply_rename(site, tree, scope, rng, options);
        break;
      case CloneTransformKind::RewriteStatement:
        r = apply_statement(site, tree);
        break;
      case CloneTransformKind::RewriteBlock:
        r = apply_block(site, tree, scope);
        break;
      case CloneTransformKind::InsertDeadCode:
        r = apply_dead_code(site, tree, scope, rng);
        break;
      case CloneTransformKind::PermuteDecls:
        r = apply_permute(site, tree, scope, rng);
        break;
    }
    if (r.text == tree.source()) throw TransformFailed("transform left the text unchanged");
    r.seed = rng_seed;
    return r;
  } catch (const ast::PostEditParseFailure& e) {
    throw TransformFailed(std::string(to_string(site.kind)) + ": " + e.what());
  } catch (const ast::OverlappingEdits& e) {
    throw TransformFailed(std::string(to_string(site.kind)) + ": " + e.what());
  }
}

CloneResult generate_clone(const ast::SourceFunction& fn, std::uint64_t rng_seed,
                           const CloneOptions& options) {
  Rng rng(rng_seed);
  std::string text = fn.text;
  std::vector<CloneTransformKind> kinds;
  {
    const SyntaxTree tree = ast::parse(fn.language, text);
    const ScopeInfo scope = ast::scope_of(tree);
    for (CloneTransformKind k : kAllTransformKinds) {
      if (!applicable(k, tree, scope).empty()) kinds.push_back(k);
    }
  }
  if (kinds.empty()) throw NoApplicableTransform("no transform applies to " + fn.id);
  const auto count = std::min<std::size_t>(static_cast<std::size_t>(rng.between(1, 4)),
                                           kinds.size());
  rng.shuffle(std::span<CloneTransformKind>(kinds));
  kinds.resize(count);

  CloneResult result;
  result.seed = rng_seed;
  std::uint64_t step = 0;
  for (CloneTransformKind kind : kinds) {
    const SyntaxTree tree = ast::parse(fn.language, text);
    const ScopeInfo scope = ast::scope_of(tree);
    std::vector<CloneSite> sites = applicable(kind, tree, scope);
    rng.shuffle(std::span<CloneSite>(sites));
    // a failing site is skipped in favour of the next one
    for (std::size_t i = 0; i < sites.size() && i < 8; ++i) {
      try {
        CloneResult r = apply_transform(sites[i], tree, scope, mix_seed(rng_seed, ++step), options);
        text = std::move(r.text);
        result.applied.insert(result.applied.end(), r.applied.begin(), r.applied.end());
        break;
      } catch (const TransformFailed&) {
      }
    }
  }
  if (result.applied.empty() || text == fn.text) {
    throw NoApplicableTransform("every candidate transform failed for " + fn.id);
  }
  result.text = std::move(text);
  return result;
}

}  // namespace cloneforge::clone
