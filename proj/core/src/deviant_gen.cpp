#include "cloneforge/deviant_gen.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <set>

#include "cloneforge/render.hpp"
#include "cloneforge/rng.hpp"
#include "cloneforge/syntax.hpp"
#include "transform_util.hpp"

namespace cloneforge::deviant {

using ast::AstNode;
using ast::Declaration;
using ast::ScopeInfo;
using ast::SyntaxTree;
using ast::TypeCategory;
using detail::first_named;
using detail::function_nodes;

std::string_view to_string(BugKind kind) {
  switch (kind) {
    case BugKind::Operator:
      return "Operator";
    case BugKind::DataType:
      return "DataType";
    case BugKind::Variable:
      return "Variable";
    case BugKind::Value:
      return "Value";
    case BugKind::Pointer:
      return "Pointer";
    case BugKind::Statement:
      return "Statement";
    case BugKind::FunctionCall:
      return "FunctionCall";
  }
  return "?";
}

std::size_t token_edit_distance(const std::vector<std::string>& a,
                                const std::vector<std::string>& b) {
  std::size_t prefix = 0;
  while (prefix < a.size() && prefix < b.size() && a[prefix] == b[prefix]) ++prefix;
  std::size_t suffix = 0;
  while (suffix < a.size() - prefix && suffix < b.size() - prefix &&
         a[a.size() - 1 - suffix] == b[b.size() - 1 - suffix]) {
    ++suffix;
  }
  const std::size_t n = a.size() - prefix - suffix;
  const std::size_t m = b.size() - prefix - suffix;
  std::vector<std::size_t> row(m + 1);
  for (std::size_t j = 0; j <= m; ++j) row[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t up = row[j];
      const bool same = a[prefix + i - 1] == b[prefix + j - 1];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (same ? 0 : 1)});
      diag = up;
    }
  }
  return row[m];
}

namespace {

const Declaration* declaration_of(const ScopeInfo& scope, const AstNode& id) {
  const auto d = scope.binding_of(id);
  return d ? &scope.declarations()[*d] : nullptr;
}

bool has_qualifier(const SyntaxTree& tree, const AstNode& decl, std::string_view q) {
  for (const AstNode* c : decl.children) {
    if ((c->is("type_qualifier") || c->is("modifiers")) &&
        tree.text(*c).find(q) != std::string_view::npos) {
      return true;
    }
  }
  return false;
}

bool is_local_or_param(const Declaration& d) { return d.kind != ast::DeclKind::Function; }

// ---------------------------------------------------------------------------
// ① operators

constexpr std::array<std::string_view, 6> kComparisons = {"<", "<=", ">", ">=", "==", "!="};
constexpr std::array<std::string_view, 5> kArithmetic = {"+", "-", "*", "/", "%"};

bool arithmetic_operands_ok(const SyntaxTree& tree, const ScopeInfo& scope, const AstNode& e) {
  const bool java = tree.language() == Language::Java;
  const auto bad = ast::collect(e, [&](const AstNode& n) {
    if (n.is("string_literal") || n.is("concatenated_string") || n.is("char_literal") ||
        n.is("character_literal")) {
      return true;
    }
    if (java && (ast::is_call(n) || n.is("field_access") || n.is("object_creation_expression"))) {
      return true;
    }
    if (!n.is("identifier")) return false;
    const Declaration* d = declaration_of(scope, n);
    if (d == nullptr) return java;
    const TypeCategory c = ast::type_category(tree, *d);
    if (c == TypeCategory::Pointer || c == TypeCategory::Array) {
      // subscripted arrays are fine: a[i] + 1
      return !(n.parent != nullptr && n.parent->is("subscript_expression") &&
               n.field == "argument") &&
             !(n.parent != nullptr && n.parent->is("array_access"));
    }
    return java && c != TypeCategory::Integral && c != TypeCategory::Floating;
  });
  return bad.empty();
}

std::vector<BugSite> operator_sites(const SyntaxTree& tree, const ScopeInfo& scope) {
  std::vector<BugSite> out;
  for (const AstNode* n : function_nodes(tree)) {
    if (!n->is("binary_expression")) continue;
    const AstNode* op = ast::operator_token(*n);
    if (op == nullptr || detail::contains_kind(*n, "template_argument_list")) continue;
    const std::string_view o = tree.text(*op);
    const bool cmp = std::find(kComparisons.begin(), kComparisons.end(), o) != kComparisons.end();
    const bool arith = std::find(kArithmetic.begin(), kArithmetic.end(), o) != kArithmetic.end();
    if (!cmp && !arith) continue;
    if (arith && !arithmetic_operands_ok(tree, scope, *n)) continue;
    out.push_back(BugSite{BugKind::Operator, op->span, n->index, 0});
  }
  return out;
}

std::string operator_replacement(const SyntaxTree& tree, const ScopeInfo& scope,
                                 const AstNode& expr, std::string_view op, Rng& rng) {
  std::vector<std::string_view> pool;
  if (std::find(kComparisons.begin(), kComparisons.end(), op) != kComparisons.end()) {
    pool.assign(kComparisons.begin(), kComparisons.end());
  } else {
    const bool floating = detail::mentions_floating(tree, scope, expr);
    for (std::string_view a : kArithmetic) {
      if (a == "%" && floating) continue;
      pool.push_back(a);
    }
  }
  std::erase(pool, op);
  if (pool.empty()) throw InjectionFailed("no alternative operator");
  return std::string(pool[rng.below(pool.size())]);
}

// ---------------------------------------------------------------------------
// ② data types

std::vector<std::string> type_family(const SyntaxTree& tree, const AstNode& type) {
  const std::string_view t = tree.text(type);
  if (tree.language() == Language::Java) {
    if (t == "byte") return {"short", "int", "long"};
    if (t == "short") return {"int", "long"};
    if (t == "char" || t == "int") return {"long"};
    if (t == "float") return {"double"};
    return {};
  }
  if (t == "float" || t == "double") return {"float", "double"};
  if (t == "char" || t == "bool" || t == "_Bool" || t == "void") return {};
  if (!type.is("primitive_type") && !type.is("sized_type_specifier")) return {};
  if (t.find("double") != std::string_view::npos) return {};
  if (type.is("primitive_type") && t != "int" && t != "short" && t != "long" && t != "size_t" &&
      t != "unsigned") {
    return {};
  }
  std::vector<std::string> family = {"short", "int", "long", "unsigned"};
  if (tree.source().find("size_t") != std::string_view::npos) family.emplace_back("size_t");
  return family;
}

bool address_taken(const SyntaxTree& tree, const ScopeInfo& scope, std::size_t decl) {
  for (const AstNode* use : scope.uses_of(decl)) {
    const AstNode* p = use->parent;
    if (p != nullptr && p->is("pointer_expression") && p->child("operator") != nullptr &&
        tree.text(*p->child("operator")) == "&") {
      return true;
    }
  }
  return false;
}

// "long int" and "long" name the same type; so do "unsigned" and "unsigned int".
std::string canonical_type(std::string_view t) {
  std::string s(t);
  if (s.starts_with("signed ")) s.erase(0, 7);
  if (s.size() > 4 && s.ends_with(" int")) s.resize(s.size() - 4);
  if (s == "signed") s = "int";
  return s;
}

std::vector<std::string> alternative_types(const SyntaxTree& tree, const AstNode& type) {
  std::vector<std::string> family = type_family(tree, type);
  const std::string self = canonical_type(tree.text(type));
  std::erase_if(family, [&](const std::string& f) { return canonical_type(f) == self; });
  return family;
}

std::vector<BugSite> datatype_sites(const SyntaxTree& tree, const ScopeInfo& scope) {
  std::vector<BugSite> out;
  for (const AstNode* n : function_nodes(tree)) {
    if (!ast::is_local_declaration(*n)) continue;
    const AstNode* type = n->child("type");
    if (type == nullptr) continue;
    if (alternative_types(tree, *type).empty()) continue;
    bool ok = true;
    for (const AstNode* d : ast::declarators(*n)) {
      const AstNode* shape = d->is("init_declarator") ? d->child("declarator") : d;
      if (shape == nullptr || !(shape->is("identifier") || shape->is("variable_declarator"))) {
        ok = false;
        break;
      }
      if (shape->is("variable_declarator") && shape->child("dimensions") != nullptr) ok = false;
      const AstNode* name = ast::declarator_name(d);
      if (name == nullptr) {
        ok = false;
        break;
      }
      const auto decl = scope.binding_of(*name);
      if (!decl || address_taken(tree, scope, *decl)) ok = false;
    }
    if (ok) out.push_back(BugSite{BugKind::DataType, type->span, n->index, 0});
  }
  return out;
}

// ---------------------------------------------------------------------------
// ③ variables

bool is_lvalue_position(const AstNode& id) {
  const AstNode* p = id.parent;
  if (p == nullptr) return false;
  if (p->is("assignment_expression") && id.field == "left") return true;
  if (p->is("update_expression")) return true;
  return p->is("pointer_expression") && p->children.front()->kind == "&";
}

bool has_initializer(const Declaration& d) {
  if (d.kind == ast::DeclKind::Parameter) return true;
  const AstNode* p = d.name_node->parent;
  while (p != nullptr && p != d.decl_node) {
    if ((p->is("init_declarator") || p->is("variable_declarator")) &&
        p->child("value") != nullptr) {
      return true;
    }
    p = p->parent;
  }
  return d.decl_node->is("enhanced_for_statement") || d.decl_node->is("for_range_loop");
}

bool scalar(TypeCategory c) {
  return c == TypeCategory::Integral || c == TypeCategory::Floating ||
         c == TypeCategory::Boolean || c == TypeCategory::Pointer;
}

std::vector<std::size_t> substitutes(const SyntaxTree& tree, const ScopeInfo& scope,
                                     const AstNode& use) {
  std::vector<std::size_t> out;
  const auto bound = scope.binding_of(use);
  if (!bound) return out;
  const Declaration& d = scope.declarations()[*bound];
  const std::string type = ast::declared_type_text(tree, d);
  const TypeCategory cat = ast::type_category(tree, d);
  const bool lvalue = is_lvalue_position(use);
  for (std::size_t other : scope.visible_at(use.span.start)) {
    if (other == *bound) continue;
    const Declaration& o = scope.declarations()[other];
    if (!is_local_or_param(o) || o.name == d.name) continue;
    if (ast::type_category(tree, o) != cat || ast::declared_type_text(tree, o) != type) continue;
    if (!has_initializer(o)) continue;
    if (lvalue && (has_qualifier(tree, *o.decl_node, "const") ||
                   has_qualifier(tree, *o.decl_node, "final"))) {
      continue;
    }
    out.push_back(other);
  }
  return out;
}

const AstNode* init_declarator_of(const AstNode& name) {
  const AstNode* p = name.parent;
  while (p != nullptr && !p->is("init_declarator") && !p->is("variable_declarator")) {
    if (ast::is_local_declaration(*p)) return nullptr;
    p = p->parent;
  }
  return p;
}

std::vector<BugSite> variable_sites(const SyntaxTree& tree, const ScopeInfo& scope) {
  std::vector<BugSite> out;
  const AstNode* fn = tree.function();
  if (fn == nullptr) return out;
  for (const ast::IdentifierUse& use : scope.uses()) {
    if (!fn->encloses(*use.node) || !use.declaration) continue;
    const Declaration& d = scope.declarations()[*use.declaration];
    if (!is_local_or_param(d) || !scalar(ast::type_category(tree, d))) continue;
    if (substitutes(tree, scope, *use.node).empty()) continue;
    out.push_back(BugSite{BugKind::Variable, use.node->span, use.node->index, 0});
  }
  for (std::size_t i = 0; i < scope.declarations().size(); ++i) {
    const Declaration& d = scope.declarations()[i];
    if (d.kind != ast::DeclKind::Local || !fn->encloses(*d.name_node)) continue;
    if (!ast::is_local_declaration(*d.decl_node)) continue;
    const TypeCategory cat = ast::type_category(tree, d);
    if (cat == TypeCategory::Pointer || cat == TypeCategory::Reference ||
        cat == TypeCategory::Array) {
      continue;
    }
    if (has_qualifier(tree, *d.decl_node, "const") || has_qualifier(tree, *d.decl_node, "final")) {
      continue;
    }
    const AstNode* type = ast::declared_type_node(d);
    if (type == nullptr || type->is("placeholder_type_specifier") ||
        tree.text(*type) == "auto" || tree.text(*type) == "var") {
      continue;
    }
    const AstNode* init = init_declarator_of(*d.name_node);
    if (init == nullptr || init->child("value") == nullptr) continue;
    const AstNode* value = init->child("value");
    const std::size_t from = d.name_node->span.end;
    out.push_back(BugSite{BugKind::Variable, Span{from, value->span.end}, init->index, 1});
  }
  return out;
}

// ---------------------------------------------------------------------------
// ④ values

struct Number {
  bool floating = false;
  bool hex = false;
  bool is_unsigned = false;
  bool is_long = false;
  long long integer = 0;
  double real = 0.0;
  std::string suffix;
};

std::optional<Number> parse_number(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != '_' && c != '\'') s += c;
  }
  Number n;
  const bool hex = s.size() > 1 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X');
  const bool binary = s.size() > 1 && s[0] == '0' && (s[1] == 'b' || s[1] == 'B');
  n.hex = hex;
  n.floating = !hex && !binary && s.find_first_of(".eE") != std::string::npos;
  if (!n.floating && !hex && !binary && !s.empty() &&
      (s.back() == 'f' || s.back() == 'F' || s.back() == 'd' || s.back() == 'D')) {
    n.floating = true;
  }
  if (hex && s.find_first_of("pP") != std::string::npos) return std::nullopt;
  std::size_t end = s.size();
  const std::string_view suffix_chars = n.floating ? "fFlLdD" : "uUlL";
  while (end > 0 && suffix_chars.find(s[end - 1]) != std::string_view::npos) --end;
  n.suffix = s.substr(end);
  s.resize(end);
  if (s.empty()) return std::nullopt;
  n.is_unsigned = n.suffix.find_first_of("uU") != std::string::npos;
  n.is_long = n.suffix.find_first_of("lL") != std::string::npos;
  if (n.floating) {
    char* stop = nullptr;
    n.real = std::strtod(s.c_str(), &stop);
    if (stop != s.c_str() + s.size() || !std::isfinite(n.real)) return std::nullopt;
    return n;
  }
  int base = 10;
  std::size_t start = 0;
  if (hex || binary) {
    base = hex ? 16 : 2;
    start = 2;
  } else if (s.size() > 1 && s[0] == '0') {
    base = 8;
    start = 1;
  }
  const auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + s.size(), n.integer, base);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return n;
}

std::string render_number(const Number& original, long long v) {
  std::string body;
  const unsigned long long mag =
      v < 0 ? 0ULL - static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
  if (original.hex) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, mag, 16);
    (void)ec;
    body = "0x" + std::string(buf, ptr);
  } else {
    body = std::to_string(mag);
  }
  body += original.suffix;
  return v < 0 ? "(-" + body + ")" : body;
}

std::string render_real(const Number& original, double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, std::fabs(v));
  (void)ec;
  std::string body(buf, ptr);
  if (body.find_first_of(".e") == std::string::npos) body += ".0";
  body += original.suffix;
  return v < 0 ? "(-" + body + ")" : body;
}

bool literal_context_ok(const AstNode& lit) {
  for (const AstNode* p = lit.parent; p != nullptr; p = p->parent) {
    if (p->is("case_statement") || p->is("switch_label") || p->is("array_declarator") ||
        p->is("dimensions") || p->is("template_argument_list") || p->is("enumerator") ||
        p->is("bitfield_clause") || p->is("annotation") || p->is("preproc_def") ||
        p->is("dimensions_expr") || p->is("array_creation_expression")) {
      return false;
    }
    if (ast::is_statement(*p)) return true;
  }
  return true;
}

std::vector<std::string> value_candidates(const SyntaxTree& tree, const AstNode& lit) {
  std::vector<std::string> out;
  const std::string_view text = tree.text(lit);
  if (ast::is_bool_literal(lit)) {
    out.emplace_back(text == "true" ? "false" : "true");
    return out;
  }
  const auto num = parse_number(text);
  if (!num) return out;
  if (num->floating) {
    const double v = num->real;
    for (double c : {0.0, 1.0, -1.0, v + 1, v - 1, 2 * v}) {
      if (c == v || !std::isfinite(c)) continue;
      std::string r = render_real(*num, c);
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
    }
    return out;
  }
  const long long v = num->integer;
  const long long limit =
      num->is_long ? (1LL << 62) : 2147483647LL;
  for (long long c : {0LL, 1LL, -1LL, v + 1, v - 1, 2 * v}) {
    if (c == v || c > limit || c < -limit) continue;
    if (c < 0 && (num->is_unsigned || num->hex)) continue;
    std::string r = render_number(*num, c);
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  }
  return out;
}

std::vector<BugSite> value_sites(const SyntaxTree& tree) {
  std::vector<BugSite> out;
  for (const AstNode* n : function_nodes(tree)) {
    if (!(ast::is_number_literal(*n) || ast::is_bool_literal(*n))) continue;
    if (!literal_context_ok(*n)) continue;
    if (value_candidates(tree, *n).empty()) continue;
    out.push_back(BugSite{BugKind::Value, n->span, n->index, 0});
  }
  return out;
}

// ---------------------------------------------------------------------------
// ⑤ pointers

bool pointer_like(const SyntaxTree& tree, const Declaration& d) {
  const TypeCategory c = ast::type_category(tree, d);
  if (tree.language() != Language::Java) return c == TypeCategory::Pointer;
  if (c == TypeCategory::Array) return true;
  if (c != TypeCategory::Other) return false;
  const AstNode* type = ast::declared_type_node(d);
  return type != nullptr && tree.text(*type) != "var";
}

std::vector<BugSite> pointer_sites(const SyntaxTree& tree, const ScopeInfo& scope) {
  std::vector<BugSite> out;
  const AstNode* fn = tree.function();
  if (fn == nullptr) return out;
  for (const Declaration& d : scope.declarations()) {
    if (d.kind != ast::DeclKind::Local || !fn->encloses(*d.name_node)) continue;
    if (!ast::is_local_declaration(*d.decl_node) || !pointer_like(tree, d)) continue;
    const AstNode* init = init_declarator_of(*d.name_node);
    if (init == nullptr || init->child("value") == nullptr) continue;
    if (ast::is_null_literal(*init->child("value"))) continue;
    if (init->child("value")->is("initializer_list") ||
        init->child("value")->is("array_initializer")) {
      continue;
    }
    out.push_back(BugSite{BugKind::Pointer, init->child("value")->span, init->index, 0});
  }
  for (const AstNode* n : function_nodes(tree)) {
    if (!n->is("assignment_expression")) continue;
    const AstNode* left = n->child("left");
    const AstNode* right = n->child("right");
    if (left == nullptr || right == nullptr || !left->is("identifier")) continue;
    if (tree.text(*ast::operator_token(*n)) != "=" || ast::is_null_literal(*right)) continue;
    const Declaration* d = declaration_of(scope, *left);
    if (d == nullptr || !pointer_like(tree, *d)) continue;
    out.push_back(BugSite{BugKind::Pointer, right->span, n->index, 1});
  }
  return out;
}

// ---------------------------------------------------------------------------
// ⑥ statements

std::vector<BugSite> statement_sites(const SyntaxTree& tree) {
  std::vector<BugSite> out;
  for (const AstNode* n : function_nodes(tree)) {
    if (!n->is("if_statement") || ast::else_branch(*n) != nullptr) continue;
    const AstNode* then_b = ast::then_branch(*n);
    if (then_b == nullptr) continue;
    if (ast::is_block(*then_b)) {
      const std::size_t count = ast::block_statements(*then_b).size();
      if (count == 0 || count > kMaxRemovedStatements) continue;
    }
    out.push_back(BugSite{BugKind::Statement, n->span, n->index, 0});
  }
  return out;
}

// ---------------------------------------------------------------------------
// ⑦ calls

std::vector<const AstNode*> call_arguments(const AstNode& args) {
  std::vector<const AstNode*> out;
  for (const AstNode* c : args.children) {
    if (c->is_named && !ast::is_comment(*c)) out.push_back(c);
  }
  return out;
}

bool self_call(const SyntaxTree& tree, const AstNode& call) {
  const AstNode* fn = tree.function();
  const AstNode* name = fn != nullptr ? ast::function_name(*fn) : nullptr;
  if (name == nullptr) return false;
  const AstNode* callee = call.is("method_invocation") ? call.child("name") : call.child("function");
  return callee != nullptr && tree.text(*callee) == tree.text(*name);
}

std::vector<BugSite> call_sites(const SyntaxTree& tree) {
  std::vector<BugSite> out;
  for (const AstNode* n : function_nodes(tree)) {
    if (!ast::is_call(*n)) continue;
    const AstNode* args = n->child("arguments");
    if (args == nullptr || !args->is("argument_list")) continue;
    if (detail::has_preprocessor(*n)) continue;
    out.push_back(BugSite{BugKind::FunctionCall, args->span, n->index, 0});
  }
  return out;
}

std::string join_args(const std::vector<std::string>& args) {
  std::string out = "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += ", ";
    out += args[i];
  }
  return out + ")";
}

std::string call_replacement(const SyntaxTree& tree, const ScopeInfo& scope, const AstNode& call,
                             Rng& rng) {
  const AstNode& args_node = *call.child("arguments");
  std::vector<std::string> args;
  for (const AstNode* a : call_arguments(args_node)) args.emplace_back(tree.text(*a));
  const std::string null(ast::null_literal(tree.language()));

  enum Op { Add, Remove, Swap, Null };
  std::vector<Op> ops;
  if (!self_call(tree, call)) ops.push_back(Add);
  if (!args.empty()) ops.push_back(Remove);
  if (args.size() >= 2) {
    bool distinct = false;
    for (const std::string& a : args) distinct |= a != args.front();
    if (distinct) ops.push_back(Swap);
  }
  if (std::any_of(args.begin(), args.end(), [&](const std::string& a) { return a != null; })) {
    ops.push_back(Null);
  }
  if (ops.empty()) throw InjectionFailed("call admits no argument change");
  switch (ops[rng.below(ops.size())]) {
    case Add: {
      std::vector<std::string> pool;
      for (std::size_t d : scope.visible_at(args_node.span.start)) {
        const Declaration& decl = scope.declarations()[d];
        if (is_local_or_param(decl)) pool.push_back(decl.name);
      }
      std::sort(pool.begin(), pool.end());
      pool.push_back(tree.language() == Language::C ? "0" : null);
      args.push_back(pool[rng.below(pool.size())]);
      break;
    }
    case Remove:
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(rng.below(args.size())));
      break;
    case Swap: {
      std::size_t i = 0;
      std::size_t j = 0;
      do {
        i = rng.below(args.size());
        j = rng.below(args.size());
      } while (args[i] == args[j]);
      std::swap(args[i], args[j]);
      break;
    }
    case Null: {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] != null) idx.push_back(i);
      }
      args[idx[rng.below(idx.size())]] = null;
      break;
    }
  }
  return join_args(args);
}

}  // namespace

std::vector<BugSite> bug_sites(BugKind kind, const SyntaxTree& tree, const ScopeInfo& scope) {
  const AstNode* fn = tree.function();
  if (fn == nullptr) return {};
  const AstNode* body = ast::function_body(*fn);
  if (body == nullptr || ast::block_statements(*body).empty()) return {};
  switch (kind) {
    case BugKind::Operator:
      return operator_sites(tree, scope);
    case BugKind::DataType:
      return datatype_sites(tree, scope);
    case BugKind::Variable:
      return variable_sites(tree, scope);
    case BugKind::Value:
      return value_sites(tree);
    case BugKind::Pointer:
      return pointer_sites(tree, scope);
    case BugKind::Statement:
      return statement_sites(tree);
    case BugKind::FunctionCall:
      return call_sites(tree);
  }
  return {};
}

DeviantResult inject_bug(const BugSite& site, const SyntaxTree& tree, const ScopeInfo& scope,
                         std::uint64_t rng_seed) {
  if (site.node >= tree.nodes().size()) throw InjectionFailed("site does not belong to tree");
  const AstNode& anchor = tree.nodes()[site.node];
  Rng rng(rng_seed);
  std::string after;
  switch (site.kind) {
    case BugKind::Operator:
      after = operator_replacement(tree, scope, anchor, tree.text(site.span), rng);
      break;
    case BugKind::DataType: {
      const std::vector<std::string> family = alternative_types(tree, *anchor.child("type"));
      if (family.empty()) throw InjectionFailed("no alternative type");
      after = family[rng.below(family.size())];
      break;
    }
    case BugKind::Variable:
      if (site.aux == 0) {
        const auto pool = substitutes(tree, scope, anchor);
        if (pool.empty()) throw InjectionFailed("no substitute variable");
        after = scope.declarations()[pool[rng.below(pool.size())]].name;
      }
      break;
    case BugKind::Value: {
      const auto pool = value_candidates(tree, anchor);
      if (pool.empty()) throw InjectionFailed("no alternative value");
      after = pool[rng.below(pool.size())];
      break;
    }
    case BugKind::Pointer:
      if (site.aux == 0 && rng.below(2) == 0) {
        // drop the initializer: "p = expr" -> "p"
        const AstNode* name = ast::declarator_name(&anchor);
        const Span span{name->span.end, site.span.end};
        const DeviantResult r{ast::render(tree, {{span, ""}}),
                              {BugKind::Pointer, span, std::string(tree.text(span)), ""},
                              rng_seed};
        return r;
      }
      after = std::string(ast::null_literal(tree.language()));
      break;
    case BugKind::Statement:
      after = detail::in_statement_list(anchor) ? "" : ";";
      break;
    case BugKind::FunctionCall:
      after = call_replacement(tree, scope, anchor, rng);
      break;
  }
  const std::string before(tree.text(site.span));
  if (after == before) throw InjectionFailed("edit is the identity");
  try {
    DeviantResult r;
    r.text = ast::render(tree, {{site.span, after}});
    r.bug = InjectedBug{site.kind, site.span, before, after};
    r.seed = rng_seed;
    return r;
  } catch (const ast::PostEditParseFailure& e) {
    throw InjectionFailed(std::string(to_string(site.kind)) + ": " + e.what());
  }
}

DeviantResult generate_deviant(const ast::SourceFunction& fn, std::uint64_t rng_seed) {
  const SyntaxTree tree = ast::parse(fn.language, fn.text);
  const ScopeInfo scope = ast::scope_of(tree);
  const std::vector<std::string> original = ast::token_texts(tree);
  const double budget = kMaxEditFraction * static_cast<double>(original.size());

  std::vector<std::pair<BugKind, std::vector<BugSite>>> kinds;
  for (BugKind k : kAllBugKinds) {
    auto sites = bug_sites(k, tree, scope);
    if (!sites.empty()) kinds.emplace_back(k, std::move(sites));
  }
  Rng rng(rng_seed);
  std::uint64_t attempt = 0;
  while (!kinds.empty()) {
    const std::size_t pick = rng.below(kinds.size());
    auto& sites = kinds[pick].second;
    rng.shuffle(std::span<BugSite>(sites));
    for (const BugSite& site : sites) {
      try {
        DeviantResult r = inject_bug(site, tree, scope, mix_seed(rng_seed, ++attempt));
        const auto tokens = ast::token_texts(ast::parse(fn.language, r.text));
        if (static_cast<double>(token_edit_distance(original, tokens)) > budget) continue;
        r.seed = rng_seed;
        return r;
      } catch (const InjectionFailed&) {
      }
    }
    kinds.erase(kinds.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  throw NoApplicableBug("no bug site applies to " + fn.id);
}

}  // namespace cloneforge::deviant
