#include "transform_util.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

#include "cloneforge/syntax.hpp"

namespace cloneforge::detail {

using ast::AstNode;
using ast::SyntaxTree;

std::vector<const AstNode*> function_nodes(const SyntaxTree& tree) {
  std::vector<const AstNode*> out;
  const AstNode* fn = tree.function();
  if (fn == nullptr) return out;
  for (const AstNode& n : tree.nodes()) {
    if (fn->span.contains(n.span) && fn->encloses(n)) out.push_back(&n);
  }
  return out;
}

bool contains_kind(const AstNode& n, std::string_view kind) {
  return !ast::collect(n, [&](const AstNode& c) { return c.kind == kind; }).empty();
}

bool has_preprocessor(const AstNode& n) {
  return !ast::collect(n, [](const AstNode& c) { return c.kind.starts_with("preproc"); })
              .empty();
}

const AstNode* first_named(const AstNode& n) {
  for (const AstNode* c : n.children) {
    if (c->is_named && !ast::is_comment(*c)) return c;
  }
  return nullptr;
}

int binary_precedence(std::string_view op) {
  if (op == "||") return 4;
  if (op == "&&") return 5;
  if (op == "|") return 6;
  if (op == "^") return 7;
  if (op == "&") return 8;
  if (op == "==" || op == "!=") return 9;
  if (op == "<" || op == ">" || op == "<=" || op == ">=" || op == "<=>") return 10;
  if (op == "<<" || op == ">>" || op == ">>>") return 11;
  if (op == "+" || op == "-") return 12;
  if (op == "*" || op == "/" || op == "%") return 13;
  return 14;
}

int precedence(const SyntaxTree& tree, const AstNode& expr) {
  if (expr.is("comma_expression")) return 1;
  if (expr.is("assignment_expression") || expr.is("lambda_expression")) return 2;
  if (ast::is_ternary(expr)) return 3;
  if (expr.is("instanceof_expression")) return 10;
  if (expr.is("binary_expression")) {
    const AstNode* op = ast::operator_token(expr);
    return op == nullptr ? 4 : binary_precedence(tree.text(*op));
  }
  if (expr.is("unary_expression") || expr.is("pointer_expression") ||
      expr.is("cast_expression") || expr.is("sizeof_expression")) {
    return 14;
  }
  return 20;
}

std::string operand_text(const SyntaxTree& tree, const AstNode& expr, int context) {
  std::string text(tree.text(expr));
  if (precedence(tree, expr) <= context) return "(" + text + ")";
  return text;
}

bool is_comparison(std::string_view op) {
  return op == "<" || op == ">" || op == "<=" || op == ">=" || op == "==" || op == "!=";
}

bool is_relational(std::string_view op) {
  return op == "<" || op == ">" || op == "<=" || op == ">=";
}

std::string_view mirrored_comparison(std::string_view op) {
  if (op == "<") return ">";
  if (op == ">") return "<";
  if (op == "<=") return ">=";
  if (op == ">=") return "<=";
  return op;
}

std::string_view negated_comparison(std::string_view op) {
  if (op == "<") return ">=";
  if (op == ">") return "<=";
  if (op == "<=") return ">";
  if (op == ">=") return "<";
  if (op == "==") return "!=";
  if (op == "!=") return "==";
  return op;
}

std::string indent_at(std::string_view source, std::size_t offset) {
  std::size_t begin = std::min(offset, source.size());
  while (begin > 0 && source[begin - 1] != '\n') --begin;
  std::size_t end = begin;
  while (end < source.size() && (source[end] == ' ' || source[end] == '\t')) ++end;
  return std::string(source.substr(begin, end - begin));
}

bool in_statement_list(const AstNode& stmt) {
  const AstNode* p = stmt.parent;
  if (p == nullptr) return false;
  if (ast::is_block(*p) || p->is("switch_block_statement_group")) return true;
  // case bodies: statements after the label, not the case value itself
  return p->is("case_statement") && stmt.field != "value";
}

namespace {
bool constant_true(const SyntaxTree& tree, const AstNode* cond) {
  if (cond == nullptr) return true;
  const AstNode* c = ast::strip_parens(ast::condition_expression(*cond->parent));
  if (c == nullptr) return false;
  const std::string_view t = tree.text(*c);
  return t == "1" || t == "true";
}
}  // namespace

bool ends_abruptly(const SyntaxTree& tree, const AstNode& stmt) {
  if (ast::is_jump_statement(stmt)) return true;
  if (ast::is_block(stmt)) {
    const auto stmts = ast::block_statements(stmt);
    return !stmts.empty() && ends_abruptly(tree, *stmts.back());
  }
  if (stmt.is("if_statement")) {
    const AstNode* then_b = ast::then_branch(stmt);
    const AstNode* else_b = ast::else_branch(stmt);
    return then_b != nullptr && else_b != nullptr && ends_abruptly(tree, *then_b) &&
           ends_abruptly(tree, *else_b);
  }
  if (stmt.is("while_statement") || stmt.is("do_statement") || stmt.is("for_statement")) {
    return constant_true(tree, stmt.child("condition"));
  }
  return stmt.is("try_statement") || stmt.is("try_with_resources_statement") ||
         stmt.is("switch_statement") || stmt.is("switch_expression") ||
         stmt.is("synchronized_statement") || stmt.is("labeled_statement");
}

const AstNode* jump_target(const AstNode& n, bool include_switch) {
  for (const AstNode* p = n.parent; p != nullptr; p = p->parent) {
    if (ast::is_function(*p) || p->is("lambda_expression")) return nullptr;
    if (ast::is_loop(*p)) return p;
    if (include_switch && (p->is("switch_statement") || p->is("switch_expression"))) return p;
  }
  return nullptr;
}

bool is_floating_literal(const SyntaxTree& tree, const AstNode& n) {
  if (n.is("decimal_floating_point_literal") || n.is("hex_floating_point_literal")) return true;
  if (!n.is("number_literal")) return false;
  const std::string_view t = tree.text(n);
  if (t.size() > 1 && t[0] == '0' && (t[1] == 'x' || t[1] == 'X')) {
    return t.find_first_of("pP") != std::string_view::npos;
  }
  return t.find_first_of(".eE") != std::string_view::npos;
}

bool mentions_floating(const SyntaxTree& tree, const ast::ScopeInfo& scope,
                       const AstNode& expr) {
  const auto hits = ast::collect(expr, [&](const AstNode& n) {
    if (is_floating_literal(tree, n)) return true;
    if (!n.is("identifier")) return false;
    const auto decl = scope.binding_of(n);
    return decl && ast::type_category(tree, scope.declarations()[*decl]) ==
                       ast::TypeCategory::Floating;
  });
  return !hits.empty();
}

namespace {
const std::set<std::string, std::less<>>& reserved_names() {
  static const std::set<std::string, std::less<>> names = {
      // C / C++
      "auto", "break", "case", "char", "const", "continue", "default", "do", "double", "else",
      "enum", "extern", "float", "for", "goto", "if", "inline", "int", "long", "register",
      "restrict", "return", "short", "signed", "sizeof", "static", "struct", "switch",
      "typedef", "union", "unsigned", "void", "volatile", "while", "_Bool", "_Complex",
      "_Alignas", "_Alignof", "_Atomic", "_Generic", "_Noreturn", "_Static_assert",
      "_Thread_local", "alignas", "alignof", "and", "and_eq", "asm", "bitand", "bitor", "bool",
      "catch", "char8_t", "char16_t", "char32_t", "class", "compl", "concept", "consteval",
      "constexpr", "constinit", "const_cast", "co_await", "co_return", "co_yield", "decltype",
      "delete", "dynamic_cast", "explicit", "export", "false", "friend", "mutable",
      "namespace", "new", "noexcept", "not", "not_eq", "nullptr", "operator", "or", "or_eq",
      "private", "protected", "public", "reinterpret_cast", "requires", "static_assert",
      "static_cast", "template", "this", "thread_local", "throw", "true", "try", "typeid",
      "typename", "using", "virtual", "wchar_t", "xor", "xor_eq", "final", "override",
      // Java
      "abstract", "assert", "boolean", "byte", "extends", "finally", "implements", "import",
      "instanceof", "interface", "native", "package", "strictfp", "super", "synchronized",
      "throws", "transient", "var", "record", "yield", "sealed", "permits", "null",
      // common macros, library names and entry points
      "main", "NULL", "EOF", "errno", "stdin", "stdout", "stderr", "size_t", "ssize_t",
      "ptrdiff_t", "assert", "printf", "fprintf", "sprintf", "snprintf", "scanf", "puts",
      "putchar", "getchar", "malloc", "calloc", "realloc", "free", "memcpy", "memset",
      "memmove", "memcmp", "strlen", "strcmp", "strncmp", "strcpy", "strncpy", "strcat",
      "exit", "abort", "abs", "labs", "fabs", "sqrt", "pow", "floor", "ceil", "log", "exp",
      "sin", "cos", "tan", "min", "max", "std", "String", "Object", "System", "Math",
      "Integer", "Long", "Double", "Boolean", "Character", "length", "offsetof", "va_list",
      "va_start", "va_end", "va_arg", "FILE", "bool", "INT_MAX", "INT_MIN", "UINT_MAX",
      "LONG_MAX", "LONG_MIN", "SIZE_MAX", "CHAR_BIT", "DBL_MAX", "FLT_MAX"};
  return names;
}
}  // namespace

bool is_reserved_name(std::string_view name) {
  if (name.size() >= 2 && name[0] == '_' && (name[1] == '_' || std::isupper(name[1]))) {
    return true;
  }
  return reserved_names().contains(name);
}

bool is_valid_identifier(std::string_view name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace cloneforge::detail
