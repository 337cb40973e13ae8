#include "cloneforge/syntax.hpp"

#include <array>
#include <algorithm>

namespace cloneforge::ast {

namespace {

template <std::size_t N>
bool one_of(std::string_view kind, const std::array<std::string_view, N>& kinds) {
  return std::find(kinds.begin(), kinds.end(), kind) != kinds.end();
}

constexpr std::array<std::string_view, 26> kStatementKinds = {
    "expression_statement", "declaration",        "local_variable_declaration",
    "if_statement",         "for_statement",      "while_statement",
    "do_statement",         "return_statement",   "break_statement",
    "continue_statement",   "compound_statement", "block",
    "switch_statement",     "switch_expression",  "goto_statement",
    "labeled_statement",    "throw_statement",    "try_statement",
    "for_range_loop",       "enhanced_for_statement", "synchronized_statement",
    "assert_statement",     "yield_statement",    "try_with_resources_statement",
    "case_statement",       "local_class_declaration"};

constexpr std::array<std::string_view, 13> kSideEffectKinds = {
    "call_expression",       "method_invocation",      "assignment_expression",
    "update_expression",     "object_creation_expression", "new_expression",
    "delete_expression",     "array_creation_expression",  "throw_expression",
    "co_await_expression",   "co_yield_statement",     "lambda_expression",
    "gnu_asm_expression"};

}  // namespace

bool is_function(const AstNode& n) {
  return n.is("function_definition") || n.is("method_declaration") ||
         n.is("constructor_declaration");
}

bool is_block(const AstNode& n) {
  return n.is("compound_statement") || n.is("block") || n.is("constructor_body");
}

bool is_local_declaration(const AstNode& n) {
  if (n.is("local_variable_declaration")) return true;
  if (!n.is("declaration")) return false;
  for (const AstNode* p = n.parent; p != nullptr; p = p->parent) {
    if (is_function(*p)) return true;
  }
  return false;
}

bool is_loop(const AstNode& n) {
  return n.is("for_statement") || n.is("while_statement") || n.is("do_statement") ||
         n.is("for_range_loop") || n.is("enhanced_for_statement");
}

bool is_scope_boundary(const AstNode& n) {
  return is_block(n) || is_function(n) || n.is("for_statement") || n.is("for_range_loop") ||
         n.is("enhanced_for_statement") || n.is("catch_clause") || n.is("lambda_expression") ||
         n.is("if_statement") || n.is("while_statement") || n.is("switch_statement") ||
         n.is("try_with_resources_statement") || n.is("translation_unit") || n.is("program");
}

bool is_ternary(const AstNode& n) {
  return n.is("conditional_expression") || n.is("ternary_expression");
}

bool is_call(const AstNode& n) { return n.is("call_expression") || n.is("method_invocation"); }

bool is_number_literal(const AstNode& n) {
  return n.is("number_literal") || n.is("decimal_integer_literal") ||
         n.is("hex_integer_literal") || n.is("octal_integer_literal") ||
         n.is("binary_integer_literal") || n.is("decimal_floating_point_literal") ||
         n.is("hex_floating_point_literal");
}

bool is_bool_literal(const AstNode& n) { return n.is("true") || n.is("false"); }

bool is_null_literal(const AstNode& n) { return n.is("null") || n.is("null_literal"); }

bool is_jump_statement(const AstNode& n) {
  return n.is("return_statement") || n.is("break_statement") || n.is("continue_statement") ||
         n.is("throw_statement") || n.is("goto_statement");
}

bool is_statement(const AstNode& n) {
  if (!n.is_named) return false;
  if (!one_of(n.kind, kStatementKinds)) return false;
  if (n.is("declaration")) return is_local_declaration(n);
  return true;
}

const AstNode* function_body(const AstNode& fn) { return fn.child("body"); }

const AstNode* function_name(const AstNode& fn) {
  if (fn.is("method_declaration") || fn.is("constructor_declaration")) {
    return fn.child("name");
  }
  const AstNode* d = fn.child("declarator");
  while (d != nullptr && !d->is("function_declarator")) {
    d = d->child("declarator");
  }
  if (d == nullptr) return nullptr;
  const AstNode* name = d->child("declarator");
  if (name != nullptr && name->is("identifier")) return name;
  return nullptr;
}

const AstNode* declarator_name(const AstNode* d) {
  while (d != nullptr) {
    if (d->is("identifier")) return d;
    if (const AstNode* inner = d->child("declarator")) {
      d = inner;
      continue;
    }
    if (const AstNode* name = d->child("name")) {
      d = name;
      continue;
    }
    if (d->is("reference_declarator") || d->is("parenthesized_declarator")) {
      const AstNode* next = nullptr;
      for (const AstNode* c : d->children) {
        if (c->is_named) next = c;
      }
      d = next;
      continue;
    }
    return nullptr;
  }
  return nullptr;
}

std::vector<const AstNode*> declarators(const AstNode& decl) {
  if (decl.is("formal_parameter") || decl.is("catch_formal_parameter") ||
      decl.is("enhanced_for_statement")) {
    return {&decl};
  }
  if (decl.is("spread_parameter")) {
    std::vector<const AstNode*> out;
    for (const AstNode* c : decl.children) {
      if (c->is("variable_declarator")) out.push_back(c);
    }
    return out;
  }
  return decl.children_by_field("declarator");
}

const AstNode* declarator_value(const AstNode& declarator) {
  if (declarator.is("init_declarator") || declarator.is("variable_declarator")) {
    return declarator.child("value");
  }
  return nullptr;
}

namespace {
const AstNode* shape_of(const AstNode& declarator) {
  const AstNode* d = &declarator;
  if (d->is("init_declarator")) d = d->child("declarator");
  return d;
}
}  // namespace

bool declares_pointer(const AstNode& declarator) {
  const AstNode* d = shape_of(declarator);
  return d != nullptr && d->is("pointer_declarator");
}

bool declares_array(const AstNode& declarator) {
  const AstNode* d = shape_of(declarator);
  if (d == nullptr) return false;
  if (d->is("array_declarator")) return true;
  return d->is("variable_declarator") && d->child("dimensions") != nullptr;
}

bool declares_reference(const AstNode& declarator) {
  const AstNode* d = shape_of(declarator);
  return d != nullptr && d->is("reference_declarator");
}

const AstNode* condition_wrapper(const AstNode& stmt) { return stmt.child("condition"); }

const AstNode* condition_expression(const AstNode& stmt) {
  const AstNode* c = stmt.child("condition");
  if (c == nullptr) return nullptr;
  if (c->is("condition_clause")) {
    if (c->child("initializer") != nullptr) return nullptr;
    return c->child("value");
  }
  if (c->is("parenthesized_expression") && !stmt.is("for_statement")) {
    for (const AstNode* child : c->children) {
      if (child->is_named && !is_comment(*child)) return child;
    }
    return nullptr;
  }
  return c;
}

const AstNode* then_branch(const AstNode& if_stmt) { return if_stmt.child("consequence"); }

const AstNode* else_branch(const AstNode& if_stmt) {
  const AstNode* alt = if_stmt.child("alternative");
  if (alt == nullptr) return nullptr;
  if (alt->is("else_clause")) {
    for (const AstNode* c : alt->children) {
      if (c->is_named && !is_comment(*c)) return c;
    }
    return nullptr;
  }
  return alt;
}

const AstNode* operator_token(const AstNode& expr) {
  if (const AstNode* op = expr.child("operator")) return op;
  for (const AstNode* c : expr.children) {
    if (!c->is_named && c->is_terminal && c->kind != "(" && c->kind != ")") return c;
  }
  return nullptr;
}

const AstNode* update_operand(const AstNode& update) {
  if (const AstNode* a = update.child("argument")) return a;
  for (const AstNode* c : update.children) {
    if (c->is_named && !is_comment(*c)) return c;
  }
  return nullptr;
}

bool is_prefix_update(const AstNode& update) {
  const AstNode* op = operator_token(update);
  const AstNode* arg = update_operand(update);
  return op != nullptr && arg != nullptr && op->span.start < arg->span.start;
}

const AstNode* strip_parens(const AstNode* n) {
  while (n != nullptr && n->is("parenthesized_expression")) {
    const AstNode* inner = nullptr;
    for (const AstNode* c : n->children) {
      if (c->is_named && !is_comment(*c)) {
        inner = c;
        break;
      }
    }
    n = inner;
  }
  return n;
}

std::vector<const AstNode*> collect(const AstNode& n,
                                    const std::function<bool(const AstNode&)>& pred,
                                    const std::function<bool(const AstNode&)>& prune) {
  std::vector<const AstNode*> out;
  std::vector<const AstNode*> stack{&n};
  while (!stack.empty()) {
    const AstNode* cur = stack.back();
    stack.pop_back();
    if (pred(*cur)) out.push_back(cur);
    if (cur != &n && prune && prune(*cur)) continue;
    for (auto it = cur->children.rbegin(); it != cur->children.rend(); ++it) {
      stack.push_back(*it);
    }
  }
  return out;
}

bool has_side_effects(const AstNode& expr) {
  return !collect(expr, [](const AstNode& n) { return one_of(n.kind, kSideEffectKinds); })
              .empty();
}

std::vector<const AstNode*> identifier_uses(const AstNode& n) {
  return collect(
      n,
      [](const AstNode& c) {
        if (!c.is("identifier")) return false;
        const AstNode* p = c.parent;
        if (p == nullptr) return true;
        if (p->is("method_invocation") && c.field == "name") return false;
        if (p->is("field_access") && c.field == "field") return false;
        if (p->is("template_function") && c.field == "name") return false;
        if (p->is("labeled_statement") || p->is("break_statement") ||
            p->is("continue_statement")) {
          return false;
        }
        if (p->is("method_reference")) return false;
        return true;
      },
      [](const AstNode& c) {
        return c.is("qualified_identifier") || c.is("scoped_identifier") ||
               c.is("marker_annotation") || c.is("annotation") || c.is("template_argument_list");
      });
}

std::string_view false_literal(Language lang) { return lang == Language::C ? "0" : "false"; }
std::string_view true_literal(Language lang) { return lang == Language::C ? "1" : "true"; }

std::string_view null_literal(Language lang) {
  switch (lang) {
    case Language::C:
      return "NULL";
    case Language::Cpp:
      return "nullptr";
    case Language::Java:
      return "null";
  }
  return "NULL";
}

std::vector<const AstNode*> block_statements(const AstNode& block) {
  std::vector<const AstNode*> out;
  for (const AstNode* c : block.children) {
    if (c->is_named && !is_comment(*c)) out.push_back(c);
  }
  return out;
}

}  // namespace cloneforge::ast
