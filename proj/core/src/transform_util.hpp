#pragma once

// Helpers shared by the clone and deviant generators. Not installed.

#include <string>
#include <string_view>
#include <vector>

#include "cloneforge/ast.hpp"
#include "cloneforge/scope.hpp"

namespace cloneforge::detail {

/// Every node of the tree's first function, in preorder.
std::vector<const ast::AstNode*> function_nodes(const ast::SyntaxTree& tree);
bool contains_kind(const ast::AstNode& n, std::string_view kind);
bool has_preprocessor(const ast::AstNode& n);
/// First named, non-comment child.
const ast::AstNode* first_named(const ast::AstNode& n);

/// Binding strength of an expression node; higher binds tighter.
int precedence(const ast::SyntaxTree& tree, const ast::AstNode& expr);
int binary_precedence(std::string_view op);
/// Source text of `expr`, parenthesized when it binds no tighter than `context`.
std::string operand_text(const ast::SyntaxTree& tree, const ast::AstNode& expr, int context);

bool is_comparison(std::string_view op);
bool is_relational(std::string_view op);
std::string_view mirrored_comparison(std::string_view op);
std::string_view negated_comparison(std::string_view op);

/// Leading whitespace of the line containing `offset`.
std::string indent_at(std::string_view source, std::size_t offset);
/// True when `stmt` sits in a statement list (block, case body), so it may be
/// replaced by several statements without braces.
bool in_statement_list(const ast::AstNode& stmt);
/// Conservative "cannot complete normally": jumps, if/else whose branches both
/// end abruptly, and constructs we do not analyse.
bool ends_abruptly(const ast::SyntaxTree& tree, const ast::AstNode& stmt);
/// The nearest loop (or switch when `include_switch`) enclosing `n`, stopping at
/// function and lambda boundaries.
const ast::AstNode* jump_target(const ast::AstNode& n, bool include_switch);

bool is_floating_literal(const ast::SyntaxTree& tree, const ast::AstNode& n);
/// True when some leaf of `expr` is a floating literal or a floating-typed local.
bool mentions_floating(const ast::SyntaxTree& tree, const ast::ScopeInfo& scope,
                       const ast::AstNode& expr);

/// Keywords of all three languages plus names that are commonly macros or
/// library entry points.
bool is_reserved_name(std::string_view name);
bool is_valid_identifier(std::string_view name);

}  // namespace cloneforge::detail
