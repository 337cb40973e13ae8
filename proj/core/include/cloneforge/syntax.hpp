#pragma once

// Language-aware queries over grammar node kinds. The three grammars agree on
// most statement kinds but differ in a few places (Java's `block` vs C's
// `compound_statement`, the wrapper around if-conditions, literal kinds).
// Everything that needs to know those differences goes through here.

#include <functional>
#include <string_view>
#include <vector>

#include "cloneforge/ast.hpp"

namespace cloneforge::ast {

bool is_function(const AstNode& n);
bool is_block(const AstNode& n);
bool is_local_declaration(const AstNode& n);
bool is_loop(const AstNode& n);
bool is_scope_boundary(const AstNode& n);
bool is_ternary(const AstNode& n);
bool is_call(const AstNode& n);
bool is_number_literal(const AstNode& n);
bool is_bool_literal(const AstNode& n);
bool is_null_literal(const AstNode& n);
bool is_jump_statement(const AstNode& n);
/// A node that sits in statement position (directly inside a block, or as a
/// loop/if body).
bool is_statement(const AstNode& n);

const AstNode* function_body(const AstNode& fn);
/// The identifier naming a function definition, or nullptr for operators and
/// other unnameable forms.
const AstNode* function_name(const AstNode& fn);
/// The identifier introduced by a declarator (drills through pointer, array,
/// reference, init and parenthesized declarators).
const AstNode* declarator_name(const AstNode* declarator);
/// Declarator children of a declaration-like node (declaration,
/// local_variable_declaration, parameter_declaration, formal_parameter).
std::vector<const AstNode*> declarators(const AstNode& decl);
/// The initializer value of a single declarator, or nullptr.
const AstNode* declarator_value(const AstNode& declarator);
/// True when the declarator (below any init wrapper) declares a pointer.
bool declares_pointer(const AstNode& declarator);
bool declares_array(const AstNode& declarator);
bool declares_reference(const AstNode& declarator);

/// The expression tested by an if/while/do statement with any wrapping
/// parentheses or condition clause removed.
const AstNode* condition_expression(const AstNode& stmt);
/// The node wrapping the condition including its parentheses.
const AstNode* condition_wrapper(const AstNode& stmt);
/// if_statement alternative statement (unwrapping C's else_clause), or nullptr.
const AstNode* else_branch(const AstNode& if_stmt);
const AstNode* then_branch(const AstNode& if_stmt);

/// Operator token of a binary, assignment or update expression.
const AstNode* operator_token(const AstNode& expr);
/// Operand of an update expression (x in x++).
const AstNode* update_operand(const AstNode& update);
bool is_prefix_update(const AstNode& update);

const AstNode* strip_parens(const AstNode* n);

/// Preorder descendants (including `n`) satisfying `pred`. Does not descend
/// into nodes for which `prune` returns true (other than `n` itself).
std::vector<const AstNode*> collect(const AstNode& n,
                                    const std::function<bool(const AstNode&)>& pred,
                                    const std::function<bool(const AstNode&)>& prune = {});

/// Calls, assignments, increments, `new` and compound literals with calls.
bool has_side_effects(const AstNode& expr);

/// Identifier nodes below `n`, excluding field names and method names.
std::vector<const AstNode*> identifier_uses(const AstNode& n);

/// Text of the language's "false" literal and a null pointer constant.
std::string_view false_literal(Language lang);
std::string_view true_literal(Language lang);
std::string_view null_literal(Language lang);

/// Statements directly listed in a block (braces and comments excluded).
std::vector<const AstNode*> block_statements(const AstNode& block);

}  // namespace cloneforge::ast
