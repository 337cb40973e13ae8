#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cloneforge/ast.hpp"

namespace cloneforge::ast {

enum class DeclKind { Function, Parameter, Local };

struct Declaration {
  std::string name;
  /// The identifier node that introduces the name.
  const AstNode* name_node = nullptr;
  /// The declaring construct (declaration, parameter, for-each header, ...).
  const AstNode* decl_node = nullptr;
  /// Node whose span bounds the declaration's visibility.
  const AstNode* scope = nullptr;
  DeclKind kind = DeclKind::Local;
  /// First byte offset at which the name is in scope (end of its declarator name).
  std::size_t visible_from = 0;
};

struct IdentifierUse {
  std::string name;
  const AstNode* node = nullptr;
  /// Index into ScopeInfo::declarations(); empty when the name is external.
  std::optional<std::size_t> declaration;
};

/// Lexical declaration/use analysis of one tree. Holds pointers into the tree,
/// which must outlive it. Immutable after construction.
class ScopeInfo {
 public:
  const std::vector<Declaration>& declarations() const { return declarations_; }
  const std::vector<IdentifierUse>& uses() const { return uses_; }

  /// Declaration indices per name, in source order.
  const std::map<std::string, std::vector<std::size_t>, std::less<>>& declarations_by_name()
      const {
    return by_name_;
  }
  /// Use nodes bound to declaration `decl`.
  std::vector<const AstNode*> uses_of(std::size_t decl) const;
  /// Use nodes per name, including external ones.
  std::vector<const AstNode*> use_sites(std::string_view name) const;

  /// True when a declaration of `name` is in scope at byte offset `site`.
  bool reachable(std::string_view name, std::size_t site) const;
  /// The innermost declaration of `name` visible at `site`.
  std::optional<std::size_t> resolve(std::string_view name, std::size_t site) const;
  /// Innermost visible declaration for every name in scope at `site`.
  std::vector<std::size_t> visible_at(std::size_t site) const;
  /// Declaration bound to an identifier node (its own declaration if it is a
  /// declarator name), or empty for external names.
  std::optional<std::size_t> binding_of(const AstNode& identifier) const;
  bool is_external(const AstNode& identifier) const { return !binding_of(identifier); }

  /// Constructs the analyzer skipped, as "kind@start" strings. Not fatal.
  const std::vector<std::string>& unsupported() const { return unsupported_; }

 private:
  friend ScopeInfo scope_of(const SyntaxTree& tree);

  std::vector<Declaration> declarations_;
  std::vector<IdentifierUse> uses_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> by_name_;
  std::map<std::uint32_t, std::size_t> decl_of_name_node_;
  std::map<std::uint32_t, std::size_t> use_index_;
  std::vector<std::string> unsupported_;
};

ScopeInfo scope_of(const SyntaxTree& tree);

/// Local declarations whose initializers (if any) reference no non-constant
/// local name and have no side effects.
std::vector<const AstNode*> independent_decls(const SyntaxTree& tree, const ScopeInfo& scope);

enum class TypeCategory { Integral, Floating, Boolean, Pointer, Array, Reference, Other };

/// Coarse category of a declared variable's type, from its type node and
/// declarator shape. Anything not recognisably a built-in scalar is Other.
TypeCategory type_category(const SyntaxTree& tree, const Declaration& decl);

/// Text of the declared type of `decl` with qualifiers, e.g. "const size_t".
std::string declared_type_text(const SyntaxTree& tree, const Declaration& decl);
/// The type node of the construct that introduced `decl`, or nullptr.
const AstNode* declared_type_node(const Declaration& decl);
/// The declarator subtree for `decl` (init_declarator, pointer_declarator, ...),
/// or nullptr when the name is declared directly.
const AstNode* declarator_of(const Declaration& decl);

}  // namespace cloneforge::ast
