#pragma once

// Single-site bug injection producing syntactically close but behaviourally
// different variants of a function.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cloneforge/ast.hpp"
#include "cloneforge/scope.hpp"

namespace cloneforge::deviant {

enum class BugKind { Operator, DataType, Variable, Value, Pointer, Statement, FunctionCall };

inline constexpr std::array<BugKind, 7> kAllBugKinds = {
    BugKind::Operator, BugKind::DataType,  BugKind::Variable,    BugKind::Value,
    BugKind::Pointer,  BugKind::Statement, BugKind::FunctionCall};

std::string_view to_string(BugKind kind);

struct BugSite {
  BugKind kind = BugKind::Operator;
  /// Source range that the edit replaces.
  Span span;
  /// Preorder index of the anchor node.
  std::uint32_t node = 0;
  /// Kind-specific sub-rule (variable: 0 use swap, 1 initializer removal;
  /// pointer: 0 declaration, 1 assignment).
  std::uint32_t aux = 0;
};

struct InjectedBug {
  BugKind kind = BugKind::Operator;
  Span site;
  std::string before;
  std::string after;
};

struct DeviantResult {
  std::string text;
  InjectedBug bug;
  std::uint64_t seed = 0;
};

class InjectionFailed : public Error {
 public:
  using Error::Error;
};

class NoApplicableBug : public Error {
 public:
  using Error::Error;
};

/// Upper bound on the statements a removed condition check may guard.
inline constexpr std::size_t kMaxRemovedStatements = 3;
/// Maximum token edit distance of a deviant, as a fraction of the token count.
inline constexpr double kMaxEditFraction = 0.10;

std::vector<BugSite> bug_sites(BugKind kind, const ast::SyntaxTree& tree,
                               const ast::ScopeInfo& scope);

DeviantResult inject_bug(const BugSite& site, const ast::SyntaxTree& tree,
                         const ast::ScopeInfo& scope, std::uint64_t rng_seed);

DeviantResult generate_deviant(const ast::SourceFunction& fn, std::uint64_t rng_seed);

/// Levenshtein distance between two token sequences.
std::size_t token_edit_distance(const std::vector<std::string>& a,
                                const std::vector<std::string>& b);

}  // namespace cloneforge::deviant
