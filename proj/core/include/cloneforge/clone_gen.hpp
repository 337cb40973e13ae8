#pragma once

// Semantics-preserving clone synthesis: five source-to-source heuristics that
// imitate renamed, restructured and padded copies of a function.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cloneforge/ast.hpp"
#include "cloneforge/scope.hpp"

namespace cloneforge::clone {

enum class CloneTransformKind {
  RenameIdentifier,
  RewriteStatement,
  RewriteBlock,
  InsertDeadCode,
  PermuteDecls
};

inline constexpr std::array<CloneTransformKind, 5> kAllTransformKinds = {
    CloneTransformKind::RenameIdentifier, CloneTransformKind::RewriteStatement,
    CloneTransformKind::RewriteBlock, CloneTransformKind::InsertDeadCode,
    CloneTransformKind::PermuteDecls};

std::string_view to_string(CloneTransformKind kind);

/// Which rewrite a RewriteStatement/RewriteBlock site refers to.
enum class RewriteVariant : std::uint8_t {
  None,
  TernaryToIf,
  Increment,
  MirrorComparison,
  ForToWhile,
  WhileToFor,
  SwapIfElse
};

std::string_view to_string(RewriteVariant variant);

struct CloneSite {
  CloneTransformKind kind = CloneTransformKind::RenameIdentifier;
  RewriteVariant variant = RewriteVariant::None;
  /// Source range of the anchor node (an empty span for dead-code insertion points).
  Span span;
  /// Preorder index of the anchor node in the tree the site was computed from.
  std::uint32_t node = 0;
  /// Declaration index (renames) or statement slot (dead code).
  std::uint32_t aux = 0;
};

struct AppliedTransform {
  CloneTransformKind kind;
  Span site;
  std::string detail;
};

struct CloneResult {
  std::string text;
  std::vector<AppliedTransform> applied;
  std::uint64_t seed = 0;
};

class TransformFailed : public Error {
 public:
  using Error::Error;
};

class NoApplicableTransform : public Error {
 public:
  using Error::Error;
};

struct CloneOptions {
  /// Identifier pool for random renames. A small built-in list is used when empty.
  std::span<const std::string> vocabulary;
};

std::vector<CloneSite> applicable(CloneTransformKind kind, const ast::SyntaxTree& tree,
                                  const ast::ScopeInfo& scope);

/// Applies one transform at `site`. The site must come from `applicable` on the
/// same tree.
CloneResult apply_transform(const CloneSite& site, const ast::SyntaxTree& tree,
                            const ast::ScopeInfo& scope, std::uint64_t rng_seed,
                            const CloneOptions& options = {});

CloneResult generate_clone(const ast::SourceFunction& fn, std::uint64_t rng_seed,
                           const CloneOptions& options = {});

/// Names obtained by permuting or dropping the sub-words of `name`
/// (snake_case or camelCase). Empty for single-word names.
std::vector<std::string> subword_variants(std::string_view name);

}  // namespace cloneforge::clone
