#include <gtest/gtest.h>

#include "cloneforge/scope.hpp"
#include "cloneforge/syntax.hpp"
#include "support/fixtures.hpp"

namespace cloneforge::ast {
namespace {

std::size_t offset_of(const std::string& src, std::string_view needle, std::size_t nth = 0) {
  std::size_t at = src.find(needle);
  while (nth-- > 0) at = src.find(needle, at + 1);
  return at;
}

TEST(Scope, BlockNesting) {
  const std::string src = testing::c_function("int a; { int b; a = 1; } a = 2;");
  const SyntaxTree tree = parse(Language::C, src);
  const ScopeInfo scope = scope_of(tree);
  const std::size_t inner = offset_of(src, "a = 1");
  const std::size_t outer = offset_of(src, "a = 2");
  EXPECT_TRUE(scope.reachable("a", inner));
  EXPECT_TRUE(scope.reachable("b", inner));
  EXPECT_FALSE(scope.reachable("b", outer));
}

TEST(Scope, DeclarationOrderMatters) {
  const std::string src = testing::c_function("x = 0; int x; x = 1;");
  const SyntaxTree tree = parse(Language::C, src);
  const ScopeInfo scope = scope_of(tree);
  EXPECT_FALSE(scope.reachable("x", offset_of(src, "x = 0")));
  EXPECT_TRUE(scope.reachable("x", offset_of(src, "x = 1")));
}

TEST(Scope, LoopHeaderScope) {
  const std::string src = testing::c_function("for(int i=0;;){ i++; } i = 3;");
  const SyntaxTree tree = parse(Language::C, src);
  const ScopeInfo scope = scope_of(tree);
  EXPECT_TRUE(scope.reachable("i", offset_of(src, "i++")));
  EXPECT_FALSE(scope.reachable("i", offset_of(src, "i = 3")));
}

TEST(Scope, ParametersReachableThroughoutBody) {
  const std::string src = testing::read_data("fig1a.c");
  const SyntaxTree tree = parse(Language::C, src);
  const ScopeInfo scope = scope_of(tree);
  for (std::size_t site : {offset_of(src, "TfIntArray"), offset_of(src, "output_shape->data")}) {
    EXPECT_TRUE(scope.reachable("context", site));
    EXPECT_TRUE(scope.reachable("node", site));
  }
  // library names stay external
  for (const IdentifierUse& use : scope.uses()) {
    if (use.name == "GetOutputShape" || use.name == "TF_LITE_ENSURE") {
      EXPECT_FALSE(use.declaration.has_value());
    }
  }
}

TEST(Scope, ShadowingResolvesInnermost) {
  const std::string src = testing::c_function("int v = 1; { int v = 2; v++; } v--;");
  const SyntaxTree tree = parse(Language::C, src);
  const ScopeInfo scope = scope_of(tree);
  const auto inner = scope.resolve("v", offset_of(src, "v++"));
  const auto outer = scope.resolve("v", offset_of(src, "v--"));
  ASSERT_TRUE(inner && outer);
  EXPECT_NE(*inner, *outer);
  EXPECT_EQ(scope.uses_of(*inner).size(), 1u);
  EXPECT_EQ(scope.uses_of(*outer).size(), 1u);
}

TEST(Scope, EveryUseBoundToVisibleDeclaration) {
  const std::string src = testing::read_data("fig1a.c");
  const SyntaxTree tree = parse(Language::C, src);
  const ScopeInfo scope = scope_of(tree);
  for (const IdentifierUse& use : scope.uses()) {
    if (!use.declaration) continue;
    EXPECT_EQ(scope.resolve(use.name, use.node->span.start), use.declaration) << use.name;
  }
}

TEST(Scope, JavaForEachAndCatch) {
  const std::string src =
      "int sum(int[] xs) { int t = 0; for (int x : xs) { t += x; } "
      "try { t++; } catch (Exception e) { e.printStackTrace(); } return t; }";
  const SyntaxTree tree = parse(Language::Java, src);
  const ScopeInfo scope = scope_of(tree);
  EXPECT_TRUE(scope.reachable("x", offset_of(src, "t += x")));
  EXPECT_FALSE(scope.reachable("x", offset_of(src, "return t")));
  EXPECT_TRUE(scope.reachable("e", offset_of(src, "e.print")));
}

std::vector<std::string> independent_names(const std::string& body) {
  const SyntaxTree tree = parse(Language::C, testing::c_function(body));
  const ScopeInfo scope = scope_of(tree);
  std::vector<std::string> names;
  for (const AstNode* d : independent_decls(tree, scope)) {
    for (const AstNode* decl : declarators(*d)) {
      names.emplace_back(tree.text(*declarator_name(decl)));
    }
  }
  return names;
}

TEST(IndependentDecls, LiteralAndUninitialised) {
  EXPECT_EQ(independent_names("int x; int y = 0;"), (std::vector<std::string>{"x", "y"}));
}

TEST(IndependentDecls, DependencyExcluded) {
  EXPECT_EQ(independent_names("int x = 1; int y = x;"), (std::vector<std::string>{"x"}));
}

TEST(IndependentDecls, CallExcluded) {
  EXPECT_TRUE(independent_names("int x = g();").empty());
}

TEST(IndependentDecls, ConstLocalDependencyAllowed) {
  EXPECT_EQ(independent_names("const int n = 4; int y = n * 2;"),
            (std::vector<std::string>{"n", "y"}));
}

TEST(TypeCategory, Classifies) {
  const std::string src = testing::c_function(
      "int a; double b; char *c; int d[3]; unsigned long e; _Bool g; struct s h;");
  const SyntaxTree tree = parse(Language::C, src);
  const ScopeInfo scope = scope_of(tree);
  std::map<std::string, TypeCategory> got;
  for (const Declaration& d : scope.declarations()) got[d.name] = type_category(tree, d);
  EXPECT_EQ(got["a"], TypeCategory::Integral);
  EXPECT_EQ(got["b"], TypeCategory::Floating);
  EXPECT_EQ(got["c"], TypeCategory::Pointer);
  EXPECT_EQ(got["d"], TypeCategory::Array);
  EXPECT_EQ(got["e"], TypeCategory::Integral);
  EXPECT_EQ(got["g"], TypeCategory::Boolean);
  EXPECT_EQ(got["h"], TypeCategory::Other);
}

}  // namespace
}  // namespace cloneforge::ast
