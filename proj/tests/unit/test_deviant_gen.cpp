#include <gtest/gtest.h>

#include <set>

#include "cloneforge/deviant_gen.hpp"
#include "cloneforge/syntax.hpp"
#include "support/fixtures.hpp"

namespace cloneforge::deviant {
namespace {

using ast::ScopeInfo;
using ast::SyntaxTree;

struct Analysed {
  SyntaxTree tree;
  ScopeInfo scope;
  Analysed(Language lang, std::string src)
      : tree(ast::parse(lang, std::move(src))), scope(ast::scope_of(tree)) {}
};

// Every distinct `after` text produced at the site whose text is `anchor`.
std::set<std::string> outcomes(Language lang, const std::string& src, BugKind kind,
                               std::string_view anchor, int seeds = 40) {
  Analysed a(lang, src);
  std::set<std::string> out;
  for (const BugSite& site : bug_sites(kind, a.tree, a.scope)) {
    if (a.tree.text(site.span) != anchor) continue;
    for (int s = 0; s < seeds; ++s) {
      try {
        out.insert(inject_bug(site, a.tree, a.scope, s).bug.after);
      } catch (const InjectionFailed&) {
      }
    }
  }
  return out;
}

TEST(BugSites, ComparisonIsAnOperatorSite) {
  Analysed a(Language::C, "int f(int i, int n) { return i < n; }");
  const auto sites = bug_sites(BugKind::Operator, a.tree, a.scope);
  ASSERT_EQ(sites.size(), 1u);
  EXPECT_EQ(a.tree.nodes()[sites[0].node].kind, "binary_expression");
  EXPECT_EQ(a.tree.text(sites[0].span), "<");
}

TEST(BugSites, NoPointersNoPointerSites) {
  Analysed a(Language::C, "int f(int i, int n) { int k = i + n; return k; }");
  EXPECT_TRUE(bug_sites(BugKind::Pointer, a.tree, a.scope).empty());
}

TEST(BugSites, MotivatingExampleTypeSites) {
  Analysed a(Language::C, testing::read_data("fig1a.c"));
  std::set<std::string> decls;
  for (const BugSite& s : bug_sites(BugKind::DataType, a.tree, a.scope)) {
    decls.emplace(a.tree.text(a.tree.nodes()[s.node]));
  }
  EXPECT_TRUE(decls.contains("size_t embedding_size=1;"));
  EXPECT_TRUE(decls.contains("size_t lookup_size=1;"));
  EXPECT_TRUE(decls.contains("int k=0;"));
}

TEST(InjectBug, ComparisonBecomesInclusive) {
  const auto ops =
      outcomes(Language::C, testing::read_data("fig1a.c"), BugKind::Operator, "<");
  EXPECT_TRUE(ops.contains("<="));
  EXPECT_FALSE(ops.contains("<"));
  for (const std::string& o : ops) {
    EXPECT_TRUE(o == "<=" || o == ">" || o == ">=" || o == "==" || o == "!=") << o;
  }
}

TEST(InjectBug, ArithmeticStaysInFamily) {
  const auto ops = outcomes(Language::C, "double f(double a) { return a * 2.0; }",
                            BugKind::Operator, "*");
  EXPECT_EQ(ops, (std::set<std::string>{"+", "-", "/"}));
}

TEST(InjectBug, PointerArithmeticIsNotAnOperatorSite) {
  Analysed a(Language::C, "char f(char *p) { return *(p + 1); }");
  EXPECT_TRUE(bug_sites(BugKind::Operator, a.tree, a.scope).empty());
}

TEST(InjectBug, SizeTBecomesInt) {
  Analysed a(Language::C, testing::read_data("fig1a.c"));
  bool saw = false;
  for (const BugSite& s : bug_sites(BugKind::DataType, a.tree, a.scope)) {
    if (a.tree.text(a.tree.nodes()[s.node]) != "size_t embedding_size=1;") continue;
    for (int seed = 0; seed < 30; ++seed) {
      const DeviantResult r = inject_bug(s, a.tree, a.scope, seed);
      if (r.bug.after == "int") {
        saw = true;
        EXPECT_NE(r.text.find("int embedding_size=1;"), std::string::npos);
      }
    }
  }
  EXPECT_TRUE(saw);
}

TEST(InjectBug, AddressTakenVariableKeepsItsType) {
  Analysed a(Language::C, "void f(void) { int x = 0; g(&x); long y = 1; g2(y); }");
  std::set<std::string> decls;
  for (const BugSite& s : bug_sites(BugKind::DataType, a.tree, a.scope)) {
    decls.emplace(a.tree.text(a.tree.nodes()[s.node]));
  }
  EXPECT_EQ(decls, (std::set<std::string>{"long y = 1;"}));
}

TEST(InjectBug, BooleanFlip) {
  EXPECT_EQ(outcomes(Language::Cpp, "bool f() { return true; }", BugKind::Value, "true"),
            (std::set<std::string>{"false"}));
  EXPECT_EQ(outcomes(Language::Java, "boolean f() { return false; }", BugKind::Value, "false"),
            (std::set<std::string>{"true"}));
}

TEST(InjectBug, NumericReplacementPool) {
  EXPECT_EQ(outcomes(Language::C, "int f(void) { return 7; }", BugKind::Value, "7", 200),
            (std::set<std::string>{"0", "1", "(-1)", "8", "6", "14"}));
  EXPECT_EQ(outcomes(Language::C, "long f(void) { return 1L; }", BugKind::Value, "1L", 200),
            (std::set<std::string>{"0L", "(-1L)", "2L"}));
  EXPECT_EQ(outcomes(Language::C, "float f(void) { return 0.5f; }", BugKind::Value, "0.5f", 200),
            (std::set<std::string>{"0.0f", "1.0f", "(-1.0f)", "1.5f", "(-0.5f)"}));
  EXPECT_EQ(outcomes(Language::C, "unsigned f(void) { return 0x10u; }", BugKind::Value, "0x10u",
                     200),
            (std::set<std::string>{"0x0u", "0x1u", "0x11u", "0xfu", "0x20u"}));
}

TEST(InjectBug, CaseLabelsAndArraySizesUntouched) {
  Analysed a(Language::C,
             "int f(int x) { int a[4]; switch (x) { case 3: return 1; } return a[0]; }");
  std::set<std::string> lits;
  for (const BugSite& s : bug_sites(BugKind::Value, a.tree, a.scope)) {
    lits.emplace(a.tree.text(s.span));
  }
  EXPECT_EQ(lits, (std::set<std::string>{"1", "0"}));
}

TEST(InjectBug, ArgumentSwap) {
  const auto got = outcomes(Language::C, "int f(int a, int b) { return g(a, b); }",
                            BugKind::FunctionCall, "(a, b)", 100);
  EXPECT_TRUE(got.contains("(b, a)"));
  EXPECT_TRUE(got.contains("(a)") || got.contains("(b)"));
  EXPECT_TRUE(got.contains("(NULL, b)") || got.contains("(a, NULL)"));
}

TEST(InjectBug, VariableMisuseUsesSameTypedReachableLocal) {
  const std::string src = "int f(int a, int b) { double d = 1; return a + d; }";
  const auto got = outcomes(Language::C, src, BugKind::Variable, "a", 40);
  EXPECT_EQ(got, (std::set<std::string>{"b"}));
}

TEST(InjectBug, InitializerRemoval) {
  const std::string src = "int f(int a) { int s = 3; return a + s; }";
  Analysed an(Language::C, src);
  bool removed = false;
  for (const BugSite& site : bug_sites(BugKind::Variable, an.tree, an.scope)) {
    if (site.aux != 1) continue;
    const DeviantResult r = inject_bug(site, an.tree, an.scope, 0);
    EXPECT_EQ(r.text, "int f(int a) { int s; return a + s; }");
    removed = true;
  }
  EXPECT_TRUE(removed);
}

TEST(InjectBug, PointerInitializerNulledOrDropped) {
  const std::string src = "int f(int *q) { int *p = q; p = q + 1; return *p; }";
  Analysed an(Language::C, src);
  std::set<std::string> texts;
  for (const BugSite& site : bug_sites(BugKind::Pointer, an.tree, an.scope)) {
    for (int seed = 0; seed < 20; ++seed) texts.insert(inject_bug(site, an.tree, an.scope, seed).text);
  }
  EXPECT_TRUE(texts.contains("int f(int *q) { int *p = NULL; p = q + 1; return *p; }"));
  EXPECT_TRUE(texts.contains("int f(int *q) { int *p; p = q + 1; return *p; }"));
  EXPECT_TRUE(texts.contains("int f(int *q) { int *p = q; p = NULL; return *p; }"));
}

TEST(InjectBug, ConditionCheckRemoved) {
  const std::string src =
      "int f(int *a, int i, int n) { if (i >= n) return -1; if (i < 0) { i = 0; } "
      "if (n) { a[0] = 1; a[1] = 2; a[2] = 3; a[3] = 4; } return a[i]; }";
  Analysed an(Language::C, src);
  const auto sites = bug_sites(BugKind::Statement, an.tree, an.scope);
  ASSERT_EQ(sites.size(), 2u);
  const DeviantResult r = inject_bug(sites[0], an.tree, an.scope, 0);
  EXPECT_EQ(r.bug.before, "if (i >= n) return -1;");
  EXPECT_EQ(r.bug.after, "");
}

TEST(GenerateDeviant, EmptyFunction) {
  EXPECT_THROW(generate_deviant({"f", Language::C, "void f(){}"}, 3), NoApplicableBug);
}

TEST(GenerateDeviant, DeterministicLocalAndBounded) {
  const std::vector<ast::SourceFunction> fns = {
      {"fig1a", Language::C, testing::read_data("fig1a.c")},
      {"java", Language::Java,
       "int find(int[] xs, int key) { for (int i = 0; i < xs.length; i++) { if (xs[i] == key) "
       "return i; } return -1; }"},
      {"cpp", Language::Cpp,
       "bool ok(const std::vector<int>& v, int lim) { int c = 0; for (int x : v) { if (x > lim) "
       "c++; } return c < 3; }"}};
  std::set<BugKind> kinds;
  for (const auto& fn : fns) {
    const auto original = ast::token_texts(ast::parse(fn));
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const DeviantResult a = generate_deviant(fn, seed);
      const DeviantResult b = generate_deviant(fn, seed);
      EXPECT_EQ(a.text, b.text);
      EXPECT_EQ(a.bug.site, b.bug.site);
      EXPECT_NE(a.text, fn.text);
      EXPECT_NE(a.bug.before, a.bug.after);
      // locality: everything outside the site is byte-identical
      EXPECT_EQ(a.text.substr(0, a.bug.site.start), fn.text.substr(0, a.bug.site.start));
      EXPECT_EQ(a.text.substr(a.bug.site.start + a.bug.after.size()),
                fn.text.substr(a.bug.site.end));
      const auto tokens = ast::token_texts(ast::parse(fn.language, a.text));
      EXPECT_LE(static_cast<double>(token_edit_distance(original, tokens)),
                kMaxEditFraction * static_cast<double>(original.size()));
      kinds.insert(a.bug.kind);
    }
  }
  EXPECT_GE(kinds.size(), 6u);
}

TEST(TokenEditDistance, MatchesHandComputedCases) {
  using V = std::vector<std::string>;
  EXPECT_EQ(token_edit_distance(V{"a", "b", "c"}, V{"a", "b", "c"}), 0u);
  EXPECT_EQ(token_edit_distance(V{"a", "b", "c"}, V{"a", "x", "c"}), 1u);
  EXPECT_EQ(token_edit_distance(V{"a", "b", "c"}, V{"a", "c"}), 1u);
  EXPECT_EQ(token_edit_distance(V{}, V{"a", "b"}), 2u);
  EXPECT_EQ(token_edit_distance(V{"k", "i", "t", "t", "e", "n"},
                                V{"s", "i", "t", "t", "i", "n", "g"}),
            3u);
}

}  // namespace
}  // namespace cloneforge::deviant
