#include <gtest/gtest.h>

#include <algorithm>

#include "cloneforge/render.hpp"
#include "cloneforge/rng.hpp"
#include "support/fixtures.hpp"

namespace cloneforge::ast {
namespace {

TEST(Render, ZeroEditsIsIdentity) {
  const std::string src = testing::read_data("fig1a.c");
  EXPECT_EQ(render(parse(Language::C, src), {}), src);
}

TEST(Render, SingleSplice) {
  const SyntaxTree tree = parse_lenient(Language::C, "int x;");
  EXPECT_EQ(render(tree, {{Span{4, 5}, "y"}}), "int y;");
}

TEST(Render, OverlapsRejected) {
  EXPECT_THROW(apply_edits("abcdef", {{Span{1, 3}, "x"}, {Span{2, 4}, "y"}}), OverlappingEdits);
  EXPECT_THROW(apply_edits("abcdef", {{Span{2, 2}, "x"}, {Span{2, 2}, "y"}}), OverlappingEdits);
  EXPECT_THROW(apply_edits("abcdef", {{Span{1, 4}, "x"}, {Span{2, 2}, "y"}}), OverlappingEdits);
  EXPECT_THROW(apply_edits("abc", {{Span{2, 9}, "x"}}), Error);
}

TEST(Render, InsertionAtReplacedBoundaryAllowed) {
  EXPECT_EQ(apply_edits("abcdef", {{Span{1, 3}, "X"}, {Span{1, 1}, "<"}, {Span{3, 3}, ">"}}),
            "a<X>def");
}

TEST(Render, ParseFailureCarriesText) {
  const SyntaxTree tree = parse(Language::C, "int f(){return 0;}");
  try {
    render(tree, {{Span{17, 18}, ""}});
    FAIL();
  } catch (const PostEditParseFailure& e) {
    EXPECT_EQ(e.text, "int f(){return 0;");
    EXPECT_FALSE(e.error_spans.empty());
  }
  RenderOptions lax;
  lax.reparse_check = false;
  EXPECT_EQ(render(tree, {{Span{17, 18}, ""}}, lax), "int f(){return 0;");
}

// Reference: apply edits one at a time from the highest offset down,
// after checking every pair for overlap.
std::string pairwise_oracle(std::string s, std::vector<Edit> edits) {
  std::sort(edits.begin(), edits.end(), [](const Edit& a, const Edit& b) {
    return a.span.start != b.span.start ? a.span.start > b.span.start : a.span.end > b.span.end;
  });
  for (const Edit& e : edits) s.replace(e.span.start, e.span.size(), e.replacement);
  return s;
}

TEST(RenderProperty, DisjointEditsCommute) {
  Rng rng(7);
  const std::string src = testing::read_data("fig1a.c");
  for (int trial = 0; trial < 300; ++trial) {
    // pick sorted disjoint non-empty spans
    std::vector<std::size_t> cuts;
    const std::size_t count = 1 + rng.below(6);
    for (std::size_t i = 0; i < 2 * count; ++i) cuts.push_back(rng.below(src.size() + 1));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<Edit> edits;
    for (std::size_t i = 0; i + 1 < cuts.size(); i += 2) {
      edits.push_back({Span{cuts[i], cuts[i + 1]}, "<" + std::to_string(i) + ">"});
    }
    const std::string expected = pairwise_oracle(src, edits);
    for (int perm = 0; perm < 4; ++perm) {
      rng.shuffle(std::span<Edit>(edits));
      EXPECT_EQ(apply_edits(src, edits), expected);
    }
  }
}

TEST(RenderProperty, RoundTripOnCorpusSamples) {
  for (const char* src : {"int f(int a){ return a; }", "void g(void) {\n  /* x */ int y = 2;\n}",
                          "long h(long *p) { while (*p) p++; return *p; }"}) {
    EXPECT_EQ(render(parse(Language::C, src), {}), src);
  }
}

}  // namespace
}  // namespace cloneforge::ast
