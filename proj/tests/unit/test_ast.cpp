#include <gtest/gtest.h>

#include "cloneforge/ast.hpp"
#include "cloneforge/syntax.hpp"
#include "support/fixtures.hpp"

namespace cloneforge::ast {
namespace {

TEST(Parse, MinimalFunctionHasFunctionDefinition) {
  const SyntaxTree tree = parse(Language::C, "int f(){return 0;}");
  ASSERT_NE(tree.function(), nullptr);
  EXPECT_EQ(tree.function()->kind, "function_definition");
  EXPECT_FALSE(tree.has_error());
}

TEST(Parse, SyntaxErrorReportsOneSpan) {
  try {
    parse(Language::C, "int f({");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.error_spans.size(), 1u);
  }
}

TEST(Parse, LenientParseKeepsPartialTree) {
  const SyntaxTree tree = parse_lenient(Language::C, "int f({");
  EXPECT_TRUE(tree.has_error());
  EXPECT_EQ(tree.root().kind, "translation_unit");
}

TEST(Parse, EmptyTextIsRejected) { EXPECT_THROW(parse(Language::C, ""), ParseError); }

TEST(Parse, TernaryAssignmentYieldsConditionalExpression) {
  const SyntaxTree tree =
      parse(Language::C, testing::c_function("int x = 1, y; y = (x != 0) ? 2/x : 0;"));
  bool found = false;
  for (const AstNode& n : tree.nodes()) found |= n.is("conditional_expression");
  EXPECT_TRUE(found);
}

TEST(Parse, JavaMethodAndCppFunction) {
  const SyntaxTree java = parse(Language::Java, "int add(int a, int b) { return a + b; }");
  ASSERT_NE(java.function(), nullptr);
  EXPECT_EQ(java.function()->kind, "method_declaration");
  const SyntaxTree cpp =
      parse(Language::Cpp, "int add(const std::vector<int>& v) { return v.size(); }");
  ASSERT_NE(cpp.function(), nullptr);
  EXPECT_EQ(cpp.function()->kind, "function_definition");
}

TEST(Flatten, IntDeclaration) {
  const SyntaxTree tree = parse_lenient(Language::C, "int x;");
  const auto tokens = flatten_tokens(tree);
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[0].text, "int");
  EXPECT_EQ(tokens[0].kind, "primitive_type");
  EXPECT_EQ(tokens[1].text, "x");
  EXPECT_EQ(tokens[1].kind, "identifier");
  EXPECT_EQ(tokens[2].text, ";");
  EXPECT_EQ(tokens[2].kind, ";");
}

TEST(Flatten, EmptyBodyTerminalCount) {
  // frozen from the reference grammar: void f ( ) { }
  EXPECT_EQ(flatten_tokens(parse(Language::C, "void f(){}")).size(), 6u);
}

TEST(Flatten, MotivatingExampleStartsWithReturnType) {
  const SyntaxTree tree = parse(Language::C, testing::read_data("fig1a.c"));
  const auto tokens = flatten_tokens(tree);
  ASSERT_FALSE(tokens.empty());
  EXPECT_EQ(tokens.front().text, "TFStatus");
  EXPECT_EQ(tokens.size(), 102u);  // frozen from the reference grammar
}

TEST(Flatten, CommentsExcludedAndCoverageExact) {
  const std::string src = "int f(int a) { /* c */ return a+1; // t\n}";
  const SyntaxTree tree = parse(Language::C, src);
  const auto tokens = flatten_tokens(tree);
  std::string rebuilt(src.size(), ' ');
  std::size_t prev_end = 0;
  for (const Token& t : tokens) {
    EXPECT_NE(t.kind, "comment");
    EXPECT_GE(t.span.start, prev_end);
    prev_end = t.span.end;
    rebuilt.replace(t.span.start, t.span.size(), t.text);
  }
  // every non-whitespace byte outside comments is covered by exactly one token
  std::string expected = src;
  for (const AstNode& n : tree.nodes()) {
    if (is_comment(n)) expected.replace(n.span.start, n.span.size(), n.span.size(), ' ');
  }
  for (char& c : expected) {
    if (c == '\n') c = ' ';
  }
  EXPECT_EQ(rebuilt, expected);
}

TEST(Tree, ChildSpansNestedAndDisjoint) {
  const SyntaxTree tree = parse(Language::C, testing::read_data("fig1a.c"));
  for (const AstNode& n : tree.nodes()) {
    std::size_t prev = n.span.start;
    for (const AstNode* c : n.children) {
      EXPECT_GE(c->span.start, prev);
      EXPECT_LE(c->span.end, n.span.end);
      EXPECT_EQ(c->parent, &n);
      prev = c->span.end;
    }
    if (n.is_terminal) {
      EXPECT_TRUE(n.children.empty());
    }
  }
}

TEST(Syntax, FunctionNameAndBody) {
  const SyntaxTree tree = parse(Language::C, testing::read_data("fig1a.c"));
  const AstNode* name = function_name(*tree.function());
  ASSERT_NE(name, nullptr);
  EXPECT_EQ(tree.text(*name), "Eval");
  EXPECT_TRUE(is_block(*function_body(*tree.function())));
}

}  // namespace
}  // namespace cloneforge::ast
