#include <gtest/gtest.h>

#include <filesystem>

#include "cloneforge/labels.hpp"
#include "support/fixtures.hpp"

namespace cloneforge::labels {
namespace {

std::vector<std::string> rendered(Language lang, std::string src) {
  std::vector<std::string> out;
  for (const AstLabel& l : label_sequence(ast::parse(lang, std::move(src)))) {
    out.push_back(l.rendered());
  }
  return out;
}

// Expected sequences come from an independent tree-sitter walk over the same sources.
TEST(LabelSequence, DeclarationsAndSizeT) {
  const std::vector<std::string> expected = {
      "primitive_type#function_definition", "identifier#function_declarator",
      "(#parameter_list",                   "primitive_type#parameter_declaration",
      ")#parameter_list",                   "{#compound_statement",
      "primitive_type#declaration",         "identifier#declaration",
      ";#declaration",                      "primitive_type#declaration",
      "identifier#init_declarator",         "=#init_declarator",
      "number_literal#init_declarator",     ";#declaration",
      "}#compound_statement"};
  EXPECT_EQ(rendered(Language::C, "void f(void) { int x; size_t n = 0; }"), expected);
}

TEST(LabelSequence, StringLiteralPiecesAreLabelled) {
  const auto got = rendered(Language::C, "int g(char *s) { return puts(\"hi\\n\"); }");
  ASSERT_EQ(got.size(), 18u);
  EXPECT_EQ(got[4], "*#pointer_declarator");
  EXPECT_EQ(got[11], "\"#string_literal");
  EXPECT_EQ(got[12], "string_content#string_literal");
  EXPECT_EQ(got[13], "escape_sequence#string_literal");
}

TEST(LabelSequence, OneLabelPerToken) {
  const auto tree = ast::parse(Language::C, testing::read_data("fig1a.c"));
  EXPECT_EQ(label_sequence(tree).size(), ast::flatten_tokens(tree).size());
}

TEST(LabelVocab, SpecialsFirstThenSorted) {
  const LabelVocab v({"b#x", "a#y", "b#x"});
  ASSERT_EQ(v.size(), 6u);
  EXPECT_EQ(v.label_of(0), "[PAD]");
  EXPECT_EQ(v.label_of(3), "[SEP_LABEL]");
  EXPECT_EQ(v.id_of("a#y"), 4);
  EXPECT_EQ(v.id_of("b#x"), 5);
  EXPECT_EQ(v.id_of("never#seen"), LabelVocab::kUnk);
}

TEST(LabelVocab, BuildIsOrderIndependent) {
  std::vector<ast::SourceFunction> fns = {
      {"a", Language::C, "int f(int a) { return a + 1; }"},
      {"b", Language::Java, "class A { void m() { int x = 2; } }"},
  };
  const LabelVocab forward = build_label_vocab(fns);
  std::swap(fns[0], fns[1]);
  const LabelVocab backward = build_label_vocab(fns);
  EXPECT_EQ(forward.to_text(), backward.to_text());
}

TEST(LabelVocab, CoveredCorpusHasNoUnk) {
  const std::vector<ast::SourceFunction> fns = {
      {"a", Language::C, testing::read_data("fig1a.c")},
      {"b", Language::Cpp, "int f(int a) { return a ? a : -a; }"},
  };
  const LabelVocab v = build_label_vocab(fns);
  for (const auto& fn : fns) {
    for (std::int32_t id : v.encode(label_sequence(ast::parse(fn)))) {
      EXPECT_NE(id, LabelVocab::kUnk);
    }
  }
}

TEST(LabelVocab, FileRoundTrip) {
  const LabelVocab v({"identifier#declaration", ";#declaration"});
  const auto path = std::filesystem::temp_directory_path() / "cloneforge_labels_test.txt";
  v.save(path);
  const LabelVocab back = LabelVocab::load(path);
  std::filesystem::remove(path);
  EXPECT_EQ(back.labels(), v.labels());
}

TEST(LabelVocab, RejectsFilesWithoutSpecials) {
  EXPECT_THROW(LabelVocab::from_text("a#b\n"), Error);
  EXPECT_THROW(LabelVocab::from_text("[PAD]\n[UNK]\n[CLS_LABEL]\n[SEP_LABEL]\nz#z\na#a\n"), Error);
}

}  // namespace
}  // namespace cloneforge::labels
