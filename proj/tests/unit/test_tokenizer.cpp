#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>

#include "cloneforge/rng.hpp"
#include "cloneforge/tokenizer.hpp"

namespace cloneforge::tokenizer {
namespace {

std::vector<std::string> split(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<std::pair<std::string, std::string>> merge_pieces(const SubwordModel& m) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& merge : m.merges()) out.emplace_back(m.piece(merge.left), m.piece(merge.right));
  return out;
}

std::vector<std::int32_t> zero_labels(std::size_t n) { return std::vector<std::int32_t>(n, 7); }

const std::vector<std::vector<std::string>> kSmallCorpus = {
    split("int x = 0 ; int y = x + 1 ; return x + y ;"),
    split("int main ( ) { return 0 ; } printf ( \"hi\" ) ;")};

TEST(TrainSubword, RepeatedLetterLearnsPairFirst) {
  const std::vector<std::vector<std::string>> corpus = {split("aaaa aaaa")};
  const SubwordModel m = train_subword(corpus, 260);
  ASSERT_FALSE(m.merges().empty());
  EXPECT_EQ(merge_pieces(m)[0], std::make_pair(std::string("a"), std::string("a")));
  // The corpus supports only two merges.
  EXPECT_EQ(m.learned_size(), 258u);
  EXPECT_THROW(train_subword(corpus, 260, true), CorpusTooSmall);
}

TEST(TrainSubword, SingleCharacterCorpusKeepsBaseAlphabet) {
  const std::vector<std::vector<std::string>> corpus = {split("x y z")};
  const SubwordModel m = train_subword(corpus, 1000);
  EXPECT_TRUE(m.merges().empty());
  EXPECT_EQ(m.vocab_size(), SubwordModel::kBaseSymbols + SubwordModel::kSpecialCount);
}

// Frozen from a from-scratch reference BPE that recounts all pairs each round.
TEST(TrainSubword, MatchesReferenceMergeOrder) {
  const SubwordModel m = train_subword(kSmallCorpus, 266);
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"i", "n"},    {"in", "t"},   {"e", "t"},    {"et", "u"},     {"etu", "r"},
      {"etur", "n"}, {"r", "eturn"}, {"\"", "h"}, {"\"h", "i"}, {"\"hi", "\""}};
  EXPECT_EQ(merge_pieces(m), expected);
}

TEST(TrainSubword, RejectsDegenerateInput) {
  EXPECT_THROW(train_subword(kSmallCorpus, 256), Error);
  EXPECT_THROW(train_subword(std::vector<std::vector<std::string>>{}, 300), Error);
}

TEST(TrainSubword, DeterministicModelFile) {
  EXPECT_EQ(train_subword(kSmallCorpus, 300).to_text(), train_subword(kSmallCorpus, 300).to_text());
}

TEST(SubwordModel, FileRoundTrip) {
  const SubwordModel m = train_subword(kSmallCorpus, 280);
  const auto path = std::filesystem::temp_directory_path() / "cloneforge_bpe_test.txt";
  m.save(path);
  const SubwordModel back = SubwordModel::load(path);
  std::filesystem::remove(path);
  EXPECT_EQ(back.to_text(), m.to_text());
  EXPECT_EQ(back.corpus_hash(), corpus_hash(kSmallCorpus));
  EXPECT_EQ(back.encode_token("return"), m.encode_token("return"));
}

TEST(SubwordModel, RejectsCorruptFiles) {
  EXPECT_THROW(SubwordModel::from_text("something else\n"), Error);
  std::string text = train_subword(kSmallCorpus, 270).to_text();
  text.replace(text.find("merges "), 8, "merges 9");
  EXPECT_THROW(SubwordModel::from_text(text), Error);
}

TEST(Encode, FramesWithClsAndSep) {
  const SubwordModel m = train_subword(kSmallCorpus, 300);
  const std::vector<std::string> toks = {"int", "x", ";"};
  const TokenizedSequence s = encode(m, toks, zero_labels(3));
  ASSERT_EQ(s.ids.size(), 5u);
  EXPECT_EQ(s.ids.front(), SubwordModel::kCls);
  EXPECT_EQ(s.ids.back(), SubwordModel::kSep);
  EXPECT_FALSE(s.truncated);
}

TEST(Encode, SplitTokenSharesItsLabel) {
  const SubwordModel m = train_subword(kSmallCorpus, 300);
  const std::vector<std::string> toks = {"int", "qzw"};
  const std::vector<std::int32_t> labels = {11, 12};
  const TokenizedSequence s = encode(m, toks, labels);
  ASSERT_EQ(s.ids.size(), 6u);
  EXPECT_EQ(std::vector<std::int32_t>(s.label_ids.begin() + 2, s.label_ids.end() - 1),
            std::vector<std::int32_t>(3, 12));
}

TEST(Encode, LongInputKeepsHead) {
  const SubwordModel m = train_subword(kSmallCorpus, 300);
  std::vector<std::string> toks;
  for (int i = 0; i < 1000; ++i) toks.push_back(i % 2 == 0 ? "int" : "x");
  const TokenizedSequence s = encode(m, toks, zero_labels(toks.size()));
  EXPECT_EQ(s.ids.size(), 512u);
  EXPECT_EQ(s.label_ids.size(), 512u);
  EXPECT_TRUE(s.truncated);
  EXPECT_EQ(s.ids.back(), SubwordModel::kSep);
  EXPECT_EQ(s.ids[1], m.encode_token("int")[0]);
}

TEST(Encode, ExactFitIsNotTruncated) {
  const SubwordModel m;
  const std::vector<std::string> toks(510, "a");
  const TokenizedSequence s = encode(m, toks, zero_labels(toks.size()));
  EXPECT_EQ(s.ids.size(), 512u);
  EXPECT_FALSE(s.truncated);
}

TEST(Encode, MisalignedLabelsThrow) {
  const SubwordModel m;
  const std::vector<std::string> toks = {"a", "b"};
  EXPECT_THROW(encode(m, toks, zero_labels(1)), Error);
}

TEST(MaskCount, RoundsWithFloorOfOne) {
  EXPECT_EQ(mask_count(20, 0.15), 3u);
  EXPECT_EQ(mask_count(1, 0.15), 1u);
  EXPECT_EQ(mask_count(10, 0.15), 2u);  // 1.5 rounds half up
  EXPECT_EQ(mask_count(0, 0.15), 0u);
  EXPECT_EQ(mask_count(50, 0.0), 0u);
  EXPECT_EQ(mask_count(7, 1.0), 7u);
}

TEST(MaskForMlm, MasksExpectedPositions) {
  const SubwordModel m;
  const std::vector<std::string> toks(20, "a");
  const TokenizedSequence s = mask_for_mlm(encode(m, toks, zero_labels(20)), 42);
  ASSERT_EQ(s.mask_positions.size(), 3u);
  EXPECT_TRUE(std::is_sorted(s.mask_positions.begin(), s.mask_positions.end()));
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(s.ids[s.mask_positions[i]], SubwordModel::kMask);
    EXPECT_EQ(s.originals_at_mask[i], SubwordModel::kFirstByte + 'a');
  }
  EXPECT_EQ(mask_for_mlm(encode(m, toks, zero_labels(20)), 42).mask_positions, s.mask_positions);
}

TEST(MaskForMlm, ZeroRateMasksNothing) {
  const SubwordModel m;
  const std::vector<std::string> toks(20, "a");
  EXPECT_TRUE(mask_for_mlm(encode(m, toks, zero_labels(20)), 1, 0.0).mask_positions.empty());
}

TEST(Json, RoundTrip) {
  const SubwordModel m;
  const std::vector<std::string> toks = {"ab", "c"};
  const TokenizedSequence s = mask_for_mlm(encode(m, toks, std::vector<std::int32_t>{5, 6}), 3);
  const std::string line = to_json_line(s);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  const TokenizedSequence back = from_json_line(line);
  EXPECT_EQ(back.ids, s.ids);
  EXPECT_EQ(back.label_ids, s.label_ids);
  EXPECT_EQ(back.mask_positions, s.mask_positions);
  EXPECT_EQ(back.originals_at_mask, s.originals_at_mask);
  EXPECT_EQ(back.truncated, s.truncated);
  EXPECT_THROW(from_json_line("{\"ids\": [1]}"), Error);
}

// Random byte-string corpora: round-trip, alignment, mask rate and m <= k.
TEST(TokenizerProperties, RandomCorpora) {
  Rng rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<std::vector<std::string>> corpus(3);
    for (auto& stream : corpus) {
      const std::size_t n = 1 + rng.below(60);
      for (std::size_t i = 0; i < n; ++i) {
        std::string tok(1 + rng.below(8), '\0');
        // Small alphabet so pairs repeat; occasional arbitrary byte.
        for (char& c : tok) {
          c = rng.below(10) == 0 ? static_cast<char>(rng.below(256)) : static_cast<char>('a' + rng.below(4));
        }
        stream.push_back(tok);
      }
    }
    const std::size_t target = 257 + rng.below(60);
    const SubwordModel m = train_subword(corpus, target);
    EXPECT_LE(m.learned_size(), target);
    for (const auto& stream : corpus) {
      const TokenizedSequence s = encode(m, stream, zero_labels(stream.size()));
      ASSERT_EQ(s.ids.size(), s.label_ids.size());
      EXPECT_GE(s.content_length(), std::min<std::size_t>(stream.size(), 510));
      if (!s.truncated) {
        std::string joined;
        for (const auto& t : stream) joined += t;
        EXPECT_EQ(m.decode(s.ids), joined);
      }
      const TokenizedSequence masked = mask_for_mlm(s, rng.next());
      EXPECT_EQ(masked.mask_positions.size(), mask_count(s.content_length(), 0.15));
      EXPECT_EQ(masked.label_ids, s.label_ids);
      for (std::uint32_t p : masked.mask_positions) {
        EXPECT_GT(p, 0u);
        EXPECT_LT(p, masked.ids.size() - 1);
      }
    }
  }
}

}  // namespace
}  // namespace cloneforge::tokenizer
