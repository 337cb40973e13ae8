#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "cloneforge/eval.hpp"
#include "cloneforge/rng.hpp"

namespace cloneforge::eval {
namespace {

Vector random_vector(Rng& rng, std::size_t d) {
  Vector v(d);
  for (double& x : v) x = rng.normal();
  return v;
}

// Exhaustive AP@R: rank with objective::cosine and a stable sort on (score, id).
double brute_force_map(const RetrievalDataset& ds) {
  double total = 0.0;
  for (std::size_t q = 0; q < ds.items.size(); ++q) {
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < ds.items.size(); ++j) {
      if (j != q) others.push_back(j);
    }
    std::vector<double> score(ds.items.size());
    for (std::size_t j : others) score[j] = objective::cosine(ds.items[q].embedding, ds.items[j].embedding);
    std::stable_sort(others.begin(), others.end(), [&](std::size_t a, std::size_t b) {
      if (score[a] != score[b]) return score[a] > score[b];
      return ds.items[a].id < ds.items[b].id;
    });
    double ap = 0.0;
    int hits = 0;
    for (std::size_t k = 0; k < ds.r; ++k) {
      if (ds.items[others[k]].group == ds.items[q].group) ap += double(++hits) / double(k + 1);
    }
    total += ap / double(ds.r);
  }
  return total / double(ds.items.size());
}

RetrievalDataset random_dataset(Rng& rng, std::size_t groups, std::size_t per_group, std::size_t r,
                                std::size_t d) {
  RetrievalDataset ds;
  ds.r = r;
  for (std::size_t g = 0; g < groups; ++g) {
    const Vector centre = random_vector(rng, d);
    for (std::size_t m = 0; m < per_group; ++m) {
      Vector v = random_vector(rng, d);
      for (std::size_t j = 0; j < d; ++j) v[j] = centre[j] + 0.8 * v[j];
      ds.items.push_back({"item" + std::to_string(ds.items.size()), v, "g" + std::to_string(g)});
    }
  }
  return ds;
}

TEST(MapAtR, PerfectClustersScoreOne) {
  RetrievalDataset ds;
  ds.r = 2;
  for (int g = 0; g < 3; ++g) {
    Vector v(3, 0.0);
    v[static_cast<std::size_t>(g)] = 1.0;
    for (int m = 0; m < 3; ++m) ds.items.push_back({std::to_string(g * 3 + m), v, std::to_string(g)});
  }
  EXPECT_EQ(map_at_r(ds), 1.0);
}

// Per-query values from an exhaustive script: 0.25, 1, 0, 0, 0.25, 0.5.
TEST(MapAtR, CraftedTwoGroups) {
  RetrievalDataset ds;
  ds.r = 2;
  ds.items = {{"a1", {1.0, 0.1}, "A"},  {"a2", {0.8, 0.6}, "A"}, {"a3", {0.2, 1.0}, "A"},
              {"b1", {0.9, -0.2}, "B"}, {"b2", {0.1, 0.9}, "B"}, {"b3", {-0.3, 1.0}, "B"}};
  EXPECT_NEAR(map_at_r(ds), 1.0 / 3.0, 1e-15);
  const auto order = rank_candidates(ds, 0);
  EXPECT_EQ(ds.items[order[0]].id, "b1");
  EXPECT_EQ(ds.items[order[1]].id, "a2");
}

TEST(MapAtR, QueryIsNeverItsOwnCandidate) {
  Rng rng(3);
  const RetrievalDataset ds = random_dataset(rng, 4, 5, 4, 6);
  for (std::size_t q = 0; q < ds.items.size(); ++q) {
    const auto order = rank_candidates(ds, q);
    EXPECT_EQ(order.size(), ds.items.size() - 1);
    EXPECT_EQ(std::count(order.begin(), order.end(), q), 0);
  }
  // A singleton group would have to count the query itself to reach R.
  RetrievalDataset small = ds;
  small.items.push_back({"lonely", random_vector(rng, 6), "solo"});
  EXPECT_THROW(map_at_r(small), GroupTooSmall);
}

TEST(MapAtR, TiesBrokenById) {
  RetrievalDataset ds;
  ds.r = 1;
  ds.items = {{"q", {1, 0}, "A"}, {"z", {1, 0}, "B"}, {"m", {1, 0}, "A"}, {"n", {0, 1}, "B"}};
  const auto order = rank_candidates(ds, 0);
  EXPECT_EQ(ds.items[order[0]].id, "m");
  EXPECT_EQ(ds.items[order[1]].id, "z");
}

TEST(MapAtR, MatchesBruteForce) {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng.below(5);
    const std::size_t per = r + 1 + rng.below(3);
    const std::size_t groups = 2 + rng.below(std::max<std::size_t>(1, 200 / per - 1));
    RetrievalDataset ds = random_dataset(rng, std::min<std::size_t>(groups, 200 / per), per, r,
                                         2 + rng.below(10));
    EXPECT_NEAR(map_at_r(ds), brute_force_map(ds), 1e-12);
  }
}

TEST(MapAtR, InvariantUnderScalingAndRelabelling) {
  Rng rng(23);
  RetrievalDataset ds = random_dataset(rng, 5, 4, 3, 5);
  const double base = map_at_r(ds);
  RetrievalDataset scaled = ds;
  for (auto& it : scaled.items) {
    for (double& x : it.embedding) x *= 7.5;
    it.group = "renamed-" + it.group;
  }
  EXPECT_NEAR(map_at_r(scaled), base, 1e-12);
}

// Random embeddings: candidate k is relevant with probability K/M and the
// expected precision term follows from sampling without replacement.
TEST(MapAtR, RandomEmbeddingsMeetChanceBaseline) {
  const std::size_t r = 4, groups = 10, m = groups * (r + 1) - 1;
  double expected = 0.0;
  for (std::size_t k = 1; k <= r; ++k) {
    const double p = double(r) / double(m);
    expected += p * (1.0 + double(k - 1) * double(r - 1) / double(m - 1)) / double(k);
  }
  expected /= double(r);
  Rng rng(31);
  double total = 0.0;
  const int trials = 200;
  for (int t = 0; t < trials; ++t) {
    RetrievalDataset ds;
    ds.r = r;
    for (std::size_t i = 0; i < groups * (r + 1); ++i) {
      ds.items.push_back({std::to_string(i), random_vector(rng, 8), std::to_string(i % groups)});
    }
    total += map_at_r(ds);
  }
  EXPECT_NEAR(total / trials, expected, 0.01);
}

TEST(Mrr, Examples) {
  const std::vector<std::size_t> first = {1, 1, 1};
  EXPECT_EQ(mrr(first), 1.0);
  const std::vector<std::size_t> ranks = {1, 2, 4};
  EXPECT_NEAR(mrr(ranks), 1.75 / 3.0, 1e-15);
  const std::vector<RankedQuery> queries = {{{"x", "y", "z"}, "y"}, {{"a", "b"}, "a"}};
  EXPECT_NEAR(mrr(queries), 0.75, 1e-15);
  const std::vector<RankedQuery> bad = {{{"x", "y", "y"}, "y"}};
  EXPECT_THROW(mrr(bad), Error);
  const std::vector<std::size_t> zero = {0};
  EXPECT_THROW(mrr(zero), Error);
}

TEST(Mrr, RandomisedMatchesDirectSum) {
  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<RankedQuery> queries;
    double want = 0.0;
    const std::size_t n = 1 + rng.below(20);
    for (std::size_t q = 0; q < n; ++q) {
      RankedQuery rq;
      const std::size_t len = 1 + rng.below(10);
      for (std::size_t c = 0; c < len; ++c) rq.candidates.push_back("c" + std::to_string(c));
      const std::size_t pos = rng.below(len);
      rq.relevant = rq.candidates[pos];
      want += 1.0 / double(pos + 1);
      queries.push_back(rq);
      // Irrelevant candidates appended below the relevant one change nothing.
      queries.back().candidates.push_back("tail");
    }
    EXPECT_NEAR(mrr(queries), want / double(n), 1e-15);
  }
}

TEST(Prf1, Examples) {
  const Prf1 perfect = prf1({5, 0, 0, 0});
  EXPECT_EQ(perfect.precision, 1.0);
  EXPECT_EQ(perfect.recall, 1.0);
  EXPECT_EQ(perfect.f1, 1.0);
  EXPECT_FALSE(perfect.degenerate);
  const Prf1 none = prf1({0, 0, 10, 0});
  EXPECT_EQ(none.f1, 0.0);
  EXPECT_TRUE(none.degenerate);
  const Prf1 mid = prf1({47, 52, 0, 49});
  EXPECT_NEAR(mid.precision, 0.4747, 5e-5);
  EXPECT_NEAR(mid.recall, 0.4896, 5e-5);
  EXPECT_NEAR(mid.f1, 0.4820, 1e-4);
}

std::vector<EmbeddedTriplet> orthogonal_triplets(std::size_t n) {
  std::vector<EmbeddedTriplet> out;
  const std::size_t d = 3 * n;
  for (std::size_t i = 0; i < n; ++i) {
    EmbeddedTriplet t{Vector(d, 0.0), Vector(d, 0.0), Vector(d, 0.0)};
    t.original[3 * i] = 1.0;
    t.clone[3 * i + 1] = 1.0;
    t.deviant[3 * i + 2] = 1.0;
    out.push_back(std::move(t));
  }
  return out;
}

TEST(ZeroShot, OrthogonalEmbeddingsHaveZeroSimilarity) {
  const ZeroShotStudy s = zero_shot_study(orthogonal_triplets(100));
  EXPECT_EQ(s.avg_clone_sim, 0.0);
  EXPECT_EQ(s.avg_deviant_sim, 0.0);
  EXPECT_EQ(s.avg_random_sim, 0.0);
  EXPECT_NEAR(s.top1_clone + s.top1_deviant + s.top1_random, 100.0, 1e-9);
}

TEST(ZeroShot, IdentityEncoderOnDuplicates) {
  std::vector<TextTriplet> triplets;
  for (int i = 0; i < 120; ++i) {
    const std::string text = "fn" + std::to_string(i);
    triplets.push_back({text, text, text + "!"});
  }
  const TextEncoder encoder = [](const std::string& text) {
    Vector v(16, 0.0);
    for (std::size_t i = 0; i < text.size(); ++i) v[(i * 7 + static_cast<unsigned char>(text[i])) % 16] += 1.0;
    return v;
  };
  const ZeroShotStudy s = zero_shot_study(encoder, triplets);
  EXPECT_NEAR(s.avg_clone_sim, 1.0, 1e-12);
}

TEST(ZeroShot, CountsEachOutcome) {
  Rng rng(8);
  std::vector<EmbeddedTriplet> t;
  for (int i = 0; i < 100; ++i) {
    const Vector x = random_vector(rng, 12);
    Vector near = x, far = random_vector(rng, 12);
    near[0] += 0.01;
    // Every third triplet has its deviant closest.
    if (i % 3 == 0) {
      t.push_back({x, far, near});
    } else {
      t.push_back({x, near, far});
    }
  }
  const ZeroShotStudy s = zero_shot_study(t);
  EXPECT_NEAR(s.top1_deviant, 34.0, 1e-9);
  EXPECT_NEAR(s.top1_clone, 66.0, 1e-9);
  EXPECT_GT(s.avg_clone_sim, s.avg_random_sim);
  EXPECT_THROW(zero_shot_study(std::span(t).first(50)), Error);
}

// Coordinates frozen from an SVD-based projection of the same points.
TEST(Pca, MatchesReferenceProjection) {
  const std::vector<Vector> pts = {{2.0, 0.5, -1.0}, {1.0, 1.5, 0.0},  {-0.5, 2.0, 1.0},
                                   {0.0, -1.0, 2.5}, {3.0, 0.0, 0.5},  {-1.0, -0.5, -2.0}};
  const double want[6][2] = {{0.6065692238432745, 1.6003609098222158},
                             {0.12226066405294617, 0.35228635927303786},
                             {-0.20125148057835365, -1.3849337950454388},
                             {-1.9516624034658816, -1.6500684927317786},
                             {-1.1874804457214598, 1.9319426734251037},
                             {2.6115644418694743, -0.8495876547431398}};
  const PcaResult r = pca_project(pts, 2);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_NEAR(r.coordinates[i][0], want[i][0], 1e-8);
    EXPECT_NEAR(r.coordinates[i][1], want[i][1], 1e-8);
  }
  EXPECT_NEAR(r.explained_variance[0], 0.40310752016712303, 1e-8);
  EXPECT_NEAR(r.explained_variance[1], 0.381031699551746, 1e-8);
}

TEST(Pca, LineHasOneComponent) {
  std::vector<Vector> pts;
  for (int i = 0; i < 10; ++i) pts.push_back({1.0 * i, 2.0 * i - 3, -0.5 * i});
  const PcaResult r = pca_project(pts, 2);
  EXPECT_NEAR(r.explained_variance[0], 1.0, 1e-12);
  EXPECT_NEAR(r.explained_variance[1], 0.0, 1e-12);
}

TEST(Pca, IsotropicSampleSpreadsVariance) {
  Rng rng(12);
  std::vector<Vector> pts;
  for (int i = 0; i < 4000; ++i) pts.push_back(random_vector(rng, 3));
  const PcaResult r = pca_project(pts, 3);
  for (double v : r.explained_variance) EXPECT_NEAR(v, 1.0 / 3.0, 0.03);
}

TEST(Pca, RejectsTooFewPoints) {
  const std::vector<Vector> pts = {{1, 2}, {3, 4}};
  EXPECT_THROW(pca_project(pts, 2), Error);
}

TEST(EmbeddingFile, RoundTrip) {
  const std::vector<RetrievalItem> items = {{"a", {1.5, -2.0}, "g1"}, {"b", {0.125, 3.0}, "g2"}};
  std::stringstream ss;
  write_embeddings(ss, items);
  const auto back = read_embeddings(ss);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].id, "b");
  EXPECT_EQ(back[1].embedding, items[1].embedding);
  std::istringstream bad("{\"id\": 1}\n");
  EXPECT_THROW(read_embeddings(bad), Error);
}

}  // namespace
}  // namespace cloneforge::eval
