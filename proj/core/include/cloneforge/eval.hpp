#pragma once

// Retrieval and classification metrics, the zero-shot similarity study and
// PCA projection of embeddings.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cloneforge/common.hpp"
#include "cloneforge/objective.hpp"

namespace cloneforge::eval {

using objective::Vector;

class GroupTooSmall : public Error {
 public:
  using Error::Error;
};

struct RetrievalItem {
  std::string id;
  Vector embedding;
  std::string group;
};

struct RetrievalDataset {
  std::vector<RetrievalItem> items;
  std::size_t r = 0;
};

/// Candidates for item `query`, best first: every other item ranked by cosine
/// similarity, ties by ascending id. Similarities within about 1e-12 of each
/// other count as ties.
std::vector<std::size_t> rank_candidates(const RetrievalDataset& ds, std::size_t query);

/// Mean over queries of AP@R: (1/R) * sum over the top R candidates of
/// precision@k at every relevant k. The query never counts as its own clone.
/// Throws GroupTooSmall when some group has at most R members.
double map_at_r(const RetrievalDataset& ds);

/// 1-based rank of the single relevant candidate per query.
double mrr(std::span<const std::size_t> ranks);

struct RankedQuery {
  std::vector<std::string> candidates;
  std::string relevant;
};
/// Throws unless `relevant` occurs exactly once in each list.
double mrr(std::span<const RankedQuery> queries);

struct Confusion {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t tn = 0;
  std::uint64_t fn = 0;
};

struct Prf1 {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double accuracy = 0.0;
  /// Some ratio had a zero denominator and was reported as 0.
  bool degenerate = false;
};

Prf1 prf1(const Confusion& c);

struct EmbeddedTriplet {
  Vector original;
  Vector clone;
  Vector deviant;
};

struct ZeroShotStudy {
  std::size_t triplets = 0;
  double avg_clone_sim = 0.0;
  double avg_deviant_sim = 0.0;
  /// Mean over originals of the mean similarity to every augmented program
  /// except its own clone and deviant.
  double avg_random_sim = 0.0;
  /// Top-1 neighbour of each original among all clones and deviants, in percent.
  double top1_clone = 0.0;
  double top1_deviant = 0.0;
  double top1_random = 0.0;
};

inline constexpr std::size_t kMinZeroShotTriplets = 100;

/// Throws when fewer than `min_triplets` triplets are supplied.
ZeroShotStudy zero_shot_study(std::span<const EmbeddedTriplet> triplets,
                              std::size_t min_triplets = kMinZeroShotTriplets);

struct TextTriplet {
  std::string original;
  std::string clone;
  std::string deviant;
};
using TextEncoder = std::function<Vector(const std::string&)>;

ZeroShotStudy zero_shot_study(const TextEncoder& encoder, std::span<const TextTriplet> triplets,
                              std::size_t min_triplets = kMinZeroShotTriplets);

struct PcaResult {
  /// One row of k coordinates per input point.
  std::vector<Vector> coordinates;
  /// Fraction of total variance per component, descending.
  Vector explained_variance;
};

/// Projection of the mean-centred points on the top-k covariance eigenvectors.
/// Each component is signed so that its largest-magnitude coordinate is positive.
PcaResult pca_project(std::span<const Vector> points, std::size_t k = 2);

/// JSON-lines {id, group, vector}.
std::vector<RetrievalItem> read_embeddings(std::istream& in);
void write_embeddings(std::ostream& out, std::span<const RetrievalItem> items);

}  // namespace cloneforge::eval
