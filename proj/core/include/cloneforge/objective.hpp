#pragma once

// Pre-training losses (masked-token, local-AST-label and hard-negative
// contrastive), their weighted combination, analytic contrastive gradients,
// and a small trainable encoder that exercises the contrastive signal.

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "cloneforge/common.hpp"

namespace cloneforge::objective {

using Vector = std::vector<double>;

class DegenerateDistribution : public Error {
 public:
  using Error::Error;
};
class ZeroNormEmbedding : public Error {
 public:
  using Error::Error;
};
class Diverged : public Error {
 public:
  using Error::Error;
};

inline constexpr double kDefaultTau = 0.05;
inline constexpr double kDistributionTolerance = 1e-6;

/// Sum of -log P(true) over positions. `degenerate` marks a zero probability
/// on a true id, in which case `value` is +infinity.
struct NllResult {
  double value = 0.0;
  bool degenerate = false;
  std::size_t positions = 0;
};

/// Masked positions: one probability vector and one true token id each.
NllResult mlm_loss(std::span<const Vector> predicted, std::span<const std::int32_t> true_ids);
/// Every non-special position: one label distribution and one true label id each.
NllResult ltsp_loss(std::span<const Vector> predicted, std::span<const std::int32_t> true_ids);

struct ContrastiveBatch {
  std::vector<Vector> anchors;
  std::vector<Vector> positives;
  std::vector<Vector> negatives;
  double tau = kDefaultTau;

  std::size_t size() const { return anchors.size(); }
};

double cosine(std::span<const double> a, std::span<const double> b);

struct ClrResult {
  std::vector<double> per_anchor;
  double mean = 0.0;
};

/// Anchor i scores its positive against every positive and every negative of
/// the batch (its own positive included) at temperature tau; the batch loss
/// is the mean over anchors.
ClrResult clr_loss(const ContrastiveBatch& batch);

struct ClrGradient {
  std::vector<Vector> anchors;
  std::vector<Vector> positives;
  std::vector<Vector> negatives;
};

/// Exact gradient of clr_loss(batch).mean with respect to every embedding.
ClrGradient clr_gradient(const ContrastiveBatch& batch, ClrResult* loss = nullptr);

struct Lambdas {
  double mlm = 1.0;
  double ltsp = 0.1;
  double clr = 1.0;
};

struct LossBreakdown {
  double mlm = 0.0;
  double ltsp = 0.0;
  double clr = 0.0;
  double combined = 0.0;
  Lambdas lambdas;
};

LossBreakdown combined_loss(double mlm, double ltsp, double clr, Lambdas lambdas = {});

/// Seeded partition of [0, count) into full batches of `batch`; the short tail is dropped.
std::vector<std::vector<std::size_t>> batch_partition(std::size_t count, std::size_t batch,
                                                      std::uint64_t seed);

/// Sub-token ids of one triplet; specials are ignored by the encoder.
struct ToyTriplet {
  std::vector<std::int32_t> original;
  std::vector<std::int32_t> clone;
  std::vector<std::int32_t> deviant;
};

struct ToyConfig {
  std::size_t dim = 64;
  std::size_t steps = 500;
  double lr = 0.01;
  std::size_t batch = 32;
  double tau = kDefaultTau;
  std::uint64_t seed = 0;
};

/// Sub-token embedding table, mean pooling, linear projection.
class ToyEncoder {
 public:
  ToyEncoder() = default;
  /// Gaussian initialisation.
  ToyEncoder(std::size_t vocab_size, std::size_t dim, std::uint64_t seed);

  std::size_t vocab_size() const { return vocab_size_; }
  std::size_t dim() const { return dim_; }

  /// Mean of the embeddings of non-special ids (ids outside the table map to [UNK]).
  Vector pool(std::span<const std::int32_t> ids) const;
  Vector encode(std::span<const std::int32_t> ids) const;

  const std::vector<double>& embeddings() const { return table_; }
  const std::vector<double>& projection() const { return projection_; }

  ToyConfig config;
  std::vector<double> loss_curve;

  std::string to_text() const;
  static ToyEncoder from_text(std::string_view text);
  void save(const std::filesystem::path& path) const;
  static ToyEncoder load(const std::filesystem::path& path);

 private:
  friend ToyEncoder toy_train(std::span<const ToyTriplet>, std::size_t, const ToyConfig&);

  std::size_t row_of(std::int32_t id) const;

  std::size_t vocab_size_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> table_;       // vocab_size x dim, row-major
  std::vector<double> projection_;  // dim x dim, row-major
};

/// Adam on the mean contrastive loss with in-batch negatives. Each step takes
/// the next batch of a seeded per-epoch partition of the triplets.
ToyEncoder toy_train(std::span<const ToyTriplet> triplets, std::size_t vocab_size,
                     const ToyConfig& config);

/// step,clr_loss rows.
std::string loss_curve_csv(const ToyEncoder& encoder);

}  // namespace cloneforge::objective
