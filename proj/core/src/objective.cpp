#include "cloneforge/objective.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "cloneforge/rng.hpp"
#include "cloneforge/tokenizer.hpp"

namespace cloneforge::objective {
namespace {

NllResult nll(std::span<const Vector> predicted, std::span<const std::int32_t> true_ids,
              const char* what) {
  if (predicted.size() != true_ids.size()) {
    throw Error(std::string(what) + ": distributions and true ids differ in count");
  }
  NllResult out;
  out.positions = predicted.size();
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    const Vector& p = predicted[i];
    double total = 0.0;
    for (double x : p) {
      if (!std::isfinite(x) || x < 0.0) throw Error(std::string(what) + ": invalid probability");
      total += x;
    }
    if (std::abs(total - 1.0) > kDistributionTolerance) {
      throw Error(std::string(what) + ": distribution does not sum to 1");
    }
    const std::int32_t id = true_ids[i];
    if (id < 0 || static_cast<std::size_t>(id) >= p.size()) {
      throw Error(std::string(what) + ": true id outside the distribution");
    }
    if (p[static_cast<std::size_t>(id)] == 0.0) {
      out.degenerate = true;
      out.value = std::numeric_limits<double>::infinity();
      continue;
    }
    if (!out.degenerate) out.value -= std::log(p[static_cast<std::size_t>(id)]);
  }
  return out;
}

double norm(std::span<const double> a) {
  return std::sqrt(std::inner_product(a.begin(), a.end(), a.begin(), 0.0));
}

void check_batch(const ContrastiveBatch& b) {
  if (b.anchors.empty()) throw Error("contrastive batch is empty");
  if (b.positives.size() != b.anchors.size() || b.negatives.size() != b.anchors.size()) {
    throw Error("contrastive batch lists differ in length");
  }
  if (!(b.tau > 0.0)) throw Error("temperature must be positive");
  const std::size_t d = b.anchors[0].size();
  for (const auto* list : {&b.anchors, &b.positives, &b.negatives}) {
    for (const Vector& v : *list) {
      if (v.size() != d) throw Error("contrastive batch mixes embedding dimensions");
      for (double x : v) {
        if (!std::isfinite(x)) throw Error("embedding has a non-finite entry");
      }
    }
  }
}

// Logits of anchor i: positives first, then negatives.
struct AnchorTerms {
  std::vector<double> logits;
  double loss = 0.0;
};

AnchorTerms anchor_terms(const ContrastiveBatch& b, std::size_t i) {
  const std::size_t n = b.size();
  AnchorTerms t;
  t.logits.resize(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    t.logits[k] = cosine(b.anchors[i], b.positives[k]) / b.tau;
    t.logits[n + k] = cosine(b.anchors[i], b.negatives[k]) / b.tau;
  }
  const double own = t.logits[i];
  const double m = *std::max_element(t.logits.begin(), t.logits.end());
  double rest = 0.0;
  for (std::size_t k = 0; k < t.logits.size(); ++k) {
    if (k != i) rest += std::exp(t.logits[k] - m);
  }
  // log1p keeps the saturated case accurate when the own positive dominates.
  t.loss = own == m ? std::log1p(rest) : std::log(std::exp(own - m) + rest) + (m - own);
  return t;
}

void add_cosine_grad(std::span<const double> a, std::span<const double> b, double scale,
                     Vector& grad_a, Vector& grad_b) {
  const double na = norm(a);
  const double nb = norm(b);
  const double c = std::inner_product(a.begin(), a.end(), b.begin(), 0.0) / (na * nb);
  for (std::size_t j = 0; j < a.size(); ++j) {
    grad_a[j] += scale * (b[j] / (na * nb) - c * a[j] / (na * na));
    grad_b[j] += scale * (a[j] / (na * nb) - c * b[j] / (nb * nb));
  }
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_row(std::ostream& out, std::span<const double> row) {
  for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << format_double(row[i]);
  out << "\n";
}

}  // namespace

NllResult mlm_loss(std::span<const Vector> predicted, std::span<const std::int32_t> true_ids) {
  return nll(predicted, true_ids, "mlm_loss");
}

NllResult ltsp_loss(std::span<const Vector> predicted, std::span<const std::int32_t> true_ids) {
  return nll(predicted, true_ids, "ltsp_loss");
}

double cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error("cosine of vectors with different dimensions");
  const double na = norm(a);
  const double nb = norm(b);
  if (na == 0.0 || nb == 0.0) throw ZeroNormEmbedding("cosine similarity of a zero vector");
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0) / (na * nb);
}

ClrResult clr_loss(const ContrastiveBatch& batch) {
  check_batch(batch);
  ClrResult out;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    out.per_anchor.push_back(anchor_terms(batch, i).loss);
  }
  out.mean = std::accumulate(out.per_anchor.begin(), out.per_anchor.end(), 0.0) /
             static_cast<double>(batch.size());
  return out;
}

ClrGradient clr_gradient(const ContrastiveBatch& batch, ClrResult* loss) {
  check_batch(batch);
  const std::size_t n = batch.size();
  const std::size_t d = batch.anchors[0].size();
  ClrGradient g;
  g.anchors.assign(n, Vector(d, 0.0));
  g.positives.assign(n, Vector(d, 0.0));
  g.negatives.assign(n, Vector(d, 0.0));
  ClrResult result;
  for (std::size_t i = 0; i < n; ++i) {
    const AnchorTerms t = anchor_terms(batch, i);
    result.per_anchor.push_back(t.loss);
    const double m = *std::max_element(t.logits.begin(), t.logits.end());
    double z = 0.0;
    for (double x : t.logits) z += std::exp(x - m);
    for (std::size_t k = 0; k < 2 * n; ++k) {
      double w = std::exp(t.logits[k] - m) / z;
      if (k == i) w -= 1.0;
      if (w == 0.0) continue;
      const double scale = w / (batch.tau * static_cast<double>(n));
      if (k < n) {
        add_cosine_grad(batch.anchors[i], batch.positives[k], scale, g.anchors[i], g.positives[k]);
      } else {
        add_cosine_grad(batch.anchors[i], batch.negatives[k - n], scale, g.anchors[i],
                        g.negatives[k - n]);
      }
    }
  }
  if (loss != nullptr) {
    result.mean = std::accumulate(result.per_anchor.begin(), result.per_anchor.end(), 0.0) /
                  static_cast<double>(n);
    *loss = std::move(result);
  }
  return g;
}

LossBreakdown combined_loss(double mlm, double ltsp, double clr, Lambdas lambdas) {
  if (!std::isfinite(mlm) || !std::isfinite(ltsp) || !std::isfinite(clr)) {
    throw Error("combined_loss needs finite components");
  }
  LossBreakdown out{mlm, ltsp, clr, 0.0, lambdas};
  out.combined = lambdas.mlm * mlm + lambdas.ltsp * ltsp + lambdas.clr * clr;
  return out;
}

std::vector<std::vector<std::size_t>> batch_partition(std::size_t count, std::size_t batch,
                                                      std::uint64_t seed) {
  if (batch == 0) throw Error("batch size must be positive");
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.shuffle(std::span<std::size_t>(order));
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t start = 0; start + batch <= count; start += batch) {
    out.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(start),
                     order.begin() + static_cast<std::ptrdiff_t>(start + batch));
  }
  return out;
}

ToyEncoder::ToyEncoder(std::size_t vocab_size, std::size_t dim, std::uint64_t seed)
    : vocab_size_(vocab_size), dim_(dim) {
  if (vocab_size <= static_cast<std::size_t>(tokenizer::SubwordModel::kUnk) || dim == 0) {
    throw Error("toy encoder needs a vocabulary and a positive dimension");
  }
  Rng rng(seed);
  table_.resize(vocab_size * dim);
  for (double& x : table_) x = rng.normal();
  projection_.resize(dim * dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (double& x : projection_) x = rng.normal() * scale;
}

std::size_t ToyEncoder::row_of(std::int32_t id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= vocab_size_) {
    return static_cast<std::size_t>(tokenizer::SubwordModel::kUnk);
  }
  return static_cast<std::size_t>(id);
}

Vector ToyEncoder::pool(std::span<const std::int32_t> ids) const {
  Vector h(dim_, 0.0);
  std::size_t count = 0;
  for (std::int32_t id : ids) {
    if (tokenizer::SubwordModel::is_special(id)) continue;
    const double* row = &table_[row_of(id) * dim_];
    for (std::size_t j = 0; j < dim_; ++j) h[j] += row[j];
    ++count;
  }
  if (count > 0) {
    for (double& x : h) x /= static_cast<double>(count);
  }
  return h;
}

Vector ToyEncoder::encode(std::span<const std::int32_t> ids) const {
  const Vector h = pool(ids);
  Vector z(dim_, 0.0);
  for (std::size_t r = 0; r < dim_; ++r) {
    const double* w = &projection_[r * dim_];
    z[r] = std::inner_product(w, w + dim_, h.begin(), 0.0);
  }
  return z;
}

ToyEncoder toy_train(std::span<const ToyTriplet> triplets, std::size_t vocab_size,
                     const ToyConfig& config) {
  if (config.batch == 0 || triplets.size() < config.batch) {
    throw Error("toy training needs at least one full batch of triplets");
  }
  ToyEncoder enc(vocab_size, config.dim, mix_seed(config.seed, 0));
  enc.config = config;
  const std::size_t d = config.dim;

  // Adam state.
  constexpr double kBeta1 = 0.9;
  constexpr double kBeta2 = 0.999;
  constexpr double kEps = 1e-8;
  std::vector<double> m_table(enc.table_.size(), 0.0), v_table(enc.table_.size(), 0.0);
  std::vector<double> m_proj(enc.projection_.size(), 0.0), v_proj(enc.projection_.size(), 0.0);
  std::vector<double> g_table(enc.table_.size(), 0.0), g_proj(enc.projection_.size(), 0.0);
  std::vector<char> touched(vocab_size, 0);

  std::vector<std::vector<std::size_t>> epoch_batches;
  std::size_t epoch = 0;
  std::size_t next_batch = 0;
  for (std::size_t step = 0; step < config.steps; ++step) {
    if (next_batch == epoch_batches.size()) {
      epoch_batches = batch_partition(triplets.size(), config.batch, mix_seed(config.seed, ++epoch));
      next_batch = 0;
    }
    const std::vector<std::size_t>& members = epoch_batches[next_batch++];

    ContrastiveBatch batch;
    batch.tau = config.tau;
    std::vector<Vector> pooled[3];
    std::vector<const std::vector<std::int32_t>*> seqs[3];
    for (std::size_t idx : members) {
      const ToyTriplet& t = triplets[idx];
      const std::vector<std::int32_t>* parts[3] = {&t.original, &t.clone, &t.deviant};
      std::vector<Vector>* targets[3] = {&batch.anchors, &batch.positives, &batch.negatives};
      for (int r = 0; r < 3; ++r) {
        seqs[r].push_back(parts[r]);
        pooled[r].push_back(enc.pool(*parts[r]));
        targets[r]->push_back(enc.encode(*parts[r]));
      }
    }
    ClrResult loss;
    const ClrGradient grad = clr_gradient(batch, &loss);
    if (!std::isfinite(loss.mean)) {
      throw Diverged("toy training loss became non-finite at step " + std::to_string(step));
    }
    enc.loss_curve.push_back(loss.mean);

    std::fill(g_proj.begin(), g_proj.end(), 0.0);
    const std::vector<Vector>* dz[3] = {&grad.anchors, &grad.positives, &grad.negatives};
    for (int r = 0; r < 3; ++r) {
      for (std::size_t b = 0; b < members.size(); ++b) {
        const Vector& g = (*dz[r])[b];
        const Vector& h = pooled[r][b];
        Vector dh(d, 0.0);
        for (std::size_t row = 0; row < d; ++row) {
          const double* w = &enc.projection_[row * d];
          double* gp = &g_proj[row * d];
          for (std::size_t col = 0; col < d; ++col) {
            gp[col] += g[row] * h[col];
            dh[col] += w[col] * g[row];
          }
        }
        std::size_t count = 0;
        for (std::int32_t id : *seqs[r][b]) count += tokenizer::SubwordModel::is_special(id) ? 0 : 1;
        if (count == 0) continue;
        for (std::int32_t id : *seqs[r][b]) {
          if (tokenizer::SubwordModel::is_special(id)) continue;
          const std::size_t row = enc.row_of(id);
          touched[row] = 1;
          double* gt = &g_table[row * d];
          for (std::size_t j = 0; j < d; ++j) gt[j] += dh[j] / static_cast<double>(count);
        }
      }
    }

    const double t = static_cast<double>(step + 1);
    const double c1 = 1.0 - std::pow(kBeta1, t);
    const double c2 = 1.0 - std::pow(kBeta2, t);
    auto adam = [&](double& param, double& m, double& v, double g) {
      m = kBeta1 * m + (1.0 - kBeta1) * g;
      v = kBeta2 * v + (1.0 - kBeta2) * g * g;
      param -= config.lr * (m / c1) / (std::sqrt(v / c2) + kEps);
    };
    for (std::size_t i = 0; i < enc.projection_.size(); ++i) {
      adam(enc.projection_[i], m_proj[i], v_proj[i], g_proj[i]);
    }
    // Rows never seen keep zero moments, so only rows with history need updating.
    for (std::size_t row = 0; row < vocab_size; ++row) {
      if (!touched[row]) continue;
      for (std::size_t j = 0; j < d; ++j) {
        const std::size_t i = row * d + j;
        adam(enc.table_[i], m_table[i], v_table[i], g_table[i]);
        g_table[i] = 0.0;
      }
    }
  }
  return enc;
}

std::string loss_curve_csv(const ToyEncoder& encoder) {
  std::string out = "step,clr_loss\n";
  for (std::size_t i = 0; i < encoder.loss_curve.size(); ++i) {
    out += std::to_string(i) + "," + format_double(encoder.loss_curve[i]) + "\n";
  }
  return out;
}

std::string ToyEncoder::to_text() const {
  std::ostringstream out;
  out << "cloneforge-toy-encoder 1\n";
  out << "vocab " << vocab_size_ << "\n";
  out << "dim " << dim_ << "\n";
  out << "steps " << config.steps << "\n";
  out << "lr " << format_double(config.lr) << "\n";
  out << "batch " << config.batch << "\n";
  out << "tau " << format_double(config.tau) << "\n";
  out << "seed " << config.seed << "\n";
  out << "loss-curve " << loss_curve.size() << "\n";
  write_row(out, loss_curve);
  out << "embeddings\n";
  for (std::size_t r = 0; r < vocab_size_; ++r) {
    write_row(out, std::span<const double>(table_).subspan(r * dim_, dim_));
  }
  out << "projection\n";
  for (std::size_t r = 0; r < dim_; ++r) {
    write_row(out, std::span<const double>(projection_).subspan(r * dim_, dim_));
  }
  return out.str();
}

ToyEncoder ToyEncoder::from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string word;
  auto expect = [&](const char* key) {
    if (!(in >> word) || word != key) throw Error(std::string("toy encoder file: expected ") + key);
  };
  auto read_number = [&]() {
    double x;
    if (!(in >> x)) throw Error("toy encoder file: truncated numbers");
    return x;
  };
  std::string version;
  if (!(in >> word >> version) || word != "cloneforge-toy-encoder" || version != "1") {
    throw Error("not a cloneforge toy encoder file");
  }
  ToyEncoder enc;
  expect("vocab");
  in >> enc.vocab_size_;
  expect("dim");
  in >> enc.dim_;
  expect("steps");
  in >> enc.config.steps;
  expect("lr");
  enc.config.lr = read_number();
  expect("batch");
  in >> enc.config.batch;
  expect("tau");
  enc.config.tau = read_number();
  expect("seed");
  in >> enc.config.seed;
  enc.config.dim = enc.dim_;
  expect("loss-curve");
  std::size_t n = 0;
  in >> n;
  if (!in || enc.dim_ == 0 || enc.vocab_size_ == 0) throw Error("toy encoder file: bad header");
  for (std::size_t i = 0; i < n; ++i) enc.loss_curve.push_back(read_number());
  expect("embeddings");
  enc.table_.resize(enc.vocab_size_ * enc.dim_);
  for (double& x : enc.table_) x = read_number();
  expect("projection");
  enc.projection_.resize(enc.dim_ * enc.dim_);
  for (double& x : enc.projection_) x = read_number();
  return enc;
}

void ToyEncoder::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << to_text();
}

ToyEncoder ToyEncoder::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_text(ss.str());
}

}  // namespace cloneforge::objective
