#include "cloneforge/eval.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>

#include "json.hpp"

namespace cloneforge::eval {
namespace {

std::vector<Vector> normalized(std::span<const RetrievalItem> items) {
  std::vector<Vector> out;
  out.reserve(items.size());
  for (const RetrievalItem& it : items) {
    const double n = std::sqrt(std::inner_product(it.embedding.begin(), it.embedding.end(),
                                                  it.embedding.begin(), 0.0));
    if (n == 0.0) throw objective::ZeroNormEmbedding("embedding of " + it.id + " is zero");
    Vector v = it.embedding;
    for (double& x : v) x /= n;
    out.push_back(std::move(v));
  }
  return out;
}

void check_dimensions(std::span<const RetrievalItem> items) {
  for (const RetrievalItem& it : items) {
    if (it.embedding.size() != items.front().embedding.size()) {
      throw Error("embeddings have different dimensions");
    }
  }
}

constexpr double kTieGrid = 1e12;

std::vector<std::size_t> ranked(std::span<const RetrievalItem> items,
                                const std::vector<Vector>& unit, std::size_t query) {
  std::vector<std::pair<double, std::size_t>> scored;
  scored.reserve(items.size());
  const Vector& q = unit[query];
  for (std::size_t j = 0; j < items.size(); ++j) {
    if (j == query) continue;
    // Snap to a 1e-12 grid so similarities equal up to rounding tie and fall back to the id.
    const double sim = std::inner_product(q.begin(), q.end(), unit[j].begin(), 0.0);
    scored.emplace_back(std::round(sim * kTieGrid), j);
  }
  std::sort(scored.begin(), scored.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    if (items[a.second].id != items[b.second].id) return items[a.second].id < items[b.second].id;
    return a.second < b.second;
  });
  std::vector<std::size_t> out;
  out.reserve(scored.size());
  for (const auto& s : scored) out.push_back(s.second);
  return out;
}

double ratio(double num, double den, bool& degenerate) {
  if (den == 0.0) {
    degenerate = true;
    return 0.0;
  }
  return num / den;
}

}  // namespace

std::vector<std::size_t> rank_candidates(const RetrievalDataset& ds, std::size_t query) {
  if (query >= ds.items.size()) throw Error("query index out of range");
  check_dimensions(ds.items);
  return ranked(ds.items, normalized(ds.items), query);
}

double map_at_r(const RetrievalDataset& ds) {
  if (ds.items.empty()) throw Error("retrieval dataset is empty");
  if (ds.r == 0) throw Error("R must be positive");
  check_dimensions(ds.items);
  std::map<std::string, std::size_t> sizes;
  for (const RetrievalItem& it : ds.items) ++sizes[it.group];
  for (const auto& [group, n] : sizes) {
    if (n < ds.r + 1) {
      throw GroupTooSmall("group '" + group + "' has " + std::to_string(n) +
                          " members; MAP@" + std::to_string(ds.r) + " needs " +
                          std::to_string(ds.r + 1));
    }
  }
  const std::vector<Vector> unit = normalized(ds.items);
  double total = 0.0;
  for (std::size_t q = 0; q < ds.items.size(); ++q) {
    const std::vector<std::size_t> order = ranked(ds.items, unit, q);
    std::size_t hits = 0;
    double ap = 0.0;
    for (std::size_t k = 0; k < ds.r; ++k) {
      if (ds.items[order[k]].group != ds.items[q].group) continue;
      ++hits;
      ap += static_cast<double>(hits) / static_cast<double>(k + 1);
    }
    total += ap / static_cast<double>(ds.r);
  }
  return total / static_cast<double>(ds.items.size());
}

double mrr(std::span<const std::size_t> ranks) {
  if (ranks.empty()) throw Error("MRR needs at least one query");
  double total = 0.0;
  for (std::size_t r : ranks) {
    if (r == 0) throw Error("ranks are 1-based");
    total += 1.0 / static_cast<double>(r);
  }
  return total / static_cast<double>(ranks.size());
}

double mrr(std::span<const RankedQuery> queries) {
  std::vector<std::size_t> ranks;
  for (const RankedQuery& q : queries) {
    const auto n = std::count(q.candidates.begin(), q.candidates.end(), q.relevant);
    if (n != 1) throw Error("each query needs exactly one relevant candidate");
    const auto it = std::find(q.candidates.begin(), q.candidates.end(), q.relevant);
    ranks.push_back(static_cast<std::size_t>(it - q.candidates.begin()) + 1);
  }
  return mrr(ranks);
}

Prf1 prf1(const Confusion& c) {
  Prf1 out;
  const auto tp = static_cast<double>(c.tp);
  out.precision = ratio(tp, tp + static_cast<double>(c.fp), out.degenerate);
  out.recall = ratio(tp, tp + static_cast<double>(c.fn), out.degenerate);
  out.f1 = ratio(2.0 * out.precision * out.recall, out.precision + out.recall, out.degenerate);
  out.accuracy = ratio(tp + static_cast<double>(c.tn),
                       static_cast<double>(c.tp + c.fp + c.tn + c.fn), out.degenerate);
  return out;
}

ZeroShotStudy zero_shot_study(std::span<const EmbeddedTriplet> triplets, std::size_t min_triplets) {
  if (triplets.size() < std::max<std::size_t>(min_triplets, 2)) {
    throw Error("zero-shot study needs at least " + std::to_string(std::max<std::size_t>(min_triplets, 2)) +
                " triplets, got " + std::to_string(triplets.size()));
  }
  const std::size_t n = triplets.size();
  // Augmented pool: clone of triplet i at 2i, deviant at 2i + 1.
  std::vector<const Vector*> pool;
  for (const EmbeddedTriplet& t : triplets) {
    pool.push_back(&t.clone);
    pool.push_back(&t.deviant);
  }
  ZeroShotStudy out;
  out.triplets = n;
  std::size_t clone_hits = 0, deviant_hits = 0, random_hits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vector& x = triplets[i].original;
    double random_sum = 0.0;
    double best = -2.0;
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < pool.size(); ++j) {
      const double s = objective::cosine(x, *pool[j]);
      if (j == 2 * i) {
        out.avg_clone_sim += s;
      } else if (j == 2 * i + 1) {
        out.avg_deviant_sim += s;
      } else {
        random_sum += s;
      }
      if (s > best) {
        best = s;
        best_j = j;
      }
    }
    out.avg_random_sim += random_sum / static_cast<double>(pool.size() - 2);
    if (best_j == 2 * i) {
      ++clone_hits;
    } else if (best_j == 2 * i + 1) {
      ++deviant_hits;
    } else {
      ++random_hits;
    }
  }
  const auto nd = static_cast<double>(n);
  out.avg_clone_sim /= nd;
  out.avg_deviant_sim /= nd;
  out.avg_random_sim /= nd;
  out.top1_clone = 100.0 * static_cast<double>(clone_hits) / nd;
  out.top1_deviant = 100.0 * static_cast<double>(deviant_hits) / nd;
  out.top1_random = 100.0 * static_cast<double>(random_hits) / nd;
  return out;
}

ZeroShotStudy zero_shot_study(const TextEncoder& encoder, std::span<const TextTriplet> triplets,
                              std::size_t min_triplets) {
  std::vector<EmbeddedTriplet> embedded;
  embedded.reserve(triplets.size());
  for (const TextTriplet& t : triplets) {
    embedded.push_back({encoder(t.original), encoder(t.clone), encoder(t.deviant)});
  }
  return zero_shot_study(embedded, min_triplets);
}

PcaResult pca_project(std::span<const Vector> points, std::size_t k) {
  if (k == 0) throw Error("PCA needs at least one component");
  if (points.size() < k + 1) throw Error("PCA needs at least k + 1 points");
  const std::size_t d = points.front().size();
  if (k > d) throw Error("PCA cannot produce more components than dimensions");
  Eigen::MatrixXd x(static_cast<Eigen::Index>(points.size()), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != d) throw Error("PCA points have different dimensions");
    for (std::size_t j = 0; j < d; ++j) {
      x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = points[i][j];
    }
  }
  x.rowwise() -= x.colwise().mean();
  const Eigen::MatrixXd cov = (x.transpose() * x) / static_cast<double>(points.size() - 1);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  if (solver.info() != Eigen::Success) throw Error("PCA eigendecomposition failed");
  const Eigen::VectorXd values = solver.eigenvalues().cwiseMax(0.0);
  const double total = values.sum();

  PcaResult out;
  out.coordinates.assign(points.size(), Vector(k, 0.0));
  for (std::size_t c = 0; c < k; ++c) {
    const Eigen::Index col = static_cast<Eigen::Index>(d - 1 - c);
    Eigen::VectorXd proj = x * solver.eigenvectors().col(col);
    Eigen::Index arg = 0;
    proj.cwiseAbs().maxCoeff(&arg);
    if (proj(arg) < 0) proj = -proj;
    for (std::size_t i = 0; i < points.size(); ++i) {
      out.coordinates[i][c] = proj(static_cast<Eigen::Index>(i));
    }
    out.explained_variance.push_back(total > 0.0 ? values(col) / total : 0.0);
  }
  return out;
}

std::vector<RetrievalItem> read_embeddings(std::istream& in) {
  std::vector<RetrievalItem> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      RetrievalItem it;
      it.id = j.at("id").is_string() ? j.at("id").get<std::string>() : j.at("id").dump();
      it.group = j.at("group").is_string() ? j.at("group").get<std::string>() : j.at("group").dump();
      it.embedding = j.at("vector").get<Vector>();
      out.push_back(std::move(it));
    } catch (const nlohmann::json::exception& e) {
      throw Error("embedding line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

void write_embeddings(std::ostream& out, std::span<const RetrievalItem> items) {
  for (const RetrievalItem& it : items) {
    nlohmann::ordered_json j;
    j["id"] = it.id;
    j["group"] = it.group;
    j["vector"] = it.embedding;
    out << j.dump() << "\n";
  }
}

}  // namespace cloneforge::eval
