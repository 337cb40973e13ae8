#include "support/oracles.hpp"

#include <cmath>

namespace cloneforge::testing {
namespace {

long double naive_cos(const objective::Vector& a, const objective::Vector& b) {
  long double dot = 0, na = 0, nb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += static_cast<long double>(a[i]) * b[i];
    na += static_cast<long double>(a[i]) * a[i];
    nb += static_cast<long double>(b[i]) * b[i];
  }
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace

long double naive_nll(const std::vector<objective::Vector>& dists,
                      const std::vector<std::int32_t>& true_ids) {
  long double total = 0;
  for (std::size_t i = 0; i < dists.size(); ++i) {
    total -= std::log(static_cast<long double>(dists[i][static_cast<std::size_t>(true_ids[i])]));
  }
  return total;
}

std::vector<long double> naive_clr(const objective::ContrastiveBatch& b) {
  std::vector<long double> out;
  const long double tau = b.tau;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const long double num = std::exp(naive_cos(b.anchors[i], b.positives[i]) / tau);
    long double den = 0;
    for (std::size_t n = 0; n < b.size(); ++n) {
      den += std::exp(naive_cos(b.anchors[i], b.positives[n]) / tau) +
             std::exp(naive_cos(b.anchors[i], b.negatives[n]) / tau);
    }
    out.push_back(-std::log(num / den));
  }
  return out;
}

objective::ClrGradient finite_difference_gradient(const objective::ContrastiveBatch& batch,
                                                  double h) {
  objective::ClrGradient g;
  objective::ContrastiveBatch work = batch;
  std::vector<objective::Vector>* lists[3] = {&work.anchors, &work.positives, &work.negatives};
  std::vector<objective::Vector>* out[3] = {&g.anchors, &g.positives, &g.negatives};
  for (int r = 0; r < 3; ++r) {
    for (objective::Vector& v : *lists[r]) {
      objective::Vector grad(v.size());
      for (std::size_t j = 0; j < v.size(); ++j) {
        const double keep = v[j];
        v[j] = keep + h;
        const double up = objective::clr_loss(work).mean;
        v[j] = keep - h;
        const double down = objective::clr_loss(work).mean;
        v[j] = keep;
        grad[j] = (up - down) / (2 * h);
      }
      out[r]->push_back(std::move(grad));
    }
  }
  return g;
}

void random_distributions(Rng& rng, std::size_t count, std::size_t vocab,
                          std::vector<objective::Vector>& dists, std::vector<std::int32_t>& ids) {
  dists.clear();
  ids.clear();
  for (std::size_t i = 0; i < count; ++i) {
    objective::Vector p(vocab);
    double total = 0;
    for (double& x : p) {
      x = 0.01 + rng.uniform();
      total += x;
    }
    for (double& x : p) x /= total;
    dists.push_back(std::move(p));
    ids.push_back(static_cast<std::int32_t>(rng.below(vocab)));
  }
}

objective::ContrastiveBatch random_batch(Rng& rng, std::size_t n, std::size_t d, double tau) {
  objective::ContrastiveBatch b;
  b.tau = tau;
  for (auto* list : {&b.anchors, &b.positives, &b.negatives}) {
    for (std::size_t i = 0; i < n; ++i) {
      objective::Vector v(d);
      for (double& x : v) x = rng.normal();
      list->push_back(std::move(v));
    }
  }
  return b;
}

double relative_error(double got, double want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

}  // namespace cloneforge::testing
