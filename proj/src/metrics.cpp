#include "ais/metrics.hpp"

#include "ais/models.hpp"

namespace ais {

std::vector<double> empirical_histogram(const WeightedSampleSet<DiscreteState>& samples,
                                        std::size_t n_states) {
  std::vector<double> hist(n_states, 0.0);
  const std::vector<double> w = samples.normalized_weights();
  for (std::size_t i = 0; i < samples.particles.size(); ++i) {
    const std::size_t idx = state_index(samples.particles[i]);
    if (idx >= n_states) {
      throw ConfigError("empirical_histogram: state index " + std::to_string(idx) +
                        " exceeds table size " + std::to_string(n_states));
    }
    hist[idx] += w[i];
  }
  return hist;
}

double l2_loss(const WeightedSampleSet<DiscreteState>& samples, const std::vector<double>& exact) {
  if (!samples.particles.empty()) {
    const std::size_t expected = std::size_t{1} << samples.particles.front().size();
    if (exact.size() != expected) {
      throw ConfigError("l2_loss: exact vector has " + std::to_string(exact.size()) +
                        " entries, expected " + std::to_string(expected));
    }
  }
  // The empirical histogram is sparse (at most N occupied states), so
  // accumulate ||p_hat - p*||^2 as ||p*||^2 corrected at occupied states.
  double base = 0.0;
  for (double p : exact) base += p * p;
  const std::vector<double> w = samples.normalized_weights();
  // aggregate duplicate states
  std::vector<std::pair<std::size_t, double>> pairs(samples.particles.size());
  for (std::size_t i = 0; i < samples.particles.size(); ++i) {
    pairs[i] = {state_index(samples.particles[i]), w[i]};
  }
  std::sort(pairs.begin(), pairs.end());
  double sq = base;
  std::size_t i = 0;
  while (i < pairs.size()) {
    const std::size_t s = pairs[i].first;
    double p_hat = 0.0;
    while (i < pairs.size() && pairs[i].first == s) p_hat += pairs[i++].second;
    const double p = exact[s];
    sq += (p_hat - p) * (p_hat - p) - p * p;
  }
  return std::sqrt(std::max(sq, 0.0));
}

std::vector<double> mode_occupancy(const WeightedSampleSet<ContinuousState>& samples,
                                   const std::vector<ContinuousState>& centers, double radius) {
  for (std::size_t a = 0; a < centers.size(); ++a) {
    for (std::size_t b = a + 1; b < centers.size(); ++b) {
      double sq = 0.0;
      for (std::size_t k = 0; k < centers[a].size(); ++k) {
        const double diff = centers[a][k] - centers[b][k];
        sq += diff * diff;
      }
      if (std::sqrt(sq) <= 2.0 * radius) {
        throw ConfigError("mode_occupancy: centers " + std::to_string(a) + " and " +
                          std::to_string(b) + " are closer than 2 * radius");
      }
    }
  }
  std::vector<double> fractions(centers.size() + 1, 0.0);
  const std::vector<double> w = samples.normalized_weights();
  const double r2 = radius * radius;
  for (std::size_t i = 0; i < samples.particles.size(); ++i) {
    bool assigned = false;
    for (std::size_t c = 0; c < centers.size(); ++c) {
      double sq = 0.0;
      for (std::size_t k = 0; k < centers[c].size(); ++k) {
        const double diff = samples.particles[i][k] - centers[c][k];
        sq += diff * diff;
      }
      if (sq <= r2) {
        fractions[c] += w[i];
        assigned = true;
        break;
      }
    }
    if (!assigned) fractions.back() += w[i];
  }
  return fractions;
}

}  // namespace ais
