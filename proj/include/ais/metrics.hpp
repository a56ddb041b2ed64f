#pragma once

#include "ais/core.hpp"

namespace ais {

struct MetricEntry {
  int step = 0;
  std::string name;
  double value = 0.0;
};

struct MetricTrace {
  int replicate = 0;
  std::vector<MetricEntry> entries;

  void record(int step, std::string name, double value) {
    entries.push_back({step, std::move(name), value});
  }
};

// Empirical KL loss sum_i w_i U(s_i) + sum_i w_i log w_i, with the
// -log(Z) constant dropped; the value is only meaningful relative to
// other sample sets for the same target, and may be negative.
template <class State>
double empirical_kl_loss(const WeightedSampleSet<State>& samples,
                         const std::function<double(const State&)>& energy) {
  const std::vector<double> w = samples.normalized_weights();
  double loss = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > 0.0) {
      loss += w[i] * energy(samples.particles[i]) + w[i] * std::log(w[i]);
    }
  }
  return loss;
}

// Weighted empirical histogram over the canonical binary-state ordering.
// exact.size() must equal 2^(spin count).
std::vector<double> empirical_histogram(const WeightedSampleSet<DiscreteState>& samples,
                                        std::size_t n_states);

// Euclidean distance between the weighted empirical histogram and the
// exact probability vector.
double l2_loss(const WeightedSampleSet<DiscreteState>& samples, const std::vector<double>& exact);

template <class State>
double weighted_expectation(const WeightedSampleSet<State>& samples,
                            const std::function<double(const State&)>& f) {
  const std::vector<double> w = samples.normalized_weights();
  double s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * f(samples.particles[i]);
  return s;
}

// Fraction of total weight within `radius` of each center; the last
// entry of the result is the unassigned remainder. Centers must be
// pairwise farther apart than 2 * radius.
std::vector<double> mode_occupancy(const WeightedSampleSet<ContinuousState>& samples,
                                   const std::vector<ContinuousState>& centers, double radius);

}  // namespace ais
