#pragma once

#include "ais/core.hpp"

namespace ais {

// Per-particle birth-death rates beta_j = c'(t) (U(x_j) - U_0(x_j)) and
// their mean; the centered rates drive kill/duplicate decisions.
struct BirthDeathRates {
  std::vector<double> raw_rates;
  double mean = 0.0;
  double dt = 0.0;
};

template <class State>
BirthDeathRates compute_rates(const Ensemble<State>& ensemble, double t,
                              const AnnealingSchedule& schedule, const Model<State>& model) {
  BirthDeathRates rates;
  rates.dt = schedule.dt();
  rates.raw_rates.reserve(ensemble.size());
  const double cp = schedule.interp_deriv(t);
  double sum = 0.0;
  for (const State& x : ensemble.particles) {
    const double u = model.target_energy(x);
    const double u0 = model.initial_energy(x);
    if (!std::isfinite(u) || !std::isfinite(u0)) {
      throw SamplerError("compute_rates: non-finite energy at x=" + describe_state(x));
    }
    const double beta = cp * (u - u0);
    rates.raw_rates.push_back(beta);
    sum += beta;
  }
  rates.mean = sum / static_cast<double>(ensemble.size());
  return rates;
}

// One birth-death step on particle i. With a positive centered rate the
// particle is killed (overwritten by a uniformly chosen other particle)
// with probability 1 - exp(-(beta_i - mean) dt); with a negative one it
// is duplicated into a uniformly chosen other slot with probability
// 1 - exp((beta_i - mean) dt). The ensemble size never changes.
template <class State>
Ensemble<State> birth_death_step(std::size_t i, const Ensemble<State>& ensemble,
                                 const BirthDeathRates& rates, RandomStream& rng) {
  const std::size_t n = ensemble.size();
  if (n < 2) {
    throw ConfigError("birth_death_step: ensemble must contain at least 2 particles");
  }
  const double diff = rates.raw_rates[i] - rates.mean;
  Ensemble<State> out = ensemble;
  if (diff > 0.0) {
    const double p_kill = 1.0 - std::exp(-diff * rates.dt);
    if (rng.uniform() < p_kill) {
      std::size_t j = rng.uniform_index(n - 1);
      if (j >= i) ++j;
      out.particles[i] = out.particles[j];
    }
  } else {
    const double p_dup = 1.0 - std::exp(diff * rates.dt);
    if (rng.uniform() < p_dup) {
      std::size_t j = rng.uniform_index(n - 1);
      if (j >= i) ++j;
      out.particles[j] = out.particles[i];
    }
  }
  return out;
}

}  // namespace ais
