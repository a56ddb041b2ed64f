#include "ais/kernels_discrete.hpp"

namespace ais {

DiscreteState glauber_step(const DiscreteState& x, double t, const AnnealingSchedule& schedule,
                           const DiscreteModel& model, RandomStream& rng) {
  check_dimension(model, x, "glauber_step");
  const std::size_t site = rng.uniform_index(x.size());
  DiscreteState y = x;
  y[site] = static_cast<std::int8_t>(-y[site]);
  const double delta =
      interpolate_energy(schedule, model, t, y) - interpolate_energy(schedule, model, t, x);
  // r = 1 / (1 + exp(delta)), evaluated on the side that cannot overflow.
  const double r = delta > 0.0 ? std::exp(-delta) / (1.0 + std::exp(-delta))
                               : 1.0 / (1.0 + std::exp(delta));
  if (rng.uniform() < r) return y;
  return x;
}

std::optional<std::size_t> genetic_crossover_inplace(std::size_t i,
                                                     Ensemble<DiscreteState>& ensemble, double t,
                                                     const AnnealingSchedule& schedule,
                                                     const DiscreteModel& model,
                                                     RandomStream& rng) {
  const std::size_t n = ensemble.size();
  if (n < 2) {
    throw ConfigError("genetic_crossover: ensemble must contain at least 2 particles");
  }
  std::size_t j = rng.uniform_index(n - 1);
  if (j >= i) ++j;

  const DiscreteState& xi = ensemble.particles[i];
  const DiscreteState& xj = ensemble.particles[j];
  const std::size_t d = xi.size();

  DiscreteState yi(d), yj(d);
  std::uint64_t bits = 0;
  for (std::size_t s = 0; s < d; ++s) {
    if (s % 64 == 0) bits = rng.next_u64();
    const bool swap = (bits >> (s % 64)) & 1u;
    yi[s] = swap ? xj[s] : xi[s];
    yj[s] = swap ? xi[s] : xj[s];
  }

  const double log_a = interpolate_energy(schedule, model, t, xi) +
                       interpolate_energy(schedule, model, t, xj) -
                       interpolate_energy(schedule, model, t, yi) -
                       interpolate_energy(schedule, model, t, yj);
  if (log_a >= 0.0 || rng.uniform() < std::exp(log_a)) {
    ensemble.particles[i] = std::move(yi);
    ensemble.particles[j] = std::move(yj);
    return j;
  }
  return std::nullopt;
}

Ensemble<DiscreteState> genetic_crossover(std::size_t i, const Ensemble<DiscreteState>& ensemble,
                                          double t, const AnnealingSchedule& schedule,
                                          const DiscreteModel& model, RandomStream& rng) {
  Ensemble<DiscreteState> out = ensemble;
  genetic_crossover_inplace(i, out, t, schedule, model, rng);
  return out;
}

}  // namespace ais
