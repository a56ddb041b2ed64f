#pragma once

#include <optional>

#include "ais/core.hpp"

namespace ais {

struct GlauberConfig {
  int sub_steps = 1;
};

// Single-site heat-bath update at temperature t: flip a uniformly chosen
// spin with probability exp(-U_t(y)) / (exp(-U_t(x)) + exp(-U_t(y))).
DiscreteState glauber_step(const DiscreteState& x, double t, const AnnealingSchedule& schedule,
                           const DiscreteModel& model, RandomStream& rng);

// Genetic crossover pair move on particles i and a uniformly chosen
// partner j != i. A uniform mask mixes the two spin vectors into two
// offspring; the pair swap is accepted with probability
// min{1, exp(U_t(x_i) + U_t(x_j) - U_t(y_i) - U_t(y_j))}.
// At most the slots i and j are modified.
Ensemble<DiscreteState> genetic_crossover(std::size_t i, const Ensemble<DiscreteState>& ensemble,
                                          double t, const AnnealingSchedule& schedule,
                                          const DiscreteModel& model, RandomStream& rng);

// In-place form used by the ensemble driver; returns the partner index
// when the pair swap was accepted. Draw-for-draw identical to
// genetic_crossover.
std::optional<std::size_t> genetic_crossover_inplace(std::size_t i,
                                                     Ensemble<DiscreteState>& ensemble, double t,
                                                     const AnnealingSchedule& schedule,
                                                     const DiscreteModel& model,
                                                     RandomStream& rng);

}  // namespace ais
