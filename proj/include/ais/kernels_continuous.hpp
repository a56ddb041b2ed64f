#pragma once

#include "ais/core.hpp"

namespace ais {

struct LangevinConfig {
  double step_size = 0.01;
  bool adjusted = true;  // true -> MALA, false -> ULA
  int sub_steps = 1;
};

struct StretchConfig {
  double support_bound = 2.0;  // a > 1; lambda support is [1/a, a]
  int sub_steps = 1;
};

// One Langevin step at temperature t. ULA always moves; MALA applies the
// Metropolis-Hastings correction for the Gaussian proposal and keeps x
// on rejection. A non-finite proposal energy is a rejection under MALA
// and an error under ULA.
ContinuousState langevin_step(const ContinuousState& x, double t, const AnnealingSchedule& schedule,
                              const ContinuousModel& model, const LangevinConfig& cfg,
                              RandomStream& rng);

// Stretch scalar lambda ~ g(z) ~ 1/sqrt(z) on [1/a, a], by inverse CDF.
double sample_stretch_scalar(const StretchConfig& cfg, RandomStream& rng);

// Acceptance probability of moving u to w = lambda*u + (1-lambda)*v:
// min{1, |lambda|^(d-1) exp(U_t(u) - U_t(w))}. Returns 1 when u == v
// exactly (the move is then a no-op).
double stretch_acceptance(const ContinuousState& u, const ContinuousState& v, double lambda,
                          double t, const AnnealingSchedule& schedule,
                          const ContinuousModel& model);

// Snooker move on particle i, realized via the stretch proposal: pick a
// partner j != i uniformly, propose along the line through x_i and x_j,
// accept with stretch_acceptance. Repeats cfg.sub_steps times; only the
// slot i is ever modified.
Ensemble<ContinuousState> snooker_move(std::size_t i, const Ensemble<ContinuousState>& ensemble,
                                       double t, const AnnealingSchedule& schedule,
                                       const ContinuousModel& model, const StretchConfig& cfg,
                                       RandomStream& rng);

// In-place form used by the ensemble driver; returns true when slot i
// changed. Draw-for-draw identical to snooker_move.
bool snooker_move_inplace(std::size_t i, Ensemble<ContinuousState>& ensemble, double t,
                          const AnnealingSchedule& schedule, const ContinuousModel& model,
                          const StretchConfig& cfg, RandomStream& rng);

}  // namespace ais
