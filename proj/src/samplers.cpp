#include "ais/samplers.hpp"

namespace ais {

bool is_ensemble_variant(SamplerVariant v) {
  return v == SamplerVariant::EnsembleNoExplore || v == SamplerVariant::EnsembleExplore;
}

std::string variant_name(SamplerVariant v) {
  switch (v) {
    case SamplerVariant::StandardAisMala: return "standard_ais_mala";
    case SamplerVariant::StandardAisGaussianMh: return "standard_ais_gaussian_mh";
    case SamplerVariant::EnsembleNoExplore: return "ensemble_no_explore";
    case SamplerVariant::EnsembleExplore: return "ensemble_explore";
  }
  return "unknown";
}

std::optional<SamplerVariant> variant_from_name(const std::string& name) {
  if (name == "standard_ais_mala") return SamplerVariant::StandardAisMala;
  if (name == "standard_ais_gaussian_mh") return SamplerVariant::StandardAisGaussianMh;
  if (name == "ensemble_no_explore") return SamplerVariant::EnsembleNoExplore;
  if (name == "ensemble_explore") return SamplerVariant::EnsembleExplore;
  return std::nullopt;
}

namespace {

// Random-walk Metropolis with isotropic Gaussian proposal.
ContinuousState gaussian_mh_step(const ContinuousState& x, double t,
                                 const AnnealingSchedule& schedule, const ContinuousModel& model,
                                 double proposal_variance, RandomStream& rng) {
  const double sigma = std::sqrt(proposal_variance);
  ContinuousState y(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) y[k] = x[k] + sigma * rng.normal();
  double energy_y;
  try {
    energy_y = interpolate_energy(schedule, model, t, y);
  } catch (const SamplerError&) {
    return x;
  }
  const double log_a = interpolate_energy(schedule, model, t, x) - energy_y;
  if (log_a >= 0.0 || rng.uniform() < std::exp(log_a)) return y;
  return x;
}

ContinuousState local_kernel(const SamplerSpec& spec, const ContinuousState& x, double t,
                             const ContinuousModel& model, RandomStream& rng, bool use_mh) {
  ContinuousState cur = x;
  if (use_mh) {
    for (int s = 0; s < spec.langevin.sub_steps; ++s) {
      cur = gaussian_mh_step(cur, t, spec.schedule, model, spec.mh_proposal_scale, rng);
    }
  } else {
    for (int s = 0; s < spec.langevin.sub_steps; ++s) {
      cur = langevin_step(cur, t, spec.schedule, model, spec.langevin, rng);
    }
  }
  return cur;
}

DiscreteState local_kernel(const SamplerSpec& spec, const DiscreteState& x, double t,
                           const DiscreteModel& model, RandomStream& rng, bool use_mh) {
  if (use_mh) {
    throw ConfigError("standard_ais_gaussian_mh requires a continuous model");
  }
  DiscreteState cur = x;
  for (int s = 0; s < spec.glauber.sub_steps; ++s) {
    cur = glauber_step(cur, t, spec.schedule, model, rng);
  }
  return cur;
}

void check_particle_finite(const ContinuousState& x, std::size_t particle, int level) {
  for (double v : x) {
    if (!std::isfinite(v)) {
      throw SamplerError("non-finite state at particle " + std::to_string(particle) + ", level " +
                         std::to_string(level));
    }
  }
}

void check_particle_finite(const DiscreteState&, std::size_t, int) {}

// Exploration move dispatch; returns indices of changed slots.
std::vector<std::size_t> explore_move(const SamplerSpec& spec, std::size_t i,
                                      Ensemble<ContinuousState>& ensemble, double t,
                                      const ContinuousModel& model, RandomStream& rng) {
  if (snooker_move_inplace(i, ensemble, t, spec.schedule, model, spec.stretch, rng)) {
    return {i};
  }
  return {};
}

std::vector<std::size_t> explore_move(const SamplerSpec& spec, std::size_t i,
                                      Ensemble<DiscreteState>& ensemble, double t,
                                      const DiscreteModel& model, RandomStream& rng) {
  (void)spec;
  if (auto j = genetic_crossover_inplace(i, ensemble, t, spec.schedule, model, rng)) {
    return {i, *j};
  }
  return {};
}

}  // namespace

template <class State>
WeightedSampleSet<State> run_standard_ais(const SamplerSpec& spec, const Model<State>& model,
                                          RandomStream& rng,
                                          const SnapshotCallback<State>& on_snapshot) {
  if (is_ensemble_variant(spec.variant)) {
    throw ConfigError("run_standard_ais: spec requests an ensemble variant");
  }
  if (spec.n_particles < 1) {
    throw ConfigError("run_standard_ais: need at least one particle");
  }
  const bool use_mh = spec.variant == SamplerVariant::StandardAisGaussianMh;
  const int levels = spec.schedule.step_count;
  const double dt = spec.schedule.dt();
  const std::size_t n = static_cast<std::size_t>(spec.n_particles);

  // Per-particle substreams keep particles independent of sweep order.
  std::vector<RandomStream> streams;
  streams.reserve(n);
  for (std::size_t i = 0; i < n; ++i) streams.push_back(rng.substream(i));

  WeightedSampleSet<State> out;
  out.particles.reserve(n);
  out.log_weights.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) out.particles.push_back(model.sample_initial(streams[i]));

  for (int l = 1; l <= levels; ++l) {
    const double t_prev = (l - 1) * dt;
    const double t = l * dt;
    for (std::size_t i = 0; i < n; ++i) {
      State& x = out.particles[i];
      const double increment = interpolate_energy(spec.schedule, model, t_prev, x) -
                               interpolate_energy(spec.schedule, model, t, x);
      out.log_weights[i] += increment;
      if (!std::isfinite(out.log_weights[i])) {
        throw SamplerError("run_standard_ais: non-finite log-weight at particle " +
                           std::to_string(i) + ", level " + std::to_string(l));
      }
      x = local_kernel(spec, x, t, model, streams[i], use_mh);
      check_particle_finite(x, i, l);
    }
    if (on_snapshot && (l % spec.record_every == 0 || l == levels)) {
      on_snapshot(l, out);
    }
  }
  return out;
}

template <class State>
Ensemble<State> run_ensemble_ais(const SamplerSpec& spec, const Model<State>& model,
                                 RandomStream& rng, const SnapshotCallback<State>& on_snapshot,
                                 const std::optional<Ensemble<State>>& initial) {
  if (!is_ensemble_variant(spec.variant)) {
    throw ConfigError("run_ensemble_ais: spec requests a standard variant");
  }
  if (spec.n_particles < 2) {
    throw ConfigError("run_ensemble_ais: ensemble variants need at least 2 particles");
  }
  const bool explore = spec.variant == SamplerVariant::EnsembleExplore;
  const int levels = spec.schedule.step_count;
  const double dt = spec.schedule.dt();
  const std::size_t n = static_cast<std::size_t>(spec.n_particles);

  Ensemble<State> ensemble;
  if (initial) {
    if (initial->size() != n) {
      throw ConfigError("run_ensemble_ais: initial ensemble size mismatch");
    }
    ensemble = *initial;
  } else {
    ensemble.particles.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ensemble.particles.push_back(model.sample_initial(rng));
  }

  // Cached per-particle energy gaps U - U_0; kept in sync with every
  // particle mutation so birth-death rates cost O(1) energy evaluations
  // per inner iteration while matching a fresh recomputation exactly.
  std::vector<double> gap(n);
  auto eval_gap = [&](std::size_t j) {
    return model.target_energy(ensemble.particles[j]) -
           model.initial_energy(ensemble.particles[j]);
  };
  double gap_sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    gap[j] = eval_gap(j);
    gap_sum += gap[j];
  }
  auto refresh_gap = [&](std::size_t j, int level) {
    const double g = eval_gap(j);
    if (!std::isfinite(g)) {
      throw SamplerError("run_ensemble_ais: non-finite energy at particle " + std::to_string(j) +
                         ", level " + std::to_string(level));
    }
    gap_sum += g - gap[j];
    gap[j] = g;
  };

  std::vector<double> sweep_gap;
  double sweep_gap_sum = 0.0;

  for (int l = 1; l <= levels; ++l) {
    const double t = l * dt;
    const double cp = spec.schedule.interp_deriv(t);
    ensemble.time = t;
    if (spec.rates_per_sweep) {
      sweep_gap = gap;
      sweep_gap_sum = gap_sum;
    }
    for (std::size_t i = 0; i < n; ++i) {
      // (1) local kernel
      State moved = local_kernel(spec, ensemble.particles[i], t, model, rng, false);
      check_particle_finite(moved, i, l);
      if (moved != ensemble.particles[i]) {
        ensemble.particles[i] = std::move(moved);
        refresh_gap(i, l);
      }
      // (2) exploration
      if (explore) {
        for (std::size_t changed : explore_move(spec, i, ensemble, t, model, rng)) {
          refresh_gap(changed, l);
        }
      }
      // (3) birth-death on particle i
      const std::vector<double>& g = spec.rates_per_sweep ? sweep_gap : gap;
      const double g_sum = spec.rates_per_sweep ? sweep_gap_sum : gap_sum;
      const double diff = cp * (g[i] - g_sum / static_cast<double>(n));
      if (diff > 0.0) {
        if (rng.uniform() < 1.0 - std::exp(-diff * dt)) {
          std::size_t j = rng.uniform_index(n - 1);
          if (j >= i) ++j;
          ensemble.particles[i] = ensemble.particles[j];
          gap_sum += gap[j] - gap[i];
          gap[i] = gap[j];
        }
      } else if (diff < 0.0) {
        if (rng.uniform() < 1.0 - std::exp(diff * dt)) {
          std::size_t j = rng.uniform_index(n - 1);
          if (j >= i) ++j;
          ensemble.particles[j] = ensemble.particles[i];
          gap_sum += gap[i] - gap[j];
          gap[j] = gap[i];
        }
      } else {
        rng.uniform();  // keep the draw count independent of the rates
      }
    }
    if (on_snapshot && (l % spec.record_every == 0 || l == levels)) {
      on_snapshot(l, WeightedSampleSet<State>::from_ensemble(ensemble));
    }
  }
  return ensemble;
}

template WeightedSampleSet<ContinuousState> run_standard_ais<ContinuousState>(
    const SamplerSpec&, const ContinuousModel&, RandomStream&,
    const SnapshotCallback<ContinuousState>&);
template WeightedSampleSet<DiscreteState> run_standard_ais<DiscreteState>(
    const SamplerSpec&, const DiscreteModel&, RandomStream&,
    const SnapshotCallback<DiscreteState>&);
template Ensemble<ContinuousState> run_ensemble_ais<ContinuousState>(
    const SamplerSpec&, const ContinuousModel&, RandomStream&,
    const SnapshotCallback<ContinuousState>&, const std::optional<Ensemble<ContinuousState>>&);
template Ensemble<DiscreteState> run_ensemble_ais<DiscreteState>(
    const SamplerSpec&, const DiscreteModel&, RandomStream&,
    const SnapshotCallback<DiscreteState>&, const std::optional<Ensemble<DiscreteState>>&);

}  // namespace ais
