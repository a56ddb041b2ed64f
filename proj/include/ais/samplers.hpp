#pragma once

#include <optional>

#include "ais/birthdeath.hpp"
#include "ais/core.hpp"
#include "ais/kernels_continuous.hpp"
#include "ais/kernels_discrete.hpp"

namespace ais {

enum class SamplerVariant {
  StandardAisMala,       // independent particles, local kernel + reweighting
  StandardAisGaussianMh, // independent particles, random-walk MH + reweighting
  EnsembleNoExplore,     // local kernel + birth-death
  EnsembleExplore,       // local kernel + snooker/crossover + birth-death
};

bool is_ensemble_variant(SamplerVariant v);
std::string variant_name(SamplerVariant v);
std::optional<SamplerVariant> variant_from_name(const std::string& name);

struct SamplerSpec {
  SamplerVariant variant = SamplerVariant::EnsembleExplore;
  int n_particles = 2;
  AnnealingSchedule schedule = AnnealingSchedule::linear(1);
  LangevinConfig langevin;
  StretchConfig stretch;
  GlauberConfig glauber;
  double mh_proposal_scale = 0.01;  // variance of the isotropic MH proposal
  int record_every = 10;
  bool rates_per_sweep = false;  // freeze birth-death rates at sweep start
};

// Snapshot hook invoked on the current weighted sample set every
// record_every temperature steps and at the final step.
template <class State>
using SnapshotCallback = std::function<void(int step, const WeightedSampleSet<State>&)>;

// Standard AIS: N independent particles annealed through L levels, each
// accumulating the telescoping log-weight increment U_{l-1}(s) - U_l(s)
// at the pre-kernel state of every level. Continuous models use MALA or
// random-walk MH as the transition kernel; binary models use Glauber.
template <class State>
WeightedSampleSet<State> run_standard_ais(const SamplerSpec& spec, const Model<State>& model,
                                          RandomStream& rng,
                                          const SnapshotCallback<State>& on_snapshot = nullptr);

// Ensemble-based AIS: per level and per particle, a local kernel step,
// an optional exploration move (snooker for continuous targets, genetic
// crossover for binary ones), and a birth-death step with rates
// c'(t) (U - U_0) centered at the ensemble mean. Output weights are
// uniform. When `initial` is given it is used instead of fresh draws
// from the initial distribution.
template <class State>
Ensemble<State> run_ensemble_ais(const SamplerSpec& spec, const Model<State>& model,
                                 RandomStream& rng,
                                 const SnapshotCallback<State>& on_snapshot = nullptr,
                                 const std::optional<Ensemble<State>>& initial = std::nullopt);

}  // namespace ais
