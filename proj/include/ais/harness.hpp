#pragma once

#include <map>
#include <optional>

#include "ais/metrics.hpp"
#include "ais/models.hpp"
#include "ais/samplers.hpp"

namespace ais {

inline constexpr const char* kLibraryVersion = "0.1.0";

// Fully resolved experiment description. Loaded from a flat key=value
// file (one pair per line, '#' comments); presets expand into explicit
// values before validation, so an echoed config reloads identically.
struct ExperimentConfig {
  std::string model;  // gmm2d | gl1d | gl2d | doublewell20 | ising1d | ising2d
  SamplerVariant variant = SamplerVariant::EnsembleExplore;
  int n_particles = 0;
  int n_steps = 0;
  std::uint64_t seed = 0;
  int replicates = 1;
  int record_every = 10;
  int jobs = 1;
  std::string out_dir = "out";
  // kernel knobs; langevin step_size <= 0 means "use 1/n_steps"
  double langevin_step_size = 0.0;
  int langevin_sub_steps = 1;
  bool langevin_adjusted = true;
  double stretch_a = 2.0;
  int stretch_sub_steps = 1;
  int glauber_sub_steps = 1;
  double mh_proposal_scale = 0.01;
  bool rates_per_sweep = false;
  // model parameters (meaning depends on the model; see make_* factories)
  double beta = 0.0;
  double j1 = 0.0;
  double j2 = 0.0;
  double coupling = 0.0;
  int model_dim = 0;
  double length = 1.0;
  // outputs to emit: subset of {metrics, samples, summary}
  std::string emit = "metrics,samples,summary";

  SamplerSpec sampler_spec() const;
};

struct ReplicateResult {
  int replicate = 0;
  MetricTrace trace;
  // exactly one of the two sample sets is populated
  std::optional<WeightedSampleSet<ContinuousState>> continuous_samples;
  std::optional<WeightedSampleSet<DiscreteState>> discrete_samples;
  double wall_seconds = 0.0;
  bool failed = false;
  std::string error;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<ReplicateResult> replicates;
  double wall_seconds = 0.0;
};

// Names of every built-in preset, in listing order.
std::vector<std::string> preset_names();

// Expand a preset into a fully populated config (seed/out_dir keep
// their defaults until overridden).
ExperimentConfig preset_config(const std::string& name);

ExperimentConfig parse_config_text(const std::string& text, const std::string& origin);
ExperimentConfig load_config(const std::string& path);
std::string serialize_config(const ExperimentConfig& config);

// Instantiate the configured target model.
ContinuousModel make_continuous_model(const ExperimentConfig& config);
DiscreteModel make_discrete_model(const ExperimentConfig& config);
bool is_discrete_model(const std::string& model_name);

// Run all replicates (concurrently up to config.jobs); per-replicate
// failures are recorded rather than aborting the experiment.
ExperimentResult run_experiment(const ExperimentConfig& config);

// Write metrics.csv / samples.csv / summary.json / config_echo.cfg into
// config.out_dir, honoring config.emit. All writes are atomic
// (temp file + rename).
void emit_results(const ExperimentResult& result);

// index,probability CSV (17 significant digits) of enumerate_discrete.
void write_probability_table(const std::vector<double>& probabilities, const std::string& path);

}  // namespace ais
