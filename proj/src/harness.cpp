#include "ais/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace ais {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

ExperimentConfig base_defaults() { return ExperimentConfig{}; }

void apply_model_defaults(ExperimentConfig& c) {
  auto def_d = [](double& field, double value) {
    if (field == 0.0) field = value;
  };
  auto def_i = [](int& field, int value) {
    if (field == 0) field = value;
  };
  if (c.model == "gmm2d") {
    def_i(c.model_dim, 2);
    def_i(c.n_particles, 1000);
    def_i(c.n_steps, 300);
    if (c.mh_proposal_scale == 0.0) c.mh_proposal_scale = 0.01;
  } else if (c.model == "gl1d") {
    def_d(c.coupling, 0.05);
    def_i(c.model_dim, 16);
    def_d(c.beta, 3.0);
    def_i(c.n_particles, 1000);
    def_i(c.n_steps, 100);
    if (c.mh_proposal_scale == 0.0) c.mh_proposal_scale = 0.01;
  } else if (c.model == "gl2d") {
    def_d(c.coupling, 0.125);
    def_i(c.model_dim, 4);  // grid side
    def_d(c.beta, 10.0);
    def_i(c.n_particles, 1000);
    def_i(c.n_steps, 150);
    if (c.mh_proposal_scale == 0.0) c.mh_proposal_scale = 0.001;
  } else if (c.model == "doublewell20") {
    def_d(c.beta, 0.001);
    def_i(c.model_dim, 20);
    def_i(c.n_particles, 3000);
    def_i(c.n_steps, 3000);
    if (c.mh_proposal_scale == 0.0) c.mh_proposal_scale = 1.0;
  } else if (c.model == "ising1d") {
    def_i(c.model_dim, 20);
    def_d(c.beta, 0.8);
    if (c.j1 == 0.0 && c.j2 == 0.0) {
      c.j1 = -1.0;
      c.j2 = -1.0 / 3.0;
    }
    def_i(c.n_particles, 512);
    def_i(c.n_steps, 64);
  } else if (c.model == "ising2d") {
    def_i(c.model_dim, 4);  // grid side
    def_d(c.beta, 0.3);
    if (c.j1 == 0.0) c.j1 = -1.0;
    def_i(c.n_particles, 512);
    def_i(c.n_steps, 64);
  }
}

void validate(const ExperimentConfig& c) {
  static const std::vector<std::string> known_models = {"gmm2d",        "gl1d",    "gl2d",
                                                        "doublewell20", "ising1d", "ising2d"};
  if (std::find(known_models.begin(), known_models.end(), c.model) == known_models.end()) {
    throw ConfigError("config: unknown model '" + c.model + "'");
  }
  if (c.n_particles < (is_ensemble_variant(c.variant) ? 2 : 1)) {
    throw ConfigError("config: n_particles too small for variant " + variant_name(c.variant));
  }
  if (c.n_steps < 1) throw ConfigError("config: n_steps must be >= 1");
  if (c.replicates < 1) throw ConfigError("config: replicates must be >= 1");
  if (c.record_every < 1) throw ConfigError("config: record_every must be >= 1");
  if (c.jobs < 1) throw ConfigError("config: jobs must be >= 1");
  if (c.stretch_a <= 1.0) throw ConfigError("config: stretch_a must be > 1");
  if (c.stretch_sub_steps < 1) throw ConfigError("config: stretch_sub_steps must be >= 1");
  if (c.langevin_sub_steps < 1) throw ConfigError("config: langevin_sub_steps must be >= 1");
  if (c.glauber_sub_steps < 1) throw ConfigError("config: glauber_sub_steps must be >= 1");
  if (is_discrete_model(c.model) && c.variant == SamplerVariant::StandardAisGaussianMh) {
    throw ConfigError("config: standard_ais_gaussian_mh requires a continuous model");
  }
  std::stringstream ss(c.emit);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item != "metrics" && item != "samples" && item != "summary") {
      throw ConfigError("config: emit entry '" + item + "' is not one of metrics/samples/summary");
    }
  }
}

}  // namespace

SamplerSpec ExperimentConfig::sampler_spec() const {
  SamplerSpec s;
  s.variant = variant;
  s.n_particles = n_particles;
  s.schedule = AnnealingSchedule::linear(n_steps);
  s.langevin.step_size = langevin_step_size > 0.0 ? langevin_step_size : s.schedule.dt();
  s.langevin.sub_steps = langevin_sub_steps;
  s.langevin.adjusted = langevin_adjusted;
  s.stretch.support_bound = stretch_a;
  s.stretch.sub_steps = stretch_sub_steps;
  s.glauber.sub_steps = glauber_sub_steps;
  s.mh_proposal_scale = mh_proposal_scale;
  s.record_every = record_every;
  s.rates_per_sweep = rates_per_sweep;
  return s;
}

bool is_discrete_model(const std::string& model_name) {
  return model_name == "ising1d" || model_name == "ising2d";
}

std::vector<std::string> preset_names() {
  return {"gmm2d",        "gl1d",           "gl2d",
          "doublewell20", "ising1d_ferro",  "ising1d_antiferro",
          "ising2d_ferro", "ising2d_antiferro"};
}

ExperimentConfig preset_config(const std::string& name) {
  ExperimentConfig c = base_defaults();
  if (name == "gmm2d") {
    c.model = "gmm2d";
    c.langevin_step_size = 0.002;
    c.langevin_sub_steps = 2;
    c.stretch_sub_steps = 15;
  } else if (name == "gl1d") {
    c.model = "gl1d";
    c.langevin_step_size = 0.002;
    c.langevin_sub_steps = 5;
  } else if (name == "gl2d") {
    c.model = "gl2d";
    c.langevin_step_size = 0.002;
    c.langevin_sub_steps = 5;
  } else if (name == "doublewell20") {
    c.model = "doublewell20";
    c.langevin_step_size = 0.2;
    c.langevin_sub_steps = 2;
  } else if (name == "ising1d_ferro") {
    c.model = "ising1d";
    c.glauber_sub_steps = 2;
  } else if (name == "ising1d_antiferro") {
    c.model = "ising1d";
    c.j1 = 1.0;
    c.j2 = 1.0 / 3.0;
    c.glauber_sub_steps = 2;
  } else if (name == "ising2d_ferro") {
    c.model = "ising2d";
    c.glauber_sub_steps = 1;
  } else if (name == "ising2d_antiferro") {
    c.model = "ising2d";
    c.j1 = 1.0;
    c.glauber_sub_steps = 1;
  } else {
    throw ConfigError("unknown preset '" + name + "'");
  }
  apply_model_defaults(c);
  validate(c);
  return c;
}

ExperimentConfig parse_config_text(const std::string& text, const std::string& origin) {
  std::map<std::string, std::string> kv;
  std::vector<std::string> order;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    // trim
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key=value, got '" +
                        line + "'");
    }
    auto trim = [](std::string s) {
      const auto bb = s.find_first_not_of(" \t");
      if (bb == std::string::npos) return std::string();
      const auto ee = s.find_last_not_of(" \t");
      return s.substr(bb, ee - bb + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (kv.count(key)) {
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }
    kv[key] = value;
  }

  ExperimentConfig c = base_defaults();
  if (auto it = kv.find("preset"); it != kv.end()) {
    c = preset_config(it->second);
    kv.erase(it);
  }

  auto take = [&](const char* key) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    std::string v = it->second;
    kv.erase(it);
    return v;
  };
  auto parse_int = [&](const char* key, int& out) {
    if (auto v = take(key)) {
      try {
        out = std::stoi(*v);
      } catch (const std::exception&) {
        throw ConfigError(origin + ": key '" + std::string(key) + "': invalid integer '" + *v +
                          "'");
      }
    }
  };
  auto parse_u64 = [&](const char* key, std::uint64_t& out) {
    if (auto v = take(key)) {
      try {
        out = std::stoull(*v);
      } catch (const std::exception&) {
        throw ConfigError(origin + ": key '" + std::string(key) + "': invalid integer '" + *v +
                          "'");
      }
    }
  };
  auto parse_dbl = [&](const char* key, double& out) {
    if (auto v = take(key)) {
      try {
        out = std::stod(*v);
      } catch (const std::exception&) {
        throw ConfigError(origin + ": key '" + std::string(key) + "': invalid number '" + *v +
                          "'");
      }
    }
  };
  auto parse_bool = [&](const char* key, bool& out) {
    if (auto v = take(key)) {
      if (*v == "1" || *v == "true") {
        out = true;
      } else if (*v == "0" || *v == "false") {
        out = false;
      } else {
        throw ConfigError(origin + ": key '" + std::string(key) + "': expected boolean, got '" +
                          *v + "'");
      }
    }
  };

  if (auto v = take("model")) c.model = *v;
  if (auto v = take("variant")) {
    auto parsed = variant_from_name(*v);
    if (!parsed) throw ConfigError(origin + ": unknown variant '" + *v + "'");
    c.variant = *parsed;
  }
  parse_int("n_particles", c.n_particles);
  parse_int("n_steps", c.n_steps);
  parse_u64("seed", c.seed);
  parse_int("replicates", c.replicates);
  parse_int("record_every", c.record_every);
  parse_int("jobs", c.jobs);
  if (auto v = take("out_dir")) c.out_dir = *v;
  parse_dbl("langevin_step_size", c.langevin_step_size);
  parse_int("langevin_sub_steps", c.langevin_sub_steps);
  parse_bool("langevin_adjusted", c.langevin_adjusted);
  parse_dbl("stretch_a", c.stretch_a);
  parse_int("stretch_sub_steps", c.stretch_sub_steps);
  parse_int("glauber_sub_steps", c.glauber_sub_steps);
  parse_dbl("mh_proposal_scale", c.mh_proposal_scale);
  parse_bool("rates_per_sweep", c.rates_per_sweep);
  parse_dbl("beta", c.beta);
  parse_dbl("j1", c.j1);
  parse_dbl("j2", c.j2);
  parse_dbl("coupling", c.coupling);
  parse_int("model_dim", c.model_dim);
  parse_dbl("length", c.length);
  if (auto v = take("emit")) c.emit = *v;

  if (!kv.empty()) {
    throw ConfigError(origin + ": unknown key '" + kv.begin()->first + "'");
  }
  if (c.model.empty()) {
    throw ConfigError(origin + ": missing required key 'model' (or 'preset')");
  }
  apply_model_defaults(c);
  validate(c);
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

std::string serialize_config(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "model = " << c.model << "\n";
  out << "variant = " << variant_name(c.variant) << "\n";
  out << "n_particles = " << c.n_particles << "\n";
  out << "n_steps = " << c.n_steps << "\n";
  out << "seed = " << c.seed << "\n";
  out << "replicates = " << c.replicates << "\n";
  out << "record_every = " << c.record_every << "\n";
  out << "jobs = " << c.jobs << "\n";
  out << "out_dir = " << c.out_dir << "\n";
  out << "langevin_step_size = " << format_double(c.langevin_step_size) << "\n";
  out << "langevin_sub_steps = " << c.langevin_sub_steps << "\n";
  out << "langevin_adjusted = " << (c.langevin_adjusted ? 1 : 0) << "\n";
  out << "stretch_a = " << format_double(c.stretch_a) << "\n";
  out << "stretch_sub_steps = " << c.stretch_sub_steps << "\n";
  out << "glauber_sub_steps = " << c.glauber_sub_steps << "\n";
  out << "mh_proposal_scale = " << format_double(c.mh_proposal_scale) << "\n";
  out << "rates_per_sweep = " << (c.rates_per_sweep ? 1 : 0) << "\n";
  out << "beta = " << format_double(c.beta) << "\n";
  out << "j1 = " << format_double(c.j1) << "\n";
  out << "j2 = " << format_double(c.j2) << "\n";
  out << "coupling = " << format_double(c.coupling) << "\n";
  out << "model_dim = " << c.model_dim << "\n";
  out << "length = " << format_double(c.length) << "\n";
  out << "emit = " << c.emit << "\n";
  return out.str();
}

ContinuousModel make_continuous_model(const ExperimentConfig& c) {
  if (c.model == "gmm2d") return make_gaussian_mixture(default_gaussian_mixture_params());
  if (c.model == "gl1d") return make_ginzburg_landau_1d(c.coupling, c.model_dim, c.beta, c.length);
  if (c.model == "gl2d") return make_ginzburg_landau_2d(c.coupling, c.model_dim, c.beta, c.length);
  if (c.model == "doublewell20") return make_double_well_product(c.beta);
  throw ConfigError("model '" + c.model + "' is not continuous");
}

DiscreteModel make_discrete_model(const ExperimentConfig& c) {
  if (c.model == "ising1d") return make_ising_1d(c.model_dim, c.j1, c.j2, c.beta);
  if (c.model == "ising2d") return make_ising_2d(c.model_dim, c.j1, c.beta);
  throw ConfigError("model '" + c.model + "' is not discrete");
}

namespace {

std::vector<ContinuousState> mode_centers_for(const ExperimentConfig& c) {
  if (c.model == "gmm2d") {
    const auto p = default_gaussian_mixture_params();
    std::vector<ContinuousState> centers;
    for (const auto& m : p.means) centers.push_back({m[0], m[1]});
    return centers;
  }
  if (c.model == "doublewell20") {
    const double m = std::sqrt(50.0);
    return {{m, m}, {m, -m}, {-m, m}, {-m, -m}};
  }
  return {};
}

double mode_radius_for(const ExperimentConfig& c) {
  return c.model == "doublewell20" ? 3.0 : 2.0;
}

// Occupancy of the (x1, x2) marginal around the given centers.
void record_mode_metrics(MetricTrace& trace, int step,
                         const WeightedSampleSet<ContinuousState>& samples,
                         const std::vector<ContinuousState>& centers, double radius) {
  WeightedSampleSet<ContinuousState> marginal;
  marginal.log_weights = samples.log_weights;
  marginal.particles.reserve(samples.particles.size());
  for (const auto& x : samples.particles) marginal.particles.push_back({x[0], x[1]});
  const std::vector<double> frac = mode_occupancy(marginal, centers, radius);
  for (std::size_t m = 0; m < centers.size(); ++m) {
    trace.record(step, "mode_" + std::to_string(m), frac[m]);
  }
  trace.record(step, "mode_unassigned", frac.back());
}

ReplicateResult run_continuous_replicate(const ExperimentConfig& c, int replicate) {
  ReplicateResult res;
  res.replicate = replicate;
  res.trace.replicate = replicate;
  const ContinuousModel model = make_continuous_model(c);
  const SamplerSpec spec = c.sampler_spec();
  const std::vector<ContinuousState> centers = mode_centers_for(c);
  const double radius = mode_radius_for(c);
  RandomStream rng(c.seed, static_cast<std::uint64_t>(replicate));

  SnapshotCallback<ContinuousState> snapshot =
      [&](int step, const WeightedSampleSet<ContinuousState>& samples) {
        res.trace.record(step, "kl", empirical_kl_loss<ContinuousState>(samples,
                                                                        model.target_energy));
        if (c.model == "gmm2d") {
          res.trace.record(step, "e_y",
                           weighted_expectation<ContinuousState>(
                               samples, [](const ContinuousState& x) { return x[1]; }));
          res.trace.record(step, "e_quad",
                           weighted_expectation<ContinuousState>(
                               samples, [](const ContinuousState& x) {
                                 return x[0] * x[0] / 3.0 + x[1] * x[1] / 5.0;
                               }));
        }
        if (!centers.empty()) record_mode_metrics(res.trace, step, samples, centers, radius);
      };

  const auto start = std::chrono::steady_clock::now();
  if (is_ensemble_variant(c.variant)) {
    const Ensemble<ContinuousState> final_ensemble =
        run_ensemble_ais<ContinuousState>(spec, model, rng, snapshot);
    res.continuous_samples = WeightedSampleSet<ContinuousState>::from_ensemble(final_ensemble);
  } else {
    res.continuous_samples = run_standard_ais<ContinuousState>(spec, model, rng, snapshot);
  }
  res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

ReplicateResult run_discrete_replicate(const ExperimentConfig& c, int replicate,
                                       const std::vector<double>& exact) {
  ReplicateResult res;
  res.replicate = replicate;
  res.trace.replicate = replicate;
  const DiscreteModel model = make_discrete_model(c);
  const SamplerSpec spec = c.sampler_spec();
  RandomStream rng(c.seed, static_cast<std::uint64_t>(replicate));

  SnapshotCallback<DiscreteState> snapshot =
      [&](int step, const WeightedSampleSet<DiscreteState>& samples) {
        res.trace.record(step, "l2", l2_loss(samples, exact));
      };

  const auto start = std::chrono::steady_clock::now();
  if (is_ensemble_variant(c.variant)) {
    const Ensemble<DiscreteState> final_ensemble =
        run_ensemble_ais<DiscreteState>(spec, model, rng, snapshot);
    res.discrete_samples = WeightedSampleSet<DiscreteState>::from_ensemble(final_ensemble);
  } else {
    res.discrete_samples = run_standard_ais<DiscreteState>(spec, model, rng, snapshot);
  }
  res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  validate(config);
  ExperimentResult result;
  result.config = config;
  result.replicates.resize(config.replicates);

  std::vector<double> exact;
  if (is_discrete_model(config.model)) {
    exact = enumerate_discrete(make_discrete_model(config));
  }

  const auto start = std::chrono::steady_clock::now();
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      const int r = next.fetch_add(1);
      if (r >= config.replicates) return;
      try {
        result.replicates[r] = is_discrete_model(config.model)
                                   ? run_discrete_replicate(config, r, exact)
                                   : run_continuous_replicate(config, r);
      } catch (const std::exception& e) {
        result.replicates[r].replicate = r;
        result.replicates[r].failed = true;
        result.replicates[r].error = e.what();
      }
    }
  };
  const int n_threads = std::min(config.jobs, config.replicates);
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

namespace {

void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp + "' for writing");
    out << content;
    if (!out) throw IoError("write failed for '" + tmp + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("rename '" + tmp + "' -> '" + path + "': " + ec.message());
}

bool emit_contains(const std::string& emit, const std::string& what) {
  std::stringstream ss(emit);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == what) return true;
  }
  return false;
}

// Median / quartiles by linear interpolation.
double quantile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  const double pos = q * (v.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  const double frac = pos - lo;
  return v[lo] * (1.0 - frac) + v[hi] * frac;
}

}  // namespace

void emit_results(const ExperimentResult& result) {
  const ExperimentConfig& c = result.config;
  std::filesystem::create_directories(c.out_dir);
  const auto path = [&](const char* name) {
    return (std::filesystem::path(c.out_dir) / name).string();
  };

  atomic_write(path("config_echo.cfg"), serialize_config(c));

  if (emit_contains(c.emit, "metrics")) {
    std::ostringstream csv;
    csv << "replicate,step,metric,value\n";
    for (const ReplicateResult& rep : result.replicates) {
      for (const MetricEntry& e : rep.trace.entries) {
        csv << rep.replicate << ',' << e.step << ',' << e.name << ',' << format_double(e.value)
            << '\n';
      }
    }
    atomic_write(path("metrics.csv"), csv.str());
  }

  if (emit_contains(c.emit, "samples")) {
    std::ostringstream csv;
    if (!is_discrete_model(c.model)) {
      for (const ReplicateResult& rep : result.replicates) {
        if (!rep.continuous_samples) continue;
        for (const ContinuousState& x : rep.continuous_samples->particles) {
          for (std::size_t k = 0; k < x.size(); ++k) {
            if (k) csv << ',';
            csv << format_double(x[k]);
          }
          csv << '\n';
        }
      }
    } else {
      std::map<std::size_t, std::size_t> counts;
      for (const ReplicateResult& rep : result.replicates) {
        if (!rep.discrete_samples) continue;
        for (const DiscreteState& x : rep.discrete_samples->particles) {
          ++counts[state_index(x)];
        }
      }
      csv << "index,count\n";
      for (const auto& [idx, count] : counts) csv << idx << ',' << count << '\n';
    }
    atomic_write(path("samples.csv"), csv.str());
  }

  if (emit_contains(c.emit, "summary")) {
    nlohmann::json summary;
    summary["library_version"] = kLibraryVersion;
    summary["wall_seconds"] = result.wall_seconds;
    summary["config"] = nlohmann::json::object();
    {
      std::istringstream cfg(serialize_config(c));
      std::string line;
      while (std::getline(cfg, line)) {
        const auto eq = line.find(" = ");
        summary["config"][line.substr(0, eq)] = line.substr(eq + 3);
      }
    }
    // final value of every metric, aggregated across replicates
    std::map<std::string, std::vector<double>> final_values;
    for (const ReplicateResult& rep : result.replicates) {
      if (rep.failed) continue;
      std::map<std::string, double> last;
      for (const MetricEntry& e : rep.trace.entries) last[e.name] = e.value;
      for (const auto& [name, value] : last) final_values[name].push_back(value);
    }
    summary["final_metrics"] = nlohmann::json::object();
    for (const auto& [name, values] : final_values) {
      summary["final_metrics"][name] = {{"median", quantile(values, 0.5)},
                                        {"q1", quantile(values, 0.25)},
                                        {"q3", quantile(values, 0.75)},
                                        {"count", values.size()}};
    }
    summary["replicates"] = nlohmann::json::array();
    for (const ReplicateResult& rep : result.replicates) {
      nlohmann::json r = {{"replicate", rep.replicate},
                          {"wall_seconds", rep.wall_seconds},
                          {"failed", rep.failed}};
      if (rep.failed) r["error"] = rep.error;
      summary["replicates"].push_back(r);
    }
    atomic_write(path("summary.json"), summary.dump(2) + "\n");
  }
}

void write_probability_table(const std::vector<double>& probabilities, const std::string& path) {
  std::ostringstream csv;
  csv << "index,probability\n";
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    csv << i << ',' << format_double(probabilities[i]) << '\n';
  }
  atomic_write(path, csv.str());
}

}  // namespace ais
