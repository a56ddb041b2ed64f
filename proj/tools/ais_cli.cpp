#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "ais/harness.hpp"

namespace {

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ais::ConfigError*>(&e)) return 1;
  if (dynamic_cast<const ais::SamplerError*>(&e)) return 2;
  if (dynamic_cast<const ais::IoError*>(&e)) return 3;
  return 2;
}

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> replicates;
  std::optional<std::string> out;
  std::optional<int> jobs;

  void apply(ais::ExperimentConfig& cfg) const {
    if (seed) cfg.seed = *seed;
    if (replicates) cfg.replicates = *replicates;
    if (out) cfg.out_dir = *out;
    if (jobs) cfg.jobs = *jobs;
  }
};

int cmd_run(const std::string& config_path, const Overrides& ov) {
  ais::ExperimentConfig cfg = ais::load_config(config_path);
  ov.apply(cfg);
  const ais::ExperimentResult result = ais::run_experiment(cfg);
  ais::emit_results(result);
  int failed = 0;
  for (const auto& rep : result.replicates) {
    if (rep.failed) {
      ++failed;
      std::cerr << "replicate " << rep.replicate << " failed: " << rep.error << "\n";
    }
  }
  std::cout << "model=" << cfg.model << " variant=" << ais::variant_name(cfg.variant)
            << " replicates=" << cfg.replicates << " out=" << cfg.out_dir << " wall_s="
            << result.wall_seconds << "\n";
  if (failed == result.config.replicates) {
    throw ais::SamplerError("all replicates failed");
  }
  return 0;
}

int cmd_enumerate(const std::string& model_name, const Overrides& ov) {
  ais::ExperimentConfig cfg;
  // accept preset names as well as bare model names
  const auto presets = ais::preset_names();
  if (std::find(presets.begin(), presets.end(), model_name) != presets.end()) {
    cfg = ais::preset_config(model_name);
  } else {
    cfg = ais::parse_config_text("model = " + model_name + "\n", "<enumerate>");
  }
  if (!ais::is_discrete_model(cfg.model)) {
    throw ais::ConfigError("enumerate: model '" + cfg.model + "' is not a binary model");
  }
  const std::vector<double> probs = ais::enumerate_discrete(ais::make_discrete_model(cfg));
  const std::string out_dir = ov.out.value_or(cfg.out_dir);
  std::filesystem::create_directories(out_dir);
  const std::string path =
      (std::filesystem::path(out_dir) / (model_name + "_exact.csv")).string();
  ais::write_probability_table(probs, path);
  std::cout << path << "\n";
  return 0;
}

int cmd_presets() {
  for (const auto& name : ais::preset_names()) {
    const ais::ExperimentConfig cfg = ais::preset_config(name);
    std::cout << name << ": model=" << cfg.model << " n_particles=" << cfg.n_particles
              << " n_steps=" << cfg.n_steps << "\n";
  }
  return 0;
}

// Per-replicate final values of one metric from a metrics.csv file.
std::map<int, double> final_metric_values(const std::string& path, const std::string& metric) {
  std::ifstream in(path);
  if (!in) throw ais::IoError("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || line != "replicate,step,metric,value") {
    throw ais::IoError("'" + path + "' is not a metrics.csv file");
  }
  std::map<int, std::pair<int, double>> last;  // replicate -> (step, value)
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string rep_s, step_s, name, value_s;
    if (!std::getline(row, rep_s, ',') || !std::getline(row, step_s, ',') ||
        !std::getline(row, name, ',') || !std::getline(row, value_s)) {
      throw ais::IoError(path + ":" + std::to_string(lineno) + ": malformed row");
    }
    if (name != metric) continue;
    const int rep = std::stoi(rep_s);
    const int step = std::stoi(step_s);
    auto it = last.find(rep);
    if (it == last.end() || step >= it->second.first) {
      last[rep] = {step, std::stod(value_s)};
    }
  }
  std::map<int, double> out;
  for (const auto& [rep, sv] : last) out[rep] = sv.second;
  return out;
}

double median_of(const std::map<int, double>& values) {
  std::vector<double> v;
  for (const auto& [rep, x] : values) v.push_back(x);
  std::sort(v.begin(), v.end());
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

int cmd_compare(const std::string& dir_a, const std::string& dir_b, const std::string& metric) {
  const auto path_a = (std::filesystem::path(dir_a) / "metrics.csv").string();
  const auto path_b = (std::filesystem::path(dir_b) / "metrics.csv").string();
  const auto va = final_metric_values(path_a, metric);
  const auto vb = final_metric_values(path_b, metric);
  if (va.empty() || vb.empty()) {
    throw ais::ConfigError("compare: metric '" + metric + "' not found in both runs");
  }
  const double ma = median_of(va);
  const double mb = median_of(vb);
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%s: A median=%.17g (n=%zu)  B median=%.17g (n=%zu)  A-B=%.17g",
                metric.c_str(), ma, va.size(), mb, vb.size(), ma - mb);
  std::cout << buf << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ensemble annealed importance sampling experiment harness"};
  app.require_subcommand(1);

  Overrides ov;
  std::string config_path, model_name, dir_a, dir_b, metric;

  auto* run = app.add_subcommand("run", "run an experiment from a config file");
  run->add_option("config", config_path, "key=value config file")->required();
  run->add_option("--seed", ov.seed, "override the base seed");
  run->add_option("--replicates", ov.replicates, "override the replicate count");
  run->add_option("--out", ov.out, "override the output directory");
  run->add_option("--jobs", ov.jobs, "worker threads for replicates");

  auto* enumerate = app.add_subcommand("enumerate", "exact probability table for a binary model");
  enumerate->add_option("model", model_name, "model or preset name")->required();
  enumerate->add_option("--out", ov.out, "output directory");

  app.add_subcommand("presets", "list built-in presets");

  auto* compare = app.add_subcommand("compare", "compare final metric medians of two runs");
  compare->add_option("A", dir_a, "first run output directory")->required();
  compare->add_option("B", dir_b, "second run output directory")->required();
  compare->add_option("--metric", metric, "metric name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand("run")) return cmd_run(config_path, ov);
    if (app.got_subcommand("enumerate")) return cmd_enumerate(model_name, ov);
    if (app.got_subcommand("presets")) return cmd_presets();
    if (app.got_subcommand("compare")) return cmd_compare(dir_a, dir_b, metric);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return 1;
}
