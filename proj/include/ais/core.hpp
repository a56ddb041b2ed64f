#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "ais/error.hpp"
#include "ais/random.hpp"

namespace ais {

using ContinuousState = std::vector<double>;
using DiscreteState = std::vector<std::int8_t>;  // entries are exactly -1 or +1

// Annealing schedule c(t): monotone [0,1] -> [0,1] with c(0)=0, c(1)=1,
// discretized into step_count temperature levels of width dt() = 1/L.
struct AnnealingSchedule {
  int step_count = 1;
  std::function<double(double)> interp;
  std::function<double(double)> interp_deriv;

  double dt() const { return 1.0 / static_cast<double>(step_count); }

  static AnnealingSchedule linear(int steps) {
    AnnealingSchedule s;
    s.step_count = steps;
    s.interp = [](double t) { return t; };
    s.interp_deriv = [](double) { return 1.0; };
    return s;
  }
};

// Target model over a continuous or binary state space. Energies define
// unnormalized densities p0 ~ exp(-U0) and p ~ exp(-U); gradients are
// only populated for continuous models.
template <class State>
struct Model {
  int dim = 0;
  std::string name;
  std::function<double(const State&)> initial_energy;
  std::function<double(const State&)> target_energy;
  std::function<ContinuousState(const State&)> initial_gradient;  // continuous only
  std::function<ContinuousState(const State&)> target_gradient;   // continuous only
  std::function<State(RandomStream&)> sample_initial;

  bool has_gradients() const { return static_cast<bool>(target_gradient); }
};

using ContinuousModel = Model<ContinuousState>;
using DiscreteModel = Model<DiscreteState>;

// Ensemble of N equally-weighted particles at a common annealing time.
template <class State>
struct Ensemble {
  std::vector<State> particles;
  double time = 0.0;

  std::size_t size() const { return particles.size(); }
};

template <class State>
struct WeightedSampleSet {
  std::vector<State> particles;
  std::vector<double> log_weights;

  // Normalized weights w_i = exp(log_w_i - logsumexp).
  std::vector<double> normalized_weights() const {
    double m = -std::numeric_limits<double>::infinity();
    for (double lw : log_weights) m = std::max(m, lw);
    double sum = 0.0;
    for (double lw : log_weights) sum += std::exp(lw - m);
    std::vector<double> w(log_weights.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::exp(log_weights[i] - m) / sum;
    return w;
  }

  static WeightedSampleSet from_ensemble(const Ensemble<State>& e) {
    return {e.particles, std::vector<double>(e.particles.size(), 0.0)};
  }
};

template <class State>
void check_dimension(const Model<State>& model, const State& x, const char* where) {
  if (static_cast<int>(x.size()) != model.dim) {
    throw ConfigError(std::string(where) + ": state dimension " + std::to_string(x.size()) +
                      " does not match model dimension " + std::to_string(model.dim));
  }
}

inline std::string describe_state(const ContinuousState& x) {
  std::string s = "[";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(x[i]);
  }
  return s + "]";
}

inline std::string describe_state(const DiscreteState& x) {
  std::string s = "[";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(static_cast<int>(x[i]));
  }
  return s + "]";
}

// Intermediate energy U_t(x) = (1 - c(t)) U_0(x) + c(t) U(x).
template <class State>
double interpolate_energy(const AnnealingSchedule& schedule, const Model<State>& model, double t,
                          const State& x) {
  check_dimension(model, x, "interpolate_energy");
  const double c = schedule.interp(t);
  // skip the zero-coefficient term so an infinite endpoint energy does
  // not poison the blend at c = 0 or c = 1
  const double u = c <= 0.0   ? model.initial_energy(x)
                   : c >= 1.0 ? model.target_energy(x)
                              : (1.0 - c) * model.initial_energy(x) + c * model.target_energy(x);
  if (!std::isfinite(u)) {
    throw SamplerError("interpolate_energy: non-finite energy at t=" + std::to_string(t) +
                       ", x=" + describe_state(x));
  }
  return u;
}

// Gradient of the blended energy; continuous models only.
inline ContinuousState interpolate_gradient(const AnnealingSchedule& schedule,
                                            const ContinuousModel& model, double t,
                                            const ContinuousState& x) {
  if (!model.has_gradients()) {
    throw ConfigError("interpolate_gradient: model '" + model.name + "' provides no gradients");
  }
  check_dimension(model, x, "interpolate_gradient");
  const double c = schedule.interp(t);
  ContinuousState g0 = model.initial_gradient(x);
  ContinuousState g1 = model.target_gradient(x);
  ContinuousState g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) g[i] = (1.0 - c) * g0[i] + c * g1[i];
  return g;
}

}  // namespace ais
