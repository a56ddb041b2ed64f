#include "ais/kernels_continuous.hpp"

namespace ais {

namespace {

double squared_distance_to_drifted(const ContinuousState& to, const ContinuousState& from,
                                   const ContinuousState& grad_from, double step) {
  double s = 0.0;
  for (std::size_t k = 0; k < to.size(); ++k) {
    const double diff = to[k] - (from[k] - step * grad_from[k]);
    s += diff * diff;
  }
  return s;
}

}  // namespace

ContinuousState langevin_step(const ContinuousState& x, double t, const AnnealingSchedule& schedule,
                              const ContinuousModel& model, const LangevinConfig& cfg,
                              RandomStream& rng) {
  if (cfg.step_size < 0.0) {
    throw ConfigError("langevin_step: negative step size");
  }
  const double tau = cfg.step_size;
  const double noise_scale = std::sqrt(2.0 * tau);
  ContinuousState grad = interpolate_gradient(schedule, model, t, x);
  ContinuousState y(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    y[k] = x[k] - tau * grad[k] + noise_scale * rng.normal();
  }

  if (!cfg.adjusted) {
    for (double v : y) {
      if (!std::isfinite(v)) {
        throw SamplerError("langevin_step: ULA produced non-finite state from x=" +
                           describe_state(x));
      }
    }
    return y;
  }

  // MALA correction: proposal density q(y|x) ~ exp(-|y - x + tau*grad(x)|^2 / (4 tau)).
  double energy_y;
  ContinuousState grad_y;
  try {
    energy_y = interpolate_energy(schedule, model, t, y);
    grad_y = interpolate_gradient(schedule, model, t, y);
  } catch (const SamplerError&) {
    return x;  // non-finite proposal: reject
  }
  const double energy_x = interpolate_energy(schedule, model, t, x);
  double log_ratio = energy_x - energy_y;
  if (tau > 0.0) {
    log_ratio += (squared_distance_to_drifted(y, x, grad, tau) -
                  squared_distance_to_drifted(x, y, grad_y, tau)) /
                 (4.0 * tau);
  }
  if (!std::isfinite(log_ratio)) return x;
  if (log_ratio >= 0.0 || rng.uniform() < std::exp(log_ratio)) return y;
  return x;
}

double sample_stretch_scalar(const StretchConfig& cfg, RandomStream& rng) {
  const double sa = std::sqrt(cfg.support_bound);
  const double lo = 1.0 / sa;
  const double r = rng.uniform() * (sa - lo) + lo;
  return r * r;
}

double stretch_acceptance(const ContinuousState& u, const ContinuousState& v, double lambda,
                          double t, const AnnealingSchedule& schedule,
                          const ContinuousModel& model) {
  if (u == v) return 1.0;
  const int d = model.dim;
  ContinuousState w(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) {
    w[k] = lambda * u[k] + (1.0 - lambda) * v[k];
  }
  double energy_w;
  try {
    energy_w = interpolate_energy(schedule, model, t, w);
  } catch (const SamplerError&) {
    return 0.0;
  }
  const double energy_u = interpolate_energy(schedule, model, t, u);
  const double log_a = (d - 1) * std::log(std::abs(lambda)) + energy_u - energy_w;
  return log_a >= 0.0 ? 1.0 : std::exp(log_a);
}

bool snooker_move_inplace(std::size_t i, Ensemble<ContinuousState>& ensemble, double t,
                          const AnnealingSchedule& schedule, const ContinuousModel& model,
                          const StretchConfig& cfg, RandomStream& rng) {
  const std::size_t n = ensemble.size();
  if (n < 2) {
    throw ConfigError("snooker_move: ensemble must contain at least 2 particles");
  }
  bool changed = false;
  for (int step = 0; step < cfg.sub_steps; ++step) {
    std::size_t j = rng.uniform_index(n - 1);
    if (j >= i) ++j;
    const double lambda = sample_stretch_scalar(cfg, rng);
    const ContinuousState& xi = ensemble.particles[i];
    const ContinuousState& xj = ensemble.particles[j];
    const double accept = stretch_acceptance(xi, xj, lambda, t, schedule, model);
    if (accept >= 1.0 || rng.uniform() < accept) {
      ContinuousState y(xi.size());
      for (std::size_t k = 0; k < xi.size(); ++k) {
        y[k] = lambda * xi[k] + (1.0 - lambda) * xj[k];
      }
      ensemble.particles[i] = std::move(y);
      changed = true;
    }
  }
  return changed;
}

Ensemble<ContinuousState> snooker_move(std::size_t i, const Ensemble<ContinuousState>& ensemble,
                                       double t, const AnnealingSchedule& schedule,
                                       const ContinuousModel& model, const StretchConfig& cfg,
                                       RandomStream& rng) {
  Ensemble<ContinuousState> out = ensemble;
  snooker_move_inplace(i, out, t, schedule, model, cfg, rng);
  return out;
}

}  // namespace ais
