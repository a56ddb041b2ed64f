#include "ais/models.hpp"

namespace ais {

namespace {

constexpr double kLog2Pi = 1.8378770664093454835606594728112;

ContinuousState sample_isotropic_normal(RandomStream& rng, int dim, double sigma) {
  ContinuousState x(dim);
  for (double& v : x) v = sigma * rng.normal();
  return x;
}

double quadratic_energy(const ContinuousState& x, double inv_variance) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return 0.5 * inv_variance * s;
}

}  // namespace

GaussianMixtureParams default_gaussian_mixture_params() {
  GaussianMixtureParams p;
  p.weights = {0.25, 0.25, 0.25, 0.25};
  p.means = {{{0.0, -3.0}, {0.0, 8.0}, {-4.0, 4.0}, {4.0, 4.0}}};
  p.variances = {{{1.2, 0.01}, {0.01, 2.0}, {0.2, 0.2}, {0.2, 0.2}}};
  return p;
}

ContinuousModel make_gaussian_mixture(const GaussianMixtureParams& params) {
  ContinuousModel m;
  m.dim = 2;
  m.name = "gmm2d";

  auto component_log_density = [params](int i, const ContinuousState& x) {
    double lp = std::log(params.weights[i]) - kLog2Pi;
    for (int k = 0; k < 2; ++k) {
      const double var = params.variances[i][k];
      const double diff = x[k] - params.means[i][k];
      lp -= 0.5 * (std::log(var) + diff * diff / var);
    }
    return lp;
  };

  m.target_energy = [params, component_log_density](const ContinuousState& x) {
    double m_lp = -std::numeric_limits<double>::infinity();
    std::array<double, 4> lp;
    for (int i = 0; i < 4; ++i) {
      lp[i] = component_log_density(i, x);
      m_lp = std::max(m_lp, lp[i]);
    }
    double s = 0.0;
    for (int i = 0; i < 4; ++i) s += std::exp(lp[i] - m_lp);
    return -(m_lp + std::log(s));
  };
  m.target_gradient = [params, component_log_density](const ContinuousState& x) {
    // grad U = sum_i gamma_i Sigma_i^{-1} (x - mu_i), gamma_i softmax responsibilities
    std::array<double, 4> lp;
    double m_lp = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 4; ++i) {
      lp[i] = component_log_density(i, x);
      m_lp = std::max(m_lp, lp[i]);
    }
    double z = 0.0;
    for (int i = 0; i < 4; ++i) z += std::exp(lp[i] - m_lp);
    ContinuousState g(2, 0.0);
    for (int i = 0; i < 4; ++i) {
      const double gamma = std::exp(lp[i] - m_lp) / z;
      for (int k = 0; k < 2; ++k) {
        g[k] += gamma * (x[k] - params.means[i][k]) / params.variances[i][k];
      }
    }
    return g;
  };
  m.initial_energy = [](const ContinuousState& x) { return quadratic_energy(x, 1.0); };
  m.initial_gradient = [](const ContinuousState& x) { return x; };
  m.sample_initial = [](RandomStream& rng) { return sample_isotropic_normal(rng, 2, 1.0); };
  return m;
}

double ginzburg_landau_1d_energy(const ContinuousState& x, double coupling, double spacing) {
  const int d = static_cast<int>(x.size());
  const double inv_h2 = 1.0 / (spacing * spacing);
  double e = 0.0;
  for (int i = 1; i <= d + 1; ++i) {
    const double xi = i <= d ? x[i - 1] : 0.0;  // boundary sites pinned to 0
    const double xim1 = i >= 2 ? x[i - 2] : 0.0;
    const double diff = xi - xim1;
    const double well = 1.0 - xi * xi;
    e += 0.5 * coupling * diff * diff * inv_h2 + well * well / (4.0 * coupling);
  }
  return e;
}

double ginzburg_landau_2d_energy(const ContinuousState& x, int grid, double coupling,
                                 double spacing) {
  const double inv_h2 = 1.0 / (spacing * spacing);
  auto site = [&](int i, int j) {
    // 1-based indices; anything outside the interior is boundary (= 0)
    if (i < 1 || i > grid || j < 1 || j > grid) return 0.0;
    return x[(i - 1) * grid + (j - 1)];
  };
  double e = 0.0;
  for (int i = 1; i <= grid; ++i) {
    for (int j = 1; j <= grid; ++j) {
      const double v = site(i, j);
      const double dxm = v - site(i - 1, j);
      const double dxp = v - site(i + 1, j);
      const double dym = v - site(i, j - 1);
      const double dyp = v - site(i, j + 1);
      const double well = 1.0 - v * v;
      e += 0.25 * coupling * inv_h2 * (dxm * dxm + dxp * dxp + dym * dym + dyp * dyp) +
           well * well / (4.0 * coupling);
    }
  }
  return e;
}

ContinuousModel make_ginzburg_landau_1d(double coupling, int dim, double beta, double length) {
  ContinuousModel m;
  m.dim = dim;
  m.name = "gl1d";
  const double h = length / static_cast<double>(dim + 1);
  m.target_energy = [coupling, h, beta](const ContinuousState& x) {
    return beta * ginzburg_landau_1d_energy(x, coupling, h);
  };
  m.target_gradient = [coupling, h, beta, dim](const ContinuousState& x) {
    const double inv_h2 = 1.0 / (h * h);
    ContinuousState g(dim);
    for (int k = 0; k < dim; ++k) {
      const double left = k >= 1 ? x[k - 1] : 0.0;
      const double right = k + 1 < dim ? x[k + 1] : 0.0;
      g[k] = beta * (coupling * inv_h2 * (2.0 * x[k] - left - right) -
                     x[k] * (1.0 - x[k] * x[k]) / coupling);
    }
    return g;
  };
  m.initial_energy = [](const ContinuousState& x) { return quadratic_energy(x, 100.0); };
  m.initial_gradient = [dim](const ContinuousState& x) {
    ContinuousState g(dim);
    for (int k = 0; k < dim; ++k) g[k] = 100.0 * x[k];
    return g;
  };
  m.sample_initial = [dim](RandomStream& rng) { return sample_isotropic_normal(rng, dim, 0.1); };
  return m;
}

ContinuousModel make_ginzburg_landau_2d(double coupling, int grid, double beta, double length) {
  ContinuousModel m;
  m.dim = grid * grid;
  m.name = "gl2d";
  const double h = length / static_cast<double>(grid + 1);
  m.target_energy = [coupling, h, beta, grid](const ContinuousState& x) {
    return beta * ginzburg_landau_2d_energy(x, grid, coupling, h);
  };
  m.target_gradient = [coupling, h, beta, grid](const ContinuousState& x) {
    const double inv_h2 = 1.0 / (h * h);
    auto site = [&](int i, int j) {
      if (i < 1 || i > grid || j < 1 || j > grid) return 0.0;
      return x[(i - 1) * grid + (j - 1)];
    };
    auto interior = [&](int i, int j) { return i >= 1 && i <= grid && j >= 1 && j <= grid; };
    ContinuousState g(grid * grid);
    for (int i = 1; i <= grid; ++i) {
      for (int j = 1; j <= grid; ++j) {
        const double v = site(i, j);
        double acc = 0.0;
        const int ni[4] = {i - 1, i + 1, i, i};
        const int nj[4] = {j, j, j - 1, j + 1};
        for (int a = 0; a < 4; ++a) {
          // own term always contributes; the mirrored term only exists
          // when the neighbour is an interior (summed-over) site
          const double scale = interior(ni[a], nj[a]) ? 1.0 : 0.5;
          acc += coupling * inv_h2 * scale * (v - site(ni[a], nj[a]));
        }
        acc -= v * (1.0 - v * v) / coupling;
        g[(i - 1) * grid + (j - 1)] = beta * acc;
      }
    }
    return g;
  };
  m.initial_energy = [](const ContinuousState& x) { return quadratic_energy(x, 100.0); };
  m.initial_gradient = [n = grid * grid](const ContinuousState& x) {
    ContinuousState g(n);
    for (int k = 0; k < n; ++k) g[k] = 100.0 * x[k];
    return g;
  };
  m.sample_initial = [n = grid * grid](RandomStream& rng) {
    return sample_isotropic_normal(rng, n, 0.1);
  };
  return m;
}

ContinuousModel make_double_well_product(double beta) {
  ContinuousModel m;
  m.dim = 20;
  m.name = "doublewell20";
  m.target_energy = [beta](const ContinuousState& x) {
    double e = 0.0;
    for (int k = 0; k < 10; ++k) {
      const double v = x[k];
      e += beta * (v * v * v * v - 100.0 * v * v);
    }
    for (int k = 10; k < 20; ++k) e += 0.5 * x[k] * x[k];
    return e;
  };
  m.target_gradient = [beta](const ContinuousState& x) {
    ContinuousState g(20);
    for (int k = 0; k < 10; ++k) {
      const double v = x[k];
      g[k] = beta * (4.0 * v * v * v - 200.0 * v);
    }
    for (int k = 10; k < 20; ++k) g[k] = x[k];
    return g;
  };
  m.initial_energy = [](const ContinuousState& x) { return quadratic_energy(x, 1.0); };
  m.initial_gradient = [](const ContinuousState& x) { return x; };
  m.sample_initial = [](RandomStream& rng) { return sample_isotropic_normal(rng, 20, 1.0); };
  return m;
}

namespace {

DiscreteState sample_uniform_spins(RandomStream& rng, int dim) {
  DiscreteState x(dim);
  std::uint64_t bits = 0;
  for (int s = 0; s < dim; ++s) {
    if (s % 64 == 0) bits = rng.next_u64();
    x[s] = ((bits >> (s % 64)) & 1u) ? 1 : -1;
  }
  return x;
}

}  // namespace

DiscreteModel make_ising_1d(int dim, double j1, double j2, double beta) {
  DiscreteModel m;
  m.dim = dim;
  m.name = "ising1d";
  m.target_energy = [dim, j1, j2, beta](const DiscreteState& x) {
    double s1 = 0.0, s2 = 0.0;
    for (int i = 0; i + 1 < dim; ++i) s1 += static_cast<double>(x[i]) * x[i + 1];
    for (int i = 0; i + 2 < dim; ++i) s2 += static_cast<double>(x[i]) * x[i + 2];
    return beta * (j1 * s1 + j2 * s2);
  };
  m.initial_energy = [](const DiscreteState&) { return 0.0; };
  m.sample_initial = [dim](RandomStream& rng) { return sample_uniform_spins(rng, dim); };
  return m;
}

DiscreteModel make_ising_2d(int grid, double j, double beta) {
  DiscreteModel m;
  m.dim = grid * grid;
  m.name = "ising2d";
  m.target_energy = [grid, j, beta](const DiscreteState& x) {
    double s = 0.0;
    for (int i = 0; i < grid; ++i) {
      for (int k = 0; k < grid; ++k) {
        const double v = x[i * grid + k];
        s += v * x[((i + 1) % grid) * grid + k];  // down neighbour, wraps
        s += v * x[i * grid + (k + 1) % grid];    // right neighbour, wraps
      }
    }
    return beta * j * s;
  };
  m.initial_energy = [](const DiscreteState&) { return 0.0; };
  m.sample_initial = [n = grid * grid](RandomStream& rng) {
    return sample_uniform_spins(rng, n);
  };
  return m;
}

std::size_t state_index(const DiscreteState& spins) {
  std::size_t idx = 0;
  for (std::size_t s = 0; s < spins.size(); ++s) {
    if (spins[s] > 0) idx |= (std::size_t{1} << s);
  }
  return idx;
}

DiscreteState spins_from_index(std::size_t index, int dim) {
  DiscreteState x(dim);
  for (int s = 0; s < dim; ++s) {
    x[s] = ((index >> s) & 1u) ? 1 : -1;
  }
  return x;
}

std::vector<double> enumerate_discrete(const DiscreteModel& model) {
  if (model.dim > 24) {
    throw ConfigError("enumerate_discrete: refusing " + std::to_string(model.dim) +
                      " spins (limit is 24)");
  }
  const std::size_t n_states = std::size_t{1} << model.dim;
  std::vector<double> logp(n_states);
  double max_lp = -std::numeric_limits<double>::infinity();
  for (std::size_t idx = 0; idx < n_states; ++idx) {
    logp[idx] = -model.target_energy(spins_from_index(idx, model.dim));
    max_lp = std::max(max_lp, logp[idx]);
  }
  double z = 0.0;
  for (double lp : logp) z += std::exp(lp - max_lp);
  std::vector<double> p(n_states);
  for (std::size_t idx = 0; idx < n_states; ++idx) {
    p[idx] = std::exp(logp[idx] - max_lp) / z;
  }
  return p;
}

}  // namespace ais
