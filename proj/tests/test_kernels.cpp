#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ais/birthdeath.hpp"
#include "ais/kernels_continuous.hpp"
#include "ais/kernels_discrete.hpp"

using namespace ais;

namespace {

ContinuousModel constant_model(int dim) {
  ContinuousModel m;
  m.dim = dim;
  m.name = "constant";
  m.initial_energy = [](const ContinuousState&) { return 0.0; };
  m.target_energy = [](const ContinuousState&) { return 0.0; };
  return m;
}

// U(x) = slope * x[0]
ContinuousModel linear_model(double slope) {
  ContinuousModel m;
  m.dim = 1;
  m.name = "linear";
  m.initial_energy = [slope](const ContinuousState& x) { return slope * x[0]; };
  m.target_energy = [slope](const ContinuousState& x) { return slope * x[0]; };
  return m;
}

// standard normal in `dim` dimensions at every temperature
ContinuousModel gaussian_model(int dim) {
  ContinuousModel m;
  m.dim = dim;
  m.name = "gaussian";
  auto e = [](const ContinuousState& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return 0.5 * s;
  };
  auto g = [](const ContinuousState& x) { return x; };
  m.initial_energy = e;
  m.target_energy = e;
  m.initial_gradient = g;
  m.target_gradient = g;
  return m;
}

DiscreteModel uniform_spins_model(int dim) {
  DiscreteModel m;
  m.dim = dim;
  m.name = "uniform";
  m.initial_energy = [](const DiscreteState&) { return 0.0; };
  m.target_energy = [](const DiscreteState&) { return 0.0; };
  return m;
}

}  // namespace

TEST_CASE("stretch scalar has the right support, median, and distribution") {
  StretchConfig cfg;
  RandomStream rng(3, 0);
  const int n = 100000;
  std::vector<double> draws(n);
  for (int i = 0; i < n; ++i) {
    const double lam = sample_stretch_scalar(cfg, rng);
    REQUIRE(lam >= 0.5);
    REQUIRE(lam <= 2.0);
    draws[i] = lam;
  }
  std::sort(draws.begin(), draws.end());
  CHECK(draws[n / 2] == doctest::Approx(1.125).epsilon(0.01));
  // Kolmogorov-Smirnov distance against F(z) = (sqrt(z)-sqrt(1/2))/(sqrt(2)-sqrt(1/2))
  const double lo = std::sqrt(0.5), hi = std::sqrt(2.0);
  double ks = 0.0;
  for (int i = 0; i < n; ++i) {
    const double f = (std::sqrt(draws[i]) - lo) / (hi - lo);
    ks = std::max(ks, std::abs(f - (i + 1.0) / n));
  }
  CHECK(ks < 0.01);
}

TEST_CASE("stretch acceptance hand values") {
  const auto s = AnnealingSchedule::linear(10);
  SUBCASE("dimension factor on a flat landscape") {
    const auto m = constant_model(3);
    const ContinuousState u = {0.0, 0.0, 0.0}, v = {1.0, 1.0, 1.0};
    CHECK(stretch_acceptance(u, v, 0.5, 0.5, s, m) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(stretch_acceptance(u, v, 1.5, 0.5, s, m) == doctest::Approx(1.0));
  }
  SUBCASE("energy factor in one dimension") {
    const auto m = linear_model(1.0);
    // w = -0.5*0 + 1.5*1 = 1.5, acceptance exp(0 - 1.5)
    CHECK(stretch_acceptance({0.0}, {1.0}, -0.5, 1.0, s, m) ==
          doctest::Approx(0.22313016014842982).epsilon(1e-14));
  }
  SUBCASE("coincident walkers accept as a no-op") {
    const auto m = linear_model(1.0);
    CHECK(stretch_acceptance({2.0}, {2.0}, 0.7, 0.5, s, m) == 1.0);
  }
}

TEST_CASE("ULA always moves, MALA rejects") {
  const auto m = gaussian_model(1);
  const auto s = AnnealingSchedule::linear(10);
  RandomStream rng(4, 0);
  LangevinConfig ula{0.5, false, 1};
  LangevinConfig mala{0.5, true, 1};
  int ula_stays = 0, mala_stays = 0;
  ContinuousState x = {0.2};
  for (int i = 0; i < 2000; ++i) {
    const auto yu = langevin_step(x, 1.0, s, m, ula, rng);
    if (yu == x) ++ula_stays;
    const auto ym = langevin_step(x, 1.0, s, m, mala, rng);
    if (ym == x) ++mala_stays;
  }
  CHECK(ula_stays == 0);
  CHECK(mala_stays > 0);
}

TEST_CASE("MALA chain reproduces the unit normal variance") {
  const auto m = gaussian_model(1);
  const auto s = AnnealingSchedule::linear(10);
  RandomStream rng(11, 0);
  LangevinConfig cfg{0.1, true, 1};
  ContinuousState x = {0.0};
  double sum = 0.0, sq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    x = langevin_step(x, 1.0, s, m, cfg, rng);
    sum += x[0];
    sq += x[0] * x[0];
  }
  const double mean = sum / n;
  const double var = sq / n - mean * mean;
  CHECK(std::abs(mean) < 0.05);
  CHECK(var > 0.95);
  CHECK(var < 1.05);
}

TEST_CASE("snooker sweeps preserve a normal ensemble") {
  const auto m = gaussian_model(2);
  const auto s = AnnealingSchedule::linear(10);
  RandomStream rng(21, 0);
  StretchConfig cfg;
  Ensemble<ContinuousState> e;
  const std::size_t n = 50;
  for (std::size_t i = 0; i < n; ++i) e.particles.push_back({rng.normal(), rng.normal()});
  double sum = 0.0, sq = 0.0;
  long count = 0;
  for (int sweep = 0; sweep < 4000; ++sweep) {
    for (std::size_t i = 0; i < n; ++i) {
      snooker_move_inplace(i, e, 1.0, s, m, cfg, rng);
    }
    if (sweep < 500) continue;  // burn-in
    for (const auto& p : e.particles) {
      for (double v : p) {
        sum += v;
        sq += v * v;
        ++count;
      }
    }
  }
  const double mean = sum / count;
  const double var = sq / count - mean * mean;
  CHECK(std::abs(mean) < 0.05);
  CHECK(var > 0.9);
  CHECK(var < 1.1);
}

TEST_CASE("snooker copy and in-place forms agree draw for draw") {
  const auto m = gaussian_model(2);
  const auto s = AnnealingSchedule::linear(10);
  StretchConfig cfg;
  Ensemble<ContinuousState> e;
  RandomStream init(5, 0);
  for (int i = 0; i < 8; ++i) e.particles.push_back({init.normal(), init.normal()});
  for (std::size_t i = 0; i < 8; ++i) {
    RandomStream r1(9, i), r2(9, i);
    const auto copied = snooker_move(i, e, 0.5, s, m, cfg, r1);
    Ensemble<ContinuousState> inplace = e;
    snooker_move_inplace(i, inplace, 0.5, s, m, cfg, r2);
    CHECK(copied.particles == inplace.particles);
    // only slot i may differ from the input
    for (std::size_t j = 0; j < 8; ++j) {
      if (j != i) CHECK(copied.particles[j] == e.particles[j]);
    }
  }
}

TEST_CASE("heat-bath flip probability on a flat landscape is one half") {
  const auto m = uniform_spins_model(1);
  const auto s = AnnealingSchedule::linear(10);
  RandomStream rng(6, 0);
  int flips = 0;
  const int n = 100000;
  DiscreteState x = {1};
  for (int i = 0; i < n; ++i) {
    if (glauber_step(x, 1.0, s, m, rng) != x) ++flips;
  }
  CHECK(std::abs(flips / static_cast<double>(n) - 0.5) < 0.01);
}

TEST_CASE("heat-bath respects extreme energy gaps") {
  // U = 10 * x[0] at t=1, so flipping -1 -> +1 has gap 20
  DiscreteModel m;
  m.dim = 1;
  m.initial_energy = [](const DiscreteState& x) { return 10.0 * x[0]; };
  m.target_energy = [](const DiscreteState& x) { return 10.0 * x[0]; };
  const auto s = AnnealingSchedule::linear(10);
  RandomStream rng(7, 0);
  const DiscreteState low = {-1}, high = {1};
  int up_flips = 0, down_flips = 0;
  for (int i = 0; i < 100000; ++i) {
    if (glauber_step(low, 1.0, s, m, rng) == high) ++up_flips;
    if (glauber_step(high, 1.0, s, m, rng) == low) ++down_flips;
  }
  // uphill acceptance 1/(1+e^20) ~ 2.06e-9; downhill ~ 1
  CHECK(up_flips == 0);
  CHECK(down_flips == 100000);
}

TEST_CASE("crossover mask mixes each coordinate fairly") {
  const int d = 8;
  DiscreteModel m;
  m.dim = d;
  m.initial_energy = [](const DiscreteState&) { return 0.0; };
  m.target_energy = [](const DiscreteState&) { return 0.0; };
  const auto s = AnnealingSchedule::linear(10);
  RandomStream rng(8, 0);
  std::vector<int> swapped(d, 0);
  const int trials = 40000;
  for (int trial = 0; trial < trials; ++trial) {
    Ensemble<DiscreteState> e;
    e.particles = {DiscreteState(d, 1), DiscreteState(d, -1)};
    const auto partner = genetic_crossover_inplace(0, e, 0.5, s, m, rng);
    REQUIRE(partner.has_value());
    CHECK(*partner == 1);
    for (int k = 0; k < d; ++k) {
      // offspring always carry one +1 and one -1 per coordinate
      CHECK(static_cast<int>(e.particles[0][k]) + e.particles[1][k] == 0);
      if (e.particles[0][k] == -1) ++swapped[k];
    }
  }
  for (int k = 0; k < d; ++k) {
    CHECK(std::abs(swapped[k] / static_cast<double>(trials) - 0.5) < 0.02);
  }
}

TEST_CASE("crossover copy and in-place forms agree draw for draw") {
  const auto m = [] {
    DiscreteModel mm;
    mm.dim = 4;
    mm.initial_energy = [](const DiscreteState&) { return 0.0; };
    mm.target_energy = [](const DiscreteState& x) {
      double s = 0.0;
      for (int i = 0; i + 1 < 4; ++i) s -= static_cast<double>(x[i]) * x[i + 1];
      return s;
    };
    return mm;
  }();
  const auto s = AnnealingSchedule::linear(10);
  Ensemble<DiscreteState> e;
  e.particles = {{1, 1, -1, 1}, {-1, 1, 1, -1}, {1, -1, 1, 1}};
  for (std::size_t i = 0; i < 3; ++i) {
    RandomStream r1(13, i), r2(13, i);
    const auto copied = genetic_crossover(i, e, 0.7, s, m, r1);
    Ensemble<DiscreteState> inplace = e;
    genetic_crossover_inplace(i, inplace, 0.7, s, m, r2);
    CHECK(copied.particles == inplace.particles);
  }
}

TEST_CASE("birth-death rates are the derivative-weighted energy gaps") {
  DiscreteModel m;
  m.dim = 1;
  m.initial_energy = [](const DiscreteState& x) { return 0.5 * x[0]; };
  m.target_energy = [](const DiscreteState& x) { return 2.0 * x[0]; };
  const auto s = AnnealingSchedule::linear(4);
  Ensemble<DiscreteState> e;
  e.particles = {{1}, {-1}};
  const auto rates = compute_rates(e, 0.5, s, m);
  CHECK(rates.raw_rates[0] == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(rates.raw_rates[1] == doctest::Approx(-1.5).epsilon(1e-14));
  CHECK(rates.mean == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(rates.dt == doctest::Approx(0.25));
}

TEST_CASE("birth-death kill frequency matches the exponential formula") {
  BirthDeathRates rates;
  rates.raw_rates = {2.0, 0.0};
  rates.mean = 1.0;
  rates.dt = 0.5;
  Ensemble<DiscreteState> e;
  e.particles = {{1}, {-1}};
  RandomStream rng(14, 0);
  const int trials = 100000;
  int killed = 0, duplicated = 0;
  for (int trial = 0; trial < trials; ++trial) {
    const auto after_kill = birth_death_step(0, e, rates, rng);
    if (after_kill.particles[0] == e.particles[1]) ++killed;
    const auto after_dup = birth_death_step(1, e, rates, rng);
    if (after_dup.particles[0] == e.particles[1]) ++duplicated;
    CHECK(after_kill.size() == 2);
    CHECK(after_dup.size() == 2);
  }
  const double expected = 1.0 - std::exp(-0.5);  // centered rate 1.0, dt 0.5
  CHECK(std::abs(killed / static_cast<double>(trials) - expected) < 0.01);
  CHECK(std::abs(duplicated / static_cast<double>(trials) - expected) < 0.01);
}

TEST_CASE("birth-death needs at least two particles") {
  BirthDeathRates rates;
  rates.raw_rates = {1.0};
  rates.mean = 0.0;
  rates.dt = 0.1;
  Ensemble<DiscreteState> e;
  e.particles = {{1}};
  RandomStream rng(15, 0);
  CHECK_THROWS_AS(birth_death_step(0, e, rates, rng), ConfigError);
}
