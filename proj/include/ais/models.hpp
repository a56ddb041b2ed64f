#pragma once

#include <array>

#include "ais/core.hpp"

namespace ais {

// Four-component planar Gaussian mixture benchmark.
struct GaussianMixtureParams {
  std::array<double, 4> weights;
  std::array<std::array<double, 2>, 4> means;
  std::array<std::array<double, 2>, 4> variances;  // diagonal covariances
};

// Benchmark parameter set: equal weights, modes at [0,-3], [0,8],
// [-4,4], [4,4] with strongly anisotropic covariances.
GaussianMixtureParams default_gaussian_mixture_params();

// Mixture target with standard normal initial distribution.
ContinuousModel make_gaussian_mixture(const GaussianMixtureParams& params);

// Discretized scalar field energies on a grid with zero Dirichlet
// boundary; `coupling` is the interface parameter multiplying the
// gradient term, the quartic well is (1 - x^2)^2 / (4 coupling).
double ginzburg_landau_1d_energy(const ContinuousState& x, double coupling, double spacing);
double ginzburg_landau_2d_energy(const ContinuousState& x, int grid, double coupling,
                                 double spacing);

// Boltzmann targets exp(-beta * lattice energy), initial N(0, 0.01 I).
ContinuousModel make_ginzburg_landau_1d(double coupling, int dim, double beta, double length);
ContinuousModel make_ginzburg_landau_2d(double coupling, int grid, double beta, double length);

// 20-dimensional product target: coordinates 1-10 follow the double-well
// density exp(-beta (x^4 - 100 x^2)), coordinates 11-20 are standard
// normal. Initial distribution N(0, I_20).
ContinuousModel make_double_well_product(double beta);

// Open-boundary chain with nearest (j1) and second-nearest (j2)
// couplings; uniform initial distribution.
DiscreteModel make_ising_1d(int dim, double j1, double j2, double beta);

// Periodic grid x grid lattice with nearest-neighbour coupling j.
DiscreteModel make_ising_2d(int grid, double j, double beta);

// Canonical binary-state encoding: spin at position s (0-based) maps to
// bit s, with spin -1 <-> bit 0 and +1 <-> bit 1.
std::size_t state_index(const DiscreteState& spins);
DiscreteState spins_from_index(std::size_t index, int dim);

// Exact normalized Boltzmann probabilities over all 2^dim states in
// canonical order. Refuses models with more than 24 spins.
std::vector<double> enumerate_discrete(const DiscreteModel& model);

}  // namespace ais
