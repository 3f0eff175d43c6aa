#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "pbc/rng.hpp"

namespace pbc {

// Counting process with rate lambda per unit time.
struct PoissonProcess {
  double lambda;
};

// Zero-drift diffusion with scale sigma: increments are N(0, sigma^2 dt).
struct WienerProcess {
  double sigma;
};

// Drifting diffusion started at x0: increments are N(mu dt, sigma^2 dt).
struct BrownianMotion {
  double x0;
  double mu;
  double sigma;
};

using AnyProcess = std::variant<PoissonProcess, WienerProcess, BrownianMotion>;

// One realization: values at the requested times, plus the seed that
// produced it.
struct SamplePath {
  std::vector<double> times;
  std::vector<double> values;
  std::uint64_t seed;
};

// P(N(t) = k) = (lambda t)^k e^{-lambda t} / k!.
double poisson_pmf(const PoissonProcess& p, unsigned k, double t);

// Transition i -> j over elapsed time t: the pmf of the increment j - i,
// zero when j < i.
double poisson_transition(const PoissonProcess& p, unsigned i, unsigned j, double t);

// Density of W(t): normal with mean 0 and variance t sigma^2.
double wiener_density(const WienerProcess& w, double x, double t);

// Density of the displacement X(t) - x0: normal with mean mu t and
// variance t sigma^2.
double brownian_density(const BrownianMotion& b, double y, double t);

// Max over a grid of (x, y) pairs of the gap between the direct transition
// density over t - s and its convolution through an intermediate time tau.
double ck_check_continuous(const WienerProcess& w, double s, double tau, double t);

// Simulates the process at the given strictly increasing times (first
// increment spans [0, times[0]]). Deterministic for a fixed seed.
SamplePath sample_path(const AnyProcess& proc, const std::vector<double>& times,
                       std::uint64_t seed);

// Sample mean and (unbiased) variance of the process value at time t across
// independent paths; path i uses stream i of the seed.
struct EmpiricalMoments {
  double mean;
  double variance;
};
EmpiricalMoments empirical_moments(const AnyProcess& proc, double t, unsigned n_paths,
                                   std::uint64_t seed);

}  // namespace pbc
