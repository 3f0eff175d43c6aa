#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "pbc/dtmc.hpp"
#include "pbc/observables.hpp"

namespace pbc {

// A continuous-time rate matrix over labeled states: entry (i, j) is the
// rate of jumping from state i to state j, diagonals make rows sum to zero.
class Generator {
 public:
  Generator(std::vector<std::string> states, Eigen::MatrixXd entries,
            double tolerance = 1e-12);

  const std::vector<std::string>& states() const { return states_; }
  const Eigen::MatrixXd& entries() const { return entries_; }
  std::size_t size() const { return states_.size(); }

 private:
  std::vector<std::string> states_;
  Eigen::MatrixXd entries_;
};

// Jump rates between labeled states, kept in transition orientation:
// rate(i, j) is the rate of i -> j, diagonal zero. The gain-oriented matrix
// W with W(n, n') = rate of n' -> n is available both ways for rate tables
// written in gain-loss form.
class GainLossRates {
 public:
  GainLossRates(std::vector<std::string> states, Eigen::MatrixXd rates);

  static GainLossRates from_gain_matrix(std::vector<std::string> states,
                                        const Eigen::MatrixXd& gain);

  const std::vector<std::string>& states() const { return states_; }
  const Eigen::MatrixXd& rates() const { return rates_; }
  Eigen::MatrixXd gain_matrix() const { return rates_.transpose(); }

 private:
  std::vector<std::string> states_;
  Eigen::MatrixXd rates_;
};

// A rate density on a uniformly spaced grid: w(x, x_src) is the rate density
// of moving from x_src to x. Spacing uniformity is validated at construction.
class GridKernel {
 public:
  GridKernel(std::vector<double> grid, std::function<double(double, double)> w);

  const std::vector<double>& grid() const { return grid_; }
  double spacing() const { return spacing_; }
  double w(double x, double x_src) const { return w_(x, x_src); }

 private:
  std::vector<double> grid_;
  double spacing_;
  std::function<double(double, double)> w_;
};

// Q with q_ij = rate(i, j) off the diagonal and q_ii closing each row to
// zero. Exact by construction.
Generator generator_from_rates(const GainLossRates& g);

// exp(Qt) by uniformization: a Poisson mixture of powers of I + Q/lambda,
// truncated when the Poisson tail drops below 1e-14. Row-stochastic and
// nonnegative by construction.
StochasticMatrix transition_matrix(const Generator& q, double t);

// Residuals of the forward (P' = PQ) and backward (P' = QP) differential
// equations, with P' taken by central finite difference.
struct KolmogorovResiduals {
  double forward;
  double backward;
};
KolmogorovResiduals kolmogorov_residuals(const Generator& q, double t);

// exp(Q^T t) p0: the distribution-side evolution law for column vectors.
ProbVector evolve_density(const ProbVector& p0, const Generator& q, double t);

// The summing functional applied after the diagonal observable:
// sum_n X(n) p_n.
double doi_expectation(const Observable& x, const ProbVector& p);

// The same expectation pushed through the factorially normalized pairing
// <m|n> = n! delta_mn; the factorials cancel term by term. States must carry
// nonnegative-integer occupation labels.
double peliti_expectation(const Observable& x, const ProbVector& p);

// Observable-side evolution: 1^T (U^{-1} D_X U) p0 with U = exp(Q^T t).
// Agrees with evolving the density and applying doi_expectation.
double heisenberg_expectation(const Observable& x, const Generator& q, double t,
                              const ProbVector& p0);

// Evolves density samples on a grid under the discretized gain-loss
// equation. Input samples must satisfy sum p0 * spacing = 1 within 1e-10;
// the evolved samples conserve that mass.
std::vector<double> grid_master_evolve(const GridKernel& k, const std::vector<double>& p0,
                                       double t);

}  // namespace pbc
