#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "pbc/errors.hpp"

namespace pbc {

enum class Orientation { Row, Column };

// A nonnegative vector summing to 1, tagged with state labels and with the
// side it multiplies a transition matrix from.
class ProbVector {
 public:
  ProbVector(std::vector<std::string> states, Eigen::VectorXd weights,
             Orientation orientation, double tolerance = 1e-12);

  const std::vector<std::string>& states() const { return states_; }
  const Eigen::VectorXd& weights() const { return weights_; }
  Orientation orientation() const { return orientation_; }
  std::size_t size() const { return states_.size(); }

  ProbVector transposed() const;

 private:
  std::vector<std::string> states_;
  Eigen::VectorXd weights_;
  Orientation orientation_;
};

// A row-stochastic transition matrix over labeled states: entry (i, j) is
// the one-step probability of moving from state i to state j.
class StochasticMatrix {
 public:
  StochasticMatrix(std::vector<std::string> states, Eigen::MatrixXd entries,
                   double tolerance = 1e-12);

  const std::vector<std::string>& states() const { return states_; }
  const Eigen::MatrixXd& entries() const { return entries_; }
  std::size_t size() const { return states_.size(); }

  StochasticMatrix transposed_states() const;  // same states, transposed entries

 private:
  std::vector<std::string> states_;
  Eigen::MatrixXd entries_;
};

// u0 * P^n for a row vector. AlignmentError when labels or orientations do
// not line up.
ProbVector evolve_left(const ProbVector& u0, const StochasticMatrix& p, unsigned n);

// (P^T)^n * v0 for a column vector.
ProbVector evolve_right(const StochasticMatrix& p, const ProbVector& v0, unsigned n);

// P^n by squaring; the result's rows are re-checked stochastic at 1e-10.
StochasticMatrix matrix_power(const StochasticMatrix& p, unsigned n);

// max |P^{m+n} - P^m P^n| entrywise.
double chapman_kolmogorov_discrete(const StochasticMatrix& p, unsigned m, unsigned n);

// The stationary distribution pi with pi P = pi: power iteration, falling
// back to a direct linear solve when iteration does not settle.
// ConvergenceError when the stationary distribution is not unique or the
// residual cannot be met; it carries the last iterate.
ProbVector stationary(const StochasticMatrix& p);

}  // namespace pbc
