#include "pbc/dtmc.hpp"

#include <cmath>

namespace pbc {

namespace {

void require_same_states(const std::vector<std::string>& a,
                         const std::vector<std::string>& b) {
  if (a != b) throw AlignmentError("state labels do not match");
}

Eigen::MatrixXd power_by_squaring(Eigen::MatrixXd base, unsigned n) {
  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(base.rows(), base.cols());
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace

ProbVector::ProbVector(std::vector<std::string> states, Eigen::VectorXd weights,
                       Orientation orientation, double tolerance)
    : states_(std::move(states)), weights_(std::move(weights)), orientation_(orientation) {
  if (states_.empty()) throw DomainError("probability vector needs at least one state");
  if (Eigen::Index(states_.size()) != weights_.size())
    throw DomainError("state and weight counts differ");
  for (Eigen::Index i = 0; i < weights_.size(); ++i)
    if (!(weights_[i] >= 0.0))
      throw DomainError("negative weight for state '" + states_[std::size_t(i)] + "'");
  const double total = weights_.sum();
  if (std::abs(total - 1.0) > tolerance)
    throw DomainError("weights sum to " + std::to_string(total) + ", expected 1");
}

ProbVector ProbVector::transposed() const {
  ProbVector out = *this;
  out.orientation_ =
      orientation_ == Orientation::Row ? Orientation::Column : Orientation::Row;
  return out;
}

StochasticMatrix::StochasticMatrix(std::vector<std::string> states,
                                   Eigen::MatrixXd entries, double tolerance)
    : states_(std::move(states)), entries_(std::move(entries)) {
  const Eigen::Index r = Eigen::Index(states_.size());
  if (r == 0) throw DomainError("transition matrix needs at least one state");
  if (entries_.rows() != r || entries_.cols() != r)
    throw DomainError("transition matrix shape does not match the state count");
  for (Eigen::Index i = 0; i < r; ++i) {
    double row_sum = 0.0;
    for (Eigen::Index j = 0; j < r; ++j) {
      if (!(entries_(i, j) >= 0.0))
        throw DomainError("negative transition probability at (" +
                          states_[std::size_t(i)] + ", " + states_[std::size_t(j)] + ")");
      row_sum += entries_(i, j);
    }
    if (std::abs(row_sum - 1.0) > tolerance)
      throw DomainError("row for state '" + states_[std::size_t(i)] + "' sums to " +
                        std::to_string(row_sum) + ", expected 1");
  }
}

StochasticMatrix StochasticMatrix::transposed_states() const {
  return StochasticMatrix(states_, entries_.transpose(), 1e-9);
}

ProbVector evolve_left(const ProbVector& u0, const StochasticMatrix& p, unsigned n) {
  require_same_states(u0.states(), p.states());
  if (u0.orientation() != Orientation::Row)
    throw AlignmentError("left evolution takes a row vector");
  const Eigen::MatrixXd pn = power_by_squaring(p.entries(), n);
  Eigen::VectorXd result = (u0.weights().transpose() * pn).transpose();
  return ProbVector(u0.states(), std::move(result), Orientation::Row);
}

ProbVector evolve_right(const StochasticMatrix& p, const ProbVector& v0, unsigned n) {
  require_same_states(v0.states(), p.states());
  if (v0.orientation() != Orientation::Column)
    throw AlignmentError("right evolution takes a column vector");
  const Eigen::MatrixXd pn = power_by_squaring(p.entries().transpose(), n);
  Eigen::VectorXd result = pn * v0.weights();
  return ProbVector(v0.states(), std::move(result), Orientation::Column);
}

StochasticMatrix matrix_power(const StochasticMatrix& p, unsigned n) {
  return StochasticMatrix(p.states(), power_by_squaring(p.entries(), n), 1e-10);
}

double chapman_kolmogorov_discrete(const StochasticMatrix& p, unsigned m, unsigned n) {
  const Eigen::MatrixXd lhs = power_by_squaring(p.entries(), m + n);
  const Eigen::MatrixXd rhs =
      power_by_squaring(p.entries(), m) * power_by_squaring(p.entries(), n);
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

ProbVector stationary(const StochasticMatrix& p) {
  const Eigen::Index r = p.entries().rows();
  const Eigen::MatrixXd a = p.entries().transpose() - Eigen::MatrixXd::Identity(r, r);

  Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  lu.setThreshold(1e-9);
  const Eigen::Index null_dim = r - lu.rank();
  if (null_dim != 1) {
    Eigen::VectorXd uniform = Eigen::VectorXd::Constant(r, 1.0 / double(r));
    throw ConvergenceError(
        "stationary distribution is not unique (kernel dimension " +
            std::to_string(null_dim) + ")",
        std::vector<double>(uniform.data(), uniform.data() + r));
  }

  // Power iteration first; it is cheap and certifies convergence by itself.
  Eigen::VectorXd pi = Eigen::VectorXd::Constant(r, 1.0 / double(r));
  constexpr int kMaxIters = 100000;
  constexpr double kStep = 1e-13;
  for (int it = 0; it < kMaxIters; ++it) {
    Eigen::VectorXd next = (pi.transpose() * p.entries()).transpose();
    const double moved = (next - pi).lpNorm<1>();
    pi = next;
    if (moved < kStep) break;
  }

  double residual = ((pi.transpose() * p.entries()).transpose() - pi)
                        .lpNorm<Eigen::Infinity>();
  if (residual > 1e-10) {
    // Fall back to the direct solve: replace one balance equation with the
    // normalization constraint.
    Eigen::MatrixXd sys = a;
    sys.row(0).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(r);
    rhs[0] = 1.0;
    pi = sys.fullPivLu().solve(rhs);
    residual = ((pi.transpose() * p.entries()).transpose() - pi)
                   .lpNorm<Eigen::Infinity>();
    if (residual > 1e-10 || pi.minCoeff() < -1e-10)
      throw ConvergenceError("stationary solve residual " + std::to_string(residual),
                             std::vector<double>(pi.data(), pi.data() + r));
  }
  for (Eigen::Index i = 0; i < r; ++i) pi[i] = std::max(pi[i], 0.0);
  pi /= pi.sum();
  return ProbVector(p.states(), std::move(pi), Orientation::Row);
}

}  // namespace pbc
