#include "pbc/ctmc.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <cstdlib>

namespace pbc {

namespace {

void require_states(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a != b) throw AlignmentError("state labels do not match");
}

void require_total(const Observable& x, const std::vector<std::string>& states) {
  for (const auto& s : states)
    if (!x.defined_on(s))
      throw AlignmentError("observable has no value for state '" + s + "'");
}

// exp(Qt) for a generator matrix. Time-splits when lambda*t is large enough
// to underflow the leading Poisson weight.
Eigen::MatrixXd uniformized_exp(const Eigen::MatrixXd& q, double t) {
  const Eigen::Index r = q.rows();
  const double max_diag = q.diagonal().cwiseAbs().maxCoeff();
  if (max_diag * t == 0.0) return Eigen::MatrixXd::Identity(r, r);
  if (max_diag * t > 500.0) {
    Eigen::MatrixXd half = uniformized_exp(q, t / 2.0);
    return half * half;
  }
  const double lambda = 1.05 * max_diag;
  const double lt = lambda * t;
  const Eigen::MatrixXd m =
      Eigen::MatrixXd::Identity(r, r) + q / lambda;

  double weight = std::exp(-lt);
  double cumulative = weight;
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(r, r);
  Eigen::MatrixXd sum = weight * term;
  for (int k = 1; cumulative < 1.0 - 1e-14; ++k) {
    term = term * m;
    weight *= lt / double(k);
    sum += weight * term;
    cumulative += weight;
    if (k > 200000)
      throw ConvergenceError("uniformization series failed to truncate",
                             std::vector<double>{});
  }
  return sum;
}

unsigned parse_occupation(const std::string& label) {
  if (label.empty()) throw DomainError("empty occupation label");
  const char* begin = label.c_str();
  char* end = nullptr;
  const unsigned long v = std::strtoul(begin, &end, 10);
  if (end != begin + label.size())
    throw DomainError("state label '" + label +
                      "' is not a nonnegative integer occupation number");
  return unsigned(v);
}

}  // namespace

Generator::Generator(std::vector<std::string> states, Eigen::MatrixXd entries,
                     double tolerance)
    : states_(std::move(states)), entries_(std::move(entries)) {
  const Eigen::Index r = Eigen::Index(states_.size());
  if (r == 0) throw DomainError("generator needs at least one state");
  if (entries_.rows() != r || entries_.cols() != r)
    throw DomainError("generator shape does not match the state count");
  for (Eigen::Index i = 0; i < r; ++i) {
    double row_sum = 0.0;
    for (Eigen::Index j = 0; j < r; ++j) {
      if (i != j && !(entries_(i, j) >= 0.0))
        throw DomainError("negative off-diagonal rate at (" + states_[std::size_t(i)] +
                          ", " + states_[std::size_t(j)] + ")");
      row_sum += entries_(i, j);
    }
    if (std::abs(row_sum) > tolerance)
      throw DomainError("generator row for state '" + states_[std::size_t(i)] +
                        "' sums to " + std::to_string(row_sum) + ", expected 0");
  }
}

GainLossRates::GainLossRates(std::vector<std::string> states, Eigen::MatrixXd rates)
    : states_(std::move(states)), rates_(std::move(rates)) {
  const Eigen::Index r = Eigen::Index(states_.size());
  if (r == 0) throw DomainError("rate table needs at least one state");
  if (rates_.rows() != r || rates_.cols() != r)
    throw DomainError("rate table shape does not match the state count");
  for (Eigen::Index i = 0; i < r; ++i) {
    if (rates_(i, i) != 0.0)
      throw DomainError("rate table diagonal must be zero (state '" +
                        states_[std::size_t(i)] + "')");
    for (Eigen::Index j = 0; j < r; ++j)
      if (!(rates_(i, j) >= 0.0))
        throw DomainError("negative rate at (" + states_[std::size_t(i)] + ", " +
                          states_[std::size_t(j)] + ")");
  }
}

GainLossRates GainLossRates::from_gain_matrix(std::vector<std::string> states,
                                              const Eigen::MatrixXd& gain) {
  return GainLossRates(std::move(states), gain.transpose());
}

GridKernel::GridKernel(std::vector<double> grid, std::function<double(double, double)> w)
    : grid_(std::move(grid)), w_(std::move(w)) {
  if (grid_.size() < 2) throw DomainError("grid needs at least two points");
  spacing_ = grid_[1] - grid_[0];
  if (!(spacing_ > 0)) throw DomainError("grid must be strictly increasing");
  for (std::size_t i = 1; i < grid_.size(); ++i) {
    const double step = grid_[i] - grid_[i - 1];
    if (std::abs(step - spacing_) > 1e-9 * std::max(1.0, std::abs(spacing_)))
      throw DomainError("grid spacing is not uniform");
  }
}

Generator generator_from_rates(const GainLossRates& g) {
  Eigen::MatrixXd q = g.rates();
  const Eigen::Index r = q.rows();
  for (Eigen::Index i = 0; i < r; ++i) {
    double out = 0.0;
    for (Eigen::Index j = 0; j < r; ++j)
      if (j != i) out += q(i, j);
    q(i, i) = -out;
  }
  return Generator(g.states(), std::move(q));
}

StochasticMatrix transition_matrix(const Generator& q, double t) {
  if (!(t >= 0)) throw DomainError("time must be nonnegative");
  return StochasticMatrix(q.states(), uniformized_exp(q.entries(), t));
}

KolmogorovResiduals kolmogorov_residuals(const Generator& q, double t) {
  if (!(t > 0)) throw DomainError("time must be positive");
  double h = 1e-4 * std::max(1.0, t);
  if (h > t / 2) h = t / 2;
  const Eigen::MatrixXd p_t = uniformized_exp(q.entries(), t);
  const Eigen::MatrixXd p_plus = uniformized_exp(q.entries(), t + h);
  const Eigen::MatrixXd p_minus = uniformized_exp(q.entries(), t - h);
  const Eigen::MatrixXd deriv = (p_plus - p_minus) / (2.0 * h);
  const double forward = (deriv - p_t * q.entries()).cwiseAbs().maxCoeff();
  const double backward = (deriv - q.entries() * p_t).cwiseAbs().maxCoeff();
  return KolmogorovResiduals{forward, backward};
}

ProbVector evolve_density(const ProbVector& p0, const Generator& q, double t) {
  require_states(p0.states(), q.states());
  if (p0.orientation() != Orientation::Column)
    throw AlignmentError("density evolution takes a column vector");
  if (!(t >= 0)) throw DomainError("time must be nonnegative");
  Eigen::VectorXd p = uniformized_exp(q.entries(), t).transpose() * p0.weights();
  const double worst = p.minCoeff();
  if (worst < -1e-12)
    throw DomainError("evolved density has a negative entry of " + std::to_string(worst));
  if (worst < 0.0) {
    for (Eigen::Index i = 0; i < p.size(); ++i) p[i] = std::max(p[i], 0.0);
    p /= p.sum();
  }
  return ProbVector(p0.states(), std::move(p), Orientation::Column);
}

double doi_expectation(const Observable& x, const ProbVector& p) {
  require_total(x, p.states());
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
    total += x.value(p.states()[i]) * p.weights()[Eigen::Index(i)];
  return total;
}

double peliti_expectation(const Observable& x, const ProbVector& p) {
  require_total(x, p.states());
  long double total = 0.0L;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const unsigned n = parse_occupation(p.states()[i]);
    // <m| F |n> p_n under <m|n> = n! delta_mn, then the 1/m! of the
    // standard bra. Exact factorials up to 20!, log-factorials beyond.
    long double pairing;
    if (n <= 20) {
      long double fact = 1.0L;
      for (unsigned k = 2; k <= n; ++k) fact *= (long double)(k);
      pairing = fact / fact;
    } else {
      pairing = std::exp((long double)(std::lgamma(double(n) + 1.0)) -
                         (long double)(std::lgamma(double(n) + 1.0)));
    }
    total += pairing * (long double)(x.value(p.states()[i])) *
             (long double)(p.weights()[Eigen::Index(i)]);
  }
  return double(total);
}

double heisenberg_expectation(const Observable& x, const Generator& q, double t,
                              const ProbVector& p0) {
  require_states(p0.states(), q.states());
  require_total(x, q.states());
  if (p0.orientation() != Orientation::Column)
    throw AlignmentError("initial density must be a column vector");
  if (!(t >= 0)) throw DomainError("time must be nonnegative");
  const Eigen::Index r = Eigen::Index(q.size());
  const Eigen::MatrixXd u = uniformized_exp(q.entries(), t).transpose();
  // The inverse propagator is exp(-Q^T t); uniformization does not apply to
  // a negated generator, so this one path uses scaling-and-squaring.
  const Eigen::MatrixXd u_inv = (-q.entries().transpose() * t).exp();
  Eigen::VectorXd diag(r);
  for (Eigen::Index i = 0; i < r; ++i) diag[i] = x.value(q.states()[std::size_t(i)]);
  const Eigen::MatrixXd evolved_obs = u_inv * diag.asDiagonal() * u;
  return (Eigen::RowVectorXd::Ones(r) * evolved_obs * p0.weights()).value();
}

std::vector<double> grid_master_evolve(const GridKernel& k, const std::vector<double>& p0,
                                       double t) {
  const std::size_t n = k.grid().size();
  if (p0.size() != n) throw DomainError("sample count does not match the grid");
  if (!(t >= 0)) throw DomainError("time must be nonnegative");
  const double dx = k.spacing();
  double mass = 0.0;
  for (double v : p0) mass += v * dx;
  if (std::abs(mass - 1.0) > 1e-10)
    throw DomainError("input samples carry mass " + std::to_string(mass) +
                      ", expected 1");

  // L(i, j) = w(x_i | x_j) dx - delta_ij v(i) with v(i) the total outflow of
  // x_i. Its transpose is a generator, so the evolution reuses
  // uniformization: exp(Lt) = exp(L^T t)^T.
  Eigen::MatrixXd l_transpose(n, n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = std::to_string(i);
    double outflow = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double gain_ji = k.w(k.grid()[j], k.grid()[i]) * dx;
      if (!(gain_ji >= 0.0)) throw DomainError("negative rate density on the grid");
      l_transpose(Eigen::Index(i), Eigen::Index(j)) = gain_ji;
      outflow += gain_ji;
    }
    l_transpose(Eigen::Index(i), Eigen::Index(i)) -= outflow;
  }
  const Generator gen(labels, l_transpose, 1e-9);
  const Eigen::MatrixXd propagator = uniformized_exp(gen.entries(), t).transpose();

  Eigen::VectorXd p = Eigen::Map<const Eigen::VectorXd>(p0.data(), Eigen::Index(n));
  Eigen::VectorXd evolved = propagator * p;
  return std::vector<double>(evolved.data(), evolved.data() + n);
}

}  // namespace pbc
