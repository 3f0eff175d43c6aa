#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pbc/sample_space.hpp"

namespace pbc {

// A real-valued assignment on outcome labels. Totality with respect to a
// particular space is checked where the observable is used.
class Observable {
 public:
  Observable() = default;
  explicit Observable(std::map<std::string, double> values) : values_(std::move(values)) {}

  // Value for every outcome of `space`, computed by `fn` on the label.
  static Observable from_function(const DiscreteSpace& space,
                                  const std::function<double(const std::string&)>& fn);
  // Value = numeric parse of each outcome label. ObservableError when a
  // label is not a decimal numeral.
  static Observable from_numeric_labels(const DiscreteSpace& space);

  double value(const std::string& label) const;
  bool defined_on(const std::string& label) const { return values_.count(label) != 0; }
  const std::map<std::string, double>& values() const { return values_; }

  // Pointwise algebra over the labels both operands are defined on.
  Observable pointwise(const Observable& other,
                       const std::function<double(double, double)>& op) const;
  Observable map(const std::function<double(double)>& fn) const;

 private:
  std::map<std::string, double> values_;
};

// The joint space of independent factors: outcomes are label tuples joined
// with commas, masses are products of the factor masses.
class ProductSpace {
 public:
  explicit ProductSpace(std::vector<DiscreteSpace> factors);

  static std::string join_labels(const std::vector<std::string>& parts);

  const std::vector<DiscreteSpace>& factors() const { return factors_; }
  const DiscreteSpace& joint() const { return joint_; }
  std::size_t rank() const { return factors_.size(); }

  // Factor labels of joint outcome `j`.
  const std::vector<std::size_t>& tuple(std::size_t j) const { return tuples_[j]; }

  // Numeric value of factor i's label at joint outcome j. ObservableError
  // when that factor's labels did not parse as numerals.
  double coordinate_value(std::size_t j, std::size_t factor) const;

  // Parsed numeric labels of one factor, aligned with its outcome order.
  // ObservableError when the labels are not numerals.
  const std::vector<double>& factor_numeric(std::size_t factor) const;

  // The observable picking out coordinate `factor` on the joint space.
  Observable coordinate_observable(std::size_t factor) const;

 private:
  std::vector<DiscreteSpace> factors_;
  std::vector<std::vector<std::size_t>> tuples_;  // joint index -> factor indices
  std::vector<std::optional<std::vector<double>>> numeric_;  // per factor
  DiscreteSpace joint_;
};

// E(X) = sum x(w) m(w). TotalityError when X misses an outcome.
double expectation(const DiscreteSpace& space, const Observable& x);

// E(f(X)).
double expectation_fn(const DiscreteSpace& space, const std::function<double(double)>& f,
                      const Observable& x);

// Var(X) by the two-pass definitional form sum (x - mean)^2 m, clamped to 0
// when rounding pushes it a hair negative.
double variance(const DiscreteSpace& space, const Observable& x);

// E(X|F) = sum_{w in F} x(w) m(w) / P(F). ZeroEvidenceError when P(F) = 0.
double conditional_expectation(const DiscreteSpace& space, const Observable& x,
                               const EventSet& f);

// sum_j E(X|F_j) P(F_j) over the partition, skipping zero-mass blocks.
// Equals expectation(space, x) for any valid partition.
double partition_expectation(const DiscreteSpace& space, const Observable& x,
                             const Partition& part);

ProductSpace product_space(std::vector<DiscreteSpace> factors);

// Factor i recovered by summing joint masses over the other coordinates.
DiscreteSpace marginal(const ProductSpace& ps, std::size_t i);

// E[prod_i X_i^{k_i}] for the coordinate observables, computed as the
// product of per-factor moments (the factors are independent by
// construction). ObservableError when a needed factor has non-numeric labels.
double moment_product(const ProductSpace& ps, const std::vector<unsigned>& exponents);

}  // namespace pbc
