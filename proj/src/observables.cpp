#include "pbc/observables.hpp"

#include <cmath>
#include <cstdlib>

namespace pbc {

namespace {

std::optional<double> parse_numeral(const std::string& s) {
  if (s.empty()) return std::nullopt;
  const char* begin = s.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end != begin + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

}  // namespace

Observable Observable::from_function(const DiscreteSpace& space,
                                     const std::function<double(const std::string&)>& fn) {
  std::map<std::string, double> values;
  for (const auto& label : space.outcomes()) values[label] = fn(label);
  return Observable(std::move(values));
}

Observable Observable::from_numeric_labels(const DiscreteSpace& space) {
  std::map<std::string, double> values;
  for (const auto& label : space.outcomes()) {
    auto v = parse_numeral(label);
    if (!v) throw ObservableError("outcome label '" + label + "' is not numeric");
    values[label] = *v;
  }
  return Observable(std::move(values));
}

double Observable::value(const std::string& label) const {
  auto it = values_.find(label);
  if (it == values_.end())
    throw TotalityError("observable has no value for outcome '" + label + "'");
  return it->second;
}

Observable Observable::pointwise(const Observable& other,
                                 const std::function<double(double, double)>& op) const {
  std::map<std::string, double> values;
  for (const auto& [label, v] : values_) {
    auto it = other.values_.find(label);
    if (it != other.values_.end()) values[label] = op(v, it->second);
  }
  return Observable(std::move(values));
}

Observable Observable::map(const std::function<double(double)>& fn) const {
  std::map<std::string, double> values;
  for (const auto& [label, v] : values_) values[label] = fn(v);
  return Observable(std::move(values));
}

namespace {

DiscreteSpace build_joint(const std::vector<DiscreteSpace>& factors,
                          std::vector<std::vector<std::size_t>>& tuples) {
  if (factors.empty()) throw DomainError("product space needs at least one factor");
  std::size_t count = 1;
  for (const auto& f : factors) count *= f.size();
  std::vector<std::string> outcomes;
  std::vector<double> masses;
  outcomes.reserve(count);
  masses.reserve(count);
  std::vector<std::size_t> idx(factors.size(), 0);
  for (std::size_t n = 0; n < count; ++n) {
    std::vector<std::string> parts;
    double mass = 1.0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      parts.push_back(factors[i].outcomes()[idx[i]]);
      mass *= factors[i].masses()[idx[i]];
    }
    outcomes.push_back(ProductSpace::join_labels(parts));
    masses.push_back(mass);
    tuples.push_back(idx);
    for (std::size_t i = factors.size(); i-- > 0;) {
      if (++idx[i] < factors[i].size()) break;
      idx[i] = 0;
    }
  }
  return DiscreteSpace(std::move(outcomes), std::move(masses));
}

}  // namespace

std::string ProductSpace::join_labels(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  return out;
}

ProductSpace::ProductSpace(std::vector<DiscreteSpace> factors)
    : factors_(std::move(factors)), joint_(build_joint(factors_, tuples_)) {
  numeric_.reserve(factors_.size());
  for (const auto& f : factors_) {
    std::vector<double> parsed;
    bool all_numeric = true;
    for (const auto& label : f.outcomes()) {
      auto v = parse_numeral(label);
      if (!v) {
        all_numeric = false;
        break;
      }
      parsed.push_back(*v);
    }
    if (all_numeric)
      numeric_.emplace_back(std::move(parsed));
    else
      numeric_.emplace_back(std::nullopt);
  }
}

double ProductSpace::coordinate_value(std::size_t j, std::size_t factor) const {
  return factor_numeric(factor)[tuples_[j][factor]];
}

const std::vector<double>& ProductSpace::factor_numeric(std::size_t factor) const {
  if (factor >= factors_.size()) throw DomainError("factor index out of range");
  if (!numeric_[factor])
    throw ObservableError("factor " + std::to_string(factor) +
                          " has non-numeric outcome labels");
  return *numeric_[factor];
}

Observable ProductSpace::coordinate_observable(std::size_t factor) const {
  std::map<std::string, double> values;
  for (std::size_t j = 0; j < joint_.size(); ++j)
    values[joint_.outcomes()[j]] = coordinate_value(j, factor);
  return Observable(std::move(values));
}

double expectation(const DiscreteSpace& space, const Observable& x) {
  double total = 0.0;
  for (std::size_t i = 0; i < space.size(); ++i)
    total += x.value(space.outcomes()[i]) * space.masses()[i];
  return total;
}

double expectation_fn(const DiscreteSpace& space, const std::function<double(double)>& f,
                      const Observable& x) {
  double total = 0.0;
  for (std::size_t i = 0; i < space.size(); ++i)
    total += f(x.value(space.outcomes()[i])) * space.masses()[i];
  return total;
}

double variance(const DiscreteSpace& space, const Observable& x) {
  const double mean = expectation(space, x);
  double total = 0.0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    const double d = x.value(space.outcomes()[i]) - mean;
    total += d * d * space.masses()[i];
  }
  if (total < 0.0) {
    if (total < -Tolerances::active().algebraic)
      throw DomainError("variance came out negative beyond tolerance");
    total = 0.0;
  }
  return total;
}

double conditional_expectation(const DiscreteSpace& space, const Observable& x,
                               const EventSet& f) {
  const double pf = probability(space, f);
  if (pf == 0.0) throw ZeroEvidenceError("conditional expectation on zero-probability event");
  double total = 0.0;
  for (const auto& label : f.members())
    total += x.value(label) * space.masses()[space.index_of(label)];
  return total / pf;
}

double partition_expectation(const DiscreteSpace& space, const Observable& x,
                             const Partition& part) {
  double total = 0.0;
  for (const auto& block : part.blocks()) {
    const double pb = probability(space, block);
    if (pb == 0.0) continue;
    total += conditional_expectation(space, x, block) * pb;
  }
  return total;
}

ProductSpace product_space(std::vector<DiscreteSpace> factors) {
  return ProductSpace(std::move(factors));
}

DiscreteSpace marginal(const ProductSpace& ps, std::size_t i) {
  if (i >= ps.rank()) throw DomainError("factor index out of range");
  const DiscreteSpace& factor = ps.factors()[i];
  std::vector<double> masses(factor.size(), 0.0);
  for (std::size_t j = 0; j < ps.joint().size(); ++j)
    masses[ps.tuple(j)[i]] += ps.joint().masses()[j];
  return DiscreteSpace(factor.outcomes(), std::move(masses));
}

double moment_product(const ProductSpace& ps, const std::vector<unsigned>& exponents) {
  if (exponents.size() != ps.rank())
    throw DomainError("need one exponent per factor");
  double result = 1.0;
  for (std::size_t i = 0; i < ps.rank(); ++i) {
    if (exponents[i] == 0) continue;
    const DiscreteSpace& f = ps.factors()[i];
    const std::vector<double>& xs = ps.factor_numeric(i);
    double moment = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k)
      moment += std::pow(xs[k], double(exponents[i])) * f.masses()[k];
    result *= moment;
  }
  return result;
}

}  // namespace pbc
