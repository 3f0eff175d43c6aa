#include "pbc/sample_space.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace pbc {

namespace {

double env_or(const char* name, double fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  double parsed = std::strtod(v, &end);
  if (end == v || !std::isfinite(parsed) || parsed <= 0) return fallback;
  return parsed;
}

}  // namespace

const Tolerances& Tolerances::active() {
  static const Tolerances t{env_or("PBC_TOL_ALGEBRAIC", Tolerances{}.algebraic),
                            env_or("PBC_TOL_INSERTION", Tolerances{}.insertion)};
  return t;
}

EventSet EventSet::unite(const EventSet& other) const {
  std::set<std::string> out = members_;
  out.insert(other.members_.begin(), other.members_.end());
  return EventSet(std::move(out));
}

EventSet EventSet::intersect(const EventSet& other) const {
  std::set<std::string> out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::inserter(out, out.begin()));
  return EventSet(std::move(out));
}

bool EventSet::disjoint_from(const EventSet& other) const {
  return intersect(other).empty();
}

bool EventSet::contains_all(const EventSet& other) const {
  return std::includes(members_.begin(), members_.end(), other.members_.begin(),
                       other.members_.end());
}

DiscreteSpace::DiscreteSpace(std::vector<std::string> outcomes, std::vector<double> masses)
    : outcomes_(std::move(outcomes)), masses_(std::move(masses)) {
  if (outcomes_.empty()) throw DomainError("sample space needs at least one outcome");
  if (outcomes_.size() != masses_.size())
    throw DomainError("outcome and mass counts differ");
  for (std::size_t i = 0; i < outcomes_.size(); ++i) {
    if (!index_.emplace(outcomes_[i], i).second)
      throw LabelError("duplicate outcome label '" + outcomes_[i] + "'");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < masses_.size(); ++i) {
    if (!(masses_[i] >= 0.0))
      throw DomainError("negative mass for outcome '" + outcomes_[i] + "'");
    total += masses_[i];
  }
  if (std::abs(total - 1.0) > Tolerances::active().algebraic)
    throw DomainError("masses sum to " + std::to_string(total) + ", expected 1");
  // Renormalize once so downstream compositions see an exact unit sum.
  for (double& m : masses_) m /= total;
}

DiscreteSpace DiscreteSpace::uniform(std::vector<std::string> outcomes) {
  std::vector<double> masses(outcomes.size(), 1.0 / double(outcomes.size()));
  return DiscreteSpace(std::move(outcomes), std::move(masses));
}

DiscreteSpace DiscreteSpace::fair_die() {
  return uniform({"1", "2", "3", "4", "5", "6"});
}

std::size_t DiscreteSpace::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw LabelError("unknown outcome label '" + label + "'");
  return it->second;
}

bool DiscreteSpace::has_outcome(const std::string& label) const {
  return index_.count(label) != 0;
}

EventSet DiscreteSpace::omega() const {
  return EventSet(std::set<std::string>(outcomes_.begin(), outcomes_.end()));
}

EventSet DiscreteSpace::complement(const EventSet& e) const {
  std::set<std::string> out;
  for (const auto& label : outcomes_)
    if (!e.contains(label)) out.insert(label);
  for (const auto& label : e.members()) index_of(label);  // validate
  return EventSet(std::move(out));
}

double probability(const DiscreteSpace& space, const EventSet& e) {
  double p = 0.0;
  for (const auto& label : e.members()) p += space.masses()[space.index_of(label)];
  return p;
}

double bracket(const DiscreteSpace& space, const EventSet& a, const EventSet& b) {
  const double pb = probability(space, b);
  if (pb == 0.0) throw ZeroEvidenceError("conditioning on zero-probability evidence");
  return probability(space, a.intersect(b)) / pb;
}

double bayes(const DiscreteSpace& space, const EventSet& a, const EventSet& b) {
  const double pa = probability(space, a);
  const double pb = probability(space, b);
  if (pa == 0.0 || pb == 0.0)
    throw ZeroEvidenceError("Bayes inversion needs both events to have positive probability");
  const double b_given_a = probability(space, b.intersect(a)) / pa;
  return b_given_a * pa / pb;
}

Partition validate_partition(const DiscreteSpace& space,
                             const std::vector<EventSet>& blocks) {
  std::set<std::string> seen;
  for (const auto& block : blocks) {
    for (const auto& label : block.members()) {
      space.index_of(label);
      if (!seen.insert(label).second)
        throw PartitionError("blocks overlap on outcome '" + label + "'");
    }
  }
  for (const auto& label : space.outcomes()) {
    if (!seen.count(label))
      throw PartitionError("blocks do not cover outcome '" + label + "'");
  }
  return Partition(blocks);
}

double total_probability(const DiscreteSpace& space, const EventSet& e,
                         const Partition& part) {
  double total = 0.0;
  for (const auto& h : part.blocks()) {
    const double ph = probability(space, h);
    if (ph == 0.0) continue;
    total += bracket(space, e, h) * ph;
  }
  return total;
}

bool is_independent(const DiscreteSpace& space, const EventSet& e, const EventSet& f) {
  const double joint = probability(space, e.intersect(f));
  const double product = probability(space, e) * probability(space, f);
  return std::abs(joint - product) <= Tolerances::active().algebraic;
}

std::vector<double> ket_expansion(const DiscreteSpace& space, const EventSet& e) {
  const double pe = probability(space, e);
  if (pe == 0.0) throw ZeroEvidenceError("cannot expand on zero-probability evidence");
  std::vector<double> out(space.size(), 0.0);
  for (const auto& label : e.members()) {
    const std::size_t i = space.index_of(label);
    out[i] = space.masses()[i] / pe;
  }
  return out;
}

std::set<std::string> bra_expansion(const EventSet& e) { return e.members(); }

}  // namespace pbc
