#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "pbc/errors.hpp"
#include "pbc/tolerances.hpp"

namespace pbc {

// An event: a set of outcome labels. Which space the labels belong to is
// checked at the point of use, so one EventSet value can be reused against
// any space that carries those labels.
class EventSet {
 public:
  EventSet() = default;
  EventSet(std::initializer_list<std::string> labels) : members_(labels) {}
  explicit EventSet(std::set<std::string> labels) : members_(std::move(labels)) {}

  const std::set<std::string>& members() const { return members_; }
  bool empty() const { return members_.empty(); }
  bool contains(const std::string& label) const { return members_.count(label) != 0; }

  EventSet unite(const EventSet& other) const;
  EventSet intersect(const EventSet& other) const;
  bool disjoint_from(const EventSet& other) const;
  bool contains_all(const EventSet& other) const;

  bool operator==(const EventSet& other) const { return members_ == other.members_; }

 private:
  std::set<std::string> members_;
};

// A finite sample space: an ordered list of distinct outcome labels together
// with a probability mass for each. Masses are validated at construction
// (nonnegative, summing to 1 within the algebraic tolerance) and then
// renormalized exactly once. Immutable afterwards.
class DiscreteSpace {
 public:
  DiscreteSpace(std::vector<std::string> outcomes, std::vector<double> masses);

  static DiscreteSpace uniform(std::vector<std::string> outcomes);
  static DiscreteSpace fair_die();

  std::size_t size() const { return outcomes_.size(); }
  const std::vector<std::string>& outcomes() const { return outcomes_; }
  const std::vector<double>& masses() const { return masses_; }

  // Index of a label; LabelError if the label is not an outcome.
  std::size_t index_of(const std::string& label) const;
  bool has_outcome(const std::string& label) const;
  double mass(const std::string& label) const { return masses_[index_of(label)]; }

  // The full outcome set as an event.
  EventSet omega() const;
  EventSet complement(const EventSet& e) const;

 private:
  std::vector<std::string> outcomes_;
  std::vector<double> masses_;
  std::map<std::string, std::size_t> index_;
};

// A complete, mutually disjoint family of events covering the space. Only
// constructible through validate_partition.
class Partition {
 public:
  const std::vector<EventSet>& blocks() const { return blocks_; }

 private:
  friend Partition validate_partition(const DiscreteSpace& space,
                                      const std::vector<EventSet>& blocks);
  explicit Partition(std::vector<EventSet> blocks) : blocks_(std::move(blocks)) {}
  std::vector<EventSet> blocks_;
};

// P(E) = sum of member masses. LabelError on unknown labels.
double probability(const DiscreteSpace& space, const EventSet& e);

// The conditional probability P(A|B) = P(A n B) / P(B).
// ZeroEvidenceError when P(B) = 0.
double bracket(const DiscreteSpace& space, const EventSet& a, const EventSet& b);

// P(A|B) computed through P(B|A) P(A) / P(B). Agrees with bracket() wherever
// both are defined. ZeroEvidenceError when P(A) = 0 or P(B) = 0.
double bayes(const DiscreteSpace& space, const EventSet& a, const EventSet& b);

// Checks blocks are pairwise disjoint and cover the space. PartitionError
// naming the offending outcome otherwise.
Partition validate_partition(const DiscreteSpace& space,
                             const std::vector<EventSet>& blocks);

// P(E) assembled through a partition: sum_i P(E|H_i) P(H_i), skipping
// zero-mass blocks.
double total_probability(const DiscreteSpace& space, const EventSet& e,
                         const Partition& part);

// True iff |P(E n F) - P(E) P(F)| is within the algebraic tolerance. Events
// of probability zero are independent of everything.
bool is_independent(const DiscreteSpace& space, const EventSet& e, const EventSet& f);

// The distribution conditioned on E, as a mass per outcome aligned with the
// space's outcome order: m(w)/P(E) for members of E, 0 elsewhere.
// ZeroEvidenceError when P(E) = 0.
std::vector<double> ket_expansion(const DiscreteSpace& space, const EventSet& e);

// The event side of the pairing carries no distribution information: just
// the member labels.
std::set<std::string> bra_expansion(const EventSet& e);

}  // namespace pbc
