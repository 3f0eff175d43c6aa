#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace pbc::dsl {

// Event expressions: named atoms combined with union, intersection and
// complement.
struct EventExpr;
using EventExprPtr = std::shared_ptr<const EventExpr>;

struct EventExpr {
  enum class Kind { Atom, Union, Intersect, Complement };
  Kind kind;
  std::string name;        // Atom
  EventExprPtr lhs, rhs;   // children (Complement uses lhs only)

  static EventExprPtr atom(std::string n);
  static EventExprPtr unite(EventExprPtr l, EventExprPtr r);
  static EventExprPtr intersect(EventExprPtr l, EventExprPtr r);
  static EventExprPtr complement(EventExprPtr c);
};

// Observable expressions: names, literals, products and sums.
struct ObsExpr;
using ObsExprPtr = std::shared_ptr<const ObsExpr>;

struct ObsExpr {
  enum class Kind { Name, Number, Mul, Add };
  Kind kind;
  std::string name;      // Name
  double number = 0.0;   // Number
  ObsExprPtr lhs, rhs;

  static ObsExprPtr make_name(std::string n);
  static ObsExprPtr make_number(double v);
  static ObsExprPtr mul(ObsExprPtr l, ObsExprPtr r);
  static ObsExprPtr add(ObsExprPtr l, ObsExprPtr r);
};

// The two distinguished ends of a bracket: the whole sample space, possibly
// evolved to a time.
struct Omega {};
struct OmegaT {
  double t;
};

using BracketLhs = std::variant<Omega, EventExprPtr>;
using BracketRhs = std::variant<Omega, OmegaT, EventExprPtr>;

// P(lhs | mid | ... | rhs). Mids are observable names and require Omega-type
// ends on both sides.
struct BracketNode {
  BracketLhs lhs;
  std::vector<std::string> mids;
  BracketRhs rhs;
};

// E[obs] with an optional conditioning event: E[obs] | event.
struct ExpectNode {
  ObsExprPtr obs;
  EventExprPtr given;  // null when absent
};

// Var[obs].
struct VarNode {
  ObsExprPtr obs;
};

using BracketExpr = std::variant<BracketNode, ExpectNode, VarNode>;

// Canonical ASCII rendering; parses back to a structurally identical tree.
std::string print(const BracketExpr& e);

bool structurally_equal(const BracketExpr& a, const BracketExpr& b);

}  // namespace pbc::dsl
