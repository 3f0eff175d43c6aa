#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pbc {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// An outcome label that does not belong to the space it was used with.
struct LabelError : Error {
  using Error::Error;
};

// Conditioning on evidence with zero probability.
struct ZeroEvidenceError : Error {
  using Error::Error;
};

// Blocks that overlap or fail to cover the sample space.
struct PartitionError : Error {
  using Error::Error;
};

// An observable that is missing a value for some outcome.
struct TotalityError : Error {
  using Error::Error;
};

// State labels of two operands do not line up, or orientations clash.
struct AlignmentError : Error {
  using Error::Error;
};

// A parameter outside its admissible range.
struct DomainError : Error {
  using Error::Error;
};

// Iterative method exhausted its budget. Carries the last iterate.
struct ConvergenceError : Error {
  ConvergenceError(const std::string& msg, std::vector<double> iterate)
      : Error(msg), last_iterate(std::move(iterate)) {}
  std::vector<double> last_iterate;
};

// Quadrature failed to reach tolerance. Carries what it did achieve.
struct IntegrationError : Error {
  IntegrationError(const std::string& msg, double est, double err)
      : Error(msg), estimate(est), error_estimate(err) {}
  double estimate;
  double error_estimate;
};

// Integral estimate kept growing under subdivision.
struct DivergenceError : Error {
  using Error::Error;
};

// An observable that cannot be built (non-numeric labels and the like).
struct ObservableError : Error {
  using Error::Error;
};

// Syntax error in a bracket expression, with position information.
struct ParseError : Error {
  ParseError(const std::string& msg, int line_, int column_)
      : Error(msg), line(line_), column(column_) {}
  int line;
  int column;
};

// Problems loading or resolving names in a model file.
struct ModelError : Error {
  using Error::Error;
};

}  // namespace pbc
