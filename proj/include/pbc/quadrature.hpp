#pragma once

#include <functional>
#include <limits>
#include <vector>

namespace pbc {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_subdivisions = 1 << 16;
  // The interval is pre-split into this many cells before refinement starts,
  // so narrow features cannot hide between the nodes of a single panel.
  int initial_cells = 16;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
  bool converged = false;
  // Running value recorded at eight evenly spaced points of the subdivision
  // budget; used by callers to tell divergence from slow convergence.
  std::vector<double> checkpoints;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Globally adaptive Gauss-Kronrod 7/15 on [lo, hi]. Either endpoint may be
// infinite; semi-infinite and doubly infinite ranges are folded onto a finite
// interval with the rational substitutions u/(1-u) and u/(1-u^2).
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo,
                                    double hi, const QuadratureConfig& cfg = {});

// Convenience wrapper that throws IntegrationError when not converged.
double integrate_or_throw(const std::function<double(double)>& f, double lo, double hi,
                          const QuadratureConfig& cfg = {});

}  // namespace pbc
