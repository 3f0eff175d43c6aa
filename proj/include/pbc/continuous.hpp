#pragma once

#include <functional>
#include <string>

#include "pbc/quadrature.hpp"

namespace pbc {

// A measurable subset of the line: an indicator plus the interval that
// bounds it. Either bound may be infinite.
struct Region1D {
  std::function<bool(double)> indicator;
  double lo = -kInf;
  double hi = kInf;

  static Region1D interval(double a, double b);
  static Region1D everything();

  bool contains(double x) const { return x >= lo && x <= hi && indicator(x); }
  Region1D intersect(const Region1D& other) const;
  Region1D unite(const Region1D& other) const;
  Region1D complement_within(double universe_lo, double universe_hi) const;
};

// A subset of the plane: indicator plus bounding rectangle.
struct Region2D {
  std::function<bool(double, double)> indicator;
  double x_lo = -kInf, x_hi = kInf;
  double y_lo = -kInf, y_hi = kInf;

  static Region2D rect(double x_lo, double x_hi, double y_lo, double y_hi);
  static Region2D disc(double cx, double cy, double r);
  // Points with coordinate `axis` (0 = x, 1 = y) strictly greater than c.
  static Region2D halfplane_above(int axis, double c);
  static Region2D halfplane_below(int axis, double c);
  static Region2D everything();

  bool contains(double x, double y) const {
    return x >= x_lo && x <= x_hi && y >= y_lo && y <= y_hi && indicator(x, y);
  }
  Region2D intersect(const Region2D& other) const;
  Region2D unite(const Region2D& other) const;
  Region2D complement_within(const Region2D& universe) const;
};

// A continuous distribution on an interval. The density is validated at
// construction: nonnegative at every quadrature node visited and integrating
// to 1 within the configured tolerance. Immutable afterwards; the pdf
// callable must be pure.
class Density1D {
 public:
  Density1D(double lo, double hi, std::function<double(double)> pdf,
            QuadratureConfig quad = {});

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  const QuadratureConfig& quad() const { return quad_; }
  // 0 outside the support.
  double pdf(double x) const;
  Region1D support() const;

 private:
  double lo_, hi_;
  std::function<double(double)> pdf_;
  QuadratureConfig quad_;
};

// A continuous distribution on a rectangle, optionally cut down by a support
// indicator (a disc, say). Integration is iterated: adaptive in y inside
// adaptive in x.
class Density2D {
 public:
  Density2D(double x_lo, double x_hi, double y_lo, double y_hi,
            std::function<bool(double, double)> support_indicator,
            std::function<double(double, double)> pdf, QuadratureConfig quad = {});

  const QuadratureConfig& quad() const { return quad_; }
  double pdf(double x, double y) const;
  Region2D support() const;

 private:
  double x_lo_, x_hi_, y_lo_, y_hi_;
  std::function<bool(double, double)> support_;
  std::function<double(double, double)> pdf_;
  QuadratureConfig quad_;
};

// Built-in named densities, addressable from model files.
Density1D make_exponential(double lambda);
Density1D make_normal(double mu, double sigma2);
Density2D make_uniform_disc();

// P(R) = integral of the pdf over R. Zero when R misses the support.
double region_probability(const Density1D& d, const Region1D& r);
double region_probability(const Density2D& d, const Region2D& r);

// The density conditioned on E, evaluated at a point: pdf(x)/P(E) inside E,
// 0 outside. ZeroEvidenceError when P(E) vanishes within tolerance.
double conditional_density(const Density1D& d, const Region1D& e, double x);
double conditional_density(const Density2D& d, const Region2D& e, double x, double y);

// P(F|E) = P(E n F)/P(E).
double conditional_probability(const Density1D& d, const Region1D& f, const Region1D& e);
double conditional_probability(const Density2D& d, const Region2D& f, const Region2D& e);

// E[g] = integral of g * pdf, gated on absolute convergence of |g| * pdf.
// DivergenceError when the estimate keeps growing under subdivision,
// IntegrationError when it merely fails to reach tolerance.
double cexpectation(const Density1D& d, const std::function<double(double)>& g);
double cexpectation(const Density2D& d, const std::function<double(double, double)>& g);

// Single-particle partition function and energy for a classical ideal gas:
// z in closed form and by radial quadrature over momentum magnitude, plus
// the per-particle and total mean energies.
struct IdealGasStats {
  double z;
  double z_quadrature;
  double mean_energy;
  double total_energy;
};
IdealGasStats ideal_gas_stats(double beta, double mass, double volume, double action_h,
                              double n_count);

}  // namespace pbc
