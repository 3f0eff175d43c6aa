#include "pbc/continuous.hpp"

#include <algorithm>
#include <cmath>

#include "pbc/errors.hpp"

namespace pbc {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Evidence below this is treated as zero for conditioning purposes.
double zero_evidence_threshold(const QuadratureConfig& quad) {
  return 100.0 * quad.abs_tol;
}

// Budget for the inner sweep of an iterated 2-D integral. A fine initial
// grid keeps thin slices (a chord near the edge of a disc) from slipping
// between the nodes of a single panel.
QuadratureConfig inner_config(const QuadratureConfig& outer) {
  QuadratureConfig c;
  c.abs_tol = outer.abs_tol * 0.1;
  c.rel_tol = outer.rel_tol * 0.1;
  c.initial_cells = 64;
  c.max_subdivisions = 4096;
  return c;
}

struct Interval {
  double lo, hi;
  bool empty() const { return !(lo < hi); }
};

Interval clip(double a_lo, double a_hi, double b_lo, double b_hi) {
  return Interval{std::max(a_lo, b_lo), std::min(a_hi, b_hi)};
}

// Divergence heuristic: the budget ran out and the running estimate was
// still growing from checkpoint to checkpoint.
bool looks_divergent(const QuadratureResult& r) {
  if (r.converged || r.checkpoints.size() < 3) return false;
  const std::size_t n = r.checkpoints.size();
  const double early = std::abs(r.checkpoints[n / 2]);
  const double late = std::abs(r.checkpoints[n - 1]);
  return late > 1.2 * early + 1.0;
}

double integrate_iterated(const Density2D& d, const Region2D& r,
                          const QuadratureConfig& quad) {
  const Region2D sup = d.support();
  const Interval xs = clip(sup.x_lo, sup.x_hi, r.x_lo, r.x_hi);
  const Interval ys = clip(sup.y_lo, sup.y_hi, r.y_lo, r.y_hi);
  if (xs.empty() || ys.empty()) return 0.0;
  const QuadratureConfig inner = inner_config(quad);
  auto slice = [&](double x) {
    auto f = [&, x](double y) { return r.contains(x, y) ? d.pdf(x, y) : 0.0; };
    return integrate_adaptive(f, ys.lo, ys.hi, inner).value;
  };
  QuadratureConfig outer = quad;
  outer.initial_cells = std::max(outer.initial_cells, 32);
  QuadratureResult res = integrate_adaptive(slice, xs.lo, xs.hi, outer);
  if (!res.converged)
    throw IntegrationError("2-D quadrature did not reach tolerance", res.value,
                           res.error_estimate);
  return res.value;
}

}  // namespace

Region1D Region1D::interval(double a, double b) {
  return Region1D{[a, b](double x) { return x >= a && x <= b; }, a, b};
}

Region1D Region1D::everything() {
  return Region1D{[](double) { return true; }, -kInf, kInf};
}

Region1D Region1D::intersect(const Region1D& other) const {
  auto ia = indicator, ib = other.indicator;
  return Region1D{[ia, ib](double x) { return ia(x) && ib(x); },
                  std::max(lo, other.lo), std::min(hi, other.hi)};
}

Region1D Region1D::unite(const Region1D& other) const {
  auto ia = indicator, ib = other.indicator;
  auto a = *this, b = other;
  return Region1D{[a, b](double x) { return a.contains(x) || b.contains(x); },
                  std::min(lo, other.lo), std::max(hi, other.hi)};
}

Region1D Region1D::complement_within(double universe_lo, double universe_hi) const {
  auto self = *this;
  return Region1D{[self](double x) { return !self.contains(x); }, universe_lo,
                  universe_hi};
}

Region2D Region2D::rect(double x_lo, double x_hi, double y_lo, double y_hi) {
  return Region2D{[](double, double) { return true; }, x_lo, x_hi, y_lo, y_hi};
}

Region2D Region2D::disc(double cx, double cy, double r) {
  if (r <= 0) throw DomainError("disc radius must be positive");
  return Region2D{[cx, cy, r](double x, double y) {
                    const double dx = x - cx, dy = y - cy;
                    return dx * dx + dy * dy <= r * r;
                  },
                  cx - r, cx + r, cy - r, cy + r};
}

Region2D Region2D::halfplane_above(int axis, double c) {
  if (axis == 0)
    return Region2D{[c](double x, double) { return x > c; }, c, kInf, -kInf, kInf};
  return Region2D{[c](double, double y) { return y > c; }, -kInf, kInf, c, kInf};
}

Region2D Region2D::halfplane_below(int axis, double c) {
  if (axis == 0)
    return Region2D{[c](double x, double) { return x < c; }, -kInf, c, -kInf, kInf};
  return Region2D{[c](double, double y) { return y < c; }, -kInf, kInf, -kInf, c};
}

Region2D Region2D::everything() {
  return Region2D{[](double, double) { return true; }, -kInf, kInf, -kInf, kInf};
}

Region2D Region2D::intersect(const Region2D& other) const {
  auto ia = indicator, ib = other.indicator;
  return Region2D{[ia, ib](double x, double y) { return ia(x, y) && ib(x, y); },
                  std::max(x_lo, other.x_lo), std::min(x_hi, other.x_hi),
                  std::max(y_lo, other.y_lo), std::min(y_hi, other.y_hi)};
}

Region2D Region2D::unite(const Region2D& other) const {
  auto a = *this, b = other;
  return Region2D{[a, b](double x, double y) { return a.contains(x, y) || b.contains(x, y); },
                  std::min(x_lo, other.x_lo), std::max(x_hi, other.x_hi),
                  std::min(y_lo, other.y_lo), std::max(y_hi, other.y_hi)};
}

Region2D Region2D::complement_within(const Region2D& universe) const {
  auto self = *this;
  auto u = universe;
  return Region2D{[self, u](double x, double y) { return u.contains(x, y) && !self.contains(x, y); },
                  universe.x_lo, universe.x_hi, universe.y_lo, universe.y_hi};
}

Density1D::Density1D(double lo, double hi, std::function<double(double)> pdf,
                     QuadratureConfig quad)
    : lo_(lo), hi_(hi), pdf_(std::move(pdf)), quad_(quad) {
  if (!(lo_ < hi_)) throw DomainError("density support is empty");
  auto raw = pdf_;
  auto checked = [raw](double x) {
    const double v = raw(x);
    if (v < -1e-12)
      throw DomainError("pdf negative at x = " + std::to_string(x));
    return v;
  };
  QuadratureResult norm = integrate_adaptive(checked, lo_, hi_, quad_);
  if (!norm.converged)
    throw IntegrationError("density normalization integral did not converge", norm.value,
                           norm.error_estimate);
  if (std::abs(norm.value - 1.0) > std::max(quad_.abs_tol, quad_.rel_tol) * 100.0)
    throw DomainError("density integrates to " + std::to_string(norm.value) +
                      ", expected 1");
}

double Density1D::pdf(double x) const {
  if (x < lo_ || x > hi_) return 0.0;
  return pdf_(x);
}

Region1D Density1D::support() const { return Region1D::interval(lo_, hi_); }

Density2D::Density2D(double x_lo, double x_hi, double y_lo, double y_hi,
                     std::function<bool(double, double)> support_indicator,
                     std::function<double(double, double)> pdf, QuadratureConfig quad)
    : x_lo_(x_lo),
      x_hi_(x_hi),
      y_lo_(y_lo),
      y_hi_(y_hi),
      support_(std::move(support_indicator)),
      pdf_(std::move(pdf)),
      quad_(quad) {
  if (!(x_lo_ < x_hi_) || !(y_lo_ < y_hi_)) throw DomainError("density support is empty");
  if (!support_) support_ = [](double, double) { return true; };
  auto raw = pdf_;
  auto sup = support_;
  auto checked = [raw, sup](double x, double y) {
    if (!sup(x, y)) return 0.0;
    const double v = raw(x, y);
    if (v < -1e-12)
      throw DomainError("pdf negative at (" + std::to_string(x) + ", " +
                        std::to_string(y) + ")");
    return v;
  };
  const QuadratureConfig inner = inner_config(quad_);
  auto slice = [&](double x) {
    auto f = [&, x](double y) { return checked(x, y); };
    return integrate_adaptive(f, y_lo_, y_hi_, inner).value;
  };
  QuadratureConfig outer = quad_;
  outer.initial_cells = std::max(outer.initial_cells, 32);
  QuadratureResult norm = integrate_adaptive(slice, x_lo_, x_hi_, outer);
  if (!norm.converged)
    throw IntegrationError("density normalization integral did not converge", norm.value,
                           norm.error_estimate);
  if (std::abs(norm.value - 1.0) > std::max(quad_.abs_tol, quad_.rel_tol) * 100.0)
    throw DomainError("density integrates to " + std::to_string(norm.value) +
                      ", expected 1");
}

double Density2D::pdf(double x, double y) const {
  if (x < x_lo_ || x > x_hi_ || y < y_lo_ || y > y_hi_ || !support_(x, y)) return 0.0;
  return pdf_(x, y);
}

Region2D Density2D::support() const {
  auto sup = support_;
  return Region2D{[sup](double x, double y) { return sup(x, y); }, x_lo_, x_hi_, y_lo_,
                  y_hi_};
}

Density1D make_exponential(double lambda) {
  if (!(lambda > 0)) throw DomainError("exponential rate must be positive");
  return Density1D(0.0, kInf, [lambda](double t) { return lambda * std::exp(-lambda * t); });
}

Density1D make_normal(double mu, double sigma2) {
  if (!(sigma2 > 0)) throw DomainError("normal variance must be positive");
  const double inv = 1.0 / std::sqrt(2.0 * kPi * sigma2);
  return Density1D(-kInf, kInf, [mu, sigma2, inv](double x) {
    const double d = x - mu;
    return inv * std::exp(-d * d / (2.0 * sigma2));
  });
}

Density2D make_uniform_disc() {
  return Density2D(
      -1.0, 1.0, -1.0, 1.0,
      [](double x, double y) { return x * x + y * y <= 1.0; },
      [](double, double) { return 1.0 / kPi; });
}

double region_probability(const Density1D& d, const Region1D& r) {
  const Interval xs = clip(d.lo(), d.hi(), r.lo, r.hi);
  if (xs.empty()) return 0.0;
  auto f = [&](double x) { return r.contains(x) ? d.pdf(x) : 0.0; };
  QuadratureResult res = integrate_adaptive(f, xs.lo, xs.hi, d.quad());
  if (!res.converged)
    throw IntegrationError("region probability did not reach tolerance", res.value,
                           res.error_estimate);
  return res.value;
}

double region_probability(const Density2D& d, const Region2D& r) {
  return integrate_iterated(d, r, d.quad());
}

double conditional_density(const Density1D& d, const Region1D& e, double x) {
  const double pe = region_probability(d, e);
  if (pe <= zero_evidence_threshold(d.quad()))
    throw ZeroEvidenceError("conditioning on a region of zero probability");
  return e.contains(x) ? d.pdf(x) / pe : 0.0;
}

double conditional_density(const Density2D& d, const Region2D& e, double x, double y) {
  const double pe = region_probability(d, e);
  if (pe <= zero_evidence_threshold(d.quad()))
    throw ZeroEvidenceError("conditioning on a region of zero probability");
  return e.contains(x, y) ? d.pdf(x, y) / pe : 0.0;
}

double conditional_probability(const Density1D& d, const Region1D& f, const Region1D& e) {
  const double pe = region_probability(d, e);
  if (pe <= zero_evidence_threshold(d.quad()))
    throw ZeroEvidenceError("conditioning on a region of zero probability");
  return region_probability(d, f.intersect(e)) / pe;
}

double conditional_probability(const Density2D& d, const Region2D& f, const Region2D& e) {
  const double pe = region_probability(d, e);
  if (pe <= zero_evidence_threshold(d.quad()))
    throw ZeroEvidenceError("conditioning on a region of zero probability");
  return region_probability(d, f.intersect(e)) / pe;
}

double cexpectation(const Density1D& d, const std::function<double(double)>& g) {
  auto abs_f = [&](double x) { return std::abs(g(x)) * d.pdf(x); };
  QuadratureResult gate = integrate_adaptive(abs_f, d.lo(), d.hi(), d.quad());
  if (!gate.converged) {
    if (looks_divergent(gate))
      throw DivergenceError("expectation integral does not converge absolutely");
    throw IntegrationError("expectation integral did not reach tolerance", gate.value,
                           gate.error_estimate);
  }
  auto f = [&](double x) { return g(x) * d.pdf(x); };
  return integrate_or_throw(f, d.lo(), d.hi(), d.quad());
}

double cexpectation(const Density2D& d, const std::function<double(double, double)>& g) {
  const Region2D sup = d.support();
  const QuadratureConfig inner = inner_config(d.quad());
  auto make_slice = [&](bool absolute) {
    return [&, absolute](double x) {
      auto f = [&, x, absolute](double y) {
        const double v = g(x, y) * d.pdf(x, y);
        return absolute ? std::abs(v) : v;
      };
      return integrate_adaptive(f, sup.y_lo, sup.y_hi, inner).value;
    };
  };
  QuadratureConfig outer = d.quad();
  outer.initial_cells = std::max(outer.initial_cells, 32);
  QuadratureResult gate =
      integrate_adaptive(make_slice(true), sup.x_lo, sup.x_hi, outer);
  if (!gate.converged) {
    if (looks_divergent(gate))
      throw DivergenceError("expectation integral does not converge absolutely");
    throw IntegrationError("expectation integral did not reach tolerance", gate.value,
                           gate.error_estimate);
  }
  QuadratureResult res = integrate_adaptive(make_slice(false), sup.x_lo, sup.x_hi, outer);
  if (!res.converged)
    throw IntegrationError("expectation integral did not reach tolerance", res.value,
                           res.error_estimate);
  return res.value;
}

IdealGasStats ideal_gas_stats(double beta, double mass, double volume, double action_h,
                              double n_count) {
  if (!(beta > 0) || !(mass > 0) || !(volume > 0) || !(action_h > 0) || !(n_count > 0))
    throw DomainError("ideal gas parameters must all be positive");
  const double z_closed =
      volume * std::pow(2.0 * kPi * mass / (action_h * action_h * beta), 1.5);
  // Radial integral over momentum magnitude, nondimensionalized by the
  // thermal momentum scale so the quadrature sees a unit-width feature.
  const double scale = std::sqrt(2.0 * mass / beta);
  auto radial = [](double q) { return q * q * std::exp(-q * q); };
  const double shell = integrate_or_throw(radial, 0.0, kInf);
  const double z_quad =
      volume / std::pow(action_h, 3.0) * 4.0 * kPi * std::pow(scale, 3.0) * shell;
  const double mean = 1.5 / beta;
  return IdealGasStats{z_closed, z_quad, mean, n_count * mean};
}

}  // namespace pbc
