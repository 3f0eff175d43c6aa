#include "pbc/processes.hpp"

#include <cmath>

#include "pbc/errors.hpp"
#include "pbc/quadrature.hpp"

namespace pbc {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

double normal_density(double x, double mean, double var) {
  const double d = x - mean;
  return std::exp(-d * d / (2.0 * var)) / std::sqrt(kTwoPi * var);
}

void check_positive_rate(double lambda) {
  if (!(lambda > 0)) throw DomainError("rate must be positive");
}

void check_positive_scale(double sigma) {
  if (!(sigma > 0)) throw DomainError("scale must be positive");
}

double start_value(const AnyProcess& proc) {
  if (const auto* b = std::get_if<BrownianMotion>(&proc)) return b->x0;
  return 0.0;
}

double step(const AnyProcess& proc, double dt, Rng& rng) {
  struct Visitor {
    double dt;
    Rng& rng;
    double operator()(const PoissonProcess& p) const {
      check_positive_rate(p.lambda);
      if (dt == 0.0) return 0.0;
      return double(rng.poisson(p.lambda * dt));
    }
    double operator()(const WienerProcess& w) const {
      check_positive_scale(w.sigma);
      if (dt == 0.0) return 0.0;
      return w.sigma * std::sqrt(dt) * rng.normal();
    }
    double operator()(const BrownianMotion& b) const {
      check_positive_scale(b.sigma);
      if (dt == 0.0) return 0.0;
      return b.mu * dt + b.sigma * std::sqrt(dt) * rng.normal();
    }
  };
  return std::visit(Visitor{dt, rng}, proc);
}

}  // namespace

double poisson_pmf(const PoissonProcess& p, unsigned k, double t) {
  check_positive_rate(p.lambda);
  if (!(t > 0)) throw DomainError("time must be positive");
  const double m = p.lambda * t;
  return std::exp(double(k) * std::log(m) - m - std::lgamma(double(k) + 1.0));
}

double poisson_transition(const PoissonProcess& p, unsigned i, unsigned j, double t) {
  if (j < i) return 0.0;
  return poisson_pmf(p, j - i, t);
}

double wiener_density(const WienerProcess& w, double x, double t) {
  check_positive_scale(w.sigma);
  if (!(t > 0)) throw DomainError("time must be positive");
  return normal_density(x, 0.0, t * w.sigma * w.sigma);
}

double brownian_density(const BrownianMotion& b, double y, double t) {
  check_positive_scale(b.sigma);
  if (!(t > 0)) throw DomainError("time must be positive");
  return normal_density(y, b.mu * t, t * b.sigma * b.sigma);
}

double ck_check_continuous(const WienerProcess& w, double s, double tau, double t) {
  if (!(s < tau && tau < t)) throw DomainError("times must satisfy s < tau < t");
  check_positive_scale(w.sigma);
  const double scale = w.sigma * std::sqrt(t - s);
  double worst = 0.0;
  QuadratureConfig quad;
  quad.abs_tol = 1e-12;
  quad.rel_tol = 1e-11;
  for (int ix = -2; ix <= 2; ++ix) {
    for (int iy = -2; iy <= 2; ++iy) {
      const double x = ix * scale;
      const double y = iy * scale;
      const double direct = wiener_density(w, x - y, t - s);
      auto integrand = [&](double z) {
        return wiener_density(w, x - z, t - tau) * wiener_density(w, z - y, tau - s);
      };
      const double through = integrate_or_throw(integrand, -kInf, kInf, quad);
      worst = std::max(worst, std::abs(direct - through));
    }
  }
  return worst;
}

SamplePath sample_path(const AnyProcess& proc, const std::vector<double>& times,
                       std::uint64_t seed) {
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double prev = i == 0 ? 0.0 : times[i - 1];
    if (i == 0 ? times[i] < 0.0 : times[i] <= prev)
      throw DomainError("times must be increasing and start at or after 0");
  }
  Rng rng(seed);
  SamplePath path{times, {}, seed};
  path.values.reserve(times.size());
  double value = start_value(proc);
  double clock = 0.0;
  for (double target : times) {
    value += step(proc, target - clock, rng);
    clock = target;
    path.values.push_back(value);
  }
  return path;
}

EmpiricalMoments empirical_moments(const AnyProcess& proc, double t, unsigned n_paths,
                                   std::uint64_t seed) {
  if (n_paths < 100) throw DomainError("need at least 100 paths");
  if (!(t > 0)) throw DomainError("time must be positive");
  double mean = 0.0, m2 = 0.0;
  for (unsigned i = 0; i < n_paths; ++i) {
    Rng rng(seed, i);
    const double value = start_value(proc) + step(proc, t, rng);
    const double delta = value - mean;
    mean += delta / double(i + 1);
    m2 += delta * (value - mean);
  }
  return EmpiricalMoments{mean, m2 / double(n_paths - 1)};
}

}  // namespace pbc
