#include "lauricella/pde.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lauricella/error.hpp"
#include "lauricella/lauricella.hpp"

namespace lauricella {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void check_k(const SingularPdeConfig& cfg, int k) {
  if (k < 0 || k > cfg.n()) {
    throw index_range_error("solution index k = " + std::to_string(k) + " is outside [0, " + std::to_string(cfg.n()) +
                            "]");
  }
}

}  // namespace

void SingularPdeConfig::validate() const {
  if (m < 2) throw parameter_error("dimension m must be >= 2, got " + std::to_string(m));
  if (n() > m) throw parameter_error("at most m singular coefficients are allowed");
  for (double a : alpha) {
    if (!(a > 0.0 && 2.0 * a < 1.0)) throw parameter_error("each alpha_j must satisfy 0 < 2 alpha_j < 1, got " + fmt(a));
  }
}

void PointPair::validate(const SingularPdeConfig& cfg) const {
  const auto m = static_cast<std::size_t>(cfg.m);
  if (x.size() != m || xi.size() != m) {
    throw parameter_error("points must have " + std::to_string(cfg.m) + " coordinates");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(xi[i])) throw parameter_error("coordinates must be finite");
  }
  for (std::size_t j = 0; j < static_cast<std::size_t>(cfg.n()); ++j) {
    if (!(x[j] > 0.0 && xi[j] > 0.0)) {
      throw degenerate_geometry("coordinate " + std::to_string(j + 1) + " must be positive for both points");
    }
  }
  if (x == xi) throw degenerate_geometry("observation and source points coincide");
}

double alpha_bar(const SingularPdeConfig& cfg, int k) {
  cfg.validate();
  check_k(cfg, k);
  double v = cfg.m / 2.0 + k - 1.0;
  for (int i = 0; i < cfg.n(); ++i) {
    v += i < k ? -cfg.alpha[static_cast<std::size_t>(i)] : cfg.alpha[static_cast<std::size_t>(i)];
  }
  if (!(v > 0.0)) {
    throw pole_error("alpha_bar_" + std::to_string(k) + " = " + fmt(v) +
                     " is not positive; Gamma(alpha_bar) is undefined (m = 2, n = 0 is the logarithmic case)");
  }
  return v;
}

double gamma_coeff(const SingularPdeConfig& cfg, int k) {
  const double ab = alpha_bar(cfg, k);
  double log_g = (2.0 * ab - cfg.m) * std::numbers::ln2 + log_gamma(ab).log_abs -
                 cfg.m / 2.0 * std::log(std::numbers::pi);
  for (int i = 0; i < cfg.n(); ++i) {
    const double a = cfg.alpha[static_cast<std::size_t>(i)];
    if (i < k) {
      log_g += log_gamma(1.0 - a).log_abs - log_gamma(2.0 - 2.0 * a).log_abs;
    } else {
      log_g += log_gamma(a).log_abs - log_gamma(2.0 * a).log_abs;
    }
  }
  return std::exp(log_g);
}

Distances distances(const PointPair& pp, const SingularPdeConfig& cfg) {
  cfg.validate();
  pp.validate(cfg);
  Distances d;
  for (int i = 0; i < cfg.m; ++i) {
    const double diff = pp.x[static_cast<std::size_t>(i)] - pp.xi[static_cast<std::size_t>(i)];
    d.r2 += diff * diff;
  }
  if (!(d.r2 > 0.0)) throw degenerate_geometry("observation and source points coincide");
  for (int k = 0; k < cfg.n(); ++k) {
    double rk2 = 0.0;
    for (int i = 0; i < cfg.m; ++i) {
      const double xi = pp.x[static_cast<std::size_t>(i)];
      const double si = pp.xi[static_cast<std::size_t>(i)];
      const double diff = i == k ? xi + si : xi - si;
      rk2 += diff * diff;
    }
    d.reflected_r2.push_back(rk2);
  }
  return d;
}

std::vector<double> sigma_args(const PointPair& pp, const SingularPdeConfig& cfg) {
  const Distances d = distances(pp, cfg);
  std::vector<double> s;
  for (double rk2 : d.reflected_r2) s.push_back(1.0 - rk2 / d.r2);
  return s;
}

std::vector<double> transformed_sigma_args(const PointPair& pp, const SingularPdeConfig& cfg) {
  const Distances d = distances(pp, cfg);
  std::vector<double> s;
  for (double rk2 : d.reflected_r2) s.push_back(1.0 - d.r2 / rk2);
  return s;
}

EvalResult fundamental_solution(const SingularPdeConfig& cfg, int k, const PointPair& pp, const SeriesControl& ctl) {
  ctl.validate();
  const Distances d = distances(pp, cfg);
  const double ab = alpha_bar(cfg, k);
  const int n = cfg.n();

  double log_prefactor = std::log(gamma_coeff(cfg, k)) - ab * std::log(d.r2);
  for (int i = 0; i < k; ++i) {
    const auto is = static_cast<std::size_t>(i);
    log_prefactor += (1.0 - 2.0 * cfg.alpha[is]) * std::log(pp.x[is] * pp.xi[is]);
  }
  const double prefactor = std::exp(log_prefactor);
  if (n == 0) return {prefactor, 0.0, 0, true};

  LauricellaParams params;
  params.a = ab;
  std::vector<double> t;
  for (int i = 0; i < n; ++i) {
    const double a = cfg.alpha[static_cast<std::size_t>(i)];
    params.b.push_back(i < k ? 1.0 - a : a);
    params.c.push_back(i < k ? 2.0 - 2.0 * a : 2.0 * a);
    t.push_back(d.r2 / d.reflected_r2[static_cast<std::size_t>(i)]);
  }
  EvalResult r = fa_left_shifted(params, t, ctl);
  r.value *= prefactor;
  r.est_error *= prefactor;
  return r;
}

ResidualCheck residual_check(const SingularPdeConfig& cfg, int k, std::span<const double> x,
                             std::span<const double> xi, double h, const SeriesControl& ctl) {
  cfg.validate();
  check_k(cfg, k);
  if (!(h > 0.0)) throw parameter_error("finite-difference step must be positive");
  const auto m = static_cast<std::size_t>(cfg.m);
  if (x.size() != m || xi.size() != m) throw parameter_error("points must have " + std::to_string(cfg.m) + " coordinates");

  std::vector<double> step(m);
  double max_step = 0.0;
  double dist2 = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    step[i] = h * (1.0 + std::abs(x[i]));
    max_step = std::max(max_step, step[i]);
    dist2 += (x[i] - xi[i]) * (x[i] - xi[i]);
  }
  for (std::size_t j = 0; j < static_cast<std::size_t>(cfg.n()); ++j) {
    if (!(x[j] >= 10.0 * step[j])) {
      throw degenerate_geometry("x_" + std::to_string(j + 1) + " = " + fmt(x[j]) +
                                " is within 10 steps of the singular hyperplane");
    }
  }
  if (!(std::sqrt(dist2) >= 10.0 * max_step)) throw degenerate_geometry("x is within 10 steps of the source point");

  ResidualCheck out;
  PointPair pp{std::vector<double>(x.begin(), x.end()), std::vector<double>(xi.begin(), xi.end())};
  auto q_at = [&](std::size_t i, double offset) {
    pp.x[i] = x[i] + offset;
    const EvalResult r = fundamental_solution(cfg, k, pp, ctl);
    pp.x[i] = x[i];
    out.converged = out.converged && r.converged;
    return r.value;
  };

  const EvalResult at_center = fundamental_solution(cfg, k, pp, ctl);
  out.converged = at_center.converged;
  const double center = at_center.value;
  for (std::size_t i = 0; i < m; ++i) {
    // fourth-order central stencils
    const double hi = step[i];
    const double p1 = q_at(i, hi), m1 = q_at(i, -hi);
    const double p2 = q_at(i, 2.0 * hi), m2 = q_at(i, -2.0 * hi);
    const double second = (16.0 * (p1 + m1) - (p2 + m2) - 30.0 * center) / (12.0 * hi * hi);
    out.operator_value += second;
    out.scale += std::abs(second);
    if (i < static_cast<std::size_t>(cfg.n())) {
      const double first = (8.0 * (p1 - m1) - (p2 - m2)) / (12.0 * hi);
      out.operator_value += 2.0 * cfg.alpha[i] / x[i] * first;
    }
  }
  out.residual = std::abs(out.operator_value) / out.scale;
  return out;
}

double pde_residual(const SingularPdeConfig& cfg, int k, std::span<const double> x, std::span<const double> xi,
                    double h, const SeriesControl& ctl) {
  return residual_check(cfg, k, x, xi, h, ctl).residual;
}

}  // namespace lauricella
