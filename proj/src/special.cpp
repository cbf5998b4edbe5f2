#include "lauricella/special.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "lauricella/error.hpp"
#include "lauricella/series.hpp"

namespace lauricella {

namespace {

// Lanczos approximation, g = 7, nine coefficients.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

constexpr int kDirectPochhammerLimit = 32;

double lanczos_log_gamma(double x) {
  // x >= 1/2
  const double shifted = x - 1.0;
  double series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) series += kLanczos[i] / (shifted + static_cast<double>(i));
  const double t = shifted + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (shifted + 0.5) * std::log(t) - t + std::log(series);
}

// sin(pi x) with the argument reduced to [-1/2, 1/2] exactly.
double sin_pi(double x) {
  const double nearest = std::nearbyint(x);
  const double frac = x - nearest;
  const double s = std::sin(std::numbers::pi * frac);
  return std::fmod(nearest, 2.0) == 0.0 ? s : -s;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void SeriesControl::validate() const {
  if (max_weight < 1) throw parameter_error("series control: max_weight must be >= 1");
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw parameter_error("series control: rel_tol must lie in (0, 1)");
  if (plateau < 1) throw parameter_error("series control: plateau must be >= 1");
  if (inner_max_weight < 1) throw parameter_error("series control: inner_max_weight must be >= 1");
}

double SignedLog::value() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_abs);
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

SignedLog log_gamma(double x) {
  if (is_nonpositive_integer(x)) throw pole_error("Gamma has a pole at " + fmt(x));
  if (x >= 0.5) return {lanczos_log_gamma(x), 1};
  // Gamma(x) Gamma(1-x) = pi / sin(pi x), and Gamma(1-x) > 0 here.
  const double s = sin_pi(x);
  return {std::log(std::numbers::pi / std::abs(s)) - lanczos_log_gamma(1.0 - x), s > 0.0 ? 1 : -1};
}

double gamma(double x) { return log_gamma(x).value(); }

SignedLog log_pochhammer(double kappa, int nu) {
  if (nu < 0) throw parameter_error("Pochhammer index must be nonnegative");
  if (nu == 0) return {0.0, 1};
  if (is_nonpositive_integer(kappa) && -kappa < nu) return {-std::numeric_limits<double>::infinity(), 0};

  if (nu <= kDirectPochhammerLimit) {
    SignedLog r{0.0, 1};
    for (int i = 0; i < nu; ++i) {
      const double f = kappa + i;
      r.log_abs += std::log(std::abs(f));
      if (f < 0.0) r.sign = -r.sign;
    }
    return r;
  }
  if (is_nonpositive_integer(kappa)) {
    // kappa (kappa+1) ... (kappa+nu-1) with every factor negative.
    const SignedLog hi = log_gamma(1.0 - kappa);
    const SignedLog lo = log_gamma(1.0 - kappa - nu);
    return {hi.log_abs - lo.log_abs, nu % 2 == 0 ? 1 : -1};
  }
  const SignedLog top = log_gamma(kappa + nu);
  const SignedLog bottom = log_gamma(kappa);
  return {top.log_abs - bottom.log_abs, top.sign * bottom.sign};
}

double pochhammer(double kappa, int nu) {
  if (nu < 0) throw parameter_error("Pochhammer index must be nonnegative");
  if (nu == 0) return 1.0;
  if (is_nonpositive_integer(kappa) && -kappa < nu) return 0.0;
  if (nu <= kDirectPochhammerLimit) {
    double p = 1.0;
    for (int i = 0; i < nu; ++i) p *= kappa + i;
    return p;
  }
  return log_pochhammer(kappa, nu).value();
}

EvalResult gauss_2f1_series(double a, double b, double c, double z, const SeriesControl& ctl) {
  if (is_nonpositive_integer(c)) throw parameter_error("2F1: c = " + fmt(c) + " is a nonpositive integer");
  if (!(std::abs(z) < 1.0)) throw domain_violation("2F1 series: |z| = " + fmt(std::abs(z)) + " is not < 1");

  ShellAccumulator acc(ctl);
  double term = 1.0;
  for (int i = 0; acc.wants_more(); ++i) {
    acc.add(term);
    term *= (a + i) * (b + i) / ((c + i) * (i + 1.0)) * z;
  }
  return acc.result();
}

EvalResult gauss_2f1(double a, double b, double c, double z, const SeriesControl& ctl) {
  ctl.validate();
  if (is_nonpositive_integer(c)) throw parameter_error("2F1: c = " + fmt(c) + " is a nonpositive integer");
  if (!(z <= 1.0)) throw domain_violation("2F1: z = " + fmt(z) + " is not <= 1");
  if (z == 1.0) {
    if (!(c - a - b > 0.0)) {
      throw domain_violation("2F1 at z = 1 needs c - a - b > 0, got " + fmt(c - a - b));
    }
    return {gauss_sum_at_one(a, b, c), 0.0, 0, true};
  }
  if (z == 0.0) return {1.0, 0.0, 0, true};
  if (z > 0.0) return gauss_2f1_series(a, b, c, z, ctl);

  const double w = z / (z - 1.0);
  const double scale = std::pow(1.0 - z, -b);
  EvalResult r = gauss_2f1_series(c - a, b, c, w, ctl);
  r.value *= scale;
  r.est_error *= scale;
  return r;
}

double gauss_sum_at_one(double b1, double b2, double a) {
  if (is_nonpositive_integer(a)) throw parameter_error("Gauss sum: a = " + fmt(a) + " is a nonpositive integer");
  const double excess = a - b1 - b2;
  if (!(excess > 0.0)) {
    throw domain_violation("Gauss sum: convergence needs a - b1 - b2 > 0, got " + fmt(excess));
  }
  const SignedLog g_excess = log_gamma(excess);
  const SignedLog g_a = log_gamma(a);
  const SignedLog g_1 = log_gamma(a - b1);
  const SignedLog g_2 = log_gamma(a - b2);
  const double log_abs = g_excess.log_abs + g_a.log_abs - g_1.log_abs - g_2.log_abs;
  return g_excess.sign * g_a.sign * g_1.sign * g_2.sign * std::exp(log_abs);
}

}  // namespace lauricella
