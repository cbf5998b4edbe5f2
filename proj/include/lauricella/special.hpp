#pragma once

#include <cstddef>

namespace lauricella {

/// Truncation policy shared by every series evaluator.
///
/// A series is summed in graded shells (all terms of one total degree). Summation
/// stops once `plateau` consecutive shells have an estimated remainder below
/// `rel_tol * |partial sum|`, or when `max_weight` is reached. Multivariable
/// evaluators use `inner_max_weight` as the cap for their inner Gauss factors,
/// whose arguments can sit close to 1.
struct SeriesControl {
  int max_weight = 500;
  double rel_tol = 1e-12;
  int plateau = 3;
  int inner_max_weight = 1'000'000;

  /// Throws parameter_error unless max_weight >= 1, 0 < rel_tol < 1, plateau >= 1.
  void validate() const;

  bool operator==(const SeriesControl&) const = default;
};

struct EvalResult {
  double value = 0.0;
  double est_error = 0.0;  // absolute
  int weight_used = 0;
  bool converged = false;
};

/// ln|Gamma(x)| with the sign of Gamma(x).
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;  // 0 encodes an exact zero

  double value() const;
};

bool is_nonpositive_integer(double x);

/// Lanczos log-gamma with reflection below 1/2. Throws pole_error at 0, -1, -2, ...
SignedLog log_gamma(double x);
double gamma(double x);

/// Rising factorial (kappa)_nu. Exact zero when kappa is a nonpositive integer
/// with |kappa| < nu.
double pochhammer(double kappa, int nu);
SignedLog log_pochhammer(double kappa, int nu);

/// Defining series of 2F1 summed as-is. Requires |z| < 1.
EvalResult gauss_2f1_series(double a, double b, double c, double z, const SeriesControl& ctl);

/// Gauss 2F1(a, b; c; z) for z <= 1.
///
/// Arguments in [0, 1) are summed directly; z < 0 goes through
/// F(a,b;c;z) = (1-z)^(-b) F(c-a, b; c; z/(z-1)); z = 1 uses the Gauss sum.
EvalResult gauss_2f1(double a, double b, double c, double z, const SeriesControl& ctl = {});

/// F(b1, b2; a; 1) = Gamma(a-b1-b2) Gamma(a) / (Gamma(a-b1) Gamma(a-b2)), for a - b1 - b2 > 0.
double gauss_sum_at_one(double b1, double b2, double a);

}  // namespace lauricella
