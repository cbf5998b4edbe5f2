#pragma once

#include <vector>

#include "lauricella/lauricella.hpp"
#include "lauricella/special.hpp"

namespace lauricella {

/// (a; b_1..b_n) of the multi-index summation formula.
struct SummationParams {
  double a = 1.0;
  std::vector<double> b;

  int n() const { return static_cast<int>(b.size()); }
  /// Throws parameter_error unless n >= 2, a is not a nonpositive integer,
  /// a > sum b_k, and no a - b_k is a nonpositive integer.
  void validate() const;
};

/// Truncated multi-index sum
///   sum (a)_{A(n,n)} / prod m_{ij}! * prod_k (b_k)_{B(k,n)} (a-b_k)_{A(k,n)-B(k,n)} / (a)_{A(k,n)}.
///
/// The value is the partial sum; est_error is the last shell plus a power-law
/// extrapolation of the remaining shells.
EvalResult lemma2_lhs(const SummationParams& params, const SeriesControl& ctl = {});

/// Gamma(a - sum b) Gamma(a)^(n-1) / prod Gamma(a - b_k).
double lemma2_rhs(const SummationParams& params);

/// Outcome of checking T_{n+1}(a; b) = P * T_n(a - b_{n+1}; b_1..b_n).
struct RecurrenceCheck {
  double gap = 0.0;  // |lhs - rhs| / |rhs|
  double combined_error = 0.0;  // (est_lhs + |P| est_T_n) / |rhs|
  EvalResult lhs;  // T_{n+1}
  EvalResult reduced;  // T_n(a - b_{n+1}; b_1..b_n)
  double prefactor = 0.0;  // P
  double rhs = 0.0;  // P * reduced.value
};

/// Both sides of the Gamma-prefactor recurrence, each evaluated by lemma2_lhs.
/// `params` describes the n+1 variable sum.
RecurrenceCheck lemma2_recurrence(const SummationParams& params, const SeriesControl& ctl = {});
double lemma2_recurrence_gap(const SummationParams& params, const SeriesControl& ctl = {});

/// t^(-sum b_k) F_A^(n)(a; b; c; 1 - 1/t, ..., 1 - 1/t) for 0 < t <= 1.
EvalResult lemma3_lhs(const LauricellaParams& params, double t, const SeriesControl& ctl = {});

/// Limit as t -> 0: Gamma(a - sum b) / Gamma(a) * prod Gamma(c_k) / Gamma(c_k - b_k).
double lemma3_rhs(const LauricellaParams& params);

/// Leading exponent p of lemma3_lhs(t) - limit ~ C t^p: min(1, a - sum b).
double lemma3_error_exponent(const LauricellaParams& params);

/// One Richardson step from values at t and t/2 under the error model C t^p.
double richardson_extrapolate(double at_t, double at_half_t, double exponent);

}  // namespace lauricella
