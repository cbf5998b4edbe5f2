#pragma once

#include <vector>

#include "lauricella/special.hpp"

namespace lauricella {

/// How the remainder after the last summed shell is estimated.
enum class TailModel {
  /// |S_w| / (1 - rho), rho the larger of the last two shell ratios.
  geometric,
  /// Shells decaying like w^-p. The extrapolated remainder |S_w| w / (p - 1),
  /// with p the smaller of a caller-supplied bound and the slope observed
  /// between shells w/2 and w, is added to the value; the error estimate is
  /// |S_w| plus that correction.
  power_law,
};

/// Accumulates graded shells and applies the plateau stopping rule.
///
/// Shells are added in order of weight starting at 0. Each shell may carry an
/// absolute error contribution of its own (for example from inner series), which
/// is added to the tail estimate.
class ShellAccumulator {
 public:
  explicit ShellAccumulator(const SeriesControl& ctl, TailModel model = TailModel::geometric,
                            double power_law_exponent = 0.0);

  /// Adds the next shell. Returns true once the stopping rule is satisfied.
  bool add(double shell_sum, double shell_abs_error = 0.0);

  /// True while more shells may be added (the stopping rule is not met and
  /// max_weight has not been passed).
  bool wants_more() const;

  double sum() const { return sum_; }
  int next_weight() const { return static_cast<int>(magnitudes_.size()); }
  double tail_estimate() const;
  /// Signed remainder folded into the value under the power-law model; zero otherwise.
  double tail_correction() const;
  EvalResult result() const;

 private:
  SeriesControl ctl_;
  TailModel model_;
  double power_law_exponent_;
  double sum_ = 0.0;
  double inner_error_ = 0.0;
  int quiet_shells_ = 0;
  int last_sign_ = 1;
  bool done_ = false;
  std::vector<double> magnitudes_;
};

}  // namespace lauricella
