#include "lauricella/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lauricella {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double shell_ratio(double previous, double current) {
  if (previous == 0.0) return current == 0.0 ? 0.0 : kInf;
  return current / previous;
}

}  // namespace

ShellAccumulator::ShellAccumulator(const SeriesControl& ctl, TailModel model,
                                   double power_law_exponent)
    : ctl_(ctl), model_(model), power_law_exponent_(power_law_exponent) {
  ctl_.validate();
  magnitudes_.reserve(static_cast<std::size_t>(std::min(ctl_.max_weight, 4096)) + 1);
}

bool ShellAccumulator::add(double shell_sum, double shell_abs_error) {
  magnitudes_.push_back(std::abs(shell_sum));
  last_sign_ = shell_sum < 0.0 ? -1 : 1;
  sum_ += shell_sum;
  inner_error_ += shell_abs_error;

  const double est = tail_estimate() + inner_error_;
  if (est <= ctl_.rel_tol * std::abs(sum_ + tail_correction())) {
    ++quiet_shells_;
  } else {
    quiet_shells_ = 0;
  }
  if (quiet_shells_ >= ctl_.plateau) done_ = true;
  return done_;
}

bool ShellAccumulator::wants_more() const {
  return !done_ && next_weight() <= ctl_.max_weight;
}

double ShellAccumulator::tail_estimate() const {
  if (magnitudes_.empty()) return kInf;
  const std::size_t w = magnitudes_.size() - 1;
  const double last = magnitudes_[w];

  if (model_ == TailModel::geometric) {
    if (w == 0) return kInf;
    double rho = shell_ratio(magnitudes_[w - 1], last);
    if (w >= 2) rho = std::max(rho, shell_ratio(magnitudes_[w - 2], magnitudes_[w - 1]));
    if (!(rho < 1.0)) return kInf;
    return last / (1.0 - rho);
  }

  if (w < 4) return kInf;
  if (last == 0.0) return 0.0;
  return last + std::abs(tail_correction());
}

double ShellAccumulator::tail_correction() const {
  if (model_ != TailModel::power_law || magnitudes_.size() < 5) return 0.0;
  const std::size_t w = magnitudes_.size() - 1;
  const double last = magnitudes_[w];
  if (last == 0.0) return 0.0;
  const std::size_t half = w / 2;
  const double earlier = magnitudes_[half];
  if (earlier == 0.0) return kInf;
  double exponent = std::log(earlier / last) / std::log(static_cast<double>(w) / half);
  if (power_law_exponent_ > 0.0) exponent = std::min(exponent, power_law_exponent_);
  if (!(exponent > 1.0)) return kInf;
  const double magnitude = last * static_cast<double>(w) / (exponent - 1.0);
  return last_sign_ < 0 ? -magnitude : magnitude;
}

EvalResult ShellAccumulator::result() const {
  EvalResult r;
  const double correction = tail_correction();
  r.value = std::isfinite(correction) ? sum_ + correction : sum_;
  r.est_error = tail_estimate() + inner_error_;
  r.weight_used = magnitudes_.empty() ? 0 : static_cast<int>(magnitudes_.size()) - 1;
  r.converged = done_;
  return r;
}

}  // namespace lauricella
