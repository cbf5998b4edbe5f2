#pragma once

#include <cmath>
#include <vector>

#include "lauricella/special.hpp"

namespace lauricella::detail {

/// Lazily grown table of log|(kappa)_nu| with signs.
class PochhammerTable {
 public:
  explicit PochhammerTable(double kappa) : kappa_(kappa) {}

  const SignedLog& operator()(int nu) {
    while (static_cast<int>(values_.size()) <= nu) {
      values_.push_back(log_pochhammer(kappa_, static_cast<int>(values_.size())));
    }
    return values_[static_cast<std::size_t>(nu)];
  }

 private:
  double kappa_;
  std::vector<SignedLog> values_;
};

/// Tolerance handed to inner series so that their errors stay a small share of
/// the outer budget.
inline SeriesControl inner_control(const SeriesControl& ctl, int n) {
  SeriesControl inner = ctl;
  inner.rel_tol = std::max(ctl.rel_tol / (4.0 * n), 1e-15);
  inner.max_weight = ctl.inner_max_weight;
  return inner;
}

}  // namespace lauricella::detail
