#pragma once

#include <span>
#include <vector>

#include "lauricella/special.hpp"

namespace lauricella {

/// Operator sum_i u_{x_i x_i} + sum_{j<=n} (2 alpha_j / x_j) u_{x_j} in m dimensions.
struct SingularPdeConfig {
  int m = 3;
  std::vector<double> alpha;  // n = alpha.size(), each 0 < 2 alpha_j < 1

  int n() const { return static_cast<int>(alpha.size()); }
  void validate() const;
};

/// Observation point x and source point xi in the region x_1..x_n > 0.
struct PointPair {
  std::vector<double> x;
  std::vector<double> xi;

  void validate(const SingularPdeConfig& cfg) const;
};

/// m/2 + k - 1 - sum_{i<=k} alpha_i + sum_{i>k} alpha_i. Throws pole_error unless positive.
double alpha_bar(const SingularPdeConfig& cfg, int k);

/// Normalizing constant of q_k, computed in log space.
double gamma_coeff(const SingularPdeConfig& cfg, int k);

/// Squared distances |x - xi|^2 and the reflected |x - xi*|^2 with the k-th coordinate of xi negated.
struct Distances {
  double r2 = 0.0;
  std::vector<double> reflected_r2;  // r_k^2, k = 1..n
};
Distances distances(const PointPair& pp, const SingularPdeConfig& cfg);

/// sigma_k = 1 - r_k^2 / r^2 (nonpositive on the region).
std::vector<double> sigma_args(const PointPair& pp, const SingularPdeConfig& cfg);
/// sigma_k / (sigma_k - 1) = 1 - r^2 / r_k^2, in [0, 1).
std::vector<double> transformed_sigma_args(const PointPair& pp, const SingularPdeConfig& cfg);

/// q_k(x, xi) for k in [0, n]. F_A is evaluated through the left-shifted form at
/// t_j = r^2 / r_j^2 since its arguments sigma_j are nonpositive.
EvalResult fundamental_solution(const SingularPdeConfig& cfg, int k, const PointPair& pp,
                                const SeriesControl& ctl = {});

struct ResidualCheck {
  double residual = 0.0;  // |L q| / scale
  double operator_value = 0.0;  // L q by central differences
  double scale = 0.0;  // sum_i |d^2 q / dx_i^2|
  bool converged = true;  // every q evaluation converged
};

/// Central-difference residual of the operator applied to q_k(., xi) at x, with
/// per-coordinate step h (1 + |x_i|).
ResidualCheck residual_check(const SingularPdeConfig& cfg, int k, std::span<const double> x,
                             std::span<const double> xi, double h = 1e-3, const SeriesControl& ctl = {});
double pde_residual(const SingularPdeConfig& cfg, int k, std::span<const double> x, std::span<const double> xi,
                    double h = 1e-3, const SeriesControl& ctl = {});

}  // namespace lauricella
