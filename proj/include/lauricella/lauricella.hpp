#pragma once

#include <span>
#include <vector>

#include "lauricella/multi_index.hpp"
#include "lauricella/special.hpp"

namespace lauricella {

/// Parameters (a; b_1..b_n; c_1..c_n) of the Lauricella function F_A^(n).
struct LauricellaParams {
  double a = 1.0;
  std::vector<double> b;
  std::vector<double> c;

  int n() const { return static_cast<int>(b.size()); }
  /// Throws parameter_error on size mismatch, n < 1, or a lower parameter c_k
  /// that is a nonpositive integer.
  void validate() const;
};

/// How strictly the argument region is enforced.
///
/// `strict` requires sum |z_k| < 1, the region of the defining series. `relaxed`
/// lets fa_direct run anywhere and lets the decomposition evaluators accept
/// max |z_k| < 1; convergence is then reported by the stopping rule only.
enum class DomainCheck { strict, relaxed };

/// Defining multi-series summed over shells p_1 + ... + p_n = d.
EvalResult fa_direct(const LauricellaParams& params, std::span<const double> z, const SeriesControl& ctl = {},
                     DomainCheck check = DomainCheck::strict);

/// Expansion into 2F1(z_1) times F_A^(n-1)(z_2..z_n), recursing down to n = 1.
EvalResult fa_recursive(const LauricellaParams& params, std::span<const double> z, const SeriesControl& ctl = {},
                        DomainCheck check = DomainCheck::strict);

/// Closed decomposition over triangular multi-indices: every term is a product of
/// one Gauss function per variable, with parameters shifted by A(k,n) and B(k,n).
EvalResult fa_decomposed(const LauricellaParams& params, std::span<const double> z, const SeriesControl& ctl = {},
                         DomainCheck check = DomainCheck::strict);

/// One term of the closed decomposition for the given multi-index, with its inner
/// Gauss functions evaluated under `ctl`.
double decomposition_term(const LauricellaParams& params, std::span<const double> z, const TriangularMultiIndex& idx,
                          const SeriesControl& ctl = {});

/// F_A^(n) at z_k = 1 - 1/t_k for 0 < t_k <= 1.
///
/// Every inner Gauss function of the closed decomposition is rewritten with
/// F(a,b;c;x) = (1-x)^(-b) F(c-a, b; c; x/(x-1)), so inner arguments become
/// 1 - t_k in [0, 1) and the outer sum carries t_k^(b_k) (t_k - 1)^(B(k,n)).
EvalResult fa_left_shifted(const LauricellaParams& params, std::span<const double> t, const SeriesControl& ctl = {});

/// fa_left_shifted without the prefactor prod t_k^(b_k).
EvalResult fa_left_shifted_unscaled(const LauricellaParams& params, std::span<const double> t,
                                    const SeriesControl& ctl = {});

}  // namespace lauricella
