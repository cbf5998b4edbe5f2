#include "lauricella/lauricella.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <tuple>

#include "lauricella/error.hpp"
#include "lauricella/series.hpp"
#include "log_tables.hpp"

namespace lauricella {

namespace {

using detail::PochhammerTable;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double abs_sum(std::span<const double> z) {
  double s = 0.0;
  for (double v : z) s += std::abs(v);
  return s;
}

void check_arguments(const LauricellaParams& params, std::span<const double> z) {
  params.validate();
  if (static_cast<int>(z.size()) != params.n()) {
    throw parameter_error("expected " + std::to_string(params.n()) + " arguments, got " + std::to_string(z.size()));
  }
  for (double v : z) {
    if (!std::isfinite(v)) throw domain_violation("arguments must be finite");
  }
}

void check_strict_region(std::span<const double> z) {
  const double s = abs_sum(z);
  if (!(s < 1.0)) {
    throw domain_violation("sum |z_k| = " + fmt(s) + " is not < 1 (outside the convergence region of F_A)");
  }
}

void check_unit_box(std::span<const double> z) {
  for (double v : z) {
    if (!(std::abs(v) < 1.0)) throw domain_violation("|z_k| = " + fmt(std::abs(v)) + " is not < 1");
  }
}

/// Inner factor of the closed decomposition for one variable, already multiplied
/// by its power prefactor.
struct InnerFactor {
  double value = 0.0;
  double abs_error = 0.0;
  bool converged = true;
};

/// Sums sum_m (a)_{A(n,n)} / prod m_{ij}! * prod_k [(b_k)_B / (c_k)_B * factor_k(A, B)]
/// over triangular multi-indices graded by total weight. Factors are cached per (k, A, B).
template <class FactorFn>
EvalResult sum_decomposition(const LauricellaParams& params, const SeriesControl& ctl, FactorFn&& factor) {
  const int n = params.n();
  PochhammerTable la(params.a);
  PochhammerTable lfact(1.0);
  std::vector<PochhammerTable> lb, lc;
  for (int k = 0; k < n; ++k) {
    lb.emplace_back(params.b[static_cast<std::size_t>(k)]);
    lc.emplace_back(params.c[static_cast<std::size_t>(k)]);
  }

  std::map<std::tuple<int, int, int>, InnerFactor> cache;
  bool inner_converged = true;
  auto cached = [&](int k, int a_shift, int b_shift) -> const InnerFactor& {
    auto key = std::make_tuple(k, a_shift, b_shift);
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, factor(k, a_shift, b_shift)).first;
      inner_converged = inner_converged && it->second.converged;
    }
    return it->second;
  };

  std::vector<int> a_w(static_cast<std::size_t>(n) + 1), b_w(static_cast<std::size_t>(n) + 1);
  std::vector<const InnerFactor*> f(static_cast<std::size_t>(n));
  ShellAccumulator acc(ctl);
  for (int w = 0; acc.wants_more(); ++w) {
    double shell = 0.0;
    double shell_err = 0.0;
    for_each_of_weight(n, w, [&](const TriangularMultiIndex& idx) {
      fill_weight_vectors(idx, a_w, b_w);
      const SignedLog& top = la(a_w[static_cast<std::size_t>(n)]);
      if (top.sign == 0) return;
      double log_coef = top.log_abs;
      int sign = top.sign;
      for (int m : idx.entries()) log_coef -= lfact(m).log_abs;
      for (int k = 0; k < n; ++k) {
        const int bk = b_w[static_cast<std::size_t>(k) + 1];
        const InnerFactor& g = cached(k, a_w[static_cast<std::size_t>(k) + 1], bk);
        if (g.value == 0.0 && g.abs_error == 0.0) return;
        f[static_cast<std::size_t>(k)] = &g;
        const SignedLog& pb = lb[static_cast<std::size_t>(k)](bk);
        if (pb.sign == 0) return;
        const SignedLog& pc = lc[static_cast<std::size_t>(k)](bk);
        log_coef += pb.log_abs - pc.log_abs;
        sign *= pb.sign * pc.sign;
      }
      const double coef = sign * std::exp(log_coef);
      double product = 1.0;
      for (const InnerFactor* g : f) product *= g->value;
      double err = 0.0;
      for (int k = 0; k < n; ++k) {
        double others = 1.0;
        for (int j = 0; j < n; ++j) {
          if (j != k) others *= std::abs(f[static_cast<std::size_t>(j)]->value);
        }
        err += f[static_cast<std::size_t>(k)]->abs_error * others;
      }
      shell += coef * product;
      shell_err += std::abs(coef) * err;
    });
    acc.add(shell, shell_err);
  }
  EvalResult r = acc.result();
  r.converged = r.converged && inner_converged;
  return r;
}

InnerFactor from_result(const EvalResult& r, double prefactor) {
  return {prefactor * r.value, std::abs(prefactor) * r.est_error, r.converged};
}

// Integer power keeping the sign of a negative base.
double int_pow(double base, int e) { return e == 0 ? 1.0 : std::pow(base, e); }

}  // namespace

void LauricellaParams::validate() const {
  if (b.empty()) throw parameter_error("F_A needs at least one variable");
  if (b.size() != c.size()) {
    throw parameter_error("F_A needs as many c parameters (" + std::to_string(c.size()) + ") as b parameters (" +
                          std::to_string(b.size()) + ")");
  }
  if (!std::isfinite(a)) throw parameter_error("parameter a must be finite");
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!std::isfinite(b[k]) || !std::isfinite(c[k])) throw parameter_error("parameters must be finite");
    if (is_nonpositive_integer(c[k])) {
      throw parameter_error("c_" + std::to_string(k + 1) + " = " + fmt(c[k]) + " is a nonpositive integer");
    }
  }
}

EvalResult fa_direct(const LauricellaParams& params, std::span<const double> z, const SeriesControl& ctl,
                     DomainCheck check) {
  ctl.validate();
  check_arguments(params, z);
  if (check == DomainCheck::strict) check_strict_region(z);

  const int n = params.n();
  PochhammerTable la(params.a);
  PochhammerTable lfact(1.0);
  std::vector<PochhammerTable> lb, lc;
  std::vector<double> log_z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    lb.emplace_back(params.b[static_cast<std::size_t>(k)]);
    lc.emplace_back(params.c[static_cast<std::size_t>(k)]);
    log_z[static_cast<std::size_t>(k)] = std::log(std::abs(z[static_cast<std::size_t>(k)]));
  }

  ShellAccumulator acc(ctl);
  for (int d = 0; acc.wants_more(); ++d) {
    double shell = 0.0;
    const SignedLog& top = la(d);
    if (top.sign != 0) {
      for_each_composition(n, d, [&](std::span<const int> p) {
        double log_term = top.log_abs;
        int sign = top.sign;
        for (int k = 0; k < n; ++k) {
          const int pk = p[static_cast<std::size_t>(k)];
          if (pk == 0) continue;
          const double zk = z[static_cast<std::size_t>(k)];
          if (zk == 0.0) return;
          const SignedLog& pb = lb[static_cast<std::size_t>(k)](pk);
          if (pb.sign == 0) return;
          const SignedLog& pc = lc[static_cast<std::size_t>(k)](pk);
          log_term += pb.log_abs - pc.log_abs - lfact(pk).log_abs + pk * log_z[static_cast<std::size_t>(k)];
          sign *= pb.sign * pc.sign;
          if (zk < 0.0 && pk % 2 == 1) sign = -sign;
        }
        shell += sign * std::exp(log_term);
      });
    }
    acc.add(shell);
  }
  return acc.result();
}

EvalResult fa_recursive(const LauricellaParams& params, std::span<const double> z, const SeriesControl& ctl,
                        DomainCheck check) {
  ctl.validate();
  check_arguments(params, z);
  if (check == DomainCheck::strict) {
    check_strict_region(z);
  } else {
    check_unit_box(z);
  }

  const int n = params.n();
  if (n == 1) return gauss_2f1(params.a, params.b[0], params.c[0], z[0], ctl);

  const SeriesControl inner = detail::inner_control(ctl, n);
  SeriesControl nested = inner;
  nested.max_weight = ctl.max_weight;

  PochhammerTable la(params.a);
  PochhammerTable lfact(1.0);
  std::vector<PochhammerTable> lb, lc;
  std::vector<double> log_z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    lb.emplace_back(params.b[static_cast<std::size_t>(k)]);
    lc.emplace_back(params.c[static_cast<std::size_t>(k)]);
    log_z[static_cast<std::size_t>(k)] = std::log(std::abs(z[static_cast<std::size_t>(k)]));
  }
  std::map<int, EvalResult> first_factor;
  bool inner_converged = true;

  LauricellaParams rest;
  rest.b.resize(static_cast<std::size_t>(n) - 1);
  rest.c.resize(static_cast<std::size_t>(n) - 1);
  const std::span<const double> z_rest = z.subspan(1);

  ShellAccumulator acc(ctl);
  for (int total = 0; acc.wants_more(); ++total) {
    double shell = 0.0;
    double shell_err = 0.0;
    for_each_composition(n - 1, total, [&](std::span<const int> m) {
      // Coefficient of z_1^M z_2^{m_2} ... z_n^{m_n}.
      const SignedLog& pa = la(total);
      const SignedLog& pb1 = lb[0](total);
      if (pa.sign == 0 || pb1.sign == 0) return;
      if (total > 0 && z[0] == 0.0) return;
      const SignedLog& pc1 = lc[0](total);
      double log_coef = pa.log_abs + pb1.log_abs - pc1.log_abs + (total > 0 ? total * log_z[0] : 0.0);
      int sign = pa.sign * pb1.sign * pc1.sign;
      if (z[0] < 0.0 && total % 2 == 1) sign = -sign;
      for (int j = 1; j < n; ++j) {
        const int mj = m[static_cast<std::size_t>(j) - 1];
        if (mj == 0) continue;
        const double zj = z[static_cast<std::size_t>(j)];
        if (zj == 0.0) return;
        const SignedLog& pb = lb[static_cast<std::size_t>(j)](mj);
        if (pb.sign == 0) return;
        const SignedLog& pc = lc[static_cast<std::size_t>(j)](mj);
        log_coef += pb.log_abs - pc.log_abs - lfact(mj).log_abs + mj * log_z[static_cast<std::size_t>(j)];
        sign *= pb.sign * pc.sign;
        if (zj < 0.0 && mj % 2 == 1) sign = -sign;
      }
      const double coef = sign * std::exp(log_coef);

      auto it = first_factor.find(total);
      if (it == first_factor.end()) {
        it = first_factor
                 .emplace(total, gauss_2f1(params.a + total, params.b[0] + total, params.c[0] + total, z[0], inner))
                 .first;
        inner_converged = inner_converged && it->second.converged;
      }
      const EvalResult& g = it->second;

      rest.a = params.a + total;
      for (int j = 1; j < n; ++j) {
        const int mj = m[static_cast<std::size_t>(j) - 1];
        rest.b[static_cast<std::size_t>(j) - 1] = params.b[static_cast<std::size_t>(j)] + mj;
        rest.c[static_cast<std::size_t>(j) - 1] = params.c[static_cast<std::size_t>(j)] + mj;
      }
      const EvalResult h = fa_recursive(rest, z_rest, nested, DomainCheck::relaxed);
      inner_converged = inner_converged && h.converged;

      shell += coef * g.value * h.value;
      shell_err += std::abs(coef) * (g.est_error * std::abs(h.value) + h.est_error * std::abs(g.value));
    });
    acc.add(shell, shell_err);
  }
  EvalResult r = acc.result();
  r.converged = r.converged && inner_converged;
  return r;
}

EvalResult fa_decomposed(const LauricellaParams& params, std::span<const double> z, const SeriesControl& ctl,
                         DomainCheck check) {
  ctl.validate();
  check_arguments(params, z);
  if (params.n() < 2) throw parameter_error("the closed decomposition needs n >= 2");
  check_unit_box(z);
  if (check == DomainCheck::strict) check_strict_region(z);

  const SeriesControl inner = detail::inner_control(ctl, params.n());
  return sum_decomposition(params, ctl, [&](int k, int a_shift, int b_shift) {
    const auto ks = static_cast<std::size_t>(k);
    const double zk = z[ks];
    const double power = int_pow(zk, b_shift);
    if (power == 0.0) return InnerFactor{};
    return from_result(
        gauss_2f1(params.a + a_shift, params.b[ks] + b_shift, params.c[ks] + b_shift, zk, inner), power);
  });
}

double decomposition_term(const LauricellaParams& params, std::span<const double> z, const TriangularMultiIndex& idx,
                          const SeriesControl& ctl) {
  check_arguments(params, z);
  if (idx.n() != params.n()) throw parameter_error("multi-index size does not match the number of variables");
  const WeightVectors w = weight_vectors(idx);
  const int n = params.n();
  const SignedLog top = log_pochhammer(params.a, w.a[static_cast<std::size_t>(n)]);
  double term = top.value();
  for (int m : idx.entries()) term /= std::exp(log_pochhammer(1.0, m).log_abs);
  for (int k = 0; k < n; ++k) {
    const auto ks = static_cast<std::size_t>(k);
    const int bk = w.b[ks + 1];
    const int ak = w.a[ks + 1];
    term *= pochhammer(params.b[ks], bk) / pochhammer(params.c[ks], bk) * int_pow(z[ks], bk) *
            gauss_2f1(params.a + ak, params.b[ks] + bk, params.c[ks] + bk, z[ks], ctl).value;
  }
  return term;
}

EvalResult fa_left_shifted_unscaled(const LauricellaParams& params, std::span<const double> t,
                                    const SeriesControl& ctl) {
  ctl.validate();
  check_arguments(params, t);
  for (double v : t) {
    if (!(v > 0.0 && v <= 1.0)) throw domain_violation("left-shifted evaluation needs 0 < t_k <= 1, got " + fmt(v));
  }
  const int n = params.n();
  if (n == 1) {
    // F(a, b; c; 1 - 1/t) = t^b F(c - a, b; c; 1 - t)
    return gauss_2f1(params.c[0] - params.a, params.b[0], params.c[0], 1.0 - t[0], ctl);
  }

  const SeriesControl inner = detail::inner_control(ctl, n);
  return sum_decomposition(params, ctl, [&](int k, int a_shift, int b_shift) {
    const auto ks = static_cast<std::size_t>(k);
    const double power = int_pow(t[ks] - 1.0, b_shift);
    if (power == 0.0) return InnerFactor{};
    const double c_shifted = params.c[ks] + b_shift;
    return from_result(
        gauss_2f1(c_shifted - params.a - a_shift, params.b[ks] + b_shift, c_shifted, 1.0 - t[ks], inner), power);
  });
}

EvalResult fa_left_shifted(const LauricellaParams& params, std::span<const double> t, const SeriesControl& ctl) {
  EvalResult r = fa_left_shifted_unscaled(params, t, ctl);
  double scale = 1.0;
  for (int k = 0; k < params.n(); ++k) {
    scale *= std::pow(t[static_cast<std::size_t>(k)], params.b[static_cast<std::size_t>(k)]);
  }
  r.value *= scale;
  r.est_error *= scale;
  return r;
}

}  // namespace lauricella
