#include "lauricella/identities.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "lauricella/error.hpp"
#include "lauricella/multi_index.hpp"
#include "lauricella/series.hpp"
#include "composition.hpp"
#include "log_tables.hpp"

namespace lauricella {

namespace {

using detail::PochhammerTable;

// Terms stay inside double range in linear space up to this weight.
constexpr int kLinearWeightLimit = 150;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double sum_of(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

void check_lemma3(const LauricellaParams& params) {
  params.validate();
  const double excess = params.a - sum_of(params.b);
  if (!(excess > 0.0)) throw domain_violation("limit formula needs a > sum b_k, got a - sum b = " + fmt(excess));
  for (int k = 0; k < params.n(); ++k) {
    const double d = params.c[static_cast<std::size_t>(k)] - params.b[static_cast<std::size_t>(k)];
    if (is_nonpositive_integer(d)) {
      throw pole_error("c_" + std::to_string(k + 1) + " - b_" + std::to_string(k + 1) + " = " + fmt(d) +
                       " is a nonpositive integer");
    }
  }
}

}  // namespace

void SummationParams::validate() const {
  if (n() < 2) throw parameter_error("summation formula needs n >= 2 parameters b_k");
  if (!std::isfinite(a)) throw parameter_error("a must be finite");
  if (is_nonpositive_integer(a)) throw parameter_error("a = " + fmt(a) + " is a nonpositive integer");
  const double excess = a - sum_of(b);
  if (!(excess > 0.0)) throw domain_violation("summation formula needs a > sum b_k, got a - sum b = " + fmt(excess));
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (!std::isfinite(b[k])) throw parameter_error("b_k must be finite");
    if (is_nonpositive_integer(a - b[k])) {
      throw parameter_error("a - b_" + std::to_string(k + 1) + " = " + fmt(a - b[k]) + " is a nonpositive integer");
    }
  }
}

EvalResult lemma2_lhs(const SummationParams& params, const SeriesControl& ctl) {
  ctl.validate();
  params.validate();
  const int n = params.n();
  const auto nn = static_cast<std::size_t>(n);
  const int slots = TriangularMultiIndex::slot_count(n);

  PochhammerTable la(params.a);
  PochhammerTable lfact(1.0);
  std::vector<PochhammerTable> lb, lamb;
  for (double bk : params.b) {
    lb.emplace_back(bk);
    lamb.emplace_back(params.a - bk);
  }

  // (b_k)_B (a-b_k)_{A-B} / (a)_A in log space.
  auto log_ratio = [&](std::size_t k, int ak, int bk) {
    const SignedLog& pb = lb[k](bk);
    const SignedLog& pab = lamb[k](ak - bk);
    const SignedLog& pa = la(ak);
    return SignedLog{pb.log_abs + pab.log_abs - pa.log_abs, pb.sign * pab.sign * pa.sign};
  };
  // Linear-space copies indexed A * stride + B.
  constexpr std::size_t stride = kLinearWeightLimit + 1;
  std::vector<std::vector<double>> ratio(nn);
  int ratio_rows = 0;
  auto grow_ratio = [&](int rows) {
    for (; ratio_rows < rows; ++ratio_rows) {
      for (std::size_t k = 0; k < nn; ++k) {
        ratio[k].resize(static_cast<std::size_t>(ratio_rows + 1) * stride, 0.0);
        for (int bk = 0; bk <= ratio_rows; ++bk) {
          ratio[k][static_cast<std::size_t>(ratio_rows) * stride + static_cast<std::size_t>(bk)] =
              log_ratio(k, ratio_rows, bk).value();
        }
      }
    }
  };

  std::vector<int> e(static_cast<std::size_t>(slots)), a_w(nn + 1), b_w(nn + 1);
  auto weights_of_current = [&](int w) {
    fill_weight_vectors(n, e, a_w, b_w);
    int b_total = 0;
    for (std::size_t k = 1; k <= nn; ++k) {
      b_total += b_w[k];
      if (a_w[k] < b_w[k]) {
        throw diagnostic_error("A(" + std::to_string(k) + ",n) < B(" + std::to_string(k) +
                               ",n) encountered; the summand is undefined");
      }
    }
    if (b_total % 2 != 0) throw diagnostic_error("sum of B(k,n) is odd for a multi-index of weight " + std::to_string(w));
  };

  // Depth-first walk over slots in row-major order (lexicographic over the
  // entry vector) carrying A(k,n), B(k,n) and the product of g(m) along the way.
  // The last two slots share the remaining weight; along that line every table
  // index moves by a fixed stride.
  struct SlotTarget {
    std::size_t first_a;  // A(k,n) grows for k >= i-1
    std::size_t col_b;  // B(j,n)
    std::size_t row_b;  // B(i-1,n)

    int a_step(std::size_t k) const { return k >= first_a ? 1 : 0; }
    int b_step(std::size_t k) const { return (k == col_b ? 1 : 0) + (k == row_b ? 1 : 0); }
  };
  std::vector<SlotTarget> targets;
  for (int i = 2; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      targets.push_back({static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j), static_cast<std::size_t>(i - 1)});
    }
  }
  std::vector<double> scaled_inv_fact;
  auto bump = [&](const SlotTarget& t, int delta) {
    for (std::size_t k = t.first_a; k <= nn; ++k) a_w[k] += delta;
    b_w[t.col_b] += delta;
    b_w[t.row_b] += delta;
  };
  auto check_current = [&](int w) {
    int b_total = 0;
    for (std::size_t k = 1; k <= nn; ++k) {
      b_total += b_w[k];
      if (a_w[k] < b_w[k]) {
        throw diagnostic_error("A(" + std::to_string(k) + ",n) < B(" + std::to_string(k) +
                               ",n) encountered; the summand is undefined");
      }
    }
    if (b_total % 2 != 0) throw diagnostic_error("sum of B(k,n) is odd for a multi-index of weight " + std::to_string(w));
  };
  auto table_index = [&](std::size_t k) {
    return static_cast<std::ptrdiff_t>(a_w[k]) * static_cast<std::ptrdiff_t>(stride) + b_w[k];
  };
  std::vector<std::ptrdiff_t> line_base(nn + 1), line_step(nn + 1);
  auto linear_shell = [&](int w) {
    std::fill(a_w.begin(), a_w.end(), 0);
    std::fill(b_w.begin(), b_w.end(), 0);
    const auto g = [&](int m) { return scaled_inv_fact[static_cast<std::size_t>(m)]; };
    double total = 0.0;
    auto descend = [&](auto&& self, std::size_t s, int remaining, double partial) -> void {
      const SlotTarget& t = targets[s];
      if (s + 1 == targets.size()) {
        bump(t, remaining);
        check_current(w);
        double term = partial * g(remaining);
        for (std::size_t k = 1; k <= nn; ++k) term *= ratio[k - 1][static_cast<std::size_t>(table_index(k))];
        total += term;
        bump(t, -remaining);
        return;
      }
      if (s + 2 == targets.size()) {
        // m on slot s, remaining - m on the last slot. A - B is linear in m,
        // so checking both ends covers the line; parity is preserved by each step.
        const SlotTarget& last = targets[s + 1];
        bump(last, remaining);
        check_current(w);
        for (std::size_t k = 1; k <= nn; ++k) {
          line_base[k] = table_index(k);
          line_step[k] = static_cast<std::ptrdiff_t>(t.a_step(k) - last.a_step(k)) * static_cast<std::ptrdiff_t>(stride) +
                         (t.b_step(k) - last.b_step(k));
        }
        bump(last, -remaining);
        bump(t, remaining);
        check_current(w);
        bump(t, -remaining);
        for (int m = 0; m <= remaining; ++m) {
          double term = partial * g(m) * g(remaining - m);
          for (std::size_t k = 1; k <= nn; ++k) {
            term *= ratio[k - 1][static_cast<std::size_t>(line_base[k] + m * line_step[k])];
          }
          total += term;
        }
        return;
      }
      for (int m = 0; m <= remaining; ++m) {
        self(self, s + 1, remaining - m, partial * g(m));
        bump(t, 1);
      }
      bump(t, -(remaining + 1));
    };
    descend(descend, 0, w, 1.0);
    return total;
  };

  // Shell sums at unit argument fall off like a power of the weight.
  const double exponent_bound = params.a - sum_of(params.b) + 1.0;
  ShellAccumulator acc(ctl, TailModel::power_law, exponent_bound);
  for (int w = 0; acc.wants_more(); ++w) {
    double shell = 0.0;
    const SignedLog& top = la(w);
    if (top.sign == 0) {
      acc.add(0.0);
      continue;
    }
    if (w <= kLinearWeightLimit) {
      // (a)_w / prod m! = scale * prod g(m) with g(m) = c^m / m!, c = w / slots
      // keeping every partial product within double range.
      const double c = w == 0 ? 1.0 : static_cast<double>(w) / slots;
      scaled_inv_fact.resize(static_cast<std::size_t>(w) + 1);
      for (int m = 0; m <= w; ++m) {
        scaled_inv_fact[static_cast<std::size_t>(m)] = std::exp(m * std::log(c) - lfact(m).log_abs);
      }
      const double scale = top.sign * std::exp(top.log_abs - w * std::log(c));
      grow_ratio(w + 1);
      shell = scale * linear_shell(w);
    } else {
      detail::walk_compositions(std::span<int>(e), w, [&] {
        weights_of_current(w);
        double log_term = top.log_abs;
        int sign = top.sign;
        for (int m : e) log_term -= lfact(m).log_abs;
        for (std::size_t k = 0; k < nn; ++k) {
          const SignedLog r = log_ratio(k, a_w[k + 1], b_w[k + 1]);
          log_term += r.log_abs;
          sign *= r.sign;
        }
        if (sign != 0) shell += sign * std::exp(log_term);
      });
    }
    acc.add(shell);
  }
  return acc.result();
}

double lemma2_rhs(const SummationParams& params) {
  params.validate();
  const SignedLog head = log_gamma(params.a - sum_of(params.b));
  const SignedLog ga = log_gamma(params.a);
  double log_abs = head.log_abs + (params.n() - 1) * ga.log_abs;
  int sign = head.sign * ((params.n() - 1) % 2 == 0 ? 1 : ga.sign);
  for (double bk : params.b) {
    const SignedLog g = log_gamma(params.a - bk);
    log_abs -= g.log_abs;
    sign *= g.sign;
  }
  return sign * std::exp(log_abs);
}

RecurrenceCheck lemma2_recurrence(const SummationParams& params, const SeriesControl& ctl) {
  params.validate();
  if (params.n() < 3) throw parameter_error("the recurrence relates n+1 >= 3 variables to n >= 2");
  const double last = params.b.back();

  SummationParams reduced;
  reduced.a = params.a - last;
  reduced.b.assign(params.b.begin(), params.b.end() - 1);
  reduced.validate();

  // prod_k Gamma(a) Gamma(a - b_k - b_{n+1}) / (Gamma(a - b_{n+1}) Gamma(a - b_k))
  double log_p = 0.0;
  int sign = 1;
  const SignedLog ga = log_gamma(params.a);
  const SignedLog ga_last = log_gamma(params.a - last);
  for (double bk : reduced.b) {
    const SignedLog g1 = log_gamma(params.a - bk - last);
    const SignedLog g2 = log_gamma(params.a - bk);
    log_p += ga.log_abs + g1.log_abs - ga_last.log_abs - g2.log_abs;
    sign *= ga.sign * g1.sign * ga_last.sign * g2.sign;
  }

  RecurrenceCheck check;
  check.prefactor = sign * std::exp(log_p);
  check.lhs = lemma2_lhs(params, ctl);
  check.reduced = lemma2_lhs(reduced, ctl);
  check.rhs = check.prefactor * check.reduced.value;
  const double denom = std::abs(check.rhs);
  check.gap = std::abs(check.lhs.value - check.rhs) / denom;
  check.combined_error = (check.lhs.est_error + std::abs(check.prefactor) * check.reduced.est_error) / denom;
  return check;
}

double lemma2_recurrence_gap(const SummationParams& params, const SeriesControl& ctl) {
  return lemma2_recurrence(params, ctl).gap;
}

EvalResult lemma3_lhs(const LauricellaParams& params, double t, const SeriesControl& ctl) {
  check_lemma3(params);
  if (!(t > 0.0 && t <= 1.0)) throw domain_violation("limit evaluation needs 0 < t <= 1, got " + fmt(t));
  const std::vector<double> ts(static_cast<std::size_t>(params.n()), t);
  // t^(-sum b) cancels the prefactor prod t^(b_k) of the left-shifted form exactly.
  return fa_left_shifted_unscaled(params, ts, ctl);
}

double lemma3_rhs(const LauricellaParams& params) {
  check_lemma3(params);
  const SignedLog head = log_gamma(params.a - sum_of(params.b));
  const SignedLog ga = log_gamma(params.a);
  double log_abs = head.log_abs - ga.log_abs;
  int sign = head.sign * ga.sign;
  for (int k = 0; k < params.n(); ++k) {
    const SignedLog gc = log_gamma(params.c[static_cast<std::size_t>(k)]);
    const SignedLog gcb = log_gamma(params.c[static_cast<std::size_t>(k)] - params.b[static_cast<std::size_t>(k)]);
    log_abs += gc.log_abs - gcb.log_abs;
    sign *= gc.sign * gcb.sign;
  }
  return sign * std::exp(log_abs);
}

double lemma3_error_exponent(const LauricellaParams& params) {
  return std::min(1.0, params.a - sum_of(params.b));
}

double richardson_extrapolate(double at_t, double at_half_t, double exponent) {
  const double factor = std::pow(2.0, exponent);
  return (factor * at_half_t - at_t) / (factor - 1.0);
}

}  // namespace lauricella
