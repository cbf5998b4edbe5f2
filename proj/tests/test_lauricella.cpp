#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "fixtures/oracle_cases.hpp"
#include "lauricella/error.hpp"
#include "lauricella/lauricella.hpp"

using namespace lauricella;

namespace {

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

std::vector<double> zeros(std::size_t n) { return std::vector<double>(n, 0.0); }

}  // namespace

TEST(FaDirect, ZeroArgument) {
  const LauricellaParams p{0.7, {1.2, 0.4, 2.0}, {2.2, 1.4, 0.3}};
  const auto z = zeros(3);
  EXPECT_EQ(fa_direct(p, z).value, 1.0);
  EXPECT_EQ(fa_recursive(p, z).value, 1.0);
  EXPECT_EQ(fa_decomposed(p, z).value, 1.0);
}

TEST(FaDirect, OneVariableIsGauss) {
  const LauricellaParams p{1.3, {0.6}, {2.1}};
  const std::vector<double> z{0.45};
  EXPECT_LE(rel(fa_direct(p, z).value, gauss_2f1(1.3, 0.6, 2.1, 0.45).value), 1e-13);
}

TEST(FaDirect, Collapse) {
  const LauricellaParams p{1.0, {0.4, 0.9}, {0.4, 0.9}};
  const std::vector<double> z{0.25, 0.25};
  EXPECT_LE(rel(fa_direct(p, z).value, 2.0), 1e-12);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.1, 2.0), w(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 3;
    LauricellaParams q{u(rng), {}, {}};
    std::vector<double> zz;
    double total = 0.0;
    for (int k = 0; k < n; ++k) {
      q.b.push_back(u(rng));
      zz.push_back(w(rng));
      total += zz.back();
    }
    q.c = q.b;
    const double scale = 0.8 * w(rng) / total;
    double sum = 0.0;
    for (auto& v : zz) sum += (v *= scale);
    EXPECT_LE(rel(fa_direct(q, zz).value, std::pow(1.0 - sum, -q.a)), 1e-10) << trial;
  }
}

TEST(FaDirect, Oracle) {
  for (const auto& c : oracle::fa_cases) {
    const LauricellaParams p{c.a, c.b, c.c};
    const auto r = fa_direct(p, c.z);
    EXPECT_TRUE(r.converged);
    EXPECT_LE(rel(r.value, c.value), 1e-11);
  }
}

TEST(FaDirect, EstimatedErrorCoversRemainder) {
  SeriesControl ctl;
  ctl.rel_tol = 1e-7;
  ctl.plateau = 1;
  for (const auto& c : oracle::fa_tail_cases) {
    const LauricellaParams p{c.a, c.b, c.c};
    const auto r = fa_direct(p, c.z, ctl);
    EXPECT_LE(std::abs(r.value - c.value), r.est_error) << c.a;
    EXPECT_GT(r.est_error, 0.0);
  }
}

TEST(FaDirect, Symmetry) {
  const LauricellaParams p{1.1, {0.25, 0.35, 0.15}, {0.9, 1.4, 2.0}};
  const std::vector<double> z{0.1, 0.2, 0.05};
  const LauricellaParams q{1.1, {0.15, 0.25, 0.35}, {2.0, 0.9, 1.4}};
  const std::vector<double> zq{0.05, 0.1, 0.2};
  EXPECT_LE(rel(fa_direct(p, z).value, fa_direct(q, zq).value), 1e-12);
  EXPECT_LE(rel(fa_decomposed(p, z).value, fa_decomposed(q, zq).value), 1e-12);
}

TEST(FaDirect, Reduction) {
  const LauricellaParams p{1.1, {0.25, 0.35, 0.15}, {0.9, 1.4, 2.0}};
  const LauricellaParams q{1.1, {0.25, 0.35}, {0.9, 1.4}};
  const std::vector<double> z{0.1, -0.2, 0.0};
  const std::vector<double> zq{0.1, -0.2};
  EXPECT_EQ(fa_direct(p, z).value, fa_direct(q, zq).value);
}

TEST(FaDirect, Domain) {
  const LauricellaParams p{1.0, {1.0, 1.0}, {1.0, 1.0}};
  const std::vector<double> z{0.6, 0.6};
  EXPECT_THROW(fa_direct(p, z), domain_violation);
  EXPECT_THROW(fa_recursive(p, z), domain_violation);
  EXPECT_THROW(fa_decomposed(p, z), domain_violation);
  const std::vector<double> wrong{0.1};
  EXPECT_THROW(fa_direct(p, wrong), parameter_error);
  const LauricellaParams pole{1.0, {1.0, 1.0}, {1.0, -2.0}};
  EXPECT_THROW(fa_direct(pole, std::vector<double>{0.1, 0.1}), parameter_error);
}

TEST(FaDirect, RelaxedOutsideDomain) {
  const LauricellaParams p{0.5, {0.5, 0.5}, {1.5, 1.5}};
  const std::vector<double> z{0.55, 0.55};
  SeriesControl ctl;
  ctl.max_weight = 60;
  const auto r = fa_direct(p, z, ctl, DomainCheck::relaxed);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.weight_used, 60);
}

TEST(FaRecursive, Examples) {
  const LauricellaParams p2{1.4, {0.7, 1.3}, {1.9, 0.8}};
  const std::vector<double> z2{0.2, 0.1};
  EXPECT_LE(rel(fa_recursive(p2, z2).value, fa_direct(p2, z2).value), 1e-11);

  const LauricellaParams p3{0.9, {0.2, 0.3, 0.4}, {1.1, 1.2, 1.3}};
  const std::vector<double> z3{0.1, 0.15, 0.2};
  EXPECT_LE(rel(fa_recursive(p3, z3).value, fa_direct(p3, z3).value), 1e-9);

  const std::vector<double> only_first{0.3, 0.0, 0.0};
  EXPECT_LE(rel(fa_recursive(p3, only_first).value, gauss_2f1(0.9, 0.2, 1.1, 0.3).value), 1e-14);
}

TEST(FaDecomposed, Example) {
  const LauricellaParams p{1.1, {0.25, 0.35, 0.15}, {0.9, 1.4, 2.0}};
  const std::vector<double> z{0.1, 0.1, 0.1};
  EXPECT_LE(rel(fa_decomposed(p, z).value, fa_direct(p, z).value), 1e-9);
}

TEST(FaDecomposed, TwoVariableTerms) {
  // one slot, A = B = m22: the term is the F_2 expansion term
  const LauricellaParams p{1.3, {0.6, 0.9}, {1.7, 2.2}};
  const std::vector<double> z{0.2, 0.3};
  for (int m = 0; m <= 10; ++m) {
    const TriangularMultiIndex idx(2, {m});
    double expected = pochhammer(1.3, m) * pochhammer(0.6, m) * pochhammer(0.9, m) /
                      (pochhammer(1.7, m) * pochhammer(2.2, m) * pochhammer(1.0, m)) * std::pow(0.2 * 0.3, m);
    expected *= gauss_2f1(1.3 + m, 0.6 + m, 1.7 + m, 0.2).value * gauss_2f1(1.3 + m, 0.9 + m, 2.2 + m, 0.3).value;
    EXPECT_LE(rel(decomposition_term(p, z, idx), expected), 1e-13) << m;
  }
}

TEST(FaDecomposed, CrossAgreement) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ub(0.1, 2.0), uc(0.5, 3.0), uz(-1.0, 1.0), us(0.0, 0.5);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 2 + trial % 2;
    LauricellaParams p{ub(rng), {}, {}};
    std::vector<double> z;
    double total = 0.0;
    for (int k = 0; k < n; ++k) {
      p.b.push_back(ub(rng));
      p.c.push_back(uc(rng));
      z.push_back(uz(rng));
      total += std::abs(z.back());
    }
    const double s = us(rng) / total;
    for (auto& v : z) v *= s;
    const double d = fa_direct(p, z).value;
    EXPECT_LE(rel(fa_decomposed(p, z).value, d), 1e-9) << trial;
    EXPECT_LE(rel(fa_recursive(p, z).value, d), 1e-9) << trial;
  }
}

TEST(FaDecomposed, Domain) {
  const LauricellaParams p{1.0, {1.0, 1.0}, {2.0, 2.0}};
  EXPECT_THROW(fa_decomposed(LauricellaParams{1.0, {1.0}, {2.0}}, std::vector<double>{0.1}), parameter_error);
  EXPECT_THROW(fa_decomposed(p, std::vector<double>{1.0, 0.0}, {}, DomainCheck::relaxed), domain_violation);
  EXPECT_NO_THROW(fa_decomposed(p, std::vector<double>{0.6, 0.6}, {}, DomainCheck::relaxed));
}

TEST(FaLeftShifted, Examples) {
  const LauricellaParams p{2.5, {0.3, 0.4}, {1.5, 1.7}};
  EXPECT_LE(rel(fa_left_shifted(p, std::vector<double>{1.0, 1.0}).value, 1.0), 1e-15);

  const LauricellaParams one{1.2, {0.7}, {2.3}};
  EXPECT_LE(rel(fa_left_shifted(one, std::vector<double>{0.5}).value, gauss_2f1(1.2, 0.7, 2.3, -1.0).value), 1e-13);

  const std::vector<double> t{0.8, 0.9};
  const std::vector<double> z{-0.25, 1.0 - 1.0 / 0.9};
  EXPECT_LE(rel(fa_left_shifted(p, t).value, fa_direct(p, z).value), 1e-11);
}

TEST(FaLeftShifted, ThreeVariables) {
  const LauricellaParams p{1.7, {0.3, 0.45, 0.2}, {1.5, 1.2, 2.4}};
  const std::vector<double> t{0.9, 0.85, 0.95};
  std::vector<double> z;
  for (double v : t) z.push_back(1.0 - 1.0 / v);
  EXPECT_LE(rel(fa_left_shifted(p, t).value, fa_direct(p, z).value), 1e-10);
}

TEST(FaLeftShifted, Domain) {
  const LauricellaParams p{1.0, {0.5, 0.5}, {1.5, 1.5}};
  EXPECT_THROW(fa_left_shifted(p, std::vector<double>{0.0, 0.5}), domain_violation);
  EXPECT_THROW(fa_left_shifted(p, std::vector<double>{1.5, 0.5}), domain_violation);
}

TEST(FaDirect, DeterministicRepeat) {
  const LauricellaParams p{1.1, {0.25, 0.35, 0.15}, {0.9, 1.4, 2.0}};
  const std::vector<double> z{0.1, 0.2, 0.05};
  const auto a = fa_decomposed(p, z);
  const auto b = fa_decomposed(p, z);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.est_error, b.est_error);
}
