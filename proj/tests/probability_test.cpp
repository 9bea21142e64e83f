#include <gtest/gtest.h>

#include <cstdlib>
#include <string>

#include "hypertrees/errors.hpp"
#include "hypertrees/probability.hpp"
#include "hypertrees/recurrence.hpp"

using namespace hypertrees;

namespace {

mpq_class frac(const mpz_class& n, const mpz_class& d) {
  mpq_class r(n, d);
  r.canonicalize();
  return r;
}

RootDistribution exact(const SchlafliSymbol& pq, std::size_t i) {
  const auto counts = layer_counts(pq, i);
  return exact_distribution(pq, i, counts);
}

// Value in micro-units after rounding to 6 decimals.
long micros(const std::string& six) {
  const auto dot = six.find('.');
  return std::stol(six.substr(0, dot)) * 1'000'000 + std::stol(six.substr(dot + 1));
}

struct TableEntry {
  std::size_t i, j;
  const char* value;
};

const TableEntry kRounded[] = {
    {7, 7, "0.366025"},  {7, 6, "0.294229"},  {7, 5, "0.157677"},  {7, 4, "0.084499"},
    {7, 3, "0.045283"},  {7, 2, "0.024267"},  {7, 1, "0.013005"},  {7, 0, "0.015016"},
    {10, 10, "0.366025"}, {10, 9, "0.294228"}, {10, 8, "0.157677"}, {10, 7, "0.084499"},
    {10, 6, "0.045283"}, {10, 5, "0.024267"}, {10, 4, "0.013005"}, {10, 3, "0.006969"},
    {10, 2, "0.003735"}, {10, 1, "0.002001"}, {10, 0, "0.002311"},
};

}  // namespace

TEST(AsymptoticDistribution, RoundedFourFive) {
  const auto k = spectral_constants({4, 5});
  for (const auto& e : kRounded) {
    const auto d = asymptotic_distribution(k, e.i);
    const std::string ours = d.point_mass(e.j).to_decimal(6);
    SCOPED_TRACE(testing::Message() << "i=" << e.i << " j=" << e.j);
    EXPECT_LE(std::labs(micros(ours) - micros(e.value)), 1) << ours;
  }
}

TEST(AsymptoticDistribution, DigitsAtLevel7) {
  const auto k = spectral_constants({4, 5}, 6);
  const auto d = asymptotic_distribution(k, 7);
  EXPECT_EQ(k.decimal(d.point_mass(7)), "0.366025");
  EXPECT_EQ(k.decimal(d.point_mass(6)), "0.294229");
  EXPECT_EQ(k.decimal(d.point_mass(5)), "0.157677");
  EXPECT_EQ(k.decimal(d.point_mass(0)), "0.015016");
}

TEST(AsymptoticDistribution, NextToTopMassDoesNotDependOnLevel) {
  // (1-K)M = 0.2942286..., shown as 0.294229 after rounding
  const auto k = spectral_constants({4, 5}, 7);
  const QuadraticNumber expected = (QuadraticNumber(1L) - k.K) * k.M;
  for (std::size_t i = 2; i <= 12; ++i) EXPECT_EQ(asymptotic_distribution(k, i).point_mass(i - 1), expected);
  EXPECT_EQ(k.decimal(expected), "0.2942286");
  EXPECT_EQ(to_decimal(mpq_class(0), 6), "0.000000");
}

TEST(AsymptoticDistribution, LevelOne) {
  for (auto pq : {SchlafliSymbol(4, 5), SchlafliSymbol(7, 4), SchlafliSymbol(5, 9)}) {
    const auto k = spectral_constants(pq);
    const auto d = asymptotic_distribution(k, 1);
    EXPECT_EQ(d.point_mass(1), k.K);
    EXPECT_EQ(d.point_mass(0), QuadraticNumber(1L) - k.K);
    EXPECT_EQ(d.total(), QuadraticNumber(1L));
  }
  EXPECT_THROW(asymptotic_distribution(spectral_constants({4, 5}), 0), PreconditionError);
}

TEST(ExactDistribution, MainRootExamples) {
  EXPECT_EQ(exact({4, 5}, 7).point_mass(0), QuadraticNumber(frac(320, 29110)));
  EXPECT_EQ(exact({4, 5}, 10).point_mass(0), QuadraticNumber(frac(2560, 1513160)));
  EXPECT_EQ(to_decimal(frac(320, 29110), 6), "0.010993");
  EXPECT_EQ(to_decimal(frac(2560, 1513160), 6), "0.001692");
}

TEST(ExactDistribution, Level3) {
  const auto d = exact({4, 5}, 3);
  const long numerators[] = {20, 30, 45, 55};
  for (std::size_t j = 0; j <= 3; ++j) EXPECT_EQ(d.point_mass(j), QuadraticNumber(frac(numerators[j], 150))) << j;
  EXPECT_EQ(d.total(), QuadraticNumber(1L));
  EXPECT_EQ(d.cumulative_below(1), QuadraticNumber(frac(50, 150)));
  EXPECT_EQ(d.cumulative_below(3), QuadraticNumber(1L));
}

TEST(ExactDistribution, EuclideanClosedForms) {
  for (std::size_t i = 2; i <= 100; i += 7) {
    const auto d = exact({4, 4}, i);
    const mpz_class n(static_cast<unsigned long>(i));
    EXPECT_EQ(d.point_mass(0), QuadraticNumber(frac(1, 2 * n)));
    EXPECT_EQ(d.point_mass(i), QuadraticNumber(frac(1, 2 * n)));
    for (std::size_t j = 1; j < i; ++j) {
      const mpz_class m(static_cast<unsigned long>(j));
      ASSERT_EQ(d.cumulative_below(j), QuadraticNumber(frac(8 * m + 4, 8 * n))) << i << " " << j;
    }
  }
}

TEST(ExactDistribution, Rejections) {
  const auto counts = layer_counts({4, 5}, 5);
  EXPECT_THROW(exact_distribution({5, 3}, 3, counts), DegenerateSymbol);
  EXPECT_THROW(exact_distribution({3, 5}, 3, counts), DegenerateSymbol);
  EXPECT_THROW(exact_distribution({4, 5}, 6, counts), PreconditionError);
  EXPECT_THROW(asymptotic_distribution(spectral_constants({4, 4}), 3), RepeatedEigenvalue);
}

TEST(ErrorReport, Bounds) {
  const auto k = spectral_constants({4, 5});
  const auto r7 = distribution_error_report(asymptotic_distribution(k, 7), exact({4, 5}, 7));
  const auto r10 = distribution_error_report(asymptotic_distribution(k, 10), exact({4, 5}, 10));
  EXPECT_LT(r7.at(7).abs_error, QuadraticNumber(pow10(-6)));
  EXPECT_LT(r10.at(10).abs_error, QuadraticNumber(pow10(-10)));
  EXPECT_EQ(r7.main_root_order(), -3);
  EXPECT_EQ(r10.main_root_order(), -4);
  EXPECT_EQ(r7.rows.size(), 8U);
  EXPECT_EQ(r7.symbol, SchlafliSymbol(4, 5));
  EXPECT_EQ(r7.at(0).exact, QuadraticNumber(frac(320, 29110)));
}

TEST(ErrorReport, LevelHundredMainRoot) {
  const auto k = spectral_constants({4, 5}, 60);
  const auto r = distribution_error_report(asymptotic_distribution(k, 100), exact({4, 5}, 100));
  EXPECT_EQ(decimal_order(r.at(0).exact), -28);
}

TEST(ErrorReport, Rejections) {
  const auto k = spectral_constants({4, 5});
  const auto a7 = asymptotic_distribution(k, 7);
  const auto e7 = exact({4, 5}, 7);
  EXPECT_THROW(distribution_error_report(e7, e7), PreconditionError);
  EXPECT_THROW(distribution_error_report(a7, a7), PreconditionError);
  EXPECT_THROW(distribution_error_report(a7, exact({4, 5}, 8)), PreconditionError);
  EXPECT_THROW(distribution_error_report(a7, exact({5, 4}, 7)), PreconditionError);
}

// ---- properties ----

TEST(ProbabilityProperty, ExactNormalisation) {
  for (int p = 4; p <= 10; ++p) {
    for (int q = 4; q <= 10; ++q) {
      const SchlafliSymbol pq(p, q);
      const auto counts = layer_counts(pq, 40);
      for (std::size_t i = 1; i <= 40; ++i) {
        const auto d = exact_distribution(pq, i, counts);
        ASSERT_EQ(d.total(), QuadraticNumber(1L)) << pq.to_string() << " i=" << i;
        QuadraticNumber running;
        for (std::size_t j = 0; j <= i; ++j) {
          const auto m = d.point_mass(j);
          ASSERT_GE(m, QuadraticNumber());
          ASSERT_LE(m, QuadraticNumber(1L));
          running = running + m;
          ASSERT_EQ(d.cumulative_below(j), running);
        }
      }
    }
  }
}

TEST(ProbabilityProperty, AsymptoticNormalisation) {
  for (int p = 4; p <= 10; ++p) {
    for (int q = 4; q <= 10; ++q) {
      const SchlafliSymbol pq(p, q);
      if (!pq.is_hyperbolic()) continue;
      const auto k = spectral_constants(pq);
      for (std::size_t i = 1; i <= 40; i += 3) {
        const auto d = asymptotic_distribution(k, i);
        ASSERT_LT((d.total() - QuadraticNumber(1L)).abs(), QuadraticNumber(pow10(-12)));
        for (std::size_t j = 0; j <= i; ++j) {
          ASSERT_GE(d.point_mass(j), QuadraticNumber());
          ASSERT_LE(d.point_mass(j), QuadraticNumber(1L));
        }
      }
    }
  }
}

TEST(ProbabilityProperty, ErrorNonIncreasingInJ) {
  const auto k = spectral_constants({4, 5});
  for (std::size_t i = 2; i <= 12; ++i) {
    const auto r = distribution_error_report(asymptotic_distribution(k, i), exact({4, 5}, i));
    for (std::size_t j = 2; j <= i; ++j)
      ASSERT_LE(r.at(j).abs_error, r.at(j - 1).abs_error) << "i=" << i << " j=" << j;
  }
}
