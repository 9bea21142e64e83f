#include <gtest/gtest.h>

#include "hypertrees/errors.hpp"
#include "hypertrees/forest.hpp"
#include "hypertrees/mosaic.hpp"
#include "hypertrees/recurrence.hpp"
#include "oracles.hpp"

using namespace hypertrees;

namespace {

mpq_class frac(long n, long d) {
  mpq_class r(n, d);
  r.canonicalize();
  return r;
}

QuadraticNumber root3(long xn, long xd, long yn, long yd) {
  return {mpq_class(mpz_class(xn), mpz_class(xd)), mpq_class(mpz_class(yn), mpz_class(yd)), 3};
}

// All hyperbolic symbols with 4 <= p, q <= hi.
std::vector<SchlafliSymbol> hyperbolic_grid(int hi) {
  std::vector<SchlafliSymbol> out;
  for (int p = 4; p <= hi; ++p)
    for (int q = 4; q <= hi; ++q)
      if (SchlafliSymbol(p, q).is_hyperbolic()) out.emplace_back(p, q);
  return out;
}

const char* kLayerA[] = {"0", "5", "25", "95", "355", "1325", "4945", "18455", "68875", "257045", "959305"};
const char* kLayerB[] = {"1", "5", "15", "55", "205", "765", "2855", "10655", "39765", "148405", "553855"};

}  // namespace

TEST(SchlafliSymbol, GeometryClass) {
  EXPECT_EQ(SchlafliSymbol(4, 4).geometry(), Geometry::Euclidean);
  EXPECT_EQ(SchlafliSymbol(3, 6).geometry(), Geometry::Euclidean);
  EXPECT_EQ(SchlafliSymbol(6, 3).geometry(), Geometry::Euclidean);
  EXPECT_EQ(SchlafliSymbol(4, 5).geometry(), Geometry::Hyperbolic);
  EXPECT_EQ(SchlafliSymbol(3, 7).geometry(), Geometry::Hyperbolic);
  EXPECT_EQ(SchlafliSymbol(3, 5).geometry(), Geometry::Spherical);
  EXPECT_THROW(SchlafliSymbol(2, 5), InvalidSymbol);
  EXPECT_THROW(SchlafliSymbol(5, 2), InvalidSymbol);
  EXPECT_EQ(parse_symbol("4:5"), SchlafliSymbol(4, 5));
  EXPECT_EQ(parse_symbol("{5,4}"), SchlafliSymbol(5, 4));
  EXPECT_THROW(parse_symbol("45"), PreconditionError);
}

TEST(LayerCounts, Level4FollowsFromNeighbours) {
  // a_5 = 2 a_4 + 3 b_4 = 1325 with b_4 = 205 pins a_4 = 355.
  const auto counts = layer_counts({4, 5}, 5);
  EXPECT_EQ(counts[4].a, 2 * counts[3].a + 3 * counts[3].b);
  EXPECT_EQ(counts[4].a, 355);
  EXPECT_EQ(2 * counts[4].a + 3 * counts[4].b, 1325);
  EXPECT_EQ(counts[4].total(), 560);
}

TEST(LayerCounts, FourFiveToLevel10) {
  const auto counts = layer_counts({4, 5}, 10);
  ASSERT_EQ(counts.size(), 11U);
  for (std::size_t i = 0; i <= 10; ++i) {
    EXPECT_EQ(counts[i].level, i);
    EXPECT_EQ(counts[i].a, mpz_class(kLayerA[i])) << i;
    EXPECT_EQ(counts[i].b, mpz_class(kLayerB[i])) << i;
  }
  EXPECT_EQ(counts[10].total(), 1513160);
}

TEST(LayerCounts, ZeroLevelsIsTheMainRoot) {
  const auto counts = layer_counts({6, 7}, 0);
  ASSERT_EQ(counts.size(), 1U);
  EXPECT_EQ(counts[0], (LayerCounts{0, 0, 1}));
}

TEST(LayerCounts, EuclideanSquareGrid) {
  const auto counts = layer_counts({4, 4}, 5);
  for (std::size_t i = 1; i <= 5; ++i) {
    EXPECT_EQ(counts[i].a, 8 * static_cast<long>(i) - 4);
    EXPECT_EQ(counts[i].b, 4);
  }
}

TEST(LayerCounts, MatchesEnumeratedForestOn55) {
  const SchlafliSymbol pq(5, 5);
  const auto counts = layer_counts(pq, 4);
  const Forest f = grow(build(pq, 4), 4);
  for (std::size_t i = 0; i <= 4; ++i) {
    EXPECT_EQ(oracle::mpz(f.level_counts(i).a), counts[i].a);
    EXPECT_EQ(oracle::mpz(f.level_counts(i).b), counts[i].b);
  }
}

TEST(LayerCounts, RejectsDegenerateSymbols) {
  EXPECT_THROW(layer_counts({3, 7}, 3), DegenerateSymbol);
  EXPECT_THROW(layer_counts({7, 3}, 3), DegenerateSymbol);
  EXPECT_THROW(layer_counts({3, 3}, 3), DegenerateSymbol);
  EXPECT_THROW(require_tree_symbol({3, 5}), DegenerateSymbol);
}

TEST(RecursionMatrix, For45) {
  const auto m = recursion_matrix({4, 5});
  EXPECT_EQ(m.aa, 2);
  EXPECT_EQ(m.ab, 3);
  EXPECT_EQ(m.ba, 1);
  EXPECT_EQ(m.bb, 2);
}

TEST(SpectralConstants, ExactValuesFor45) {
  const auto k = spectral_constants({4, 5});
  EXPECT_EQ(k.c, 4);
  EXPECT_EQ(k.z1, root3(2, 1, 1, 1));
  EXPECT_EQ(k.z2, root3(2, 1, -1, 1));
  EXPECT_EQ(k.a.first, root3(-5, 2, 5, 2));
  EXPECT_EQ(k.b.first, root3(5, 2, -5, 6));
  EXPECT_EQ(k.ab.first, root3(0, 1, 5, 3));
  EXPECT_EQ(k.L, root3(0, 1, 1, 3));
  EXPECT_EQ(k.K, root3(-1, 2, 1, 2));
  EXPECT_EQ(k.M, root3(-3, 1, 2, 1));
  EXPECT_EQ(k.h, mpq_class(3, 2));
}

TEST(SpectralConstants, DecimalViewsFor45) {
  const auto k = spectral_constants({4, 5}, 6);
  EXPECT_EQ(k.decimal(k.z1), "3.732051");
  EXPECT_EQ(k.decimal(k.a.first), "1.830127");
  EXPECT_EQ(k.decimal(k.b.first), "1.056624");
  EXPECT_EQ(k.decimal(k.ab.first), "2.886751");
  EXPECT_EQ(k.decimal(k.L), "0.577350");
  EXPECT_EQ(k.decimal(k.K), "0.366025");
  EXPECT_EQ(k.decimal(k.M), "0.464102");
}

TEST(SpectralConstants, EigenvalueProductAndSum) {
  const auto k = spectral_constants({4, 5});
  EXPECT_EQ(k.z1 * k.z2, QuadraticNumber(1L));
  EXPECT_EQ(k.z1 + k.z2, QuadraticNumber(4L));
}

TEST(SpectralConstants, ClosedFormFor46AgreesWithRecursion) {
  const auto k = spectral_constants({4, 6});
  EXPECT_EQ(k.c, 6);
  EXPECT_EQ(k.z1, QuadraticNumber(mpq_class(3), mpq_class(2), 2));
  EXPECT_EQ(closed_form_count(k, 10, Sequence::A), layer_counts({4, 6}, 10)[10].a);
}

TEST(SpectralConstants, EuclideanHasRepeatedEigenvalue) {
  EXPECT_THROW(spectral_constants({4, 4}), RepeatedEigenvalue);
  EXPECT_THROW(spectral_constants({4, 5}, 0), PreconditionError);
}

TEST(ClosedForm, Examples) {
  const auto k45 = spectral_constants({4, 5});
  EXPECT_EQ(closed_form_count(k45, 10, Sequence::AB), 1513160);
  EXPECT_EQ(closed_form_count(k45, 1, Sequence::A), 5);
  const auto k54 = spectral_constants({5, 4});
  EXPECT_EQ(closed_form_count(k54, 8, Sequence::B), layer_counts({5, 4}, 8)[8].b);
  EXPECT_THROW(closed_form_count(k45, 0, Sequence::A), PreconditionError);
}

TEST(GrowthRatio, Level10Bound) {
  const auto k = spectral_constants({4, 5});
  EXPECT_EQ(growth_ratio({4, 5}, 10, Sequence::A), frac(3580175, 959305));
  EXPECT_LT(ratio_error(k, 10, Sequence::A), QuadraticNumber(pow10(-9)));
}

TEST(GrowthRatio, Level100At150Digits) {
  const auto k = spectral_constants({4, 5}, 150);
  const auto err = ratio_error(k, 100, Sequence::AB);
  EXPECT_LT(err, QuadraticNumber(pow10(-113)));
  EXPECT_GT(err, QuadraticNumber(pow10(-120)));
  const std::string shown = k.decimal(err);
  EXPECT_EQ(shown.substr(0, 2 + 113), "0." + std::string(113, '0'));
}

TEST(GrowthRatio, EuclideanRatioTendsToOne) {
  EXPECT_EQ(growth_ratio({4, 4}, 10, Sequence::A), mpq_class(21, 19));
  EXPECT_EQ(growth_ratio({4, 4}, 10, Sequence::B), 1);
  EXPECT_THROW(growth_ratio({4, 5}, 0, Sequence::A), PreconditionError);
}

TEST(CumulativeRootRatio, Level10) {
  mpz_class sum = 0;
  for (const char* b : kLayerB) sum += mpz_class(b);
  EXPECT_EQ(sum, 756581);
  EXPECT_EQ(cumulative_root_ratio({4, 5}, 10), mpq_class(mpz_class(553855), sum));
}

TEST(CumulativeRootRatio, ConvergesToLimit) {
  const auto k = spectral_constants({4, 5});
  EXPECT_EQ(k.root_share_limit(), root3(-1, 1, 1, 1));
  EXPECT_EQ(k.decimal(k.root_share_limit()).substr(0, 8), "0.732050");
  auto gap = [&](std::size_t i) {
    return (QuadraticNumber(cumulative_root_ratio({4, 5}, i)) - k.root_share_limit()).abs();
  };
  // gap shrinks by roughly z1 per level: 6.9e-8 at i = 12, below 1e-9 first at i = 16
  EXPECT_EQ(decimal_order(gap(12)), -8);
  EXPECT_GT(gap(15), QuadraticNumber(pow10(-9)));
  EXPECT_LT(gap(16), QuadraticNumber(pow10(-9)));
  for (std::size_t i = 2; i <= 40; ++i) ASSERT_LT(gap(i), gap(i - 1)) << i;
  EXPECT_THROW(cumulative_root_ratio({4, 5}, 0), PreconditionError);
}

TEST(EuclideanCounts, Formula) {
  EXPECT_EQ(euclidean_counts(1), (LayerCounts{1, 4, 4}));
  EXPECT_EQ(euclidean_counts(10), (LayerCounts{10, 76, 4}));
  EXPECT_EQ(euclidean_counts(5), layer_counts({4, 4}, 5)[5]);
  EXPECT_THROW(euclidean_counts(0), PreconditionError);
}

// ---- properties ----

TEST(RecurrenceProperty, ClosedFormEqualsRecursionUpTo200) {
  for (const auto& pq : hyperbolic_grid(12)) {
    const auto k = spectral_constants(pq);
    const auto counts = layer_counts(pq, 200);
    for (std::size_t i = 1; i <= 200; i += (i < 20 ? 1 : 9)) {
      ASSERT_EQ(closed_form_count(k, i, Sequence::A), counts[i].a) << pq.to_string() << " i=" << i;
      ASSERT_EQ(closed_form_count(k, i, Sequence::B), counts[i].b) << pq.to_string() << " i=" << i;
      ASSERT_EQ(closed_form_count(k, i, Sequence::AB), counts[i].total()) << pq.to_string() << " i=" << i;
    }
    ASSERT_EQ(closed_form_count(k, 200, Sequence::AB), counts[200].total()) << pq.to_string();
  }
}

TEST(RecurrenceProperty, MatrixPowerOracle) {
  for (int p = 4; p <= 12; ++p) {
    for (int q = 4; q <= 12; ++q) {
      const auto counts = layer_counts({p, q}, 60);
      for (unsigned i = 0; i <= 60; i += 7) {
        const auto [a, b] = oracle::counts_by_matrix_power(p, q, i);
        ASSERT_EQ(counts[i].a, a) << p << "," << q << " i=" << i;
        ASSERT_EQ(counts[i].b, b) << p << "," << q << " i=" << i;
      }
    }
  }
}

TEST(RecurrenceProperty, DeterminantOneTraceC) {
  for (int p = 4; p <= 30; ++p) {
    for (int q = 4; q <= 30; ++q) {
      const SchlafliSymbol pq(p, q);
      const auto m = recursion_matrix(pq);
      EXPECT_EQ(m.determinant(), 1) << pq.to_string();
      EXPECT_EQ(m.trace(), pq.trace()) << pq.to_string();
    }
  }
  for (const auto& pq : hyperbolic_grid(12)) {
    const auto k = spectral_constants(pq);
    EXPECT_EQ(k.z1 * k.z2, QuadraticNumber(1L));
    EXPECT_EQ(k.z1 + k.z2, QuadraticNumber(k.c));
    EXPECT_GT(k.z1, QuadraticNumber(1L));
    EXPECT_LT(k.z2, QuadraticNumber(1L));
    EXPECT_GT(k.z2, QuadraticNumber());
    const QuadraticNumber one(1L);
    EXPECT_EQ(k.K, k.L / (one + k.L));
    EXPECT_EQ(k.M, QuadraticNumber(k.h) * k.L / (one + QuadraticNumber(k.h) * k.L));
  }
}

TEST(RecurrenceProperty, RadicandNeverSquare) {
  for (long c = 3; c <= 5000; ++c) {
    const mpz_class c2(c);
    ASSERT_FALSE(QuadraticNumber::sqrt(c2 * c2 - 4).is_rational()) << c;
  }
}

TEST(RecurrenceProperty, InitialValues) {
  for (int p = 4; p <= 15; ++p) {
    for (int q = 4; q <= 15; ++q) {
      const auto counts = layer_counts({p, q}, 3);
      EXPECT_EQ(counts[1].a, q);
      EXPECT_EQ(counts[1].b, q * (p - 3));
      EXPECT_GT(counts[3].a, 0);
      EXPECT_GT(counts[3].b, 0);
    }
  }
}

TEST(RecurrenceProperty, RatioErrorStrictlyDecreasing) {
  for (const auto& pq : hyperbolic_grid(10)) {
    const auto k = spectral_constants(pq);
    for (Sequence s : {Sequence::A, Sequence::B, Sequence::AB}) {
      QuadraticNumber previous = ratio_error(k, 2, s);
      for (std::size_t i = 3; i <= 25; ++i) {
        const QuadraticNumber current = ratio_error(k, i, s);
        ASSERT_LT(current, previous) << pq.to_string() << " " << to_string(s) << " i=" << i;
        previous = current;
      }
    }
  }
}

TEST(RecurrenceProperty, EuclideanSpecialisation) {
  const auto counts = layer_counts({4, 4}, 100);
  for (std::size_t i = 1; i < 100; ++i) {
    ASSERT_EQ(counts[i + 1].a, counts[i].a + 8);
    ASSERT_EQ(counts[i + 1].b, counts[i].b);
    ASSERT_EQ(counts[i + 1], euclidean_counts(i + 1));
  }
}
