#include <gtest/gtest.h>

#include <random>

#include "hypalg/generators.hpp"
#include "hypalg/hilbert.hpp"
#include "support/oracles.hpp"

using namespace hypalg;

namespace {

const std::vector<std::pair<FieldSpec, long long>> kFields{
    {FieldSpec::gf2(), 2}, {FieldSpec::prime(3), 3}, {FieldSpec::prime(7), 7},
    {FieldSpec::rationals(), 0}};

}  // namespace

TEST(Monomials, GradedPrefixSums) {
  EXPECT_EQ(binomial_prefix_sum(5, 2), 16U);
  EXPECT_EQ(binomial_prefix_sum(4, 4), 16U);
  EXPECT_EQ(monomials_up_to(4, 2).size(), 11U);
  EXPECT_EQ(Monomial{0}.to_string(), "1");
  EXPECT_EQ(Monomial{0b101}.to_string(), "x1x3");
  EXPECT_EQ(subsets_of_size(4, 2).size(), 6U);
}

TEST(Monomials, ColumnBudgetIsEnforced) {
  Budget tight;
  tight.column_log2 = 4;
  EXPECT_THROW(monomials_up_to(6, 6, tight), BudgetExceeded);
  EXPECT_NO_THROW(monomials_up_to(4, 4, tight));
  EXPECT_THROW(hilbert_series(PointSet::cube(6), FieldSpec::gf2(), tight), BudgetExceeded);
}

TEST(Hilbert, SeriesMatchesRankOracle) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 4;
    const auto c = random_point_set(n, 1 + rng() % (std::size_t{1} << n), rng);
    const auto cube = oracle::cube_of(c);
    for (const auto& [field, p] : kFields) {
      const auto series = hilbert_series(c, field);
      ASSERT_EQ(series.size(), static_cast<std::size_t>(n + 1));
      for (int d = 0; d <= n; ++d) {
        EXPECT_EQ(series[static_cast<std::size_t>(d)], oracle::hilbert(cube, n, d, p));
        EXPECT_EQ(hilbert_function(c, d, field), series[static_cast<std::size_t>(d)]);
      }
    }
  }
}

TEST(Hilbert, BoundsHoldOverEveryField) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + trial % 5;
    const auto c = random_point_set(n, 1 + rng() % (std::size_t{1} << n), rng);
    const int vc = vc_dimension(c);
    const int max_sstr = strongly_shattered_family(c).max_member_size();
    for (const auto& [field, p] : kFields) {
      const auto series = hilbert_series(c, field);
      for (int d = 0; d <= n; ++d) {
        const auto b = hilbert_bounds(c, d);
        const auto h = series[static_cast<std::size_t>(d)];
        EXPECT_LE(b.lower_sstr, b.lower_shift);
        EXPECT_LE(b.lower_shift, h);
        EXPECT_LE(h, b.upper_str);
      }
      const int intdeg = interpolation_degree(c, field);
      EXPECT_LE(max_sstr, intdeg);
      EXPECT_LE(intdeg, vc);
    }
  }
}

// The top degree of the shift basis is not a lower bound on the
// interpolation degree, even over GF(2): only the counting bound survives.
TEST(Hilbert, ShiftMaximumCanExceedInterpolationDegree) {
  const PointSet c(3, {0b001, 0b010, 0b100, 0b110});  // 100, 010, 001, 011
  EXPECT_EQ(full_shift(c).max_member_size(), 2);
  EXPECT_EQ(interpolation_degree(c, FieldSpec::gf2()), 1);
  for (int d = 0; d <= 3; ++d) {
    EXPECT_LE(hilbert_bounds(c, d).lower_shift, hilbert_function(c, d, FieldSpec::gf2()));
  }
  const auto parity = parity_set(5);
  EXPECT_EQ(full_shift(parity).max_member_size(), 4);
  EXPECT_EQ(interpolation_degree(parity, FieldSpec::rationals()), 2);
}

TEST(Hilbert, BasisConstructions) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 5;
    const auto c = random_point_set(n, 1 + rng() % (std::size_t{1} << n), rng);
    for (const auto& [field, p] : kFields) {
      EXPECT_TRUE(verify_shift_basis(c, field));
      EXPECT_TRUE(verify_str_spanning(c, field));
      EXPECT_TRUE(verify_sstr_independent(c, field));
    }
  }
}

TEST(Hilbert, ShiftBasisOfDownwardClosedSetIsItself) {
  const std::vector<Subset> seeds{0b0111, 0b1001};
  const auto d = downward_closure(4, seeds);
  const auto c = as_point_set(d);
  std::vector<Subset> basis;
  for (const auto& m : shift_basis(c)) basis.push_back(m.support);
  EXPECT_TRUE(SetFamily(4, basis).same_members(d));
}

TEST(Hilbert, ParityOverCharacteristicTwo) {
  for (int n : {3, 5, 7}) {
    const auto p = parity_set(n);
    const auto series = hilbert_series(p, FieldSpec::gf2());
    for (int d = 0; 2 * d <= n; ++d) {
      EXPECT_EQ(series[static_cast<std::size_t>(d)], oracle::binomial_sum(n - 1, d)) << n << ' ' << d;
    }
    EXPECT_EQ(strongly_shattered_family(p).size(), 1U);
  }
  const auto b = hilbert_bounds(parity_set(5), 2);
  EXPECT_EQ(b, (HilbertBounds{1, 11, 16}));
}

TEST(Hilbert, ParityOverOtherFieldsExceedsTheShiftBound) {
  // Over Q the even-weight vectors of {0,1}^5 need only degree 2.
  const auto p = parity_set(5);
  EXPECT_EQ(hilbert_function(p, 1, FieldSpec::rationals()), 6U);
  EXPECT_EQ(hilbert_function(p, 2, FieldSpec::rationals()), 16U);
  EXPECT_EQ(hilbert_function(p, 2, FieldSpec::gf2()), 11U);
}

TEST(Hilbert, StandardBasisHasDegreeOne) {
  for (int m = 1; m <= 5; ++m) {
    const auto e = standard_basis(m, 5);
    EXPECT_EQ(interpolation_degree(e, FieldSpec::gf2()), m == 1 ? 0 : 1);
  }
}

TEST(Hilbert, FullCubeNeedsFullDegree) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(interpolation_degree(PointSet::cube(n), FieldSpec::prime(5)), n);
  }
}

TEST(Hilbert, IntdegOneCharacterization) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 4;
    const auto c = random_point_set(n, 1 + rng() % (n + 2), rng);
    for (const auto& [field, p] : kFields) {
      const bool affine = affinely_independent(c, field);
      EXPECT_EQ(interpolation_degree(c, field) <= 1, affine);
      EXPECT_NO_THROW(intdeg_one_characterization(c, field));
    }
  }
}

TEST(Hilbert, RejectsBadInput) {
  const PointSet empty(3);
  EXPECT_THROW(hilbert_function(empty, 1, FieldSpec::gf2()), DomainError);
  EXPECT_THROW(hilbert_function(PointSet(3, {1}), 4, FieldSpec::gf2()), DomainError);
  EXPECT_THROW(hilbert_function(PointSet(3, {1}), -1, FieldSpec::gf2()), DomainError);
}
