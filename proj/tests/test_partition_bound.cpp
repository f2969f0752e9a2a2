#include <gtest/gtest.h>

#include "oracles.hpp"
#include "zxconn/errors.hpp"
#include "zxconn/json_io.hpp"
#include "zxconn/partition_bound.hpp"

using namespace zxconn;

TEST(RowCount, Examples) {
  EXPECT_EQ(row_count(9, 2), 210);
  EXPECT_EQ(row_count(13, 4), 3003);
  for (std::size_t np = 1; np <= 13; ++np) EXPECT_EQ(row_count(np, 0), 1);
}

TEST(RowCount, MatchesDirectScan) {
  for (std::size_t np = 1; np <= 16; ++np)
    for (std::size_t lam = 0; lam <= 9; ++lam)
      ASSERT_EQ(row_count(np, lam), oracle::scan_row_count(np, lam)) << np << "," << lam;
}

TEST(RowCount, ClosedFormEqualsRecurrence) {
  for (std::size_t np = 1; np <= 30; ++np)
    for (std::size_t lam = 0; lam <= 15; ++lam)
      ASSERT_EQ(row_count(np, lam), row_count_recurrence(np, lam)) << np << "," << lam;
}

TEST(RowCount, ColumnSumsArePowersOfTwo) {
  for (std::size_t np = 1; np <= 30; ++np) {
    BigInt sum = 0;
    for (std::size_t lam = 0; lam <= (np + 1) / 2; ++lam) sum += row_count(np, lam);
    ASSERT_EQ(sum, BigInt(1) << np);
  }
}

TEST(RowCountTable, ShapeAndSums) {
  const auto t = row_count_table(13);
  ASSERT_EQ(t.entries.size(), 8u);
  EXPECT_EQ(t.column_sums[12], 8192);
  EXPECT_EQ(t.entries[0][0], 1);
  EXPECT_EQ(t.entries[1][0], 1);
  EXPECT_EQ(t.column_sums[0], 2);
  EXPECT_THROW(row_count_table(0), DomainError);
}

TEST(RestrictedCompositions, SmallExamples) {
  std::vector<std::vector<std::size_t>> seen;
  RestrictedCompositions it(4, 3);
  while (it.next()) seen.push_back(it.current());
  EXPECT_EQ(seen, (std::vector<std::vector<std::size_t>>{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}}));
}

TEST(RestrictedCompositions, TenIntoEightWithCapTwo) {
  RestrictedCompositions it(10, 8, 2);
  std::size_t count = 0;
  while (it.next()) {
    const auto& c = it.current();
    EXPECT_EQ(std::count(c.begin(), c.end(), 2u), 2);
    EXPECT_EQ(std::count(c.begin(), c.end(), 1u), 6);
    ++count;
  }
  EXPECT_EQ(count, 28u);
  // Without the cap, (3,1,...,1) orderings appear as well.
  EXPECT_EQ(count_restricted_compositions(10, 8, kUnboundedPart), 28 + 8);
}

TEST(RestrictedCompositions, InfeasibleIsEmpty) {
  EXPECT_FALSE(RestrictedCompositions(10, 3, 2).next());
  EXPECT_FALSE(RestrictedCompositions(2, 3, 5).next());
  EXPECT_FALSE(RestrictedCompositions(5, 0, 5).next());
}

TEST(RestrictedCompositions, StreamMatchesOdometerEnumeration) {
  for (std::size_t m = 1; m <= 10; ++m) {
    for (std::size_t d = 1; d <= m; ++d) {
      for (std::size_t cap = 1; cap <= 4; ++cap) {
        std::vector<std::vector<std::size_t>> stream;
        RestrictedCompositions it(m, d, cap);
        while (it.next()) stream.push_back(it.current());
        std::vector<std::vector<std::size_t>> brute;
        oracle::for_each_composition(m, d, cap, [&](const auto& t) { brute.push_back(t); });
        std::sort(brute.begin(), brute.end());
        ASSERT_EQ(stream, brute) << m << "," << d << "," << cap;
        ASSERT_EQ(count_restricted_compositions(m, d, cap), BigInt(brute.size()));
      }
    }
  }
}

TEST(NdCount, WorkedExample) {
  const std::map<std::size_t, int> expected{{10, 100}, {9, 765}, {8, 1960}, {7, 1925}, {6, 600}, {5, 25}};
  for (const auto& [d, v] : expected) {
    EXPECT_EQ(n_d(5, 10, d), v) << d;
    EXPECT_EQ(oracle::enumerate_n_d(5, 10, d), v) << d;
  }
  for (std::size_t d = 1; d <= 4; ++d) EXPECT_EQ(n_d(5, 10, d), 0);
}

TEST(NdCount, DpShapesAndEnumerationAgree) {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (std::size_t m = 1; m <= 12; ++m) {
      for (std::size_t d = 1; d <= m; ++d) {
        const BigInt fast = n_d(n, m, d);
        ASSERT_EQ(fast, n_d_by_shapes(n, m, d)) << n << "," << m << "," << d;
        BigInt stream = 0;
        RestrictedCompositions it(m, d, n / 2);
        while (it.next())
          for (auto part : it.current()) stream += binomial(n, 2 * part);
        ASSERT_EQ(fast, stream) << n << "," << m << "," << d;
      }
    }
  }
}

TEST(NdCount, OdometerOracleOnWiderRange) {
  for (std::size_t n = 2; n <= 9; ++n)
    for (std::size_t m = 1; m <= 9; ++m)
      for (std::size_t d = 1; d <= m; ++d) ASSERT_EQ(n_d(n, m, d), oracle::enumerate_n_d(n, m, d));
}

TEST(MeanDepthBound, WorkedExampleIsExactRational) {
  const auto r = mean_depth_upper_bound(5, 10);
  EXPECT_EQ(r.mean_exact, BigRational(8153, 1075));
  EXPECT_EQ(r.mean_exact, oracle::enumerate_mean_depth(5, 10));
  EXPECT_NEAR(r.mean, 7.584186046511628, 1e-12);
  EXPECT_EQ(r.per_depth.size(), 6u);
  EXPECT_EQ(r.per_depth.at(8), 1960);
}

TEST(MeanDepthBound, FrozenOracleValues) {
  EXPECT_EQ(mean_depth_upper_bound(2, 1).mean_exact, BigRational(1));
  EXPECT_EQ(mean_depth_upper_bound(2, 1).per_depth.at(1), 1);
  const auto r55 = mean_depth_upper_bound(5, 5);
  EXPECT_EQ(r55.mean_exact, BigRational(99, 25));
  EXPECT_EQ(r55.per_depth, (std::map<std::size_t, BigInt>{{3, 60}, {4, 140}, {5, 50}}));
  const auto r69 = mean_depth_upper_bound(6, 9);
  EXPECT_EQ(r69.mean_exact, BigRational(68925, 11263));
  EXPECT_EQ(r69.per_depth.at(3), 3);
  EXPECT_EQ(r69.per_depth.at(9), 135);
  EXPECT_EQ(mean_depth_upper_bound(4, 6).mean_exact, BigRational(593, 124));
}

TEST(MeanDepthBound, MatchesEnumerationOracle) {
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::size_t m = 1; m <= 10; ++m)
      ASSERT_EQ(mean_depth_upper_bound(n, m).mean_exact, oracle::enumerate_mean_depth(n, m)) << n << "," << m;
}

TEST(MeanDepthBound, Infeasible) {
  EXPECT_THROW(mean_depth_upper_bound(1, 3), InfeasibleError);
  EXPECT_THROW(mean_depth_upper_bound(5, 0), InfeasibleError);
}

TEST(MeanDepthBound, LargeInputsStayExact) {
  // Overflows 64-bit integers long before the end.
  const auto r = mean_depth_upper_bound(40, 200);
  BigInt num = 0;
  BigInt den = 0;
  for (const auto& [d, c] : r.per_depth) {
    num += c * d;
    den += c;
  }
  EXPECT_GT(den, BigInt(std::numeric_limits<std::uint64_t>::max()));
  EXPECT_EQ(r.mean_exact, BigRational(num, den));
  EXPECT_GE(r.per_depth.begin()->first, 10u);
}

TEST(PartitionsIntoK, Examples) {
  EXPECT_EQ(partitions_into_k(10, 5), 7);
  EXPECT_EQ(partitions_into_k(12, 4), 15);
  for (std::size_t n = 1; n <= 20; ++n) EXPECT_EQ(partitions_into_k(n, n), 1);
  EXPECT_EQ(partitions_into_k(3, 5), 0);
}

TEST(PartitionsIntoK, MatchesEnumeration) {
  for (std::size_t n = 1; n <= 25; ++n)
    for (std::size_t k = 1; k <= n; ++k) ASSERT_EQ(partitions_into_k(n, k), oracle::enumerate_partitions(n, k));
}

TEST(Binomial, Basics) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(100, 50), BigInt("100891344545564193334812497256"));
}

TEST(Csv, TablesAndHistogram) {
  const std::string rows = row_count_table_csv(row_count_table(3));
  EXPECT_EQ(rows, "lambda,1,2,3\n0,1,1,1\n1,1,3,6\n2,0,0,1\nsum,2,4,8\n");
  const std::string parts = partition_table_csv(3);
  EXPECT_EQ(parts, "n,1,2,3\n1,1,0,0\n2,1,1,0\n3,1,1,1\n");
  EXPECT_EQ(per_depth_csv(mean_depth_upper_bound(2, 1)), "d,N_d\n1,1\n");
}

TEST(BoundJson, Schema) {
  const Json j = to_json(mean_depth_upper_bound(5, 10));
  EXPECT_EQ(j["mean_exact"], "8153/1075");
  EXPECT_EQ(j["per_depth"]["8"], "1960");
  EXPECT_EQ(j["n"], 5);
}
