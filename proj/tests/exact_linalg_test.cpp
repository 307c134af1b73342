#include <random>

#include <gtest/gtest.h>

#include "distinv/exact_linalg.hpp"
#include "distinv/generators.hpp"
#include "oracles.hpp"

namespace distinv {
namespace {

std::vector<mpz_class> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

IntMatrix random_matrix(int n, int bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = entry(rng);
  }
  return m;
}

IntMatrix random_unimodular(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> idx(0, n - 1);
  std::uniform_int_distribution<int> mult(-3, 3);
  IntMatrix u = IntMatrix::identity(n);
  for (int step = 0; step < 4 * n; ++step) {
    const int i = idx(rng);
    const int j = idx(rng);
    if (i == j) continue;
    const int c = mult(rng);
    for (int k = 0; k < n; ++k) u(i, k) += c * u(j, k);
  }
  return u;
}

TEST(Snf, CricketAndCycleExamples) {
  EXPECT_EQ(snf(build(graphs::cricket(), MatrixKind::Atr)).diagonal(), ints({1, 1, 1, 7, 812}));
  const Graph c5 = graphs::cycle(5);
  EXPECT_EQ(snf(build(c5, MatrixKind::A)).diagonal(), ints({1, 1, 1, 1, 2}));
  EXPECT_EQ(snf(build(c5, MatrixKind::L)).diagonal(), ints({1, 1, 1, 5, 0}));
  EXPECT_EQ(snf(build(c5, MatrixKind::Atr)).diagonal(), ints({1, 1, 1, 41, 164}));
  EXPECT_EQ(snf(build(c5, MatrixKind::AtrPlus)).diagonal(), ints({1, 1, 1, 29, 232}));
}

TEST(Snf, SmallHandExamples) {
  EXPECT_EQ(snf(IntMatrix{{2, 0}, {0, 3}}).diagonal(), ints({1, 6}));
  EXPECT_EQ(snf(IntMatrix{{0, 0}, {0, 0}}).diagonal(), ints({0, 0}));
  EXPECT_EQ(snf(IntMatrix{{-4}}).diagonal(), ints({4}));
  EXPECT_EQ(snf(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).diagonal(), ints({2, 6, 12}));
  EXPECT_EQ(snf(IntMatrix(0)).dimension(), 0);
}

TEST(Snf, ToStringAndFromDiagonal) {
  const auto s = SnfResult::from_diagonal(ints({1, 1, 1, 7, 812, 0}));
  EXPECT_EQ(s.to_string(), "(1,1,1,7,812,0)");
  EXPECT_EQ(s.rank(), 5);
  EXPECT_EQ(s.zeros, 1);
  EXPECT_EQ(s.product(), 5684);
}

TEST(Snf, AgreesWithMinorGcdOracleOnGraphs) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : generate_connected_graphs(n)) {
      for (auto kind : kAllMatrixKinds) {
        const IntMatrix m = build(g, kind);
        EXPECT_EQ(snf(m).diagonal(), oracle::invariant_factors_from_minors(m)) << to_string(kind);
      }
    }
  }
}

TEST(Snf, AgreesWithMinorGcdOracleOnRandomMatrices) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 5;
    const IntMatrix m = random_matrix(n, trial % 3 == 0 ? 2 : 12, rng);
    const auto s = snf(m);
    EXPECT_TRUE(s.divisibility_chain_holds());
    EXPECT_EQ(s.diagonal(), oracle::invariant_factors_from_minors(m));
  }
}

TEST(Snf, InvariantUnderNegationPermutationAndUnimodularMaps) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 7;
    const Graph g = oracle::random_connected(n, 0.4, rng);
    std::vector<int> perm;
    const Graph h = oracle::shuffled(g, rng, &perm);
    for (auto kind : kCensusMatrixKinds) {
      const IntMatrix m = build(g, kind);
      const auto s = snf(m);
      EXPECT_TRUE(s.divisibility_chain_holds());
      EXPECT_EQ(snf(-m), s);
      EXPECT_EQ(snf(build(h, kind)), s);
      EXPECT_EQ(snf(random_unimodular(n, rng) * m * random_unimodular(n, rng)), s);
    }
  }
}

TEST(Snf, ProductMatchesDeterminant) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix m = random_matrix(1 + trial % 8, 20, rng);
    const auto s = snf(m);
    const mpz_class d = determinant(m);
    if (d == 0) {
      EXPECT_GT(s.zeros, 0);
    } else {
      EXPECT_EQ(s.product(), abs(d));
    }
    EXPECT_EQ(s.rank(), rank(m));
  }
}

TEST(Determinant, AgreesWithLeibniz) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix m = random_matrix(1 + trial % 6, 9, rng);
    EXPECT_EQ(determinant(m), oracle::leibniz_det(oracle::dense(m)));
  }
}

TEST(Determinant, Examples) {
  EXPECT_EQ(abs(determinant(build(graphs::cricket(), MatrixKind::Atr))), 5684);
  EXPECT_EQ(abs(determinant(build(graphs::cycle(5), MatrixKind::Atr))), 6724);
  EXPECT_EQ(determinant(build(graphs::cycle(5), MatrixKind::L)), 0);
  EXPECT_EQ(determinant(IntMatrix(0)), 1);
}

TEST(Charpoly, Examples) {
  EXPECT_EQ(charpoly(build(graphs::complete(3), MatrixKind::A)).coeffs, ints({-2, -3, 0, 1}));
  EXPECT_EQ(charpoly(build(graphs::complete(3), MatrixKind::A)).to_string(), "1 0 -3 -2");
  // L(K_n): x (x - n)^(n-1)
  EXPECT_EQ(charpoly(build(graphs::complete(4), MatrixKind::L)).coeffs, ints({0, -64, 48, -12, 1}));
  EXPECT_EQ(charpoly(IntMatrix(0)).coeffs, ints({1}));
}

TEST(Charpoly, AgreesWithCofactorOracle) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : generate_connected_graphs(n)) {
      for (auto kind : kCensusMatrixKinds) {
        const IntMatrix m = build(g, kind);
        EXPECT_EQ(charpoly(m).coeffs, oracle::cofactor_charpoly(m)) << to_string(kind);
      }
    }
  }
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix m = random_matrix(1 + trial % 5, 7, rng);  // not symmetric
    EXPECT_EQ(charpoly(m).coeffs, oracle::cofactor_charpoly(m));
  }
}

TEST(Charpoly, ConstantTermAndTraceAndPowerSums) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 7;
    const IntMatrix m = build(oracle::random_connected(n, 0.5, rng), kCensusMatrixKinds[trial % 10]);
    const auto p = charpoly(m);
    EXPECT_EQ(p.degree(), n);
    EXPECT_EQ(p.coeffs[n - 1], -m.trace());
    EXPECT_EQ(p.coeffs[0], n % 2 ? mpz_class(-determinant(m)) : determinant(m));
    const auto sums = power_sums(p, 4);
    IntMatrix power = m;
    for (int k = 0; k < 4; ++k) {
      EXPECT_EQ(sums[k], power.trace()) << k + 1;
      power = power * m;
    }
  }
}

TEST(Polynomial, Evaluate) {
  const IntPolynomial p{ints({-2, -3, 0, 1})};
  EXPECT_EQ(p.evaluate(mpz_class(2)), 0);
  EXPECT_EQ(p.evaluate(mpz_class(-1)), 0);
  EXPECT_DOUBLE_EQ(p.evaluate(0.5), 0.125 - 1.5 - 2.0);
}

TEST(Cokernel, Examples) {
  const auto cricket = cokernel(build(graphs::cricket(), MatrixKind::Atr));
  EXPECT_EQ(cricket.to_string(), "Z_7 + Z_812");
  EXPECT_EQ(cricket.torsion_order(), 5684);

  const auto c5 = cokernel(build(graphs::cycle(5), MatrixKind::L));
  EXPECT_EQ(c5.to_string(), "Z_5 + Z");
  EXPECT_EQ(c5.free_rank, 1);

  EXPECT_EQ(cokernel(IntMatrix::identity(3)).to_string(), "0");
  EXPECT_EQ(cokernel(IntMatrix(2)).to_string(), "Z + Z");
}

TEST(Charpoly, MoreExamples) {
  EXPECT_EQ(charpoly(IntMatrix{{0}}).coeffs, ints({0, 1}));
  EXPECT_EQ(charpoly(build(graphs::path(3), MatrixKind::A)).coeffs, ints({0, -2, 0, 1}));
  // L(K_n) = x (x - n)^(n-1), checked against the cofactor oracle as well
  for (int n = 2; n <= 6; ++n) {
    oracle::Poly expected{0, 1};
    for (int k = 0; k < n - 1; ++k) expected = oracle::poly_mul(expected, {-n, 1});
    const IntMatrix l = build(graphs::complete(n), MatrixKind::L);
    EXPECT_EQ(charpoly(l).coeffs, expected);
    EXPECT_EQ(oracle::cofactor_charpoly(l), expected);
  }
}

TEST(Determinant, LaplaciansAreSingular) {
  for (const auto& g : generate_connected_graphs(6)) EXPECT_EQ(determinant(build(g, MatrixKind::L)), 0);
}

TEST(Cokernel, CompleteGraphLaplacian) {
  for (int n = 2; n <= 9; ++n) {
    const auto c = cokernel(build(graphs::complete(n), MatrixKind::L));
    EXPECT_EQ(c.torsion, std::vector<mpz_class>(static_cast<std::size_t>(n - 2), n));
    EXPECT_EQ(c.free_rank, 1);
  }
}

}  // namespace
}  // namespace distinv
