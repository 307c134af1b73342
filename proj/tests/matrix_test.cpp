#include <random>

#include <gtest/gtest.h>

#include "distinv/generators.hpp"
#include "distinv/matrix.hpp"
#include "oracles.hpp"

namespace distinv {
namespace {

TEST(MatrixKind, NamesRoundTrip) {
  for (auto kind : kAllMatrixKinds) EXPECT_EQ(parse_matrix_kind(to_string(kind)), kind);
  EXPECT_FALSE(parse_matrix_kind("atr").has_value());
  EXPECT_FALSE(parse_matrix_kind("").has_value());
}

TEST(Builders, CricketTransmissionAdjacency) {
  const IntMatrix expected{
      {6, 0, 0, -1, -1},
      {0, 7, 0, 0, -1},
      {0, 0, 7, 0, -1},
      {-1, 0, 0, 6, -1},
      {-1, -1, -1, -1, 4},
  };
  EXPECT_EQ(build(graphs::cricket(), MatrixKind::Atr), expected);
}

TEST(Builders, CompleteGraphCoincidences) {
  // On K_n, D = A and tr = deg.
  for (int n = 2; n <= 7; ++n) {
    const Graph k = graphs::complete(n);
    EXPECT_EQ(build(k, MatrixKind::D), build(k, MatrixKind::A));
    EXPECT_EQ(build(k, MatrixKind::Atr), build(k, MatrixKind::L));
    EXPECT_EQ(build(k, MatrixKind::AtrPlus), build(k, MatrixKind::Q));
    EXPECT_EQ(build(k, MatrixKind::Ddeg), build(k, MatrixKind::L));
    EXPECT_EQ(build(k, MatrixKind::DL), build(k, MatrixKind::L));
    EXPECT_EQ(build(k, MatrixKind::R), IntMatrix(n));
  }
}

TEST(Builders, StructuralIdentities) {
  for (const auto& g : generate_connected_graphs(6)) {
    const auto p = distance_profile(g);
    const IntMatrix a = build(g, MatrixKind::A, p);
    const IntMatrix d = build(g, MatrixKind::D, p);
    const IntMatrix r = build(g, MatrixKind::R, p);
    const IntMatrix l = build(g, MatrixKind::L, p);
    EXPECT_EQ(build(g, MatrixKind::Atr, p), l + r);
    EXPECT_EQ(build(g, MatrixKind::AtrPlus, p), build(g, MatrixKind::Q, p) + r);
    EXPECT_EQ(build(g, MatrixKind::Atr, p) + build(g, MatrixKind::AtrPlus, p),
              build(g, MatrixKind::DL, p) + build(g, MatrixKind::DQ, p));
    EXPECT_EQ(build(g, MatrixKind::AtrPlus, p) - build(g, MatrixKind::Atr, p), a + a);
    EXPECT_EQ(build(g, MatrixKind::DdegPlus, p) - build(g, MatrixKind::Ddeg, p), d + d);

    for (auto kind : kAllMatrixKinds) EXPECT_TRUE(build(g, kind, p).symmetric());
    for (const auto& s : row_sums(l)) EXPECT_EQ(s, 0);
    for (const auto& s : row_sums(build(g, MatrixKind::DL, p))) EXPECT_EQ(s, 0);
    const auto atr_sums = row_sums(build(g, MatrixKind::Atr, p));
    for (int u = 0; u < g.order(); ++u) EXPECT_EQ(atr_sums[u], p.tr[u] - p.deg[u]);
    EXPECT_EQ(build(g, MatrixKind::Atr, p).trace(), wiener_indices(p).wiener);
  }
}

TEST(Builders, PermutationEquivariance) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_connected(3 + trial % 8, 0.35, rng);
    std::vector<int> perm;
    const Graph h = oracle::shuffled(g, rng, &perm);
    for (auto kind : kAllMatrixKinds) EXPECT_EQ(build(h, kind), build(g, kind).permuted(perm));
  }
}

TEST(Builders, DistanceKindsNeedConnectivity) {
  Graph g(3);
  g.add_edge(0, 1);
  EXPECT_NO_THROW(build(g, MatrixKind::L));
  EXPECT_THROW(build(g, MatrixKind::Atr), NotConnectedError);
  EXPECT_TRUE(needs_distances(MatrixKind::DdegPlus));
  EXPECT_FALSE(needs_distances(MatrixKind::Q));
}

TEST(IntMatrix, Arithmetic) {
  const IntMatrix x{{1, 2}, {3, 4}};
  const IntMatrix y{{0, 1}, {1, 0}};
  EXPECT_EQ(x * y, (IntMatrix{{2, 1}, {4, 3}}));
  EXPECT_EQ(x - x, IntMatrix(2));
  EXPECT_EQ(-x + x, IntMatrix(2));
  EXPECT_EQ(x.trace(), 5);
  EXPECT_EQ((-x).max_norm(), 4);
  EXPECT_EQ(x * IntMatrix::identity(2), x);
  EXPECT_EQ(x.minor_deleting(0), (IntMatrix{{4}}));
  EXPECT_FALSE(x.symmetric());
}

TEST(Builders, SmallExamples) {
  EXPECT_EQ(build(Graph(1), MatrixKind::D), IntMatrix(1));
  for (const auto& s : row_sums(build(graphs::cycle(5), MatrixKind::Atr))) EXPECT_EQ(s, 4);
  for (const auto& s : row_sums(build(graphs::complete(4), MatrixKind::Atr))) EXPECT_EQ(s, 0);
}

}  // namespace
}  // namespace distinv
