#include <gtest/gtest.h>

#include "oracles.hpp"
#include "thinlab/error.hpp"
#include "thinlab/hyperbolic/cartan.hpp"

using namespace thinlab;
using namespace thinlab::hyperbolic;
using exact::IntMatrix;

namespace {

const QuadLattice kDiag(IntMatrix{{2, 0, 0}, {0, 2, 0}, {0, 0, -2}});

std::vector<std::vector<std::int64_t>> rows_of(const IntMatrix& g) {
  std::vector<std::vector<std::int64_t>> r(g.dim(), std::vector<std::int64_t>(g.dim()));
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) r[i][j] = g(i, j).get_si();
  return r;
}

}  // namespace

TEST(Lattice, Validation) {
  EXPECT_THROW(QuadLattice(IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), Error);
  EXPECT_THROW(QuadLattice(IntMatrix{{1, 2}, {0, -1}}), Error);
  EXPECT_NO_THROW(QuadLattice(IntMatrix{{-2, -3}, {-3, -2}}));
}

TEST(Roots, DiagonalForm) {
  EXPECT_EQ(cartan_roots(kDiag, 1), (std::vector<Vector>{{0, 0, -1}, {0, 0, 1}}));
  const auto h3 = cartan_roots(kDiag, 3);
  EXPECT_EQ(h3.size(), 10u);
  for (std::int64_t a : {-2, 2})
    for (std::int64_t b : {-2, 2})
      for (std::int64_t c : {-3, 3}) EXPECT_TRUE(std::binary_search(h3.begin(), h3.end(), Vector{a, b, c}));
}

TEST(Roots, AgreeWithBruteForce) {
  const std::vector<IntMatrix> grams{
      IntMatrix{{2, 0, 0}, {0, 2, 0}, {0, 0, -2}},
      IntMatrix{{2, 1, 0}, {1, 2, 0}, {0, 0, -1}},
      IntMatrix{{-2, -3}, {-3, -2}},
      IntMatrix{{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -3}, {0, 0, -3, 2}},
  };
  for (const auto& g : grams) {
    const QuadLattice L(g);
    for (std::int64_t h : {1, 2, 4}) EXPECT_EQ(cartan_roots(L, h), oracle::brute_force_norm(rows_of(g), h, -2));
  }
}

TEST(Roots, EmptyWhenNoneExist) {
  // Every value of this form is divisible by 4.
  const QuadLattice L(IntMatrix{{4, 0, 0}, {0, 4, 0}, {0, 0, -4}});
  EXPECT_TRUE(cartan_roots(L, 5).empty());
}

TEST(Involution, FormulaAndChecks) {
  EXPECT_EQ(cartan_involution(kDiag, {0, 0, 1}), (IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}));
  EXPECT_THROW(cartan_involution(kDiag, {1, 0, 0}), Error);
  const IntMatrix G = kDiag.gram();
  for (const auto& v : cartan_roots(kDiag, 5)) {
    const IntMatrix r = cartan_involution(kDiag, v);
    EXPECT_EQ(r.transpose() * G * r, G);
    EXPECT_TRUE((r * r).is_identity());
  }
}

TEST(Graph, DiagonalHeightOne) {
  const auto g = min_distance_graph(kDiag, 1);
  EXPECT_EQ(g.vertices.size(), 2u);
  EXPECT_TRUE(g.edges.empty());
  ASSERT_EQ(g.components.size(), 2u);
  EXPECT_EQ(kDiag.pair(g.vertices[0], g.vertices[1]), 2);
  const auto f0 = component_fingerprint(kDiag, g, 0);
  const auto f1 = component_fingerprint(kDiag, g, 1);
  EXPECT_EQ(f0, f1);
  EXPECT_EQ(f0.degree_sequence, (std::vector<std::size_t>{0}));
  EXPECT_EQ(f0.diameter, 0u);
}

TEST(Graph, EdgesAndGrowth) {
  const QuadLattice L(IntMatrix{{-2, -3}, {-3, -2}});
  MinDistGraph prev;
  for (std::int64_t h : {5, 10, 20}) {
    const auto g = min_distance_graph(L, h);
    for (const auto& [a, b] : g.edges) EXPECT_EQ(L.pair(g.vertices[a], g.vertices[b]), -3);
    for (const auto& c : g.components)
      for (const auto& [gram, count] : c.edge_gram_census) EXPECT_EQ(gram, (std::array<std::int64_t, 3>{-2, -3, -2}));
    for (const auto& v : prev.vertices) EXPECT_TRUE(std::find(g.vertices.begin(), g.vertices.end(), v) != g.vertices.end());
    EXPECT_GE(g.edges.size(), prev.edges.size());
    prev = g;
  }
  EXPECT_EQ(prev.vertices.size(), 12u);
  EXPECT_EQ(prev.edges.size(), 10u);
}

TEST(Graph, VertexCap) {
  EXPECT_THROW(min_distance_graph(kDiag, 40, 10), CapExceeded);
}
