#include <gtest/gtest.h>

#include "oracles.hpp"
#include "simis/graph.hpp"

using namespace simis;

namespace {

using Sets = std::vector<std::vector<int>>;

Sets prime_sets(const std::vector<PrimeSupport>& ps) {
  Sets out;
  for (const auto& p : ps) out.push_back(p.variables());
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal sqfree(std::size_t n, const Sets& supports) {
  std::vector<Monomial> ms;
  for (const auto& s : supports) ms.push_back(Monomial::squarefree(n, mask_of(std::span<const int>(s), n)));
  return minimalize(std::move(ms), n);
}

MonomialIdeal intersect_all(const std::vector<PrimeSupport>& primes, std::size_t n) {
  auto meet = prime_power(primes.front(), 1, n);
  for (std::size_t i = 1; i < primes.size(); ++i) meet = intersect(meet, prime_power(primes[i], 1, n));
  return meet;
}

}  // namespace

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph(3, {{1, 1}}), ArgumentError);
  EXPECT_THROW(Graph(3, {{1, 4}}), ArgumentError);
  EXPECT_THROW(Graph(3, {{1, 2}, {2, 1}}), ArgumentError);
}

TEST(ComplementaryEdgeIdeal, Examples) {
  EXPECT_EQ(complementary_edge_ideal(graphs::path(3)), sqfree(3, {{3}, {1}}));
  EXPECT_EQ(complementary_edge_ideal(graphs::star(3)), sqfree(4, {{3, 4}, {2, 4}, {2, 3}}));
  auto paw = complementary_edge_ideal(graphs::paw());
  EXPECT_EQ(paw, sqfree(4, {{3, 4}, {1, 4}, {2, 4}, {2, 3}}));
  auto from_primes = intersect(intersect(sqfree(4, {{2}, {4}}), sqfree(4, {{3}, {4}})), sqfree(4, {{1}, {2}, {3}}));
  EXPECT_EQ(paw, from_primes);
}

TEST(ComplementaryEdgeIdeal, DegenerateInputs) {
  EXPECT_TRUE(complementary_edge_ideal(Graph(4, {})).is_zero());
  EXPECT_THROW(complementary_edge_ideal(graphs::complete(2)), ArgumentError);
}

TEST(Correspondence, Examples) {
  auto h = clutter_of_graph(graphs::star(3));
  EXPECT_EQ(h, Clutter::from_labels(4, {{3, 4}, {2, 4}, {2, 3}}));
  auto c4 = clutter_of_graph(graphs::cycle(4));
  EXPECT_EQ(c4, Clutter::from_labels(4, {{3, 4}, {1, 4}, {1, 2}, {2, 3}}));
  EXPECT_THROW(clutter_of_graph(Graph(4, {})), ArgumentError);
  EXPECT_THROW(clutter_of_graph(graphs::complete(2)), ArgumentError);
  EXPECT_THROW(associated_graph(Clutter::from_labels(4, {{1, 2}, {3}})), ArgumentError);
  EXPECT_THROW(associated_graph(Clutter::from_labels(4, {{1}})), ArgumentError);
}

TEST(Correspondence, InverseOnAllFourVertexGraphs) {
  for (const auto& g : enumerate_graphs_upto_iso(4, true)) {
    const auto h = clutter_of_graph(g);
    EXPECT_EQ(associated_graph(h), g);
    EXPECT_EQ(edge_ideal(h), complementary_edge_ideal(g));
    EXPECT_EQ(h.uniformity(), std::optional<int>(2));
  }
}

TEST(PrimaryDecomposition, FourVertexGraphs) {
  EXPECT_EQ(prime_sets(primary_decomposition_cx(graphs::star(3))), (Sets{{2, 3}, {2, 4}, {3, 4}}));
  EXPECT_EQ(prime_sets(primary_decomposition_cx(graphs::complete(4))),
            (Sets{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}));
  EXPECT_EQ(prime_sets(primary_decomposition_cx(graphs::diamond())), (Sets{{1, 2, 3}, {1, 3, 4}, {2, 4}}));
  EXPECT_EQ(prime_sets(primary_decomposition_cx(graphs::paw())), (Sets{{1, 2, 3}, {2, 4}, {3, 4}}));
  EXPECT_THROW(primary_decomposition_cx(Graph(3, {})), ArgumentError);
}

TEST(PrimaryDecomposition, IsolatedVertexGivesSingleton) {
  // K2 on {1,2} plus isolated 3: I_c = <x3>.
  EXPECT_EQ(prime_sets(primary_decomposition_cx(Graph(3, {{1, 2}}))), (Sets{{3}}));
  // P3 on {1,2,3} plus isolated 4.
  EXPECT_EQ(prime_sets(primary_decomposition_cx(Graph(4, {{1, 2}, {2, 3}}))), (Sets{{1, 3}, {4}}));
}

TEST(PrimaryDecomposition, SoundAndMinimalUpToSixVertices) {
  for (std::size_t n = 3; n <= 6; ++n) {
    for (const auto& g : enumerate_graphs_upto_iso(n, true)) {
      auto primes = primary_decomposition_cx(g);
      EXPECT_EQ(intersect_all(primes, n), complementary_edge_ideal(g));
      EXPECT_EQ(primes, min_vertex_covers(clutter_of_graph(g)));
    }
  }
}

TEST(ClassifyGraph, Examples) {
  auto p4_iso = classify_graph(graphs::padded(graphs::path(4), 5));
  EXPECT_EQ(p4_iso.label, GraphLabel::P4);
  EXPECT_EQ(p4_iso.isolated_count, 1);
  EXPECT_EQ(classify_graph(graphs::paw()).label, GraphLabel::Other);
  EXPECT_EQ(classify_graph(graphs::two_k2()).label, GraphLabel::TwoK2);
  EXPECT_EQ(classify_graph(Graph(6, {{4, 6}})).label, GraphLabel::K2);
  EXPECT_EQ(classify_graph(Graph(6, {{4, 6}})).isolated_count, 4);
  EXPECT_EQ(classify_graph(Graph(5, {{2, 5}, {3, 5}, {2, 3}})).label, GraphLabel::K3);
  EXPECT_EQ(classify_graph(Graph(5, {{1, 2}, {3, 4}, {4, 5}})).label, GraphLabel::Other);
  EXPECT_EQ(classify_graph(Graph(3, {})).label, GraphLabel::Other);
}

TEST(ClassifyGraph, FourVertexGraphsWithoutIsolatedVertices) {
  std::vector<std::pair<Graph, GraphLabel>> connected_four{
      {graphs::two_k2(), GraphLabel::TwoK2},  {graphs::path(4), GraphLabel::P4},
      {graphs::cycle(4), GraphLabel::C4},     {graphs::star(3), GraphLabel::Other},
      {graphs::paw(), GraphLabel::Other},     {graphs::diamond(), GraphLabel::Other},
      {graphs::complete(4), GraphLabel::Other}};
  for (const auto& [g, label] : connected_four) EXPECT_EQ(classify_graph(g).label, label);
}

TEST(Isomorphism, Examples) {
  EXPECT_TRUE(graphs_isomorphic(graphs::cycle(4), Graph(4, {{1, 3}, {3, 2}, {2, 4}, {4, 1}})));
  EXPECT_FALSE(graphs_isomorphic(graphs::path(4), graphs::star(3)));
  EXPECT_FALSE(graphs_isomorphic(graphs::paw(), graphs::diamond()));
  EXPECT_THROW(graphs_isomorphic(Graph(9, {}), Graph(9, {})), ResourceError);
}

TEST(Isomorphism, AgreesWithPermutationOracle) {
  auto five = enumerate_graphs_upto_iso(5, false);
  // Relabel each representative by a fixed shuffle; it must stay isomorphic
  // to itself and to nothing else.
  const std::vector<int> shuffle{3, 5, 1, 4, 2};
  for (std::size_t i = 0; i < five.size(); ++i) {
    std::vector<Graph::Edge> e;
    for (auto [a, b] : five[i].edges()) e.emplace_back(shuffle[a - 1], shuffle[b - 1]);
    Graph moved(5, e);
    for (std::size_t j = 0; j < five.size(); ++j) {
      EXPECT_EQ(graphs_isomorphic(moved, five[j]), i == j);
      EXPECT_EQ(oracle::isomorphic(moved, five[j]), i == j);
    }
  }
}

TEST(Enumerate, ClassCounts) {
  EXPECT_EQ(enumerate_graphs_upto_iso(3, true).size(), 3u);
  EXPECT_EQ(enumerate_graphs_upto_iso(4, true).size(), 10u);
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(enumerate_graphs_upto_iso(n, false).size(), oracle::count_classes(n));
  EXPECT_EQ(enumerate_graphs_upto_iso(6, false).size(), 156u);
  EXPECT_EQ(enumerate_graphs_upto_iso(7, false).size(), 1044u);
  EXPECT_THROW(enumerate_graphs_upto_iso(0, false), ArgumentError);
  EXPECT_THROW(enumerate_graphs_upto_iso(8, false), ArgumentError);
}

TEST(Enumerate, FourVertexSliceWithoutIsolatedVertices) {
  std::vector<Graph> no_isolated;
  for (const auto& g : enumerate_graphs_upto_iso(4, true)) {
    if (g.isolated_vertices() == 0) no_isolated.push_back(g);
  }
  ASSERT_EQ(no_isolated.size(), 7u);
  const std::vector<Graph> connected_four{graphs::two_k2(), graphs::path(4),    graphs::cycle(4),   graphs::star(3),
                                  graphs::paw(),    graphs::diamond(), graphs::complete(4)};
  for (const auto& f : connected_four) {
    EXPECT_EQ(std::count_if(no_isolated.begin(), no_isolated.end(), [&](const Graph& g) { return graphs_isomorphic(g, f); }),
              1);
  }
}

TEST(Enumerate, DeterministicOrder) {
  EXPECT_EQ(enumerate_graphs_upto_iso(5, true), enumerate_graphs_upto_iso(5, true));
  auto three = enumerate_graphs_upto_iso(3, true);
  EXPECT_EQ(three[0].num_edges(), 1u);
  EXPECT_EQ(three[1].num_edges(), 2u);
  EXPECT_EQ(three[2].num_edges(), 3u);
}

TEST(IsolatedVertexReduction, SimisUnchanged) {
  for (std::size_t n = 3; n <= 5; ++n) {
    for (const auto& g : enumerate_graphs_upto_iso(n, true)) {
      const VertexMask isolated = g.isolated_vertices();
      if (!isolated) continue;
      const Graph smaller = remove_vertices(g, VertexMask{1} << std::countr_zero(isolated));
      for (unsigned k : {2u, 3u}) {
        bool big = is_simis(complementary_edge_ideal(g), k).equal;
        bool small = smaller.num_vertices() < 3 ? true : is_simis(complementary_edge_ideal(smaller), k).equal;
        EXPECT_EQ(big, small);
      }
    }
  }
}
