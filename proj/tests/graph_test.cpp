#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "dcut/errors.hpp"
#include "dcut/gadgets.hpp"
#include "dcut/graph.hpp"
#include "dcut/graph_algorithms.hpp"
#include "dcut/graph_io.hpp"
#include "test_support.hpp"

namespace dcut {
namespace {

using testing::complete_graph;
using testing::cycle_graph;
using testing::path_graph;
using testing::star_graph;

TEST(Graph, RejectsLoopsAndDuplicates) {
  EXPECT_THROW(Graph(2, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(2, {{0, 2}}), std::invalid_argument);
}

TEST(Graph, DegreeSumIsTwiceEdges) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Graph g = testing::random_graph(rng, 15, 0.3);
    std::size_t sum = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      sum += g.degree(v);
      for (Vertex w : g.neighbours(v)) EXPECT_TRUE(g.adjacent(w, v));
    }
    EXPECT_EQ(sum, 2 * g.num_edges());
  }
}

TEST(GraphIo, ParsesTriangle) {
  const Graph g = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  EXPECT_EQ(g, complete_graph(3));
}

TEST(GraphIo, CommentsAndAnyEdgeOrder) {
  const Graph g = parse_graph("c hello\np edge 3 2\ne 3 2\nc mid\ne 2 1\n");
  EXPECT_EQ(g, path_graph(3));
}

TEST(GraphIo, SelfLoopNamesLine) {
  try {
    parse_graph("p edge 2 1\ne 1 1\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2U);
    EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
  }
}

TEST(GraphIo, Errors) {
  EXPECT_THROW(parse_graph("p edge 2 1\ne 1 3\n"), ParseError);
  EXPECT_THROW(parse_graph("p edge 3 2\ne 1 2\ne 2 1\n"), ParseError);
  EXPECT_THROW(parse_graph("e 1 2\n"), ParseError);
  EXPECT_THROW(parse_graph("p edge 3 2\ne 1 2\n"), ParseError);
  EXPECT_THROW(parse_graph("p edge 3 1\ne 1 2 3\n"), ParseError);
  EXPECT_THROW(parse_graph("p edge 3 1\nx 1 2\n"), ParseError);
  EXPECT_THROW(parse_graph(""), ParseError);
}

TEST(GraphIo, RoundTripIsCanonical) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    const Graph g = testing::random_graph(rng, 12, 0.4);
    const std::string text = serialize_graph(g);
    EXPECT_EQ(parse_graph(text), g);
    EXPECT_EQ(serialize_graph(parse_graph(text)), text);
  }
  EXPECT_EQ(serialize_graph(parse_graph("p edge 3 2\ne 3 2\ne 2 1\n")),
            "p edge 3 2\ne 1 2\ne 2 3\n");
}

TEST(BfsLayers, PathDistances) {
  const auto layers = bfs_layers(path_graph(5), 0, 2);
  ASSERT_EQ(layers.size(), 3U);
  EXPECT_EQ(layers[0], VertexSet({0}));
  EXPECT_EQ(layers[1], VertexSet({1}));
  EXPECT_EQ(layers[2], VertexSet({2}));
}

TEST(BfsLayers, CompleteGraphHasEmptySecondLayer) {
  const auto layers = bfs_layers(complete_graph(4), 2, 2);
  EXPECT_EQ(layers[0], VertexSet({2}));
  EXPECT_EQ(layers[1], VertexSet({0, 1, 3}));
  EXPECT_TRUE(layers[2].empty());
  EXPECT_THROW(bfs_layers(complete_graph(4), 4, 1), std::out_of_range);
}

TEST(BfsLayers, GrowthBoundAndDistances) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    const Graph g = testing::random_connected_graph(rng, 20, 0.1);
    const std::size_t delta = g.max_degree();
    const auto layers = bfs_layers(g, 0, 5);
    EXPECT_LE(layers[1].size(), delta);
    for (std::size_t j = 1; j + 1 < layers.size(); ++j) {
      EXPECT_LE(layers[j + 1].size(), (delta - 1) * layers[j].size());
    }
    // Independent distance check with a plain BFS.
    std::vector<int> dist(g.num_vertices(), -1);
    std::vector<Vertex> queue{0};
    dist[0] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (Vertex w : g.neighbours(queue[h])) {
        if (dist[w] < 0) {
          dist[w] = dist[queue[h]] + 1;
          queue.push_back(w);
        }
      }
    }
    std::size_t covered = 0;
    for (std::size_t j = 0; j < layers.size(); ++j) {
      for (Vertex v : layers[j]) EXPECT_EQ(dist[v], static_cast<int>(j));
      covered += layers[j].size();
    }
    EXPECT_EQ(covered, static_cast<std::size_t>(std::count_if(
                           dist.begin(), dist.end(), [](int x) { return x >= 0 && x <= 5; })));
  }
}

TEST(Boundary, Examples) {
  EXPECT_EQ(boundary(complete_graph(3), VertexSet({0})).size(), 2U);
  EXPECT_TRUE(boundary(complete_graph(5), VertexSet({0, 1, 2, 3, 4})).empty());
  const auto b = boundary(cycle_graph(6), VertexSet({0, 1, 2}));
  EXPECT_EQ(b, (std::vector<Edge>{{0, 5}, {2, 3}}));
  EXPECT_EQ(boundary_incidence(cycle_graph(6), VertexSet({0, 1, 2})),
            (std::vector<std::size_t>{1, 0, 1}));
}

TEST(Degeneracy, Examples) {
  auto k4 = degeneracy_core(complete_graph(4));
  EXPECT_EQ(k4.k, 3U);
  EXPECT_EQ(k4.core.size(), 4U);

  const Graph paw(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  auto paw_core = degeneracy_core(paw);
  EXPECT_EQ(paw_core.k, 2U);
  EXPECT_EQ(paw_core.core, VertexSet({0, 1, 2}));
  EXPECT_THROW(degeneracy_core(Graph()), std::invalid_argument);
}

TEST(Degeneracy, CoreMinimumDegreeAndPeelOrder) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Graph g = testing::random_graph(rng, 14, 0.35);
    const auto r = degeneracy_core(g);
    const auto in = r.core.mask(g.num_vertices());
    for (Vertex v : r.core) {
      std::size_t inside = 0;
      for (Vertex w : g.neighbours(v)) inside += in[w] ? 1 : 0;
      EXPECT_GE(inside, r.k);
    }
    // Replaying the peel: each vertex's degree among the not-yet-peeled
    // vertices equals its recorded peel degree.
    std::vector<bool> gone(g.num_vertices(), false);
    for (std::size_t j = 0; j < r.peel_order.size(); ++j) {
      const Vertex v = r.peel_order[j];
      std::size_t alive = 0;
      for (Vertex w : g.neighbours(v)) alive += gone[w] ? 0 : 1;
      EXPECT_EQ(alive, r.peel_degree[j]);
      EXPECT_LE(r.peel_degree[j], r.k);
      gone[v] = true;
    }
  }
}

TEST(Degeneracy, MinimumDegreeLowerBoundWithoutIndependentSet) {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    std::uniform_int_distribution<std::size_t> size(1, 12);
    const Graph g = testing::random_graph(rng, size(rng), 0.7);
    for (std::size_t t = 2; t <= 4; ++t) {
      if (has_independent_set(g, t)) continue;
      ++checked;
      const auto r = degeneracy_core(g);
      // k >= n/(t-1) - 1, i.e. (k+1)(t-1) >= n.
      EXPECT_GE((r.k + 1) * (t - 1), g.num_vertices());
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(IndependentSet, Examples) {
  EXPECT_FALSE(has_independent_set(complete_graph(5), 2));
  EXPECT_FALSE(has_independent_set(cycle_graph(5), 3));
  EXPECT_TRUE(has_independent_set(cycle_graph(5), 2));
  EXPECT_TRUE(has_independent_set(Graph(4, {}), 4));
  EXPECT_THROW(has_independent_set(complete_graph(21), 2), SizeLimitError);
}

TEST(Spider, Examples) {
  EXPECT_TRUE(contains_induced_spider(star_graph(3), {2, 1}));
  EXPECT_FALSE(contains_induced_spider(complete_graph(4), {2, 1}));
  EXPECT_FALSE(contains_induced_spider(path_graph(5), {2, 2}));
  EXPECT_TRUE(contains_induced_spider(gen_spider(6, 4), {6, 4}));
  EXPECT_FALSE(contains_induced_spider(gen_spider(6, 4), {7, 4}));
  EXPECT_THROW(contains_induced_spider(path_graph(5), {8, 5}), SizeLimitError);
}

TEST(Spider, WitnessIsInducedSpider) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const Graph g = testing::random_graph(rng, 10, 0.3);
    const PatternSpider p{2, 2};
    const auto w = find_induced_spider(g, p);
    if (!w) continue;
    std::vector<Vertex> ids{w->centre};
    ids.insert(ids.end(), w->leaves.begin(), w->leaves.end());
    ids.insert(ids.end(), w->path.begin(), w->path.end());
    ASSERT_EQ(ids.size(), p.num_vertices());
    // Map the spider's vertices onto ids and compare adjacency exactly.
    const Graph s = gen_spider(p.t, p.ell);
    for (Vertex a = 0; a < ids.size(); ++a)
      for (Vertex b = a + 1; b < ids.size(); ++b)
        EXPECT_EQ(s.adjacent(a, b), g.adjacent(ids[a], ids[b]));
  }
}

TEST(Spider, AgreesWithGenericMatcher) {
  std::mt19937_64 rng(29);
  const std::vector<PatternSpider> patterns{{2, 1}, {2, 2}, {3, 1}, {2, 3}, {3, 2}};
  for (int i = 0; i < 300; ++i) {
    std::uniform_int_distribution<std::size_t> size(1, 9);
    std::uniform_real_distribution<double> density(0.1, 0.8);
    const Graph g = testing::random_graph(rng, size(rng), density(rng));
    for (const auto& p : patterns) {
      EXPECT_EQ(contains_induced_spider(g, p),
                contains_induced_subgraph(g, gen_spider(p.t, p.ell)));
    }
  }
}

TEST(LineGraph, Examples) {
  EXPECT_EQ(line_graph(path_graph(4)), path_graph(3));
  EXPECT_EQ(line_graph(complete_graph(3)), complete_graph(3));
  EXPECT_THROW(line_graph(Graph(3, {})), std::invalid_argument);
}

TEST(LineGraph, ClawFreeAndDegreeBound) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const Graph base = testing::random_connected_graph(rng, 12, 0.2);
    const Graph l = line_graph(base);
    EXPECT_FALSE(contains_induced_spider(l, {2, 1}));
    EXPECT_LE(l.max_degree(), 2 * (base.max_degree() - 1));
    EXPECT_EQ(l.num_vertices(), base.num_edges());
  }
}

TEST(StructuralReport, Examples) {
  const auto c5 = structural_report(cycle_graph(5));
  EXPECT_TRUE(c5.connected);
  EXPECT_EQ(c5.max_degree, 2U);
  EXPECT_TRUE(c5.is_regular);

  const auto claw = structural_report(star_graph(3));
  EXPECT_EQ(claw.max_degree, 3U);
  EXPECT_FALSE(claw.is_regular);
  EXPECT_EQ(claw.degree_histogram.at(1), 3U);

  const auto ring = structural_report(gen_regular_noncut(2, 2, 6).graph);
  EXPECT_TRUE(ring.is_regular);
  EXPECT_EQ(ring.max_degree, 6U);
}

TEST(InducedSubgraph, KeepsOnlyInternalEdges) {
  const Graph g = cycle_graph(6);
  const Graph h = induced_subgraph(g, VertexSet({0, 1, 2, 4}));
  EXPECT_EQ(h, Graph(4, {{0, 1}, {1, 2}}));
}

TEST(Connectivity, Basic) {
  EXPECT_TRUE(is_connected(path_graph(4)));
  EXPECT_FALSE(is_connected(Graph(3, {{0, 1}})));
  EXPECT_FALSE(is_connected(Graph()));
  EXPECT_TRUE(is_connected(Graph(1, {})));
}

}  // namespace
}  // namespace dcut
