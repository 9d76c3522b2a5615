#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "dcut/graph.hpp"

namespace dcut {

/// Instrumentation for the linear-time paths: one tick per adjacency entry
/// inspected and per vertex visited.
struct WorkCounters {
  std::uint64_t edge_touches = 0;
  std::uint64_t vertex_visits = 0;

  std::uint64_t total() const noexcept { return edge_touches + vertex_visits; }
  WorkCounters& operator+=(const WorkCounters& o) noexcept {
    edge_touches += o.edge_touches;
    vertex_visits += o.vertex_visits;
    return *this;
  }
};

// Exponential oracles refuse inputs above these sizes.
inline constexpr std::size_t kIndependentSetVertexLimit = 20;
inline constexpr std::size_t kPatternVertexLimit = 12;

/// Layer i holds the vertices at distance exactly i from `source`, for
/// i = 0..depth. Only the first depth+1 layers are explored.
std::vector<VertexSet> bfs_layers(const Graph& g, Vertex source,
                                  std::size_t depth,
                                  WorkCounters* work = nullptr);

bool is_connected(const Graph& g, WorkCounters* work = nullptr);

/// δ(S): edges with exactly one endpoint in `s`.
std::vector<Edge> boundary(const Graph& g, const VertexSet& s);

/// Number of δ(S) edges at each vertex of `s`, in member order.
std::vector<std::size_t> boundary_incidence(const Graph& g, const VertexSet& s);

struct Degeneracy {
  VertexSet core;   ///< the k-core, non-empty, minimum degree >= k
  std::size_t k = 0;
  std::vector<Vertex> peel_order;
  std::vector<std::size_t> peel_degree;  ///< degree of peel_order[i] when removed
};

/// Minimum-degree peeling, ties broken by smallest id. Throws on an empty graph.
Degeneracy degeneracy_core(const Graph& g);

/// Brute force; throws SizeLimitError above kIndependentSetVertexLimit vertices.
std::optional<std::vector<Vertex>> find_independent_set(const Graph& g,
                                                        std::size_t t);
bool has_independent_set(const Graph& g, std::size_t t);

/// First t pairwise non-adjacent members of `candidates` in lexicographic
/// order; O(|candidates|^t), no size ceiling.
std::optional<std::vector<Vertex>> find_independent_subset(
    const Graph& g, std::span<const Vertex> candidates, std::size_t t);

/// S_{1^t,ell}: a centre with t pendant leaves and one further leg that is a
/// path of `ell` edges. S_{1^t,1} is the star K_{1,t+1}.
struct PatternSpider {
  std::size_t t = 2;
  std::size_t ell = 1;

  std::size_t num_vertices() const noexcept { return t + ell + 1; }
  static PatternSpider claw() { return {2, 1}; }
};

/// An induced copy of a spider: path[0] is adjacent to the centre.
struct SpiderWitness {
  Vertex centre = 0;
  std::vector<Vertex> leaves;
  std::vector<Vertex> path;
};

std::optional<SpiderWitness> find_induced_spider(const Graph& g,
                                                 const PatternSpider& p);
bool contains_induced_spider(const Graph& g, const PatternSpider& p);

/// Generic induced-subgraph test by backtracking; intended as an oracle.
/// Throws SizeLimitError for patterns above kPatternVertexLimit vertices.
bool contains_induced_subgraph(const Graph& host, const Graph& pattern);

/// One vertex per edge of g, in lexicographic edge order.
Graph line_graph(const Graph& g);

struct StructuralReport {
  std::size_t num_vertices = 0;
  std::size_t num_edges = 0;
  bool connected = false;
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  bool is_regular = false;
  std::map<std::size_t, std::size_t> degree_histogram;
};

StructuralReport structural_report(const Graph& g);

}  // namespace dcut
