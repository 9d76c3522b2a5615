#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace dcut {

using Vertex = std::uint32_t;

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  /// Sorts and deduplicates.
  explicit VertexSet(std::vector<Vertex> ids);

  bool contains(Vertex v) const;
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  std::span<const Vertex> members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  Vertex front() const { return members_.front(); }

  /// Dense membership table over 0..n-1.
  std::vector<bool> mask(std::size_t n) const;

  VertexSet united(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Immutable simple undirected graph on vertices 0..n-1 with sorted adjacency.
class Graph {
 public:
  Graph() = default;

  /// Validates: ids in range, no self-loops, no duplicate edges (in either
  /// orientation). Throws std::invalid_argument otherwise.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t num_vertices() const noexcept { return adjacency_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }

  std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  std::size_t max_degree() const noexcept { return max_degree_; }
  std::size_t min_degree() const noexcept;

  /// All edges in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t num_edges_ = 0;
  std::size_t max_degree_ = 0;
};

/// Incremental edge collector for generators; rejects loops and repeats.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n = 0) : n_(n) {}

  Vertex add_vertex() { return static_cast<Vertex>(n_++); }
  Vertex add_vertices(std::size_t count) {
    auto first = static_cast<Vertex>(n_);
    n_ += count;
    return first;
  }
  std::size_t num_vertices() const noexcept { return n_; }

  void add_edge(Vertex u, Vertex v);
  /// Adds every edge between distinct members of `ids`.
  void add_clique(std::span<const Vertex> ids);
  /// Adds every edge between `a` and each member of `ids`.
  void add_star(Vertex a, std::span<const Vertex> ids);

  Graph build() const { return Graph(n_, edges_); }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

/// Subgraph induced on `s`; vertex i of the result is s.members()[i].
Graph induced_subgraph(const Graph& g, const VertexSet& s);

}  // namespace dcut
