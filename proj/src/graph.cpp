#include "dcut/graph.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

namespace dcut {

VertexSet::VertexSet(std::initializer_list<Vertex> ids)
    : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : members_(std::move(ids)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<bool> VertexSet::mask(std::size_t n) const {
  std::vector<bool> in(n, false);
  for (Vertex v : members_) {
    if (v >= n) throw std::out_of_range("vertex id out of range");
    in[v] = true;
  }
  return in;
}

VertexSet VertexSet::united(const VertexSet& other) const {
  std::vector<Vertex> out;
  out.reserve(members_.size() + other.members_.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out));
  VertexSet result;
  result.members_ = std::move(out);
  return result;
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    }
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw std::invalid_argument("duplicate edge");
    }
    max_degree_ = std::max(max_degree_, list.size());
  }
  num_edges_ = edges.size();
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::size_t Graph::min_degree() const noexcept {
  std::size_t best = adjacency_.empty() ? 0 : adjacency_.front().size();
  for (const auto& list : adjacency_) best = std::min(best, list.size());
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  edges_.push_back({u, v});
}

void GraphBuilder::add_clique(std::span<const Vertex> ids) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) add_edge(ids[i], ids[j]);
  }
}

void GraphBuilder::add_star(Vertex a, std::span<const Vertex> ids) {
  for (Vertex b : ids) add_edge(a, b);
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  // Index lookups by binary search keep this proportional to |s| rather than n.
  auto members = s.members();
  auto local = [&](Vertex w) -> std::optional<Vertex> {
    auto it = std::lower_bound(members.begin(), members.end(), w);
    if (it == members.end() || *it != w) return std::nullopt;
    return static_cast<Vertex>(it - members.begin());
  };
  std::vector<Edge> edges;
  for (Vertex i = 0; i < members.size(); ++i) {
    if (members[i] >= g.num_vertices()) throw std::out_of_range("vertex id out of range");
    for (Vertex w : g.neighbours(members[i])) {
      if (w <= members[i]) continue;
      if (auto j = local(w)) edges.push_back({i, *j});
    }
  }
  return Graph(members.size(), edges);
}

}  // namespace dcut
