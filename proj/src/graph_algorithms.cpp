#include "dcut/graph_algorithms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "dcut/errors.hpp"

namespace dcut {

std::vector<VertexSet> bfs_layers(const Graph& g, Vertex source,
                                  std::size_t depth, WorkCounters* work) {
  if (source >= g.num_vertices()) {
    throw std::out_of_range("bfs source " + std::to_string(source) + " out of range");
  }
  WorkCounters local;
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<VertexSet> layers;
  std::vector<Vertex> frontier{source};
  seen[source] = true;
  for (std::size_t i = 0; i <= depth; ++i) {
    layers.emplace_back(frontier);
    if (i == depth) break;
    std::vector<Vertex> next;
    for (Vertex u : frontier) {
      ++local.vertex_visits;
      for (Vertex w : g.neighbours(u)) {
        ++local.edge_touches;
        if (!seen[w]) {
          seen[w] = true;
          next.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }
  if (work) *work += local;
  return layers;
}

bool is_connected(const Graph& g, WorkCounters* work) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return false;
  WorkCounters local;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    ++local.vertex_visits;
    for (Vertex w : g.neighbours(u)) {
      ++local.edge_touches;
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (work) *work += local;
  return reached == n;
}

std::vector<Edge> boundary(const Graph& g, const VertexSet& s) {
  auto in = s.mask(g.num_vertices());
  std::vector<Edge> out;
  for (Vertex u : s) {
    for (Vertex w : g.neighbours(u)) {
      if (!in[w]) out.push_back({std::min(u, w), std::max(u, w)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> boundary_incidence(const Graph& g, const VertexSet& s) {
  auto in = s.mask(g.num_vertices());
  std::vector<std::size_t> counts;
  counts.reserve(s.size());
  for (Vertex u : s) {
    std::size_t c = 0;
    for (Vertex w : g.neighbours(u)) c += in[w] ? 0 : 1;
    counts.push_back(c);
  }
  return counts;
}

Degeneracy degeneracy_core(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw std::invalid_argument("degeneracy of the empty graph");

  std::vector<std::size_t> deg(n);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<bool> removed(n, false);
  Degeneracy result;
  result.peel_order.reserve(n);
  result.peel_degree.reserve(n);
  std::size_t core_start = 0;

  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    if (result.peel_order.empty() || d > result.k) {
      result.k = d;
      core_start = result.peel_order.size();
    }
    removed[v] = true;
    result.peel_order.push_back(v);
    result.peel_degree.push_back(d);
    for (Vertex w : g.neighbours(v)) {
      if (removed[w]) continue;
      queue.erase({deg[w], w});
      --deg[w];
      queue.emplace(deg[w], w);
    }
  }
  // The k-core is everything still present when the running maximum first
  // reached k.
  result.core = VertexSet(std::vector<Vertex>(
      result.peel_order.begin() + static_cast<std::ptrdiff_t>(core_start),
      result.peel_order.end()));
  return result;
}

namespace {

// Chooses `need` pairwise non-adjacent vertices from candidates[from..],
// appending them to `chosen`.
bool extend_independent(const Graph& g, std::span<const Vertex> candidates,
                        std::size_t from, std::size_t need,
                        std::vector<Vertex>& chosen) {
  if (need == 0) return true;
  for (std::size_t i = from; i + need <= candidates.size(); ++i) {
    Vertex c = candidates[i];
    bool ok = std::none_of(chosen.begin(), chosen.end(),
                           [&](Vertex x) { return g.adjacent(x, c); });
    if (!ok) continue;
    chosen.push_back(c);
    if (extend_independent(g, candidates, i + 1, need - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> find_independent_set(const Graph& g,
                                                        std::size_t t) {
  if (g.num_vertices() > kIndependentSetVertexLimit) {
    throw SizeLimitError("independent-set search is limited to " +
                         std::to_string(kIndependentSetVertexLimit) +
                         " vertices, got " + std::to_string(g.num_vertices()));
  }
  std::vector<Vertex> all(g.num_vertices());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  std::vector<Vertex> chosen;
  if (extend_independent(g, all, 0, t, chosen)) return chosen;
  return std::nullopt;
}

bool has_independent_set(const Graph& g, std::size_t t) {
  return find_independent_set(g, t).has_value();
}

std::optional<std::vector<Vertex>> find_independent_subset(
    const Graph& g, std::span<const Vertex> candidates, std::size_t t) {
  std::vector<Vertex> chosen;
  if (extend_independent(g, candidates, 0, t, chosen)) return chosen;
  return std::nullopt;
}

namespace {

std::optional<SpiderWitness> find_claw(const Graph& g) {
  for (Vertex c = 0; c < g.num_vertices(); ++c) {
    auto nb = g.neighbours(c);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < nb.size(); ++k) {
          if (g.adjacent(nb[i], nb[k]) || g.adjacent(nb[j], nb[k])) continue;
          return SpiderWitness{c, {nb[j], nb[k]}, {nb[i]}};
        }
      }
    }
  }
  return std::nullopt;
}

class SpiderSearch {
 public:
  SpiderSearch(const Graph& g, const PatternSpider& p) : g_(g), p_(p) {}

  std::optional<SpiderWitness> run() {
    for (Vertex c = 0; c < g_.num_vertices(); ++c) {
      if (g_.degree(c) < p_.t + 1) continue;
      path_.assign(1, c);
      if (grow_path()) {
        return SpiderWitness{c, leaves_,
                             std::vector<Vertex>(path_.begin() + 1, path_.end())};
      }
    }
    return std::nullopt;
  }

 private:
  // path_ holds centre followed by the long leg built so far.
  bool grow_path() {
    if (path_.size() == p_.ell + 1) return pick_leaves();
    Vertex tail = path_.back();
    for (Vertex x : g_.neighbours(tail)) {
      if (std::find(path_.begin(), path_.end(), x) != path_.end()) continue;
      bool chord = false;
      for (std::size_t j = 0; j + 1 < path_.size(); ++j) {
        if (g_.adjacent(path_[j], x)) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      path_.push_back(x);
      if (grow_path()) return true;
      path_.pop_back();
    }
    return false;
  }

  bool pick_leaves() {
    Vertex centre = path_.front();
    std::vector<Vertex> candidates;
    for (Vertex x : g_.neighbours(centre)) {
      bool touches_leg = false;
      for (std::size_t j = 1; j < path_.size(); ++j) {
        if (x == path_[j] || g_.adjacent(path_[j], x)) {
          touches_leg = true;
          break;
        }
      }
      if (!touches_leg) candidates.push_back(x);
    }
    leaves_.clear();
    return extend_independent(g_, candidates, 0, p_.t, leaves_);
  }

  const Graph& g_;
  PatternSpider p_;
  std::vector<Vertex> path_;
  std::vector<Vertex> leaves_;
};

}  // namespace

std::optional<SpiderWitness> find_induced_spider(const Graph& g,
                                                 const PatternSpider& p) {
  if (p.t < 1 || p.ell < 1) throw std::invalid_argument("spider needs t >= 1 and ell >= 1");
  if (p.num_vertices() > kPatternVertexLimit) {
    throw SizeLimitError("pattern search is limited to " +
                         std::to_string(kPatternVertexLimit) + " pattern vertices");
  }
  if (p.t == 2 && p.ell == 1) return find_claw(g);
  return SpiderSearch(g, p).run();
}

bool contains_induced_spider(const Graph& g, const PatternSpider& p) {
  return find_induced_spider(g, p).has_value();
}

namespace {

class InducedMatcher {
 public:
  InducedMatcher(const Graph& host, const Graph& pattern)
      : host_(host), pattern_(pattern), used_(host.num_vertices(), false) {
    // Visit pattern vertices in BFS order so each new vertex (after the first
    // of its component) has an already-mapped neighbour.
    std::vector<bool> seen(pattern.num_vertices(), false);
    for (Vertex s = 0; s < pattern.num_vertices(); ++s) {
      if (seen[s]) continue;
      seen[s] = true;
      std::size_t head = order_.size();
      order_.push_back(s);
      while (head < order_.size()) {
        Vertex u = order_[head++];
        for (Vertex w : pattern.neighbours(u)) {
          if (!seen[w]) {
            seen[w] = true;
            order_.push_back(w);
          }
        }
      }
    }
    image_.assign(pattern.num_vertices(), 0);
  }

  bool run() { return place(0); }

 private:
  bool place(std::size_t i) {
    if (i == order_.size()) return true;
    Vertex p = order_[i];
    for (Vertex h = 0; h < host_.num_vertices(); ++h) {
      if (used_[h] || !consistent(i, p, h)) continue;
      used_[h] = true;
      image_[p] = h;
      if (place(i + 1)) return true;
      used_[h] = false;
    }
    return false;
  }

  bool consistent(std::size_t i, Vertex p, Vertex h) const {
    for (std::size_t j = 0; j < i; ++j) {
      Vertex q = order_[j];
      if (pattern_.adjacent(p, q) != host_.adjacent(h, image_[q])) return false;
    }
    return true;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::vector<bool> used_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
};

}  // namespace

bool contains_induced_subgraph(const Graph& host, const Graph& pattern) {
  if (pattern.num_vertices() > kPatternVertexLimit) {
    throw SizeLimitError("pattern search is limited to " +
                         std::to_string(kPatternVertexLimit) + " pattern vertices");
  }
  if (pattern.num_vertices() > host.num_vertices()) return false;
  return InducedMatcher(host, pattern).run();
}

Graph line_graph(const Graph& g) {
  if (g.num_edges() == 0) throw std::invalid_argument("line graph of an edgeless graph");
  auto edges = g.edges();
  std::vector<std::vector<Vertex>> incident(g.num_vertices());
  for (Vertex i = 0; i < edges.size(); ++i) {
    incident[edges[i].u].push_back(i);
    incident[edges[i].v].push_back(i);
  }
  GraphBuilder builder(edges.size());
  for (const auto& list : incident) builder.add_clique(list);
  return builder.build();
}

StructuralReport structural_report(const Graph& g) {
  StructuralReport r;
  r.num_vertices = g.num_vertices();
  r.num_edges = g.num_edges();
  r.connected = is_connected(g);
  r.max_degree = g.max_degree();
  r.min_degree = g.min_degree();
  r.is_regular = r.max_degree == r.min_degree;
  for (Vertex v = 0; v < g.num_vertices(); ++v) ++r.degree_histogram[g.degree(v)];
  return r;
}

}  // namespace dcut
