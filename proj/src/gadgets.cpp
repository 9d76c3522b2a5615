#include "dcut/gadgets.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "dcut/errors.hpp"
#include "dcut/graph_algorithms.hpp"

namespace dcut {
namespace {

void check_ring_params(std::size_t d, std::size_t k, std::size_t r) {
  if (d < 2) throw PreconditionError("parameters", "need d >= 2");
  if (k < 2) throw PreconditionError("parameters", "need k >= 2");
  if (r < 2 * d + 2) {
    throw PreconditionError("parameters", "need r >= 2d+2 = " + std::to_string(2 * d + 2));
  }
}

std::vector<Vertex> id_range(Vertex first, std::size_t count) {
  std::vector<Vertex> ids(count);
  std::iota(ids.begin(), ids.end(), first);
  return ids;
}

// Builds the ring into `builder` and returns its labels (free vertices empty).
GadgetLabels build_ring(GraphBuilder& builder, std::size_t d, std::size_t k, std::size_t r) {
  GadgetLabels labels;
  std::vector<std::vector<Vertex>> a_ids(k);
  std::vector<std::vector<Vertex>> b_ids(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex first = builder.add_vertices(r);
    auto clique = id_range(first, r);
    builder.add_clique(clique);
    a_ids[i].assign(clique.begin(), clique.begin() + static_cast<std::ptrdiff_t>(d + 1));
    b_ids[i].assign(clique.begin() + static_cast<std::ptrdiff_t>(d + 1), clique.end());
    labels.cliques.emplace_back(clique);
    labels.a.emplace_back(a_ids[i]);
    labels.b.emplace_back(b_ids[i]);
  }
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex v = builder.add_vertex();
    builder.add_star(v, b_ids[i]);
    builder.add_star(v, a_ids[(i + 1) % k]);
    labels.connectors.push_back(v);
  }
  return labels;
}

}  // namespace

Gadget gen_regular_noncut(std::size_t d, std::size_t k, std::size_t r) {
  check_ring_params(d, k, r);
  GraphBuilder builder;
  GadgetLabels labels = build_ring(builder, d, k, r);
  return {builder.build(), std::move(labels)};
}

Gadget gen_h_gadget(std::size_t d, std::size_t k, std::size_t r) {
  check_ring_params(d, k, r);
  GraphBuilder builder;
  GadgetLabels labels = build_ring(builder, d, k, r);
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex w = builder.add_vertex();
    const auto& a = labels.a[i].members();
    builder.add_star(w, std::vector<Vertex>(a.begin(), a.end()));
    builder.add_edge(w, labels.connectors[(i + k - 1) % k]);
    labels.free.push_back(w);
  }
  return {builder.build(), std::move(labels)};
}

Graph gen_diamond_chain(std::size_t p, std::size_t k) {
  if (p < 4) throw PreconditionError("parameters", "need p >= 4");
  if (k < 1) throw PreconditionError("parameters", "need k >= 1");
  GraphBuilder builder;
  Vertex left = builder.add_vertex();
  for (std::size_t copy = 0; copy < k; ++copy) {
    const Vertex first_middle = builder.add_vertices(p - 2);
    auto middle = id_range(first_middle, p - 2);
    const Vertex right = builder.add_vertex();
    builder.add_clique(middle);
    builder.add_star(left, middle);
    builder.add_star(right, middle);
    left = right;
  }
  return builder.build();
}

Graph gen_spider(std::size_t t, std::size_t ell) {
  if (t < 1 || ell < 1) throw PreconditionError("parameters", "need t >= 1 and ell >= 1");
  GraphBuilder builder(1);
  for (std::size_t i = 0; i < t; ++i) builder.add_edge(0, builder.add_vertex());
  Vertex tail = 0;
  for (std::size_t i = 0; i < ell; ++i) {
    const Vertex next = builder.add_vertex();
    builder.add_edge(tail, next);
    tail = next;
  }
  return builder.build();
}

Graph gen_circular_ladder(std::size_t n) {
  if (n < 3) throw PreconditionError("parameters", "need n >= 3");
  GraphBuilder builder(2 * n);
  for (Vertex i = 0; i < n; ++i) {
    const auto j = static_cast<Vertex>((i + 1) % n);
    builder.add_edge(i, j);
    builder.add_edge(static_cast<Vertex>(n + i), static_cast<Vertex>(n + j));
    builder.add_edge(i, static_cast<Vertex>(n + i));
  }
  return builder.build();
}

namespace {

class BoundedBaseGraph {
 public:
  BoundedBaseGraph(std::size_t n, std::size_t max_deg, std::size_t max_line_degree)
      : adj_(n), max_deg_(max_deg), max_line_(max_line_degree) {}

  bool can_add(Vertex u, Vertex v) const {
    if (u == v || deg(u) >= max_deg_ || deg(v) >= max_deg_) return false;
    if (std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end()) return false;
    if (max_line_ == 0) return true;
    // Line degree of edge xy is deg(x) + deg(y) - 2.
    if (deg(u) + deg(v) > max_line_) return false;
    for (Vertex x : adj_[u]) {
      if (deg(u) + 1 + deg(x) - 2 > max_line_) return false;
    }
    for (Vertex x : adj_[v]) {
      if (deg(v) + 1 + deg(x) - 2 > max_line_) return false;
    }
    return true;
  }

  void add(Vertex u, Vertex v) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    edges_.push_back({std::min(u, v), std::max(u, v)});
  }

  Graph build() const { return Graph(adj_.size(), edges_); }

 private:
  std::size_t deg(Vertex v) const { return adj_[v].size(); }

  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
  std::size_t max_deg_;
  std::size_t max_line_;
};

}  // namespace

Graph gen_random_clawfree(const RandomClawFreeParams& params) {
  if (params.base == BaseShape::CircularLadder) {
    return line_graph(gen_circular_ladder(params.n_base));
  }
  const std::size_t n = params.n_base;
  if (n < 3) throw PreconditionError("parameters", "need n_base >= 3");
  if (params.max_deg_base < 2) throw PreconditionError("parameters", "need max_deg_base >= 2");
  if (params.max_line_degree != 0 && params.max_line_degree < params.max_deg_base) {
    throw PreconditionError("parameters", "max_line_degree must be at least max_deg_base");
  }

  std::mt19937_64 rng(params.seed);
  BoundedBaseGraph base(n, params.max_deg_base, params.max_line_degree);

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  // Random spanning tree: attach each vertex to an eligible earlier one.
  std::vector<Vertex> candidates;
  for (std::size_t i = 1; i < n; ++i) {
    candidates.clear();
    for (std::size_t j = 0; j < i; ++j) {
      if (base.can_add(order[j], order[i])) candidates.push_back(order[j]);
    }
    if (candidates.empty()) {
      throw PreconditionError("parameters", "degree caps leave no spanning tree");
    }
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    base.add(candidates[pick(rng)], order[i]);
  }

  std::uniform_int_distribution<std::size_t> extra_count(0, n / 2);
  std::uniform_int_distribution<Vertex> any(0, static_cast<Vertex>(n - 1));
  const std::size_t target = extra_count(rng);
  std::size_t added = 0;
  for (std::size_t attempt = 0; attempt < 20 * target + 20 && added < target; ++attempt) {
    const Vertex u = any(rng);
    const Vertex v = any(rng);
    if (base.can_add(u, v)) {
      base.add(u, v);
      ++added;
    }
  }
  return line_graph(base.build());
}

}  // namespace dcut
