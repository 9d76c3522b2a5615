#include "dcut/colouring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dcut {

std::size_t RedBlueColouring::count(Colour c) const {
  return static_cast<std::size_t>(std::count(colours_.begin(), colours_.end(), c));
}

VertexSet RedBlueColouring::members(Colour c) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < colours_.size(); ++v) {
    if (colours_[v] == c) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

RedBlueColouring RedBlueColouring::complemented() const {
  RedBlueColouring out(*this);
  for (auto& c : out.colours_) c = opposite(c);
  return out;
}

RedBlueColouring DCutCertificate::colouring(std::size_t n) const {
  RedBlueColouring c(n, Colour::Blue);
  for (Vertex v : red) c.set(v, Colour::Red);
  return c;
}

VerifyResult verify(const Graph& g, const RedBlueColouring& c, std::size_t d) {
  if (c.size() != g.num_vertices()) {
    throw std::invalid_argument("colouring covers " + std::to_string(c.size()) +
                                " vertices, graph has " +
                                std::to_string(g.num_vertices()));
  }
  VerifyResult result;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::size_t cross = 0;
    for (Vertex w : g.neighbours(v)) cross += c[w] != c[v] ? 1 : 0;
    if (cross > d) {
      result.offending = v;
      result.failure = "vertex " + std::to_string(v + 1) + " has " +
                       std::to_string(cross) + " neighbours of the other colour (d=" +
                       std::to_string(d) + ")";
      return result;
    }
  }
  if (c.count(Colour::Red) == 0) {
    result.failure = "no red vertex";
    return result;
  }
  if (c.count(Colour::Blue) == 0) {
    result.failure = "no blue vertex";
    return result;
  }
  DCutCertificate cert;
  cert.d = d;
  cert.blue = c.members(Colour::Blue);
  cert.red = c.members(Colour::Red);
  for (const Edge& e : g.edges()) {
    if (c[e.u] != c[e.v]) cert.crossing.push_back(e);
  }
  result.certificate = std::move(cert);
  return result;
}

void PartialColouring::set(Vertex v, Colour c) {
  if (cells_[v] && *cells_[v] != c) {
    throw std::logic_error("vertex " + std::to_string(v) + " already coloured");
  }
  cells_[v] = c;
}

std::size_t PartialColouring::num_set() const {
  return static_cast<std::size_t>(std::count_if(
      cells_.begin(), cells_.end(), [](const auto& c) { return c.has_value(); }));
}

bool PartialColouring::extended_by(const PartialColouring& other) const {
  if (other.size() != size()) return false;
  for (Vertex v = 0; v < size(); ++v) {
    if (cells_[v] && other.cells_[v] != cells_[v]) return false;
  }
  return true;
}

bool PartialColouring::extended_by(const RedBlueColouring& total) const {
  if (total.size() != size()) return false;
  for (Vertex v = 0; v < size(); ++v) {
    if (cells_[v] && *cells_[v] != total[v]) return false;
  }
  return true;
}

std::optional<RedBlueColouring> PartialColouring::to_total() const {
  RedBlueColouring out(size());
  for (Vertex v = 0; v < size(); ++v) {
    if (!cells_[v]) return std::nullopt;
    out.set(v, *cells_[v]);
  }
  return out;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Greedy maximal clique containing edge uv: repeatedly add the smallest
// common neighbour of the clique so far.
std::vector<Vertex> grow_clique(const Graph& g, Vertex u, Vertex v) {
  std::vector<Vertex> clique{u, v};
  std::vector<Vertex> candidates;
  auto nu = g.neighbours(u);
  auto nv = g.neighbours(v);
  std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                        std::back_inserter(candidates));
  while (!candidates.empty()) {
    Vertex x = candidates.front();
    clique.push_back(x);
    std::vector<Vertex> next;
    auto nx = g.neighbours(x);
    std::set_intersection(candidates.begin() + 1, candidates.end(), nx.begin(),
                          nx.end(), std::back_inserter(next));
    candidates = std::move(next);
  }
  return clique;
}

}  // namespace

BlockPartition clique_blocks(const Graph& g, std::size_t d) {
  const std::size_t n = g.num_vertices();
  UnionFind uf(n);
  for (const Edge& e : g.edges()) {
    auto clique = grow_clique(g, e.u, e.v);
    if (clique.size() >= 2 * d + 1) {
      for (Vertex x : clique) uf.unite(clique.front(), x);
    }
  }

  // A vertex with d+1 neighbours in a monochromatic block shares its colour.
  bool changed = true;
  std::vector<std::size_t> roots;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      roots.clear();
      const std::size_t own = uf.find(v);
      for (Vertex w : g.neighbours(v)) {
        std::size_t r = uf.find(w);
        if (r != own) roots.push_back(r);
      }
      std::sort(roots.begin(), roots.end());
      for (std::size_t i = 0; i < roots.size();) {
        std::size_t j = i;
        while (j < roots.size() && roots[j] == roots[i]) ++j;
        if (j - i >= d + 1 && uf.unite(v, roots[i])) changed = true;
        i = j;
      }
    }
  }

  BlockPartition out;
  out.block_of.assign(n, 0);
  std::vector<std::size_t> index_of_root(n, n);
  for (Vertex v = 0; v < n; ++v) {
    std::size_t r = uf.find(v);
    if (index_of_root[r] == n) {
      index_of_root[r] = out.blocks.size();
      out.blocks.emplace_back();
    }
    out.block_of[v] = index_of_root[r];
    out.blocks[index_of_root[r]].push_back(v);
  }
  return out;
}

Propagator::Propagator(const Graph& g, std::size_t d, const BlockPartition* blocks)
    : g_(g),
      d_(d),
      blocks_(blocks),
      colours_(g.num_vertices()),
      counts_(g.num_vertices(), {0, 0}) {
  trail_.reserve(g.num_vertices());
}

bool Propagator::assign(Vertex v, Colour c) {
  if (conflict_) return false;
  queue_.emplace_back(v, c);
  run_queue();
  return !conflict_;
}

bool Propagator::load(const PartialColouring& p) {
  for (Vertex v = 0; v < p.size() && !conflict_; ++v) {
    if (p[v]) queue_.emplace_back(v, *p[v]);
  }
  run_queue();
  return !conflict_;
}

void Propagator::run_queue() {
  while (!queue_.empty() && !conflict_) {
    auto [v, c] = queue_.back();
    queue_.pop_back();
    if (colours_[v]) {
      if (*colours_[v] != c) conflict_ = true;
      continue;
    }
    colour_now(v, c);
  }
  if (conflict_) queue_.clear();
}

void Propagator::colour_now(Vertex v, Colour c) {
  const auto ci = static_cast<std::size_t>(c);
  const auto oi = 1 - ci;
  colours_[v] = c;
  trail_.push_back(v);
  ++totals_[ci];
  ++steps_;
  ++work_.vertex_visits;
  if (counts_[v][oi] > d_) conflict_ = true;
  for (Vertex w : g_.neighbours(v)) {
    ++work_.edge_touches;
    auto& cnt = counts_[w];
    ++cnt[ci];
    if (colours_[w]) {
      if (*colours_[w] != c && cnt[ci] > d_) conflict_ = true;
    } else if (cnt[ci] == d_ + 1) {
      queue_.emplace_back(w, c);
    }
  }
  if (blocks_) {
    for (Vertex x : blocks_->blocks[blocks_->block_of[v]]) {
      if (x != v && !colours_[x]) queue_.emplace_back(x, c);
    }
  }
}

void Propagator::undo(std::size_t mark) {
  while (trail_.size() > mark) {
    Vertex v = trail_.back();
    trail_.pop_back();
    const auto ci = static_cast<std::size_t>(*colours_[v]);
    for (Vertex w : g_.neighbours(v)) --counts_[w][ci];
    --totals_[ci];
    colours_[v].reset();
  }
  queue_.clear();
  conflict_ = false;
}

PartialColouring Propagator::snapshot() const {
  PartialColouring p(colours_.size());
  for (Vertex v = 0; v < colours_.size(); ++v) {
    if (colours_[v]) p.set(v, *colours_[v]);
  }
  return p;
}

PropagationResult propagate(const Graph& g, const PartialColouring& p, std::size_t d) {
  if (p.size() != g.num_vertices()) {
    throw std::invalid_argument("partial colouring size does not match graph");
  }
  Propagator engine(g, d);
  if (!engine.load(p)) return {p, true};
  return {engine.snapshot(), false};
}

}  // namespace dcut
