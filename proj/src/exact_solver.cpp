#include "dcut/exact_solver.hpp"

#include <bit>
#include <string>

#include "dcut/errors.hpp"
#include "dcut/graph_algorithms.hpp"

namespace dcut {
namespace {

void require_connected(const Graph& g) {
  if (g.num_vertices() > 0 && !is_connected(g)) {
    throw PreconditionError("connectivity", "d-cuts are defined for connected graphs");
  }
}

}  // namespace

SolveOutcome solve_naive(const Graph& g, std::size_t d) {
  const std::size_t n = g.num_vertices();
  if (n > kNaiveVertexLimit) {
    throw SizeLimitError("naive enumeration is limited to " +
                         std::to_string(kNaiveVertexLimit) + " vertices, got " +
                         std::to_string(n));
  }
  require_connected(g);
  SolveOutcome out;
  if (n < 2) return out;

  // Vertex v lives at bit n-1-v, so counting upwards walks colourings in
  // lexicographic order with vertex 0 (the top bit) pinned Blue.
  auto bit = [n](Vertex v) { return std::uint32_t{1} << (n - 1 - v); };
  std::vector<std::uint32_t> adj(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbours(v)) adj[v] |= bit(w);
  }

  const std::uint32_t limit = std::uint32_t{1} << (n - 1);
  for (std::uint32_t red = 1; red < limit; ++red) {
    ++out.stats.branch_nodes;
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      const std::uint32_t other = (red & bit(v)) ? ~red : red;
      ok = static_cast<std::size_t>(std::popcount(adj[v] & other)) <= d;
    }
    if (!ok) continue;
    RedBlueColouring c(n);
    for (Vertex v = 0; v < n; ++v) {
      if (red & bit(v)) c.set(v, Colour::Red);
    }
    out.decision = Decision::Yes;
    out.witness = std::move(c);
    return out;
  }
  return out;
}

namespace {

class BlockSearch {
 public:
  BlockSearch(const Graph& g, std::size_t d, const BlockPartition& blocks,
              const SearchLimits& limits)
      : blocks_(blocks),
        limits_(limits),
        engine_(g, d, &blocks),
        start_(std::chrono::steady_clock::now()) {}

  bool run() {
    std::size_t pinned = 0;
    for (std::size_t b = 1; b < blocks_.num_blocks(); ++b) {
      if (blocks_.blocks[b].size() > blocks_.blocks[pinned].size()) pinned = b;
    }
    if (!engine_.assign(blocks_.blocks[pinned].front(), Colour::Blue)) return false;
    return search();
  }

  SolveStats stats() const {
    SolveStats s;
    s.branch_nodes = nodes_;
    s.propagation_steps = engine_.steps();
    s.edge_touches = engine_.work().edge_touches;
    s.num_blocks = blocks_.num_blocks();
    return s;
  }

  RedBlueColouring witness() const { return *engine_.snapshot().to_total(); }

 private:
  bool search() {
    ++nodes_;
    check_limits();

    std::size_t chosen = blocks_.num_blocks();
    std::size_t best_pressure = 0;
    std::size_t open_blocks = 0;
    std::size_t blue_pressure = 0;
    std::size_t red_pressure = 0;
    for (std::size_t b = 0; b < blocks_.num_blocks(); ++b) {
      const auto& members = blocks_.blocks[b];
      if (engine_.colour(members.front())) continue;
      ++open_blocks;
      std::size_t blue = 0;
      std::size_t red = 0;
      for (Vertex v : members) {
        blue += engine_.neighbours_coloured(v, Colour::Blue);
        red += engine_.neighbours_coloured(v, Colour::Red);
      }
      if (chosen == blocks_.num_blocks() || blue + red > best_pressure) {
        chosen = b;
        best_pressure = blue + red;
        blue_pressure = blue;
        red_pressure = red;
      }
    }

    if (chosen == blocks_.num_blocks()) {
      return engine_.num_coloured(Colour::Blue) > 0 &&
             engine_.num_coloured(Colour::Red) > 0;
    }

    Colour first = red_pressure > blue_pressure ? Colour::Red : Colour::Blue;
    // With no Red yet and one block left, Blue would give a monochromatic leaf.
    const bool must_be_red = engine_.num_coloured(Colour::Red) == 0 && open_blocks == 1;
    if (must_be_red) first = Colour::Red;

    for (Colour c : {first, opposite(first)}) {
      if (must_be_red && c == Colour::Blue) continue;
      const std::size_t mark = engine_.mark();
      if (engine_.assign(blocks_.blocks[chosen].front(), c) && search()) return true;
      engine_.undo(mark);
    }
    return false;
  }

  void check_limits() const {
    if (nodes_ > limits_.max_branch_nodes) {
      throw ResourceExceeded("branch node limit of " +
                                 std::to_string(limits_.max_branch_nodes) + " exceeded",
                             stats());
    }
    if ((nodes_ & 0xFF) == 0 &&
        std::chrono::steady_clock::now() - start_ > limits_.time_budget) {
      throw ResourceExceeded("time budget of " +
                                 std::to_string(limits_.time_budget.count()) +
                                 " ms exceeded",
                             stats());
    }
  }

  const BlockPartition& blocks_;
  SearchLimits limits_;
  Propagator engine_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SolveOutcome solve_bp(const Graph& g, std::size_t d, const SearchLimits& limits) {
  require_connected(g);
  SolveOutcome out;
  if (g.num_vertices() < 2) return out;

  const BlockPartition blocks = clique_blocks(g, d);
  out.stats.num_blocks = blocks.num_blocks();
  if (blocks.num_blocks() == 1) return out;

  BlockSearch search(g, d, blocks, limits);
  const bool found = search.run();
  out.stats = search.stats();
  if (!found) return out;

  RedBlueColouring witness = search.witness();
  if (!verify(g, witness, d).ok()) {
    throw std::logic_error("branch-and-propagate produced an invalid witness");
  }
  out.decision = Decision::Yes;
  out.witness = std::move(witness);
  return out;
}

}  // namespace dcut
