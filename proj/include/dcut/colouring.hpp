#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dcut/graph.hpp"
#include "dcut/graph_algorithms.hpp"

namespace dcut {

enum class Colour : std::uint8_t { Blue, Red };

constexpr Colour opposite(Colour c) noexcept {
  return c == Colour::Blue ? Colour::Red : Colour::Blue;
}
constexpr char colour_letter(Colour c) noexcept {
  return c == Colour::Blue ? 'B' : 'R';
}

/// Total assignment of Blue/Red to the vertices of a graph.
class RedBlueColouring {
 public:
  RedBlueColouring() = default;
  explicit RedBlueColouring(std::size_t n, Colour fill = Colour::Blue)
      : colours_(n, fill) {}
  explicit RedBlueColouring(std::vector<Colour> colours)
      : colours_(std::move(colours)) {}

  std::size_t size() const noexcept { return colours_.size(); }
  Colour operator[](Vertex v) const { return colours_[v]; }
  void set(Vertex v, Colour c) { colours_[v] = c; }

  std::size_t count(Colour c) const;
  VertexSet members(Colour c) const;
  RedBlueColouring complemented() const;

  friend bool operator==(const RedBlueColouring&, const RedBlueColouring&) = default;

 private:
  std::vector<Colour> colours_;
};

/// A verified d-cut: (blue, red) partition V and every vertex sees at most d
/// crossing edges.
struct DCutCertificate {
  std::size_t d = 0;
  VertexSet blue;
  VertexSet red;
  std::vector<Edge> crossing;

  RedBlueColouring colouring(std::size_t n) const;
};

struct VerifyResult {
  std::optional<DCutCertificate> certificate;
  std::string failure;             ///< empty on success
  std::optional<Vertex> offending; ///< first vertex over the tolerance

  bool ok() const noexcept { return certificate.has_value(); }
};

/// Checks the red-blue d-colouring conditions. Failures are reported for the
/// first violated constraint in vertex-id order. Throws std::invalid_argument
/// when the colouring size does not match the graph.
VerifyResult verify(const Graph& g, const RedBlueColouring& c, std::size_t d);

/// Colouring under construction inside a solver; colours are never changed
/// once set.
class PartialColouring {
 public:
  PartialColouring() = default;
  explicit PartialColouring(std::size_t n) : cells_(n) {}

  std::size_t size() const noexcept { return cells_.size(); }
  std::optional<Colour> operator[](Vertex v) const { return cells_[v]; }
  bool is_set(Vertex v) const { return cells_[v].has_value(); }
  /// Throws std::logic_error when recolouring a set vertex.
  void set(Vertex v, Colour c);
  std::size_t num_set() const;

  /// True when every vertex set here has the same colour in `other`.
  bool extended_by(const PartialColouring& other) const;
  bool extended_by(const RedBlueColouring& total) const;
  std::optional<RedBlueColouring> to_total() const;

  friend bool operator==(const PartialColouring&, const PartialColouring&) = default;

 private:
  std::vector<std::optional<Colour>> cells_;
};

/// Vertex partition whose blocks are monochromatic in every red-blue
/// d-colouring. Blocks are ordered by smallest member; members are sorted.
struct BlockPartition {
  std::vector<std::size_t> block_of;
  std::vector<std::vector<Vertex>> blocks;

  std::size_t num_blocks() const noexcept { return blocks.size(); }
};

/// Seeds blocks from greedily grown cliques of size >= 2d+1, then merges a
/// vertex's block into any block where it has >= d+1 neighbours, to a fixed
/// point.
BlockPartition clique_blocks(const Graph& g, std::size_t d);

/// Counter-based forcing engine. Colouring a vertex updates per-neighbour
/// Blue/Red counters; an uncoloured vertex with >= d+1 neighbours of one
/// colour is queued for that colour. A conflict is raised when a coloured
/// vertex gains more than d neighbours of the other colour or a vertex is
/// forced both ways. With a block partition attached, colouring any member
/// colours its whole block. Supports backtracking via mark()/undo().
class Propagator {
 public:
  Propagator(const Graph& g, std::size_t d, const BlockPartition* blocks = nullptr);

  /// Colours v and runs to a fixed point; returns false on conflict.
  bool assign(Vertex v, Colour c);
  /// Assigns every set vertex of p, then propagates.
  bool load(const PartialColouring& p);

  bool conflict() const noexcept { return conflict_; }
  std::optional<Colour> colour(Vertex v) const { return colours_[v]; }
  std::size_t neighbours_coloured(Vertex v, Colour c) const {
    return counts_[v][static_cast<std::size_t>(c)];
  }
  std::size_t num_coloured(Colour c) const noexcept {
    return totals_[static_cast<std::size_t>(c)];
  }
  std::size_t num_coloured() const noexcept { return trail_.size(); }

  std::size_t mark() const noexcept { return trail_.size(); }
  /// Uncolours everything coloured after `mark` and clears any conflict.
  void undo(std::size_t mark);

  PartialColouring snapshot() const;
  std::uint64_t steps() const noexcept { return steps_; }
  const WorkCounters& work() const noexcept { return work_; }

 private:
  void colour_now(Vertex v, Colour c);
  void run_queue();

  const Graph& g_;
  std::size_t d_;
  const BlockPartition* blocks_;
  std::vector<std::optional<Colour>> colours_;
  std::vector<std::array<std::uint32_t, 2>> counts_;
  std::array<std::size_t, 2> totals_{0, 0};
  std::vector<Vertex> trail_;
  std::vector<std::pair<Vertex, Colour>> queue_;
  bool conflict_ = false;
  std::uint64_t steps_ = 0;
  WorkCounters work_;
};

struct PropagationResult {
  PartialColouring colouring;
  bool conflict = false;
};

/// Fixed point of the forcing rule starting from p.
PropagationResult propagate(const Graph& g, const PartialColouring& p, std::size_t d);

// Colouring file: one "v <id> <R|B>" line per vertex, 1-indexed; "c " lines
// are comments. Totality is required.
RedBlueColouring parse_colouring(std::istream& in, std::size_t n);
RedBlueColouring parse_colouring(std::string_view text, std::size_t n);
void write_colouring(std::ostream& out, const RedBlueColouring& c);

}  // namespace dcut
