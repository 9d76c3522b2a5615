#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "dcut/colouring.hpp"
#include "dcut/graph.hpp"

namespace dcut {

enum class Decision { Yes, No };

struct SolveStats {
  std::uint64_t branch_nodes = 0;
  std::uint64_t propagation_steps = 0;
  std::uint64_t edge_touches = 0;
  std::size_t num_blocks = 0;
};

/// Decision yes implies a witness that passes verify().
struct SolveOutcome {
  Decision decision = Decision::No;
  std::optional<RedBlueColouring> witness;
  SolveStats stats;
};

inline constexpr std::size_t kNaiveVertexLimit = 25;

/// Enumerates the 2^(n-1) colourings with vertex 0 Blue in lexicographic
/// order (Blue < Red, vertex 0 most significant) and returns the first
/// d-colouring. Requires a connected graph with at most kNaiveVertexLimit
/// vertices.
SolveOutcome solve_naive(const Graph& g, std::size_t d);

struct SearchLimits {
  std::uint64_t max_branch_nodes = 10'000'000;
  std::chrono::milliseconds time_budget{60'000};
};

class ResourceExceeded : public std::runtime_error {
 public:
  ResourceExceeded(const std::string& what, SolveStats stats)
      : std::runtime_error(what), stats_(stats) {}
  const SolveStats& stats() const noexcept { return stats_; }

 private:
  SolveStats stats_;
};

/// Branch-and-propagate search over monochromatic blocks. The largest block
/// is pinned Blue; each decision colours a whole block and runs the forcing
/// engine, backtracking on conflict. Throws ResourceExceeded when a limit is
/// hit.
SolveOutcome solve_bp(const Graph& g, std::size_t d, const SearchLimits& limits = {});

}  // namespace dcut
