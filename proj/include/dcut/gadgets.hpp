#pragma once

#include <cstdint>
#include <vector>

#include "dcut/graph.hpp"

namespace dcut {

/// Named vertex groups of the clique-ring constructions. Ids are laid out as
/// T_1..T_k (each A_i then B_i), then v_1..v_k, then w_1..w_k.
struct GadgetLabels {
  std::vector<VertexSet> cliques;  ///< T_i = A_i ∪ B_i
  std::vector<VertexSet> a;        ///< |A_i| = d+1
  std::vector<VertexSet> b;        ///< |B_i| = r-(d+1)
  std::vector<Vertex> connectors;  ///< v_i, adjacent to B_i ∪ A_{i+1}
  std::vector<Vertex> free;        ///< w_i, adjacent to A_i ∪ {v_{i-1}}
};

struct Gadget {
  Graph graph;
  GadgetLabels labels;
};

/// k cliques of size r joined in a ring by connector vertices: an r-regular
/// claw-free graph on (r+1)k vertices with no d-cut.
/// Requires d >= 2, k >= 2, r >= 2d+2.
Gadget gen_regular_noncut(std::size_t d, std::size_t k, std::size_t r);

/// gen_regular_noncut plus k free vertices of degree d+2; maximum degree
/// r+1 on (r+2)k vertices, still claw-free with no d-cut.
Gadget gen_h_gadget(std::size_t d, std::size_t k, std::size_t r);

/// k copies of K_p minus an edge, consecutive copies glued at one endpoint
/// of their missing edge. Requires p >= 4, k >= 1.
Graph gen_diamond_chain(std::size_t p, std::size_t k);

/// Centre 0, leaves 1..t, then a path t+1..t+ell hanging off the centre.
Graph gen_spider(std::size_t t, std::size_t ell);

/// Prism over C_n: two n-cycles with matching rungs (3-regular, 2n
/// vertices). Requires n >= 3.
Graph gen_circular_ladder(std::size_t n);

enum class BaseShape { Random, CircularLadder };

struct RandomClawFreeParams {
  std::size_t n_base = 0;  ///< base vertices; for CircularLadder, the ring length
  std::size_t max_deg_base = 3;
  std::uint64_t seed = 0;
  /// When non-zero, edges are only added while every line-graph degree
  /// stays at or below this cap.
  std::size_t max_line_degree = 0;
  /// CircularLadder ignores the seed and the caps and uses CL_{n_base}.
  BaseShape base = BaseShape::Random;
};

/// Line graph of a random connected base graph of bounded degree: a random
/// spanning tree under the degree cap, then random extra edges. Connected,
/// claw-free, and deterministic for a given seed.
Graph gen_random_clawfree(const RandomClawFreeParams& params);

}  // namespace dcut
