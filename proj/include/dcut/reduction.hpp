#pragma once

#include <optional>
#include <vector>

#include "dcut/colouring.hpp"
#include "dcut/graph.hpp"
#include "dcut/nae_formula.hpp"

namespace dcut {

struct VariableGadget {
  Vertex first = 0;             ///< F_l occupies [first, first + size)
  std::size_t size = 0;
  std::size_t occurrences = 0;  ///< k_l
  std::vector<Vertex> free;     ///< free vertices w_1.. of F_l, in order
  bool padded = false;          ///< k_l = 1, so one free vertex stays unattached
};

struct ClauseGadget {
  std::vector<Vertex> d1;  ///< D_{i,1}, size d
  std::vector<Vertex> d2;  ///< D_{i,2}, size d+1
  Vertex c = 0;
  /// Free vertices attached for the negative literal, first positive literal
  /// and second positive literal, in that order.
  std::array<Vertex, 3> attached{};
  /// Variable playing each role above.
  std::array<std::uint32_t, 3> role_vars{};
};

struct ReductionMap {
  std::size_t d = 0;
  std::size_t delta = 0;
  std::vector<VariableGadget> variables;
  std::vector<ClauseGadget> clauses;
};

struct Reduction {
  Graph graph;
  ReductionMap map;
};

/// Claw-free d-Cut instance of maximum degree <= delta that has a d-cut iff
/// f has a non-constant NAE-satisfying assignment. Each variable becomes a
/// copy of H_{d, max(k,2), delta-1}; each clause becomes cliques D_{i,1}
/// (size d), D_{i,2} (size d+1) and a vertex c_i wired to free vertices of
/// its three variables. delta defaults to 2d+3. Throws PreconditionError for
/// d < 2, delta < 2d+3, or a formula whose variable/clause incidence is
/// disconnected.
Reduction reduce(const NaeFormula& f, std::size_t d, std::optional<std::size_t> delta = {});

/// Variable gadgets coloured by truth value (true = Blue), D_i as the first
/// positive literal's free vertex, c_i as the negative literal's. Throws
/// PreconditionError unless a is a non-constant NAE-satisfying assignment.
RedBlueColouring assignment_to_colouring(const NaeFormula& f, const ReductionMap& map,
                                         const Assignment& a);

/// x_l is true iff F_l is Blue. Throws PreconditionError if c is not a valid
/// red-blue d-colouring of `g`, and std::logic_error if some F_l is not
/// monochromatic.
Assignment colouring_to_assignment(const NaeFormula& f, const Graph& g,
                                   const ReductionMap& map, const RedBlueColouring& c);

}  // namespace dcut
