#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dcut/colouring.hpp"
#include "dcut/graph.hpp"
#include "dcut/graph_algorithms.hpp"

namespace dcut {

/// The input contains the forbidden spider, so the promised structure is
/// absent.
class PromiseViolation : public std::runtime_error {
 public:
  PromiseViolation(const std::string& what, SpiderWitness witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const SpiderWitness& witness() const noexcept { return witness_; }

 private:
  SpiderWitness witness_;
};

/// Seed set S built from the BFS ball around a start vertex, together with
/// the data that justifies it.
struct SeedReport {
  std::size_t d = 0;
  std::size_t t = 0;
  std::size_t ell = 0;
  Vertex start = 0;
  std::vector<std::size_t> layer_sizes;  ///< |S_0| .. |S_{ell+1}|
  VertexSet seed;
  std::size_t boundary_size = 0;
  std::vector<std::size_t> boundary_incidence;  ///< per seed member, in order
  std::vector<Vertex> forced;                   ///< U, in id order
  std::vector<VertexSet> cores;                 ///< H_u for each u in `forced`
  std::uint64_t ball_bound = 0;  ///< (Δ(Δ-1)^{ell+1} - 2) / (Δ-2)
  bool size_bound_met = false;   ///< n > (d+1) * ball_bound
};

/// Upper bound on the size of the radius-(ell+1) ball in a graph of maximum
/// degree max_degree >= 3. Saturates at UINT64_MAX.
std::uint64_t ball_size_bound(std::size_t max_degree, std::size_t ell);

/// Colours s Blue, repeatedly colours Blue any vertex with >= d+1 Blue
/// neighbours, and colours the rest Red. Requires a connected graph with
/// maximum degree <= 2d+1, a non-empty s whose members each meet at most d
/// edges of δ(s), and |s| + |δ(s)| < n. Violations throw PreconditionError
/// naming the failed condition.
DCutCertificate flood_from_seed(const Graph& g, const VertexSet& s, std::size_t d,
                                WorkCounters* work = nullptr);

/// Builds the seed for an S_{1^t,ell}-free graph with 3 <= Δ <= (td+1)/(t-1).
/// When n is below (d+1) * ball_bound the seed is still built and accepted
/// if it satisfies the flooding preconditions; otherwise "size bound" is
/// raised. Throws PromiseViolation if some N_u holds t independent vertices.
SeedReport build_seed(const Graph& g, std::size_t d, std::size_t t, std::size_t ell,
                      WorkCounters* work = nullptr);

struct StructuredOptions {
  bool check_promise = false;  ///< test the whole graph for the spider first
};

struct StructuredOutcome {
  DCutCertificate certificate;
  std::optional<SeedReport> seed;  ///< absent on the Δ <= 2 branch
  WorkCounters work;
};

/// d-cut of a connected S_{1^t,ell}-free graph. For Δ <= 2 the cut isolates
/// vertex 0; otherwise build_seed followed by flood_from_seed.
StructuredOutcome solve_star_free(const Graph& g, std::size_t d, std::size_t t,
                                  std::size_t ell, const StructuredOptions& options = {});

/// d-cut of a connected claw-free graph with Δ <= 2d+1 and n > 4d^2(2d+1).
StructuredOutcome solve_claw_free(const Graph& g, std::size_t d,
                                  const StructuredOptions& options = {});

}  // namespace dcut
