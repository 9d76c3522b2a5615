#include "dcut/structured_solver.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

#include "dcut/errors.hpp"

namespace dcut {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return b > kSaturated - a ? kSaturated : a + b;
}

void require_connected(const Graph& g, WorkCounters* work) {
  if (!is_connected(g, work)) {
    throw PreconditionError("connectivity", "graph must be connected");
  }
}

// Certificate straight from a Blue mask; the verifier pass is O(n+m).
DCutCertificate certify(const Graph& g, const std::vector<bool>& blue, std::size_t d,
                        WorkCounters* work) {
  RedBlueColouring c(g.num_vertices(), Colour::Red);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (blue[v]) c.set(v, Colour::Blue);
  }
  auto result = verify(g, c, d);
  if (work) {
    work->vertex_visits += 2 * g.num_vertices();
    work->edge_touches += 2 * g.num_edges();
  }
  if (!result.ok()) {
    throw std::logic_error("structured solver produced an invalid cut: " + result.failure);
  }
  return std::move(*result.certificate);
}

}  // namespace

std::uint64_t ball_size_bound(std::size_t max_degree, std::size_t ell) {
  // 1 + Δ * sum_{j=0}^{ell} (Δ-1)^j, which equals (Δ(Δ-1)^{ell+1} - 2)/(Δ-2).
  std::uint64_t geometric = 0;
  std::uint64_t power = 1;
  for (std::size_t j = 0; j <= ell; ++j) {
    geometric = sat_add(geometric, power);
    power = sat_mul(power, max_degree - 1);
  }
  return sat_add(1, sat_mul(max_degree, geometric));
}

DCutCertificate flood_from_seed(const Graph& g, const VertexSet& s, std::size_t d,
                                WorkCounters* work) {
  const std::size_t n = g.num_vertices();
  if (d < 1) throw PreconditionError("tolerance", "d must be at least 1");
  if (s.empty()) throw PreconditionError("emptiness", "seed set is empty");
  if (s.members().back() >= n) throw PreconditionError("seed range", "seed vertex out of range");
  require_connected(g, work);
  if (g.max_degree() > 2 * d + 1) {
    throw PreconditionError("degree bound", "maximum degree " + std::to_string(g.max_degree()) +
                                                " exceeds 2d+1 = " + std::to_string(2 * d + 1));
  }

  std::vector<bool> in_seed = s.mask(n);
  std::size_t seed_boundary = 0;
  for (Vertex u : s) {
    std::size_t incident = 0;
    for (Vertex w : g.neighbours(u)) incident += in_seed[w] ? 0 : 1;
    if (incident > d) {
      throw PreconditionError("boundary incidence",
                              "seed vertex " + std::to_string(u + 1) + " meets " +
                                  std::to_string(incident) + " boundary edges, more than d = " +
                                  std::to_string(d));
    }
    seed_boundary += incident;
  }
  if (s.size() + seed_boundary >= n) {
    throw PreconditionError("size bound", "|S| + |δ(S)| = " +
                                              std::to_string(s.size() + seed_boundary) +
                                              " is not below n = " + std::to_string(n));
  }

  Propagator engine(g, d);
  for (Vertex u : s) engine.assign(u, Colour::Blue);
  if (engine.conflict()) throw std::logic_error("flooding met a conflict");
  if (work) {
    *work += engine.work();
    work->vertex_visits += n;
  }

  std::vector<bool> blue(n, false);
  for (Vertex v = 0; v < n; ++v) blue[v] = engine.colour(v).has_value();
  DCutCertificate cert = certify(g, blue, d, work);

  if (cert.blue.size() + cert.crossing.size() > s.size() + seed_boundary) {
    throw std::logic_error("flooding increased |B| + |δ(B)|");
  }
  return cert;
}

SeedReport build_seed(const Graph& g, std::size_t d, std::size_t t, std::size_t ell,
                      WorkCounters* work) {
  if (d < 1 || t < 2 || ell < 1) {
    throw PreconditionError("parameters", "need d >= 1, t >= 2 and ell >= 1");
  }
  const std::size_t n = g.num_vertices();
  require_connected(g, work);
  const std::size_t delta = g.max_degree();
  if (delta < 3) {
    throw PreconditionError("degree bound", "seed construction needs maximum degree >= 3, got " +
                                                std::to_string(delta));
  }
  if (delta * (t - 1) > t * d + 1) {
    throw PreconditionError("degree bound",
                            "maximum degree " + std::to_string(delta) +
                                " exceeds (t*d+1)/(t-1) for t=" + std::to_string(t) +
                                ", d=" + std::to_string(d));
  }

  SeedReport report;
  report.d = d;
  report.t = t;
  report.ell = ell;
  report.ball_bound = ball_size_bound(delta, ell);
  report.size_bound_met = n > sat_mul(d + 1, report.ball_bound);

  Vertex start = 0;
  for (Vertex v = 1; v < n; ++v) {
    if (g.degree(v) < g.degree(start)) start = v;
  }
  if (work) work->vertex_visits += n;
  report.start = start;

  const auto layers = bfs_layers(g, start, ell + 1, work);
  std::unordered_map<Vertex, std::size_t> layer_of;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    report.layer_sizes.push_back(layers[i].size());
    for (Vertex x : layers[i]) layer_of.emplace(x, i);
  }

  std::vector<Vertex> seed_members;
  for (std::size_t i = 0; i <= ell; ++i) {
    seed_members.insert(seed_members.end(), layers[i].begin(), layers[i].end());
  }

  for (Vertex u : layers[ell]) {
    // Neighbours of u outside S_{ell-1} ∪ S_ell all sit in S_{ell+1}.
    std::vector<Vertex> outside;
    for (Vertex w : g.neighbours(u)) {
      if (layer_of.at(w) == ell + 1) outside.push_back(w);
    }
    if (outside.size() < d + 1) continue;
    report.forced.push_back(u);

    const VertexSet nu(std::move(outside));
    const Graph gu = induced_subgraph(g, nu);
    std::vector<Vertex> local(nu.size());
    for (Vertex i = 0; i < local.size(); ++i) local[i] = i;
    if (auto indep = find_independent_subset(gu, local, t)) {
      SpiderWitness witness;
      witness.centre = u;
      for (Vertex i : *indep) witness.leaves.push_back(nu.members()[i]);
      Vertex cur = u;
      for (std::size_t i = ell; i-- > 0;) {
        for (Vertex w : g.neighbours(cur)) {
          if (layer_of.at(w) == i) {
            cur = w;
            break;
          }
        }
        witness.path.push_back(cur);
      }
      throw PromiseViolation("graph is not S_{1^" + std::to_string(t) + "," +
                                 std::to_string(ell) + "}-free: vertex " +
                                 std::to_string(u + 1) + " has " + std::to_string(t) +
                                 " independent outer neighbours",
                             std::move(witness));
    }

    const Degeneracy core = degeneracy_core(gu);
    if ((core.k + 1) * (t - 1) < nu.size()) {
      throw std::logic_error("core of N_u below the minimum-degree guarantee");
    }
    std::vector<Vertex> global;
    for (Vertex i : core.core) global.push_back(nu.members()[i]);
    seed_members.insert(seed_members.end(), global.begin(), global.end());
    report.cores.emplace_back(std::move(global));
  }

  report.seed = VertexSet(std::move(seed_members));
  const auto& members = report.seed.members();
  for (Vertex x : members) {
    std::size_t incident = 0;
    for (Vertex w : g.neighbours(x)) {
      incident += std::binary_search(members.begin(), members.end(), w) ? 0 : 1;
    }
    report.boundary_incidence.push_back(incident);
    report.boundary_size += incident;
  }

  const bool incidence_ok =
      std::all_of(report.boundary_incidence.begin(), report.boundary_incidence.end(),
                  [d](std::size_t c) { return c <= d; });
  const bool size_ok = report.seed.size() + report.boundary_size < n;
  if (!incidence_ok || !size_ok) {
    if (!report.size_bound_met) {
      throw PreconditionError(
          "size bound", "n = " + std::to_string(n) + " is not above (d+1) * " +
                            std::to_string(report.ball_bound) +
                            " and the seed does not satisfy the flooding preconditions");
    }
    throw std::logic_error("seed invariants failed although the preconditions hold");
  }
  if (report.size_bound_met && report.seed.size() > report.ball_bound) {
    throw std::logic_error("seed larger than the ball bound");
  }
  return report;
}

StructuredOutcome solve_star_free(const Graph& g, std::size_t d, std::size_t t,
                                  std::size_t ell, const StructuredOptions& options) {
  if (d < 2 || t < 2 || ell < 1) {
    throw PreconditionError("parameters", "need d >= 2, t >= 2 and ell >= 1");
  }
  if (g.num_vertices() < 2) {
    throw PreconditionError("size bound", "a cut needs at least two vertices");
  }
  StructuredOutcome out;
  require_connected(g, &out.work);
  if (options.check_promise) {
    if (auto spider = find_induced_spider(g, PatternSpider{t, ell})) {
      throw PromiseViolation("graph contains an induced S_{1^" + std::to_string(t) + "," +
                                 std::to_string(ell) + "} centred at vertex " +
                                 std::to_string(spider->centre + 1),
                             *spider);
    }
  }

  if (g.max_degree() <= 2) {
    // Every vertex meets at most two cut edges, so isolating vertex 0 works.
    std::vector<bool> blue(g.num_vertices(), false);
    blue[0] = true;
    out.certificate = certify(g, blue, d, &out.work);
    return out;
  }

  SeedReport seed = build_seed(g, d, t, ell, &out.work);
  out.certificate = flood_from_seed(g, seed.seed, d, &out.work);
  out.seed = std::move(seed);
  return out;
}

StructuredOutcome solve_claw_free(const Graph& g, std::size_t d,
                                  const StructuredOptions& options) {
  if (d < 2) throw PreconditionError("parameters", "need d >= 2");
  const std::size_t n = g.num_vertices();
  if (g.max_degree() > 2 * d + 1) {
    throw PreconditionError("degree bound", "maximum degree " + std::to_string(g.max_degree()) +
                                                " exceeds 2d+1 = " + std::to_string(2 * d + 1));
  }
  const std::size_t threshold = 4 * d * d * (2 * d + 1);
  if (g.max_degree() > 2 && n <= threshold) {
    throw PreconditionError("size bound", "n = " + std::to_string(n) + " <= 4*d^2*(2d+1) = " +
                                              std::to_string(threshold));
  }
  return solve_star_free(g, d, 2, 1, options);
}

}  // namespace dcut
