#include "dcut/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dcut/errors.hpp"
#include "dcut/gadgets.hpp"

namespace dcut {
namespace {

bool incidence_connected(const NaeFormula& f) {
  std::vector<std::size_t> parent(f.num_vars);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Clause& c : f.clauses) {
    for (const Literal& lit : c) parent[find(lit.var)] = find(c[0].var);
  }
  for (std::size_t v = 1; v < f.num_vars; ++v) {
    if (find(v) != find(0)) return false;
  }
  return true;
}

Colour truth_colour(bool value) { return value ? Colour::Blue : Colour::Red; }

}  // namespace

Reduction reduce(const NaeFormula& f, std::size_t d, std::optional<std::size_t> delta) {
  if (d < 2) throw PreconditionError("parameters", "need d >= 2");
  const std::size_t max_degree = delta.value_or(2 * d + 3);
  if (max_degree < 2 * d + 3) {
    throw PreconditionError("parameters", "delta must be at least 2d+3 = " +
                                              std::to_string(2 * d + 3));
  }

  std::vector<std::size_t> occurrences(f.num_vars, 0);
  for (const Clause& c : f.clauses) {
    for (const Literal& lit : c) ++occurrences.at(lit.var);
  }
  for (std::size_t v = 0; v < f.num_vars; ++v) {
    if (occurrences[v] == 0) {
      throw PreconditionError("formula", "variable " + std::to_string(v + 1) + " is unused");
    }
  }
  if (f.num_vars == 0 || !incidence_connected(f)) {
    throw PreconditionError("connectivity",
                            "variable/clause incidence is disconnected, so the reduced "
                            "graph would be too");
  }

  Reduction out;
  out.map.d = d;
  out.map.delta = max_degree;
  GraphBuilder builder;

  for (std::size_t v = 0; v < f.num_vars; ++v) {
    const std::size_t k = std::max<std::size_t>(occurrences[v], 2);
    const Gadget h = gen_h_gadget(d, k, max_degree - 1);
    const Vertex offset = builder.add_vertices(h.graph.num_vertices());
    for (const Edge& e : h.graph.edges()) builder.add_edge(offset + e.u, offset + e.v);

    VariableGadget var;
    var.first = offset;
    var.size = h.graph.num_vertices();
    var.occurrences = occurrences[v];
    var.padded = occurrences[v] < 2;
    for (Vertex w : h.labels.free) var.free.push_back(offset + w);
    out.map.variables.push_back(std::move(var));
  }

  std::vector<std::size_t> next_free(f.num_vars, 0);
  for (const Clause& clause : f.clauses) {
    ClauseGadget gadget;
    const Vertex d1 = builder.add_vertices(d);
    const Vertex d2 = builder.add_vertices(d + 1);
    gadget.c = builder.add_vertex();
    for (Vertex x = d1; x < d1 + d; ++x) gadget.d1.push_back(x);
    for (Vertex x = d2; x < d2 + d + 1; ++x) gadget.d2.push_back(x);

    std::vector<Vertex> both(gadget.d1);
    both.insert(both.end(), gadget.d2.begin(), gadget.d2.end());
    builder.add_clique(both);
    builder.add_star(gadget.c, gadget.d1);

    std::size_t next_positive = 1;
    for (const Literal& lit : clause) {
      const std::size_t role = lit.negated ? 0 : next_positive++;
      gadget.role_vars[role] = lit.var;
      gadget.attached[role] = out.map.variables[lit.var].free.at(next_free[lit.var]++);
    }
    const auto [w1, w2, w3] = gadget.attached;
    builder.add_star(w1, gadget.d1);
    builder.add_edge(w1, gadget.c);
    builder.add_star(w2, gadget.d2);
    builder.add_edge(w3, gadget.c);
    out.map.clauses.push_back(std::move(gadget));
  }

  out.graph = builder.build();
  return out;
}

RedBlueColouring assignment_to_colouring(const NaeFormula& f, const ReductionMap& map,
                                         const Assignment& a) {
  if (!is_third_assignment(f, a)) {
    throw PreconditionError("assignment",
                            "assignment must be NAE-satisfying and use both truth values");
  }
  std::size_t n = 0;
  for (const auto& var : map.variables) n = std::max<std::size_t>(n, var.first + var.size);
  for (const auto& cl : map.clauses) n = std::max<std::size_t>(n, cl.c + 1);

  RedBlueColouring colouring(n);
  for (std::size_t v = 0; v < map.variables.size(); ++v) {
    const auto& var = map.variables[v];
    for (Vertex x = var.first; x < var.first + var.size; ++x) colouring.set(x, truth_colour(a[v]));
  }
  for (const auto& cl : map.clauses) {
    const Colour clique_colour = truth_colour(a[cl.role_vars[1]]);
    for (Vertex x : cl.d1) colouring.set(x, clique_colour);
    for (Vertex x : cl.d2) colouring.set(x, clique_colour);
    colouring.set(cl.c, truth_colour(a[cl.role_vars[0]]));
  }
  return colouring;
}

Assignment colouring_to_assignment(const NaeFormula& f, const Graph& g,
                                   const ReductionMap& map, const RedBlueColouring& c) {
  const auto check = verify(g, c, map.d);
  if (!check.ok()) {
    throw PreconditionError("colouring", "not a red-blue " + std::to_string(map.d) +
                                             "-colouring: " + check.failure);
  }
  Assignment a;
  a.values.resize(map.variables.size());
  for (std::size_t v = 0; v < map.variables.size(); ++v) {
    const auto& var = map.variables[v];
    const Colour colour = c[var.first];
    for (Vertex x = var.first; x < var.first + var.size; ++x) {
      if (c[x] != colour) {
        throw std::logic_error("variable gadget " + std::to_string(v + 1) +
                               " is not monochromatic in a valid colouring");
      }
    }
    a.values[v] = colour == Colour::Blue;
  }
  if (!is_third_assignment(f, a)) {
    throw std::logic_error("valid colouring mapped to an assignment that is not NAE-satisfying");
  }
  return a;
}

}  // namespace dcut
