#include "dcut/json_export.hpp"

#include <algorithm>

namespace dcut {
namespace {

using nlohmann::json;

json ids(std::span<const Vertex> vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(v + 1);
  return out;
}

json id_groups(const std::vector<VertexSet>& groups) {
  json out = json::array();
  for (const auto& g : groups) out.push_back(ids(g.members()));
  return out;
}

}  // namespace

json to_json(const SeedReport& report) {
  json cores = json::array();
  for (std::size_t i = 0; i < report.forced.size(); ++i) {
    cores.push_back({{"u", report.forced[i] + 1}, {"core_size", report.cores[i].size()},
                     {"core", ids(report.cores[i].members())}});
  }
  return {
      {"d", report.d},
      {"t", report.t},
      {"ell", report.ell},
      {"start", report.start + 1},
      {"layer_sizes", report.layer_sizes},
      {"seed_size", report.seed.size()},
      {"boundary_size", report.boundary_size},
      {"max_boundary_incidence",
       report.boundary_incidence.empty()
           ? 0
           : *std::max_element(report.boundary_incidence.begin(),
                               report.boundary_incidence.end())},
      {"forced", ids(report.forced)},
      {"cores", cores},
      {"ball_bound", report.ball_bound},
      {"size_bound_met", report.size_bound_met},
      {"seed", ids(report.seed.members())},
  };
}

json to_json(const GadgetLabels& labels) {
  return {
      {"T", id_groups(labels.cliques)},
      {"A", id_groups(labels.a)},
      {"B", id_groups(labels.b)},
      {"v", ids(labels.connectors)},
      {"w", ids(labels.free)},
  };
}

json to_json(const ReductionMap& map) {
  json variables = json::array();
  for (std::size_t i = 0; i < map.variables.size(); ++i) {
    const auto& var = map.variables[i];
    variables.push_back({{"variable", i + 1},
                         {"first", var.first + 1},
                         {"last", var.first + var.size},
                         {"occurrences", var.occurrences},
                         {"padded", var.padded},
                         {"free", ids(var.free)}});
  }
  json clauses = json::array();
  for (std::size_t i = 0; i < map.clauses.size(); ++i) {
    const auto& cl = map.clauses[i];
    json roles = json::array();
    for (std::size_t r = 0; r < 3; ++r) {
      roles.push_back({{"variable", cl.role_vars[r] + 1}, {"free_vertex", cl.attached[r] + 1}});
    }
    clauses.push_back({{"clause", i + 1},
                       {"d1", ids(cl.d1)},
                       {"d2", ids(cl.d2)},
                       {"c", cl.c + 1},
                       {"roles", roles}});
  }
  return {{"d", map.d}, {"delta", map.delta}, {"variables", variables}, {"clauses", clauses}};
}

}  // namespace dcut
