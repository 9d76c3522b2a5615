// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcut/exact_solver.hpp"
#include "dcut/gadgets.hpp"
#include "dcut/graph_algorithms.hpp"
#include "dcut/nae_formula.hpp"
#include "dcut/reduction.hpp"
#include "dcut/structured_solver.hpp"
#include "test_support.hpp"

namespace dcut {
namespace {

using Clock = std::chrono::steady_clock;

// Pinned tolerances and budgets.
constexpr double kGadgetSeconds = 10.0;
constexpr double kHGadgetSeconds = 5.0;
constexpr double kMeanClawFreeSeconds = 0.1;
constexpr double kLinearityTolerance = 0.15;
constexpr double kReducedSolveSeconds = 60.0;
constexpr std::size_t kClawFreeD2 = 200;
constexpr std::size_t kClawFreeD3 = 50;
constexpr std::size_t kFloodPairs = 300;
constexpr std::size_t kRandomFormulas = 100;
constexpr std::size_t kOracleGraphs = 500;
constexpr PatternSpider kClaw{2, 1};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok && pass) {
      pass = false;
      detail = why;
    }
  }
};

// Criterion 1.
Verdict gadget_impossibility() {
  Verdict v;
  const std::array<std::array<std::size_t, 3>, 4> cases{
      {{2, 2, 6}, {2, 3, 6}, {2, 2, 7}, {3, 2, 8}}};
  double worst = 0;
  for (const auto& [d, k, r] : cases) {
    const std::string tag = "(" + std::to_string(d) + "," + std::to_string(k) + "," +
                            std::to_string(r) + ")";
    const auto start = Clock::now();
    const Graph g = gen_regular_noncut(d, k, r).graph;
    const auto rep = structural_report(g);
    v.require(rep.num_vertices == (r + 1) * k, tag + " vertex count");
    v.require(rep.is_regular && rep.max_degree == r, tag + " not r-regular");
    v.require(!contains_induced_spider(g, kClaw), tag + " has a claw");
    v.require(solve_bp(g, d).decision == Decision::No, tag + " solve_bp found a cut");
    if ((d == 2 && k == 2 && r == 6) || (d == 3 && k == 2 && r == 8)) {
      v.require(solve_naive(g, d).decision == Decision::No, tag + " solve_naive found a cut");
    }
    const double t = seconds_since(start);
    worst = std::max(worst, t);
    v.require(t < kGadgetSeconds, tag + " took too long");
  }
  if (v.pass) v.detail = "4 instances, slowest " + std::to_string(worst) + " s";
  return v;
}

// Criterion 2.
Verdict h_gadget_impossibility() {
  Verdict v;
  const auto start = Clock::now();
  const Graph g = gen_h_gadget(2, 2, 6).graph;
  const auto rep = structural_report(g);
  v.require(rep.num_vertices == 16, "vertex count");
  v.require(rep.max_degree == 7, "max degree");
  v.require(rep.degree_histogram.count(4) && rep.degree_histogram.at(4) == 2,
            "degree-4 vertex count");
  v.require(!contains_induced_spider(g, kClaw), "has a claw");
  v.require(solve_bp(g, 2).decision == Decision::No, "solve_bp found a cut");
  v.require(solve_naive(g, 2).decision == Decision::No, "solve_naive found a cut");
  const double t = seconds_since(start);
  v.require(t < kHGadgetSeconds, "took too long");
  if (v.pass) v.detail = std::to_string(t) + " s";
  return v;
}

struct ClawFreeSpec {
  std::size_t d, count, n_min, n_max, max_degree;
};

// Criterion 3.
Verdict claw_free_at_scale() {
  Verdict v;
  std::mt19937_64 rng(20240601);
  std::ostringstream detail;
  for (const ClawFreeSpec spec : {ClawFreeSpec{2, kClawFreeD2, 81, 400, 5},
                                  ClawFreeSpec{3, kClawFreeD3, 253, 600, 7}}) {
    std::size_t done = 0;
    std::size_t ok = 0;
    std::size_t tries = 0;
    std::set<std::size_t> degrees;
    double total = 0;
    while (done < spec.count && tries < 100 * spec.count) {
      ++tries;
      RandomClawFreeParams params;
      params.seed = rng();
      if (spec.d == 2) {
        const bool wide = done % 4 == 3;
        params.max_deg_base = wide ? 4 : 3;
        params.max_line_degree = wide ? 5 : 0;
        params.n_base = std::uniform_int_distribution<std::size_t>(70, 300)(rng);
      } else {
        const bool wide = done % 2 == 1;
        params.max_deg_base = wide ? 5 : 4;
        params.max_line_degree = wide ? 7 : 0;
        params.n_base = std::uniform_int_distribution<std::size_t>(180, 420)(rng);
      }
      const Graph g = gen_random_clawfree(params);
      const std::size_t n = g.num_vertices();
      if (n < spec.n_min || n > spec.n_max || g.max_degree() > spec.max_degree ||
          g.max_degree() < 3) {
        continue;
      }
      if (contains_induced_spider(g, kClaw) || !is_connected(g)) {
        v.require(false, "generator produced an invalid instance");
        continue;
      }
      ++done;
      degrees.insert(g.max_degree());
      const auto start = Clock::now();
      try {
        const auto out = solve_claw_free(g, spec.d);
        total += seconds_since(start);
        if (verify(g, out.certificate.colouring(n), spec.d).ok()) ++ok;
      } catch (const std::exception& e) {
        total += seconds_since(start);
        v.require(false, "d=" + std::to_string(spec.d) + " n=" + std::to_string(n) + ": " +
                             e.what());
      }
    }
    v.require(done == spec.count, "could not generate enough instances");
    v.require(ok == spec.count, "d=" + std::to_string(spec.d) + " only " + std::to_string(ok) +
                                    " certificates verified");
    const double mean = done ? total / static_cast<double>(done) : 0;
    v.require(mean < kMeanClawFreeSeconds, "mean time too high");
    detail << "d=" << spec.d << ": " << ok << "/" << spec.count << " verified, Δ in {";
    for (auto it = degrees.begin(); it != degrees.end(); ++it) {
      detail << (it == degrees.begin() ? "" : ",") << *it;
    }
    detail << "}, mean " << mean * 1000 << " ms; ";
  }
  if (v.pass) v.detail = detail.str();
  return v;
}

// Criterion 4.
Verdict linearity() {
  Verdict v;
  std::ostringstream detail;
  double previous = 0;
  for (std::size_t n : {11, 22, 44, 88}) {
    const Graph g = line_graph(gen_circular_ladder(n));
    const auto out = solve_star_free(g, 2, 2, 1);
    v.require(verify(g, out.certificate.colouring(g.num_vertices()), 2).ok(), "invalid cut");
    const double size = static_cast<double>(g.num_vertices() + g.num_edges());
    const double ratio = static_cast<double>(out.work.total()) / size;
    detail << "n=" << n << " work=" << out.work.total() << " work/(n+m)=" << ratio << "; ";
    if (previous > 0) {
      v.require(std::abs(ratio / previous - 1.0) <= kLinearityTolerance,
                "ratio drifted at n=" + std::to_string(n));
    }
    previous = ratio;
  }
  if (v.pass) v.detail = detail.str();
  else v.detail += " | " + detail.str();
  return v;
}

// Criterion 5.
Verdict flooding_contract() {
  Verdict v;
  std::mt19937_64 rng(5150);
  std::size_t runs = 0;
  for (std::size_t attempt = 0; attempt < 100 * kFloodPairs && runs < kFloodPairs; ++attempt) {
    const std::size_t d = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(6, 60)(rng);
    const Graph g = testing::random_bounded_degree_graph(rng, n, 2 * d + 1, n);
    const Vertex start = std::uniform_int_distribution<Vertex>(0, static_cast<Vertex>(n - 1))(rng);
    std::vector<Vertex> order;
    for (const auto& layer : bfs_layers(g, start, n)) {
      order.insert(order.end(), layer.begin(), layer.end());
    }
    order.resize(std::min(order.size(), std::uniform_int_distribution<std::size_t>(1, n / 2)(rng)));
    const VertexSet s(order);
    const auto incidence = boundary_incidence(g, s);
    const std::size_t before = boundary(g, s).size();
    if (*std::max_element(incidence.begin(), incidence.end()) > d || s.size() + before >= n) {
      continue;
    }
    ++runs;
    try {
      const auto cert = flood_from_seed(g, s, d);
      const bool contains = std::all_of(s.begin(), s.end(),
                                        [&](Vertex x) { return cert.blue.contains(x); });
      const std::size_t after = boundary(g, cert.blue).size();
      v.require(testing::is_d_cut(g, cert.blue.mask(n), d), "certificate fails recount");
      v.require(contains, "Blue does not contain the seed");
      v.require(cert.blue.size() + after <= s.size() + before, "potential increased");
    } catch (const std::exception& e) {
      v.require(false, std::string("flood threw: ") + e.what());
    }
  }
  v.require(runs == kFloodPairs, "not enough valid pairs");
  if (v.pass) v.detail = std::to_string(runs) + " pairs, 0 failures";
  return v;
}

struct EquivalenceCase {
  NaeFormula formula;
  Reduction reduction;
  std::optional<Assignment> nae;
  SolveOutcome cut;
};

std::vector<Clause> ordered_clauses_on_three() {
  std::vector<Clause> out;
  std::array<std::uint32_t, 3> p{0, 1, 2};
  do {
    for (std::size_t negative = 0; negative < 3; ++negative) {
      Clause c;
      for (std::size_t i = 0; i < 3; ++i) c[i] = Literal{p[i], i == negative};
      out.push_back(c);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Canonical text of f under the best renaming of its three variables.
std::string canonical_on_three(const std::vector<Clause>& clauses) {
  std::string best;
  std::array<std::uint32_t, 3> p{0, 1, 2};
  do {
    std::string s;
    for (const Clause& c : clauses) {
      for (const Literal& lit : c) {
        s += lit.negated ? '-' : '+';
        s += static_cast<char>('0' + p[lit.var]);
      }
      s += '|';
    }
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

std::vector<NaeFormula> equivalence_corpus(std::size_t* exhaustive) {
  std::vector<NaeFormula> out;
  const auto clauses = ordered_clauses_on_three();
  std::set<std::string> seen;
  for (const Clause& a : clauses) {
    if (seen.insert(canonical_on_three({a})).second) out.push_back(make_nae_formula(3, {a}));
  }
  for (const Clause& a : clauses) {
    for (const Clause& b : clauses) {
      if (seen.insert(canonical_on_three({a, b})).second) {
        out.push_back(make_nae_formula(3, {a, b}));
      }
    }
  }
  *exhaustive = out.size();

  std::mt19937_64 rng(4242);
  while (out.size() < *exhaustive + kRandomFormulas) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(3, 5)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    std::vector<std::uint32_t> ids(n);
    std::iota(ids.begin(), ids.end(), 0U);
    std::vector<Clause> cs;
    for (std::size_t j = 0; j < m; ++j) {
      std::shuffle(ids.begin(), ids.end(), rng);
      const std::size_t negative = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
      Clause c;
      for (std::size_t i = 0; i < 3; ++i) c[i] = Literal{ids[i], i == negative};
      cs.push_back(c);
    }
    try {
      NaeFormula f = make_nae_formula(n, cs);
      reduce(f, 2);  // rejects disconnected incidence
      out.push_back(std::move(f));
    } catch (const std::invalid_argument&) {
    }
  }
  return out;
}

// Criterion 6, which also prepares the instances for criterion 10.
Verdict reduction_equivalence(std::vector<EquivalenceCase>& cases) {
  Verdict v;
  std::size_t exhaustive = 0;
  const auto corpus = equivalence_corpus(&exhaustive);
  std::size_t yes = 0;
  std::size_t max_vertices = 0;
  double slowest = 0;
  for (const NaeFormula& f : corpus) {
    EquivalenceCase c{f, reduce(f, 2), solve_nae01(f), {}};
    max_vertices = std::max(max_vertices, c.reduction.graph.num_vertices());
    const auto start = Clock::now();
    SearchLimits limits;
    limits.time_budget = std::chrono::milliseconds(static_cast<int>(kReducedSolveSeconds * 1000));
    try {
      c.cut = solve_bp(c.reduction.graph, 2, limits);
    } catch (const ResourceExceeded& e) {
      v.require(false, std::string("budget exceeded: ") + e.what());
      continue;
    }
    slowest = std::max(slowest, seconds_since(start));
    const bool sat = c.nae.has_value();
    v.require(sat == (c.cut.decision == Decision::Yes),
              "disagreement on " + serialize_cnf(f));
    yes += sat ? 1 : 0;
    cases.push_back(std::move(c));
  }
  if (v.pass) {
    v.detail = std::to_string(exhaustive) + " exhaustive + " + std::to_string(kRandomFormulas) +
               " random formulas, " + std::to_string(yes) + " YES, 100% agreement, up to " +
               std::to_string(max_vertices) + " vertices, slowest " + std::to_string(slowest) +
               " s";
  }
  return v;
}

// Criterion 7.
Verdict oracle_equivalence() {
  Verdict v;
  std::mt19937_64 rng(777);
  std::size_t agree = 0;
  for (std::size_t i = 0; i < kOracleGraphs; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 12)(rng);
    const double p = std::uniform_real_distribution<double>(0.05, 0.9)(rng);
    const std::size_t d = 1 + i % 3;
    const Graph g = testing::random_connected_graph(rng, n, p);
    const auto bp = solve_bp(g, d);
    const auto naive = solve_naive(g, d);
    if (bp.decision == naive.decision) ++agree;
  }
  v.require(agree == kOracleGraphs, std::to_string(kOracleGraphs - agree) + " disagreements");
  if (v.pass) v.detail = std::to_string(agree) + "/" + std::to_string(kOracleGraphs) + " agree";
  return v;
}

// Criterion 8.
Verdict diamond_chain() {
  Verdict v;
  for (std::size_t k = 1; k <= 5; ++k) {
    const Graph g = gen_diamond_chain(4, k);
    v.require(!contains_induced_spider(g, kClaw), "k=" + std::to_string(k) + " has a claw");
    v.require(solve_naive(g, 1).decision == Decision::No,
              "k=" + std::to_string(k) + " has a matching cut");
  }
  if (v.pass) v.detail = "k=1..5 claw-free, no 1-cut";
  return v;
}

// Criterion 9.
Verdict complete_graph_law() {
  Verdict v;
  for (std::size_t d = 1; d <= 3; ++d) {
    for (std::size_t n = 2; n <= 10; ++n) {
      const Graph g = testing::complete_graph(n);
      const Decision expected = n <= 2 * d ? Decision::Yes : Decision::No;
      const std::string tag = "K_" + std::to_string(n) + " d=" + std::to_string(d);
      v.require(solve_bp(g, d).decision == expected, tag + " solve_bp");
      v.require(solve_naive(g, d).decision == expected, tag + " solve_naive");
    }
  }
  if (v.pass) v.detail = "27 (n,d) pairs, both solvers";
  return v;
}

// Criterion 10.
Verdict witness_round_trips(const std::vector<EquivalenceCase>& cases) {
  Verdict v;
  std::size_t checked = 0;
  for (const auto& c : cases) {
    if (!c.nae) continue;
    ++checked;
    const Graph& g = c.reduction.graph;
    const auto& map = c.reduction.map;
    try {
      const RedBlueColouring col = assignment_to_colouring(c.formula, map, *c.nae);
      v.require(verify(g, col, 2).ok(), "forward map gives an invalid colouring");
      v.require(colouring_to_assignment(c.formula, g, map, col) == *c.nae,
                "composition moved the assignment");
      const Assignment back = colouring_to_assignment(c.formula, g, map, *c.cut.witness);
      v.require(is_third_assignment(c.formula, back), "backward map gives an invalid assignment");
    } catch (const std::exception& e) {
      v.require(false, std::string("witness map threw: ") + e.what());
    }
  }
  v.require(checked > 0, "no YES instances");
  if (v.pass) v.detail = std::to_string(checked) + " YES instances round-tripped";
  return v;
}

}  // namespace
}  // namespace dcut

int main() {
  using namespace dcut;
  std::vector<EquivalenceCase> cases;
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"gadget-impossibility", gadget_impossibility},
      {"h-gadget-impossibility", h_gadget_impossibility},
      {"claw-free-at-scale", claw_free_at_scale},
      {"linearity", linearity},
      {"flooding-contract", flooding_contract},
      {"reduction-equivalence", [&] { return reduction_equivalence(cases); }},
      {"oracle-equivalence", oracle_equivalence},
      {"diamond-chain", diamond_chain},
      {"complete-graph-law", complete_graph_law},
      {"witness-round-trips", [&] { return witness_round_trips(cases); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %zu %s: %s (%s)\n", i + 1, criteria[i].first.c_str(),
                v.pass ? "PASS" : "FAIL", v.detail.c_str());
    failures += v.pass ? 0 : 1;
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
