#include "dcut/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "dcut/colouring.hpp"
#include "dcut/errors.hpp"
#include "dcut/exact_solver.hpp"
#include "dcut/gadgets.hpp"
#include "dcut/graph_algorithms.hpp"
#include "dcut/graph_io.hpp"
#include "dcut/json_export.hpp"
#include "dcut/nae_formula.hpp"
#include "dcut/reduction.hpp"
#include "dcut/structured_solver.hpp"

namespace dcut {
namespace {

// Writes to `path`, or to `fallback` when path is empty or "-".
void emit(const std::string& path, std::ostream& fallback,
          const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  body(file);
  if (!file) throw std::runtime_error("error writing " + path);
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

std::string id_list(std::span<const Vertex> vs) {
  std::string s;
  for (Vertex v : vs) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v + 1);
  }
  return s;
}

std::uint64_t default_max_nodes() {
  const char* env = std::getenv("DCUT_MAX_NODES");
  if (env == nullptr || *env == '\0') return SearchLimits{}.max_branch_nodes;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (*end != '\0' || value == 0) {
    throw std::invalid_argument(std::string("DCUT_MAX_NODES is not a positive integer: ") + env);
  }
  return value;
}

struct Options {
  // gen
  std::size_t d = 0, k = 0, r = 0, p = 0, t = 0, ell = 0, n = 0;
  std::size_t max_deg = 3, max_line_degree = 0;
  std::uint64_t seed = 0;
  std::string output, labels, dot;
  // solvers and checks
  std::string graph, colouring, witness, report, map, cnf;
  bool ladder = false, naive = false, stats = false, check_promise = false;
  std::optional<std::uint64_t> max_nodes;
  std::optional<double> timeout;
  std::optional<std::size_t> delta;
};

class Runner {
 public:
  Runner(std::ostream& out) : out_(out) {}

  void setup(CLI::App& app) {
    app.require_subcommand(1);
    setup_gen(app);
    setup_solve(app);
    setup_verify(app);
    setup_check(app);
    setup_sat(app);
  }

  int run() { return action_(); }

 private:
  void setup_gen(CLI::App& app) {
    auto* gen = app.add_subcommand("gen", "generate a graph family");
    gen->require_subcommand(1);
    auto common = [this](CLI::App* sub) {
      sub->add_option("-o,--output", o_.output, "graph file (default stdout)");
      sub->add_option("--dot", o_.dot, "also write Graphviz");
    };
    auto ring = [&](const char* name, const char* help, bool h) {
      auto* sub = gen->add_subcommand(name, help);
      sub->add_option("--d", o_.d)->required();
      sub->add_option("--k", o_.k)->required();
      sub->add_option("--r", o_.r)->required();
      sub->add_option("--labels", o_.labels, "JSON vertex groups");
      common(sub);
      sub->callback([this, h] {
        action_ = [this, h] {
          const Gadget gadget = h ? gen_h_gadget(o_.d, o_.k, o_.r)
                                  : gen_regular_noncut(o_.d, o_.k, o_.r);
          write_generated(gadget.graph);
          if (!o_.labels.empty()) {
            emit(o_.labels, out_, [&](std::ostream& s) { s << to_json(gadget.labels).dump(2) << '\n'; });
          }
          return kExitOk;
        };
      });
    };
    ring("regular-noncut", "r-regular clique ring with no d-cut", false);
    ring("h-gadget", "clique ring with free vertices", true);

    auto* diamond = gen->add_subcommand("diamond-chain", "chain of K_p minus an edge");
    diamond->add_option("--p", o_.p)->required();
    diamond->add_option("--k", o_.k)->required();
    common(diamond);
    diamond->callback([this] {
      action_ = [this] {
        write_generated(gen_diamond_chain(o_.p, o_.k));
        return kExitOk;
      };
    });

    auto* spider = gen->add_subcommand("spider", "S_{1^t,ell}");
    spider->add_option("--t", o_.t)->required();
    spider->add_option("--ell", o_.ell)->required();
    common(spider);
    spider->callback([this] {
      action_ = [this] {
        write_generated(gen_spider(o_.t, o_.ell));
        return kExitOk;
      };
    });

    auto* random = gen->add_subcommand("random-clawfree", "line graph of a random base graph");
    random->add_option("--n", o_.n, "base graph vertices")->required();
    random->add_option("--max-deg", o_.max_deg, "base graph degree cap");
    random->add_option("--max-line-degree", o_.max_line_degree, "line graph degree cap");
    random->add_option("--seed", o_.seed);
    random->add_flag("--circular-ladder", o_.ladder, "base graph CL_n instead of a random one");
    common(random);
    random->callback([this] {
      action_ = [this] {
        write_generated(gen_random_clawfree(
            {o_.n, o_.max_deg, o_.seed, o_.max_line_degree,
             o_.ladder ? BaseShape::CircularLadder : BaseShape::Random}));
        return kExitOk;
      };
    });
  }

  void setup_solve(CLI::App& app) {
    auto* solve = app.add_subcommand("solve", "decide or construct a d-cut");
    solve->require_subcommand(1);

    auto* exact = solve->add_subcommand("exact", "exact decision for any connected graph");
    exact->add_option("--d", o_.d)->required();
    exact->add_flag("--naive", o_.naive, "plain enumeration");
    exact->add_option("--max-nodes", o_.max_nodes, "branch node ceiling");
    exact->add_option("--timeout", o_.timeout, "seconds");
    exact->add_option("--witness", o_.witness, "colouring file written on YES");
    exact->add_flag("--stats", o_.stats, "print search counters");
    exact->add_option("graph", o_.graph)->required();
    exact->callback([this] { action_ = [this] { return solve_exact(); }; });

    auto* structured = solve->add_subcommand("structured", "linear-time construction");
    structured->add_option("--d", o_.d)->required();
    auto* t = structured->add_option("--t", o_.t);
    auto* ell = structured->add_option("--ell", o_.ell);
    t->needs(ell);
    ell->needs(t);
    structured->add_flag("--check-promise", o_.check_promise, "test spider-freeness first");
    structured->add_option("--report", o_.report, "seed report JSON");
    structured->add_option("--witness", o_.witness, "colouring file");
    structured->add_flag("--stats", o_.stats, "print work counters");
    structured->add_option("graph", o_.graph)->required();
    structured->callback([this] { action_ = [this] { return solve_structured(); }; });
  }

  void setup_verify(CLI::App& app) {
    auto* verify_cmd = app.add_subcommand("verify", "check a red-blue d-colouring");
    verify_cmd->add_option("--d", o_.d)->required();
    verify_cmd->add_option("--colouring", o_.colouring)->required();
    verify_cmd->add_option("graph", o_.graph)->required();
    verify_cmd->callback([this] {
      action_ = [this] {
        const Graph g = read_graph_file(o_.graph);
        auto in = open_input(o_.colouring);
        const RedBlueColouring c = parse_colouring(in, g.num_vertices());
        const VerifyResult result = verify(g, c, o_.d);
        if (!result.ok()) throw std::invalid_argument(result.failure);
        out_ << "OK\n"
             << "blue=" << result.certificate->blue.size() << '\n'
             << "red=" << result.certificate->red.size() << '\n'
             << "crossing=" << result.certificate->crossing.size() << '\n';
        return kExitOk;
      };
    });
  }

  void setup_check(CLI::App& app) {
    auto* check = app.add_subcommand("check", "structural checks");
    check->require_subcommand(1);

    auto* claw = check->add_subcommand("clawfree", "no induced K_{1,3}");
    claw->add_option("graph", o_.graph)->required();
    claw->callback([this] {
      action_ = [this] { return report_spider(read_graph_file(o_.graph), {2, 1}); };
    });

    auto* star = check->add_subcommand("starfree", "no induced S_{1^t,ell}");
    star->add_option("--t", o_.t)->required();
    star->add_option("--ell", o_.ell)->required();
    star->add_option("graph", o_.graph)->required();
    star->callback([this] {
      action_ = [this] { return report_spider(read_graph_file(o_.graph), {o_.t, o_.ell}); };
    });

    auto* conn = check->add_subcommand("connected", "connectivity");
    conn->add_option("graph", o_.graph)->required();
    conn->callback([this] {
      action_ = [this] {
        out_ << (is_connected(read_graph_file(o_.graph)) ? "YES" : "NO") << '\n';
        return kExitOk;
      };
    });

    auto* degree = check->add_subcommand("degree", "degree summary");
    degree->add_option("graph", o_.graph)->required();
    degree->callback([this] {
      action_ = [this] {
        const StructuralReport r = structural_report(read_graph_file(o_.graph));
        out_ << "vertices=" << r.num_vertices << '\n'
             << "edges=" << r.num_edges << '\n'
             << "connected=" << (r.connected ? "yes" : "no") << '\n'
             << "max_degree=" << r.max_degree << '\n'
             << "min_degree=" << r.min_degree << '\n'
             << "regular=" << (r.is_regular ? "yes" : "no") << '\n';
        for (const auto& [deg, count] : r.degree_histogram) {
          out_ << "degree " << deg << ' ' << count << '\n';
        }
        return kExitOk;
      };
    });
  }

  void setup_sat(CLI::App& app) {
    auto* sat = app.add_subcommand("sat", "NAE 3-SAT 0-1 tools");
    sat->require_subcommand(1);

    auto* solve = sat->add_subcommand("solve", "look for a non-constant NAE assignment");
    solve->add_option("--witness", o_.witness, "write the model line to a file");
    solve->add_option("cnf", o_.cnf)->required();
    solve->callback([this] {
      action_ = [this] {
        auto in = open_input(o_.cnf);
        const NaeFormula f = parse_cnf(in);
        const auto a = solve_nae01(f);
        out_ << (a ? "YES" : "NO") << '\n';
        if (a) {
          out_ << format_assignment(*a) << '\n';
          if (!o_.witness.empty()) {
            emit(o_.witness, out_, [&](std::ostream& s) { s << format_assignment(*a) << '\n'; });
          }
        }
        return kExitOk;
      };
    });

    auto* reduce_cmd = sat->add_subcommand("reduce", "build the claw-free d-Cut instance");
    reduce_cmd->add_option("--d", o_.d)->required();
    reduce_cmd->add_option("--delta", o_.delta, "maximum degree, at least 2d+3");
    reduce_cmd->add_option("--map", o_.map, "reduction map JSON");
    reduce_cmd->add_option("-o,--output", o_.output, "graph file (default stdout)");
    reduce_cmd->add_option("cnf", o_.cnf)->required();
    reduce_cmd->callback([this] {
      action_ = [this] {
        auto in = open_input(o_.cnf);
        const NaeFormula f = parse_cnf(in);
        const Reduction red = reduce(f, o_.d, o_.delta);
        emit(o_.output, out_, [&](std::ostream& s) { write_graph(s, red.graph); });
        if (!o_.map.empty()) {
          emit(o_.map, out_, [&](std::ostream& s) { s << to_json(red.map).dump(2) << '\n'; });
        }
        if (!o_.output.empty() && o_.output != "-") {
          out_ << "vertices=" << red.graph.num_vertices() << '\n'
               << "edges=" << red.graph.num_edges() << '\n'
               << "max_degree=" << red.graph.max_degree() << '\n';
        }
        return kExitOk;
      };
    });
  }

  void write_generated(const Graph& g) {
    emit(o_.output, out_, [&](std::ostream& s) { write_graph(s, g); });
    if (!o_.dot.empty()) emit(o_.dot, out_, [&](std::ostream& s) { write_dot(s, g); });
  }

  void write_witness(const RedBlueColouring& c) {
    if (!o_.witness.empty()) emit(o_.witness, out_, [&](std::ostream& s) { write_colouring(s, c); });
  }

  int solve_exact() {
    const Graph g = read_graph_file(o_.graph);
    SolveOutcome result;
    if (o_.naive) {
      result = solve_naive(g, o_.d);
    } else {
      SearchLimits limits;
      limits.max_branch_nodes = o_.max_nodes.value_or(default_max_nodes());
      if (o_.timeout) {
        if (*o_.timeout <= 0) throw std::invalid_argument("--timeout must be positive");
        limits.time_budget = std::chrono::milliseconds(
            static_cast<std::int64_t>(*o_.timeout * 1000.0));
      }
      result = solve_bp(g, o_.d, limits);
    }
    out_ << (result.decision == Decision::Yes ? "YES" : "NO") << '\n';
    if (result.witness) write_witness(*result.witness);
    if (o_.stats) {
      out_ << "branch_nodes=" << result.stats.branch_nodes << '\n'
           << "propagation_steps=" << result.stats.propagation_steps << '\n'
           << "edge_touches=" << result.stats.edge_touches << '\n'
           << "blocks=" << result.stats.num_blocks << '\n';
    }
    return kExitOk;
  }

  int solve_structured() {
    const Graph g = read_graph_file(o_.graph);
    StructuredOptions options;
    options.check_promise = o_.check_promise;
    const StructuredOutcome result = o_.t == 0
                                         ? solve_claw_free(g, o_.d, options)
                                         : solve_star_free(g, o_.d, o_.t, o_.ell, options);
    out_ << "YES\n";
    write_witness(result.certificate.colouring(g.num_vertices()));
    if (!o_.report.empty()) {
      const nlohmann::json doc = result.seed ? to_json(*result.seed) : nlohmann::json::object();
      emit(o_.report, out_, [&](std::ostream& s) { s << doc.dump(2) << '\n'; });
    }
    if (o_.stats) {
      out_ << "blue=" << result.certificate.blue.size() << '\n'
           << "red=" << result.certificate.red.size() << '\n'
           << "crossing=" << result.certificate.crossing.size() << '\n'
           << "edge_touches=" << result.work.edge_touches << '\n'
           << "vertex_visits=" << result.work.vertex_visits << '\n';
    }
    return kExitOk;
  }

  int report_spider(const Graph& g, const PatternSpider& pattern) {
    const auto found = find_induced_spider(g, pattern);
    out_ << (found ? "NO" : "YES") << '\n';
    if (found) {
      out_ << "centre " << found->centre + 1 << '\n'
           << "leaves " << id_list(found->leaves) << '\n'
           << "path " << id_list(found->path) << '\n';
    }
    return kExitOk;
  }

  std::ostream& out_;
  Options o_;
  std::function<int()> action_;
};

std::string first_line(const std::string& s) {
  return s.substr(0, s.find('\n'));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"d-cut toolkit", "dcut"};
  Runner runner(out);
  runner.setup(app);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << first_line(e.what()) << '\n';
    return kExitInputError;
  }

  try {
    return runner.run();
  } catch (const ResourceExceeded& e) {
    err << "error: resource limit: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const SizeLimitError& e) {
    err << "error: resource limit: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const PromiseViolation& e) {
    err << "error: promise violated: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace dcut
