#include "dcut/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "dcut/errors.hpp"

namespace dcut {
namespace {

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

long long read_count(std::istringstream& iss, std::size_t line_no,
                     const char* what) {
  long long value = 0;
  if (!(iss >> value)) throw ParseError(line_no, std::string("expected ") + what);
  return value;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line) || line[0] == 'c') continue;
    std::istringstream iss(line);
    std::string tag;
    iss >> tag;
    if (tag == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      std::string kind;
      iss >> kind;
      if (kind != "edge") throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
      n = read_count(iss, line_no, "vertex count");
      m = read_count(iss, line_no, "edge count");
      if (n < 0 || m < 0) throw ParseError(line_no, "negative count in header");
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) throw ParseError(line_no, "edge before header");
      long long a = read_count(iss, line_no, "edge endpoint");
      long long b = read_count(iss, line_no, "edge endpoint");
      if (a < 1 || a > n || b < 1 || b > n) {
        throw ParseError(line_no, "vertex id out of range");
      }
      if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
      Edge e{static_cast<Vertex>(std::min(a, b) - 1),
             static_cast<Vertex>(std::max(a, b) - 1)};
      if (!seen.insert(e).second) {
        throw ParseError(line_no, "duplicate edge " + std::to_string(e.u + 1) +
                                      " " + std::to_string(e.v + 1));
      }
      edges.push_back(e);
    } else {
      throw ParseError(line_no, "unrecognised line '" + line + "'");
    }
    std::string trailing;
    if (iss >> trailing) throw ParseError(line_no, "trailing tokens");
  }
  if (!have_header) throw ParseError(line_no, "missing header 'p edge <n> <m>'");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(line_no, "header declares " + std::to_string(m) +
                                  " edges, found " + std::to_string(edges.size()));
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

void write_dot(std::ostream& out, const Graph& g) {
  out << "graph G {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) out << "  " << v + 1 << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.u + 1 << " -- " << e.v + 1 << ";\n";
  out << "}\n";
}

}  // namespace dcut
