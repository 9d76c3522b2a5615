#include <istream>
#include <ostream>
#include <sstream>

#include "dcut/colouring.hpp"
#include "dcut/errors.hpp"

namespace dcut {

RedBlueColouring parse_colouring(std::istream& in, std::size_t n) {
  std::vector<std::optional<Colour>> cells(n);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == 'c') continue;
    std::istringstream iss(line);
    std::string tag;
    long long id = 0;
    std::string colour;
    if (!(iss >> tag >> id >> colour) || tag != "v") {
      throw ParseError(line_no, "expected 'v <id> <R|B>'");
    }
    if (id < 1 || static_cast<std::size_t>(id) > n) {
      throw ParseError(line_no, "vertex id " + std::to_string(id) + " out of range");
    }
    Colour c;
    if (colour == "B") {
      c = Colour::Blue;
    } else if (colour == "R") {
      c = Colour::Red;
    } else {
      throw ParseError(line_no, "colour must be R or B");
    }
    auto& cell = cells[static_cast<std::size_t>(id - 1)];
    if (cell) throw ParseError(line_no, "duplicate vertex " + std::to_string(id));
    cell = c;
    std::string trailing;
    if (iss >> trailing) throw ParseError(line_no, "trailing tokens");
  }
  std::vector<Colour> colours(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!cells[v]) throw ParseError(line_no, "vertex " + std::to_string(v + 1) + " is not coloured");
    colours[v] = *cells[v];
  }
  return RedBlueColouring(std::move(colours));
}

RedBlueColouring parse_colouring(std::string_view text, std::size_t n) {
  std::istringstream in{std::string(text)};
  return parse_colouring(in, n);
}

void write_colouring(std::ostream& out, const RedBlueColouring& c) {
  for (Vertex v = 0; v < c.size(); ++v) {
    out << "v " << v + 1 << ' ' << colour_letter(c[v]) << '\n';
  }
}

}  // namespace dcut
