#include "dcut/nae_formula.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "dcut/errors.hpp"

namespace dcut {

bool Assignment::is_constant() const {
  return std::all_of(values.begin(), values.end(), [](bool b) { return b; }) ||
         std::none_of(values.begin(), values.end(), [](bool b) { return b; });
}

namespace {

// Validates one clause and normalises it to a single negative literal.
// Returns an error message, or an empty string on success.
std::string normalise_clause(Clause& c, std::size_t num_vars) {
  for (const Literal& lit : c) {
    if (lit.var >= num_vars) return "variable out of range";
  }
  if (c[0].var == c[1].var || c[0].var == c[2].var || c[1].var == c[2].var) {
    return "repeated variable";
  }
  const auto negatives =
      std::count_if(c.begin(), c.end(), [](const Literal& l) { return l.negated; });
  if (negatives == 0 || negatives == 3) {
    return "has " + std::to_string(negatives) + " negative literals, not a 0-1 instance";
  }
  // Flipping every sign keeps the set of NAE-satisfying assignments.
  if (negatives == 2) {
    for (Literal& lit : c) lit.negated = !lit.negated;
  }
  return {};
}

}  // namespace

NaeFormula make_nae_formula(std::size_t num_vars, std::vector<Clause> clauses) {
  std::vector<bool> used(num_vars, false);
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (auto err = normalise_clause(clauses[i], num_vars); !err.empty()) {
      throw std::invalid_argument("clause " + std::to_string(i + 1) + ": " + err);
    }
    for (const Literal& lit : clauses[i]) used[lit.var] = true;
  }
  for (std::size_t v = 0; v < num_vars; ++v) {
    if (!used[v]) throw std::invalid_argument("variable " + std::to_string(v + 1) + " is unused");
  }
  return NaeFormula{num_vars, std::move(clauses)};
}

NaeFormula parse_cnf(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  long long num_vars = 0;
  long long num_clauses = 0;
  std::vector<Clause> clauses;
  std::vector<long long> pending;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == 'c') continue;
    std::istringstream iss(line);
    if (line[0] == 'p') {
      std::string tag;
      std::string kind;
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (!(iss >> tag >> kind >> num_vars >> num_clauses) || kind != "cnf" ||
          num_vars < 0 || num_clauses < 0) {
        throw ParseError(line_no, "malformed header, expected 'p cnf <n> <m>'");
      }
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "clause before header");
    std::string token;
    while (iss >> token) {
      long long lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stoll(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw ParseError(line_no, "bad literal '" + token + "'");
      }
      if (lit != 0) {
        if (lit < -num_vars || lit > num_vars) {
          throw ParseError(line_no, "variable " + std::to_string(lit < 0 ? -lit : lit) +
                                        " out of range");
        }
        pending.push_back(lit);
        continue;
      }
      if (pending.size() != 3) {
        throw ParseError(line_no, "clause has " + std::to_string(pending.size()) +
                                      " literals, expected 3");
      }
      Clause c;
      for (std::size_t j = 0; j < 3; ++j) {
        c[j] = Literal{static_cast<std::uint32_t>((pending[j] < 0 ? -pending[j] : pending[j]) - 1),
                       pending[j] < 0};
      }
      if (auto err = normalise_clause(c, static_cast<std::size_t>(num_vars)); !err.empty()) {
        throw ParseError(line_no, err);
      }
      clauses.push_back(c);
      pending.clear();
    }
  }
  if (!have_header) throw ParseError(line_no, "missing header 'p cnf <n> <m>'");
  if (!pending.empty()) throw ParseError(line_no, "unterminated clause");
  if (static_cast<long long>(clauses.size()) != num_clauses) {
    throw ParseError(line_no, "header declares " + std::to_string(num_clauses) +
                                  " clauses, found " + std::to_string(clauses.size()));
  }
  try {
    return make_nae_formula(static_cast<std::size_t>(num_vars), std::move(clauses));
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

NaeFormula parse_cnf(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_cnf(in);
}

void write_cnf(std::ostream& out, const NaeFormula& f) {
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const Clause& c : f.clauses) {
    for (const Literal& lit : c) {
      out << (lit.negated ? "-" : "") << lit.var + 1 << ' ';
    }
    out << "0\n";
  }
}

std::string serialize_cnf(const NaeFormula& f) {
  std::ostringstream out;
  write_cnf(out, f);
  return out.str();
}

bool literal_value(const Literal& lit, const Assignment& a) {
  return a[lit.var] != lit.negated;
}

bool clause_nae_satisfied(const Clause& c, const Assignment& a) {
  const bool first = literal_value(c[0], a);
  return literal_value(c[1], a) != first || literal_value(c[2], a) != first;
}

bool is_third_assignment(const NaeFormula& f, const Assignment& a) {
  if (a.size() != f.num_vars || a.is_constant()) return false;
  return std::all_of(f.clauses.begin(), f.clauses.end(),
                     [&](const Clause& c) { return clause_nae_satisfied(c, a); });
}

std::optional<Assignment> solve_nae01(const NaeFormula& f) {
  const std::size_t n = f.num_vars;
  if (n > kNaeVariableLimit) {
    throw SizeLimitError("brute-force NAE search is limited to " +
                         std::to_string(kNaeVariableLimit) + " variables");
  }
  if (n < 2) return std::nullopt;
  Assignment a;
  a.values.resize(n);
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < all; ++mask) {
    for (std::size_t v = 0; v < n; ++v) a.values[v] = (mask >> (n - 1 - v)) & 1U;
    if (is_third_assignment(f, a)) return a;
  }
  return std::nullopt;
}

std::string format_assignment(const Assignment& a) {
  std::ostringstream out;
  out << 'v';
  for (std::size_t v = 0; v < a.size(); ++v) out << ' ' << (a[v] ? "" : "-") << v + 1;
  out << " 0";
  return out.str();
}

}  // namespace dcut
