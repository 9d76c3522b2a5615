#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dcut {

struct Literal {
  std::uint32_t var = 0;  ///< 0-based variable index
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

/// NAE 3-SAT instance in 0-1 form: every clause has three distinct variables
/// and exactly one negative literal, so the all-true and all-false
/// assignments both NAE-satisfy it. Every variable occurs somewhere.
struct NaeFormula {
  std::size_t num_vars = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const NaeFormula&, const NaeFormula&) = default;
};

struct Assignment {
  std::vector<bool> values;

  std::size_t size() const noexcept { return values.size(); }
  bool operator[](std::size_t var) const { return values[var]; }
  bool is_constant() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Builds a formula, normalising clauses with two negative literals by
/// flipping all three signs. Throws std::invalid_argument for widths other
/// than 3, repeated variables, clauses with zero or three negative literals,
/// out-of-range or unused variables.
NaeFormula make_nae_formula(std::size_t num_vars, std::vector<Clause> clauses);

/// DIMACS CNF ("p cnf <n> <m>", literals terminated by 0). Errors are
/// reported as ParseError with the line number.
NaeFormula parse_cnf(std::istream& in);
NaeFormula parse_cnf(std::string_view text);

void write_cnf(std::ostream& out, const NaeFormula& f);
std::string serialize_cnf(const NaeFormula& f);

bool literal_value(const Literal& lit, const Assignment& a);
bool clause_nae_satisfied(const Clause& c, const Assignment& a);
/// NAE-satisfying and using both truth values.
bool is_third_assignment(const NaeFormula& f, const Assignment& a);

inline constexpr std::size_t kNaeVariableLimit = 24;

/// First NAE-satisfying non-constant assignment in lexicographic order
/// (false < true, x1 most significant). Throws SizeLimitError above
/// kNaeVariableLimit variables.
std::optional<Assignment> solve_nae01(const NaeFormula& f);

/// DIMACS-style model line "v 1 -2 ... 0".
std::string format_assignment(const Assignment& a);

}  // namespace dcut
