#pragma once

// Problem files: one `key = value` per line, `#` starts a comment.
//
//   variables   = x y
//   ring        = polynomial            | semigroup 2 3
//   weights     = 1 2                   weights of x_1..x_n, `;` between derivations
//   derivation  = x, 2*y                coefficients of d/dx_1..d/dx_n (repeatable)
//   ideal       = x^2, xy               numerator generators (default 1)
//   denominator = x                     (default 1)
//   X           = x, y                  spaces for the section test
//   T           = 1, x, y
//   max_steps   = 8
//   degree_bound = 12
//   table_rows  = 8
//   audit       = false
//   seed        = 42

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "foliate/gauss.hpp"
#include "foliate/linsys.hpp"
#include "foliate/polyalg.hpp"

namespace foliate {

struct ProblemSpec {
  VariableNames variables;
  /// Empty for a polynomial ring.
  std::vector<Exponent> semigroup;
  /// One entry per derivation, each listing the weights of x_1..x_n.
  std::vector<std::vector<Rational>> weights;
  /// Explicit coefficient vectors; used when weights is empty.
  std::vector<std::vector<Polynomial>> derivations;
  std::vector<Polynomial> ideal;
  std::optional<Polynomial> denominator;
  std::vector<Polynomial> x_space;
  std::vector<Polynomial> t_space;
  std::size_t max_steps = 8;
  std::uint32_t degree_bound = 12;
  std::uint32_t table_rows = 8;
  bool audit = false;
  std::uint64_t seed = 0;

  std::size_t nvars() const { return variables.size(); }
  bool has_foliation() const { return !weights.empty() || !derivations.empty(); }

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// Throws ParseError with the offending line and column.
ProblemSpec parse_problem(std::string_view text);
ProblemSpec load_problem(const std::string& path);

/// Canonical text; parse_problem(print_problem(s)) == s.
std::string print_problem(const ProblemSpec& spec);

Ambient spec_ambient(const ProblemSpec& spec);
Foliation spec_foliation(const ProblemSpec& spec);
FoliatedRing spec_ring(const ProblemSpec& spec);
/// Monomial numerators in monomial form, everything else as a polynomial ideal.
FractionalIdeal spec_ideal(const ProblemSpec& spec);

}  // namespace foliate
