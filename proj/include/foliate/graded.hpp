#pragma once

// The base-(r+2) graded ring R: digit expansions, slices R_i, the carrying
// multiplication, the table of its monomials inside K[T], and the divisor
// bookkeeping X_j on the resolved model.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "foliate/gauss.hpp"
#include "foliate/ideals.hpp"

namespace foliate {

/// Digits a_0..a_s (least significant first) in radix r+2, no zero top digit.
struct BaseExpansion {
  std::vector<std::uint64_t> digits;
  std::uint64_t radix = 0;

  std::uint64_t value() const;
  std::string to_string() const;
};

BaseExpansion base_expansion(std::uint64_t i, std::size_t r);

/// Degree of F(X) when X sits in degree d: (r+1) d + 1.
std::uint64_t f_degree(std::uint64_t d, std::size_t r);

/// 1 + (r+2) + ... + (r+2)^s.
mpz_class geometric_partial_sum(std::size_t s, std::size_t r);

/// (1 + (r+1)(1 + ... + (r+2)^s)) (r+2) == 1 + (r+1)(1 + ... + (r+2)^(s+1)), exactly.
bool carrying_identity_holds(std::size_t s, std::size_t r);

/// Degree-i piece of R: L_0^a_0 ... L_s^a_s for the digits of i.
struct RSlice {
  std::uint64_t degree = 0;
  BaseExpansion expansion;
  FractionalIdeal ideal;
};

/// Throws Error naming the missing depth when state lacks L_s.
RSlice r_slice(std::uint64_t i, const GaussState& state);

struct CarryReport {
  bool holds = false;
  /// One entry per carry, e.g. "L_0^3 -> L_1".
  std::vector<std::string> chain;
};

/// R_i R_j inside R_{i+j}.
CarryReport carry_multiply_check(std::uint64_t i, std::uint64_t j, const GaussState& state);

/// Columns of the smallest subring of K[T] closed under the determinant rule,
/// up to a T-degree bound. Column d lists the monomials m with m T^d in R.
struct KTRingTable {
  Ambient ambient;
  std::size_t r = 0;
  std::uint64_t bound = 0;
  std::vector<FractionalIdeal> columns;
  /// Degrees whose determinants were used as inputs (0 and partial geometric sums).
  std::vector<std::uint64_t> determinant_degrees;
  /// Some determinant inputs at or below the bound land above it.
  bool truncated = false;

  bool contains(const Monomial& m, std::uint64_t t_degree) const;

  struct Entry {
    Monomial monomial;
    std::uint64_t t_degree;
  };
  /// Divisibility-minimal entries of positive T-degree that are not products
  /// of entries of smaller positive T-degree.
  std::vector<Entry> leaders() const;
};

/// Requires the exponent route: diagonal foliation and a monomial seed.
KTRingTable ktring_enumerate(const FoliatedRing& ring, const FractionalIdeal& seed, std::uint64_t bound);

/// Text grid: one row per monomial (highest first), one column per T-degree.
std::string render_table(const KTRingTable& table, std::uint32_t max_row_degree, const VariableNames& names);

enum class FiniteType { finite_type, not_finite_type, unknown };

struct FiniteTypeVerdict {
  FiniteType kind = FiniteType::unknown;
  std::size_t t = 0;
  std::size_t bound = 0;
  std::string evidence;
};

FiniteTypeVerdict finite_type_verdict(const GaussState& state, const VariableNames& names);

/// Formal rational combination of E and K_0, K_1, ...
class DivisorExpr {
 public:
  static constexpr int kE = -1;

  static DivisorExpr symbol(int s, const Rational& c = 1);

  Rational coefficient(int s) const;
  const std::map<int, Rational>& terms() const { return terms_; }

  DivisorExpr& operator+=(const DivisorExpr& other);
  friend DivisorExpr operator+(DivisorExpr a, const DivisorExpr& b) { return a += b; }
  friend DivisorExpr operator*(const Rational& c, const DivisorExpr& a);
  friend bool operator==(const DivisorExpr&, const DivisorExpr&) = default;

  /// Replaces K_from by K_to.
  DivisorExpr substitute(int from, int to) const;

  std::string to_string() const;

 private:
  void add(int s, const Rational& c);
  std::map<int, Rational> terms_;
};

/// X_j = K_j + (r+1)[(r+2)^j E + sum_{t<j} (r+2)^(j-1-t) K_t].
DivisorExpr divisor_X(std::size_t j, std::size_t r);

/// With K_i := K_{i-1}, X_i == (r+2) X_{i-1}. Requires i >= 1.
bool divisor_recurrence_check(std::size_t i, std::size_t r);

}  // namespace foliate
