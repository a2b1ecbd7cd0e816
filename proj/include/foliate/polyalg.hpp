#pragma once

// Exact multivariate polynomial arithmetic over Q, derivations, polynomial
// determinants and the w-form.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "foliate/error.hpp"

namespace foliate {

using Rational = mpq_class;
using Exponent = std::uint32_t;
using VariableNames = std::vector<std::string>;

/// x, y, z for up to three variables, x1..xn beyond.
VariableNames default_variable_names(std::size_t nvars);

/// Exponent vector over a fixed variable list.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t k, Exponent power = 1);

  std::size_t nvars() const { return exps_.size(); }
  Exponent operator[](std::size_t k) const { return exps_[k]; }
  std::span<const Exponent> exponents() const { return exps_; }
  std::uint64_t total_degree() const;
  bool is_one() const;

  /// Componentwise <=.
  bool divides(const Monomial& other) const;
  std::optional<Monomial> divide(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  Monomial pow(Exponent e) const;

  Monomial operator*(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  /// Lexicographic on the exponent vector; used for deterministic containers only.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

  std::string to_string(const VariableNames& names) const;

 private:
  std::vector<Exponent> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Graded reverse lexicographic comparison.
bool grevlex_less(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

/// Total degree of the zero polynomial.
inline constexpr std::int64_t kZeroDegree = std::numeric_limits<std::int64_t>::min();

/// Sparse polynomial: monomial -> nonzero rational, iterated leading term first.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrevlexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial term(const Rational& c, const Monomial& m);
  static Polynomial variable(std::size_t nvars, std::size_t k);
  static Polynomial one(std::size_t nvars) { return constant(nvars, 1); }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Exactly one term (a nonzero scalar times a monomial).
  bool is_term() const { return terms_.size() == 1; }

  /// Leading term under grevlex. Undefined for zero.
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }
  Rational coefficient(const Monomial& m) const;
  /// kZeroDegree for the zero polynomial.
  std::int64_t degree() const;

  Polynomial monic() const;
  Polynomial partial(std::size_t k) const;
  Polynomial pow(unsigned e) const;
  Polynomial mul_term(const Rational& c, const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::string to_string(const VariableNames& names) const;
  std::string to_string() const { return to_string(default_variable_names(nvars_)); }

  /// Adds c*m in place (exposed for builders; drops the term if it cancels).
  void add_term(const Rational& c, const Monomial& m);

 private:
  void check_same(const Polynomial& other) const;

  std::size_t nvars_ = 0;
  TermMap terms_;
};

/// Exact quotient a / b; throws Error when b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// Parses integer or rational coefficients, `^` powers, `*` or juxtaposition
/// products, `+`/`-`, and parentheses over the given variables. Adjacent
/// variable names may be fused (`xy` for `x*y`).
Polynomial parse_polynomial(std::string_view text, const VariableNames& names);

/// A derivation sum_k c_k d/dx_k.
class Derivation {
 public:
  explicit Derivation(std::vector<Polynomial> coeffs);
  /// sum_k w_k x_k d/dx_k.
  static Derivation diagonal(std::vector<Rational> weights);

  std::size_t nvars() const { return coeffs_.size(); }
  const std::vector<Polynomial>& coeffs() const { return coeffs_; }
  /// Present when every coefficient is w_k * x_k.
  const std::optional<std::vector<Rational>>& diagonal_weights() const { return diagonal_; }

  /// Multiplies each term by its weight when diagonal, otherwise falls back
  /// to apply_by_coefficients.
  Polynomial operator()(const Polynomial& p) const;
  Polynomial apply_by_coefficients(const Polynomial& p) const;

 private:
  std::vector<Polynomial> coeffs_;
  std::optional<std::vector<Rational>> diagonal_;
};

Polynomial apply_derivation(const Derivation& d, const Polynomial& p);

/// r derivations on a common ambient ring.
class Foliation {
 public:
  explicit Foliation(std::vector<Derivation> derivations);
  /// One derivation per column; rows[k] is the weight vector of x_k.
  static Foliation diagonal(const std::vector<std::vector<Rational>>& rows);

  std::size_t rank() const { return derivations_.size(); }
  std::size_t nvars() const { return derivations_.front().nvars(); }
  const std::vector<Derivation>& derivations() const { return derivations_; }
  bool is_diagonal() const;
  /// n rows of r weights when every derivation is diagonal.
  std::optional<std::vector<std::vector<Rational>>> weight_rows() const;

 private:
  std::vector<Derivation> derivations_;
};

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Cofactor expansion up to 4x4, fraction-free elimination above.
Polynomial det_poly_matrix(const PolyMatrix& m);
/// Expansion along the first row.
Polynomial det_cofactor(const PolyMatrix& m);
/// Bareiss fraction-free elimination with exact polynomial division.
Polynomial det_bareiss(const PolyMatrix& m);

/// Rows (f_i, d_1 f_i, ..., d_r f_i).
PolyMatrix gauss_matrix(std::span<const Polynomial> fs, const Foliation& fol);

/// Determinant of gauss_matrix; needs exactly r+1 inputs.
Polynomial w_form(std::span<const Polynomial> fs, const Foliation& fol);

}  // namespace foliate
