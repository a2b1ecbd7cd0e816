#pragma once

// Fractional ideals in two representations: monomial staircases (over a
// polynomial ring or a univariate numerical-semigroup ring) and general
// polynomial ideals decided through reduced Groebner bases.

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "foliate/polyalg.hpp"

namespace foliate {

/// Submonoid of N with finite complement, e.g. <2, 3> for the cusp k[x^2, x^3].
class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::vector<Exponent> generators);

  /// Minimal generators, ascending.
  const std::vector<Exponent>& generators() const { return gens_; }
  /// Smallest c with [c, inf) inside the semigroup.
  Exponent conductor() const { return conductor_; }
  bool contains(std::int64_t e) const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.gens_ == b.gens_;
  }

 private:
  std::vector<Exponent> gens_;
  Exponent conductor_ = 0;
  std::vector<bool> below_conductor_;
};

/// The ring monomial ideals live in: k[x_1..x_n], or k[S] for a numerical
/// semigroup S in one variable.
struct Ambient {
  std::size_t nvars = 0;
  std::optional<NumericalSemigroup> semigroup;

  static Ambient polynomial(std::size_t n) { return Ambient{n, std::nullopt}; }
  static Ambient semigroup_ring(std::vector<Exponent> gens) {
    return Ambient{1, NumericalSemigroup(std::move(gens))};
  }

  bool is_semigroup() const { return semigroup.has_value(); }
  /// Monomial b is a ring multiple of a.
  bool monomial_divides(const Monomial& a, const Monomial& b) const;
  /// Algebra generators of the ring: 1 followed by x_k or x^g.
  std::vector<Monomial> coordinate_monomials() const;

  friend bool operator==(const Ambient& a, const Ambient& b) {
    return a.nvars == b.nvars && a.semigroup == b.semigroup;
  }
};

/// Exponents of a univariate semigroup ideal: sporadic values below the
/// conductor plus every integer from the conductor on.
struct ExponentSet {
  std::vector<Exponent> sporadic;
  Exponent conductor = 0;

  bool contains(std::int64_t e) const;
  friend bool operator==(const ExponentSet&, const ExponentSet&) = default;
};

/// Nonzero monomial ideal with minimal generators sorted by grevlex.
class MonomialIdeal {
 public:
  /// Minimalizes; throws Error on an empty generator list.
  MonomialIdeal(Ambient ambient, std::vector<Monomial> generators);

  static MonomialIdeal unit(const Ambient& ambient);
  static MonomialIdeal from_exponent_set(const Ambient& ambient, const ExponentSet& set);

  const Ambient& ambient() const { return ambient_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_unit() const;

  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;

  /// Semigroup mode only.
  ExponentSet exponent_set() const;

  MonomialIdeal operator*(const MonomialIdeal& other) const;
  MonomialIdeal times(const Monomial& m) const;
  MonomialIdeal pow(unsigned n) const;

  /// Componentwise minimum over the generators.
  Monomial gcd_of_generators() const;

  std::string to_string(const VariableNames& names) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ambient_ == b.ambient_ && a.gens_ == b.gens_;
  }

 private:
  MonomialIdeal() = default;
  Ambient ambient_;
  std::vector<Monomial> gens_;
};

/// Divisibility-minimal subset generating the same ideal.
MonomialIdeal minimalize(const Ambient& ambient, std::vector<Monomial> gens);
bool monomial_ideal_equal(const MonomialIdeal& a, const MonomialIdeal& b);

/// Sorts by grevlex and keeps the divisibility-minimal elements of `gens`
/// under componentwise order on N^n.
std::vector<Monomial> minimal_monomials(std::vector<Monomial> gens);

enum class MonomialOrder { grevlex };

struct GroebnerOptions {
  /// Guard on processed S-pairs; exceeding it raises ResourceError.
  std::size_t max_pairs = 200000;
};

/// Reduced, monic Groebner basis under grevlex.
std::vector<Polynomial> groebner_basis(std::span<const Polynomial> gens, const GroebnerOptions& options = {});

/// Full reduction of p modulo `basis`.
Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> basis);

/// Nonzero ideal of k[x_1..x_n] with a construct-once Groebner cache.
class PolyIdeal {
 public:
  PolyIdeal(std::size_t nvars, std::vector<Polynomial> generators);
  static PolyIdeal from_monomial(const MonomialIdeal& ideal);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  MonomialOrder order() const { return MonomialOrder::grevlex; }

  /// Computed on first use; every generator is checked to reduce to zero.
  const std::vector<Polynomial>& groebner() const;

  bool contains(const Polynomial& p) const;
  bool contains(const PolyIdeal& other) const;

  PolyIdeal operator*(const PolyIdeal& other) const;
  PolyIdeal times(const Polynomial& p) const;

  std::string to_string(const VariableNames& names) const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
  };

  std::size_t nvars_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Mutual membership of generators.
bool ideal_equal_general(const PolyIdeal& a, const PolyIdeal& b);

/// (1/denominator) * numerator inside the function field.
class FractionalIdeal {
 public:
  using Numerator = std::variant<MonomialIdeal, PolyIdeal>;

  explicit FractionalIdeal(MonomialIdeal numerator);
  FractionalIdeal(MonomialIdeal numerator, Polynomial denominator);
  FractionalIdeal(PolyIdeal numerator, Polynomial denominator);

  static FractionalIdeal unit(const Ambient& ambient);

  const Numerator& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  Ambient ambient() const;
  std::size_t nvars() const { return ambient().nvars; }

  bool has_monomial_numerator() const { return std::holds_alternative<MonomialIdeal>(num_); }
  /// Monomial numerator and a single-term denominator.
  bool is_monomial() const { return has_monomial_numerator() && den_.is_term(); }
  const MonomialIdeal& monomial_numerator() const { return std::get<MonomialIdeal>(num_); }
  /// Denominator exponent vector; requires is_monomial().
  Monomial denominator_monomial() const { return den_.leading_monomial(); }

  std::vector<Polynomial> numerator_generators() const;
  PolyIdeal numerator_as_poly() const;

  /// t * A.
  FractionalIdeal scaled(const Polynomial& t) const;
  /// (1/t) * A.
  FractionalIdeal divided(const Polynomial& t) const;

  std::string to_string(const VariableNames& names) const;

 private:
  void normalize();

  Numerator num_;
  Polynomial den_;
};

FractionalIdeal ideal_product(const FractionalIdeal& a, const FractionalIdeal& b);
/// n = 0 gives the unit ideal.
FractionalIdeal ideal_power(const FractionalIdeal& a, unsigned n);
bool ideal_equal(const FractionalIdeal& a, const FractionalIdeal& b);
/// inner is contained in outer.
bool ideal_contains(const FractionalIdeal& outer, const FractionalIdeal& inner);

struct ClearedIdeal {
  /// t * A, with denominator one.
  FractionalIdeal ideal;
  Polynomial t;
  /// F(t * A) = t^f_exponent * F(A), with f_exponent = r + 1.
  unsigned f_exponent;
};

ClearedIdeal clear_denominators(const FractionalIdeal& a, std::size_t r);

}  // namespace foliate
