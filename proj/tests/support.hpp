#pragma once

// Shorthands and random generators shared by the unit tests.

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "foliate/gauss.hpp"
#include "foliate/ideals.hpp"
#include "foliate/polyalg.hpp"

namespace support {

using namespace foliate;

inline const VariableNames& xy() {
  static const VariableNames names{"x", "y"};
  return names;
}

inline const VariableNames& xyz() {
  static const VariableNames names{"x", "y", "z"};
  return names;
}

inline Polynomial P(const std::string& text, const VariableNames& names = xy()) {
  return parse_polynomial(text, names);
}

inline Monomial M(std::vector<Exponent> e) { return Monomial(std::move(e)); }

inline MonomialIdeal MI(const Ambient& a, std::initializer_list<std::vector<Exponent>> gens) {
  std::vector<Monomial> ms;
  for (const auto& g : gens) ms.emplace_back(g);
  return MonomialIdeal(a, std::move(ms));
}

inline FractionalIdeal FI(const Ambient& a, std::initializer_list<std::vector<Exponent>> gens) {
  return FractionalIdeal(MI(a, gens));
}

inline MonomialIdeal cusp_from(Exponent e) {
  // Every exponent >= e, as an ideal of k[x^2, x^3].
  return MonomialIdeal(Ambient::semigroup_ring({2, 3}), {M({e}), M({e + 1})});
}

inline FoliatedRing plane(int a, int b) {
  return FoliatedRing(Ambient::polynomial(2), Foliation::diagonal({{a}, {b}}));
}

inline FoliatedRing cusp_ring() { return FoliatedRing(Ambient::semigroup_ring({2, 3}), Foliation::diagonal({{1}})); }

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// mpq_class(n, d) is not reduced on construction.
inline Rational fraction(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline Monomial random_monomial(Rng& rng, std::size_t n, int max_degree) {
  std::vector<Exponent> e(n, 0);
  const int d = uniform(rng, 0, max_degree);
  for (int k = 0; k < d; ++k) ++e[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1))];
  return Monomial(e);
}

inline Polynomial random_polynomial(Rng& rng, std::size_t n, int max_degree, int max_terms) {
  Polynomial p(n);
  const int terms = uniform(rng, 1, max_terms);
  for (int k = 0; k < terms; ++k) {
    int c = uniform(rng, -4, 4);
    if (c == 0) c = 1;
    p.add_term(fraction(c, uniform(rng, 1, 3)), random_monomial(rng, n, max_degree));
  }
  return p;
}

inline MonomialIdeal random_monomial_ideal(Rng& rng, std::size_t n, int max_gens, int max_degree) {
  std::vector<Monomial> gens;
  const int count = uniform(rng, 1, max_gens);
  for (int k = 0; k < count; ++k) gens.push_back(random_monomial(rng, n, max_degree));
  return MonomialIdeal(Ambient::polynomial(n), std::move(gens));
}

/// Integer weight rows n x r, small range, zero allowed.
inline std::vector<std::vector<Rational>> random_weights(Rng& rng, std::size_t n, std::size_t r, int lo = -2,
                                                         int hi = 3) {
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(r));
  for (auto& row : rows) {
    for (auto& w : row) w = uniform(rng, lo, hi);
  }
  return rows;
}

inline Foliation random_foliation(Rng& rng, std::size_t n, std::size_t r) {
  std::vector<Derivation> ds;
  for (std::size_t d = 0; d < r; ++d) {
    std::vector<Polynomial> c;
    for (std::size_t k = 0; k < n; ++k) c.push_back(random_polynomial(rng, n, 2, 2));
    ds.emplace_back(std::move(c));
  }
  return Foliation(std::move(ds));
}

}  // namespace support

namespace doctest {

template <>
struct StringMaker<foliate::Monomial> {
  static String convert(const foliate::Monomial& m) {
    return foliate::Monomial(m).to_string(foliate::default_variable_names(m.nvars())).c_str();
  }
};

template <>
struct StringMaker<foliate::Polynomial> {
  static String convert(const foliate::Polynomial& p) { return p.to_string().c_str(); }
};

template <typename T>
struct StringMaker<std::vector<T>> {
  static String convert(const std::vector<T>& v) {
    String out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + StringMaker<T>::convert(v[i]);
    return out + "]";
  }
};

}  // namespace doctest
