#include <doctest.h>

#include "oracle.hpp"
#include "support.hpp"

using namespace foliate;
using support::P;

TEST_CASE("monomial divisibility agrees with multiplication") {
  const Monomial a({1, 2});
  const Monomial b({3, 2});
  CHECK(a.divides(b));
  CHECK_FALSE(b.divides(a));
  CHECK(*b.divide(a) == Monomial({2, 0}));
  CHECK_FALSE(a.divide(b).has_value());
  CHECK(a.lcm(Monomial({0, 5})) == Monomial({1, 5}));
  CHECK(a.gcd(Monomial({0, 5})) == Monomial({0, 2}));
  CHECK((a * b).total_degree() == 8);
  CHECK(Monomial({2, 1}).to_string(support::xy()) == "x^2*y");
  CHECK(Monomial(2).to_string(support::xy()) == "1");

  support::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const Monomial m = support::random_monomial(rng, 3, 5);
    const Monomial n = support::random_monomial(rng, 3, 5);
    CHECK(m.divides(m * n));
    CHECK(*(m * n).divide(m) == n);
  }
}

TEST_CASE("grevlex breaks degree ties by the last variable") {
  CHECK(grevlex_less(Monomial({0, 1}), Monomial({2, 0})));
  CHECK(grevlex_less(Monomial({0, 2}), Monomial({1, 1})));
  CHECK(grevlex_less(Monomial({1, 0, 1}), Monomial({0, 2, 0})));
  CHECK_FALSE(grevlex_less(Monomial({1, 1}), Monomial({1, 1})));
}

TEST_CASE("polynomial arithmetic is exact and canonical") {
  const Polynomial p = P("x + y");
  const Polynomial q = P("x - y");
  CHECK(p * q == P("x^2 - y^2"));
  CHECK((p + q) == P("2x"));
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == kZeroDegree);
  CHECK(P("1/2 x + 1/3") * Rational(6) == P("3x + 2"));
  CHECK(P("(x+y)^3").num_terms() == 4);
  CHECK(P("x^2 - 3/2*y + 1").to_string(support::xy()) == "x^2 - 3/2*y + 1");
  CHECK(P("3x^2 y - 6y").monic() == P("x^2 y - 2 y"));
  CHECK(P("x^2 + y").partial(0) == P("2x"));
  CHECK(divide_exact(P("x^2 - y^2"), P("x + y")) == P("x - y"));
  CHECK_THROWS_AS(divide_exact(P("x^2 + 1"), P("x + y")), Error);
}

TEST_CASE("parser grammar and error positions") {
  CHECK(P("xy^2") == P("x*y^2"));
  CHECK(P("2(x+1)") == P("2x + 2"));
  CHECK(P("-(x - y)") == P("y - x"));
  CHECK_THROWS_AS(P("x - -y"), ParseError);
  CHECK(P("x^0") == P("1"));
  CHECK(parse_polynomial("x1 x2", {"x1", "x2"}) == parse_polynomial("x1*x2", {"x1", "x2"}));

  try {
    (void)P("x + * y");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(P("x + w"), ParseError);
  CHECK_THROWS_AS(P("1/0 x"), ParseError);
  CHECK_THROWS_AS(P("(x + y"), ParseError);
  CHECK_THROWS_AS(P("x^"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);
}

TEST_CASE("derivations") {
  const Derivation euler = Derivation::diagonal({1, 2});
  CHECK(apply_derivation(euler, P("xy")) == P("3xy"));
  CHECK(apply_derivation(euler, P("1")).is_zero());
  const Derivation dx({P("1"), P("0")});
  CHECK(apply_derivation(dx, P("x^2")) == P("2x"));
  CHECK_FALSE(dx.diagonal_weights().has_value());
  CHECK(Derivation({P("x"), P("-3y")}).diagonal_weights() == std::vector<Rational>{1, -3});
  CHECK_THROWS_AS(apply_derivation(dx, parse_polynomial("x", {"x"})), StructuralError);

  support::Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const Foliation fol = support::random_foliation(rng, 3, 1);
    const Derivation& d = fol.derivations().front();
    const Polynomial p = support::random_polynomial(rng, 3, 3, 3);
    const Polynomial q = support::random_polynomial(rng, 3, 3, 3);
    CHECK(apply_derivation(d, p * q) == p * apply_derivation(d, q) + q * apply_derivation(d, p));
  }
}

TEST_CASE("diagonal fast path matches the coefficient path") {
  support::Rng rng(12);
  const auto rows = support::random_weights(rng, 3, 1);
  std::vector<Rational> w;
  for (const auto& row : rows) w.push_back(row[0]);
  const Derivation d = Derivation::diagonal(w);
  for (int i = 0; i < 200; ++i) {
    const Polynomial m = Polynomial::term(1, support::random_monomial(rng, 3, 6));
    CHECK(d(m) == d.apply_by_coefficients(m));
  }
}

TEST_CASE("determinants") {
  const Polynomial one = P("1");
  const Polynomial zero = P("0");
  CHECK(det_poly_matrix({{one, zero}, {zero, one}}) == one);
  // Rows (x^a, a x^a), (x^b, b x^b) give (b - a) x^(a+b).
  CHECK(det_poly_matrix({{P("x^2"), P("2x^2")}, {P("x^5"), P("5x^5")}}) == P("3x^7"));
  CHECK(det_poly_matrix({{P("x"), P("y")}, {P("x"), P("y")}}).is_zero());
  CHECK_THROWS_AS(det_poly_matrix({{one, zero}}), StructuralError);

  support::Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(support::uniform(rng, 1, 5));
    PolyMatrix m(n, std::vector<Polynomial>(n));
    for (auto& row : m) {
      for (auto& e : row) e = support::uniform(rng, 0, 3) == 0 ? Polynomial(2) : support::random_polynomial(rng, 2, 2, 2);
    }
    const Polynomial c = det_cofactor(m);
    CHECK(det_bareiss(m) == c);
    CHECK(det_poly_matrix(m) == c);
    if (n >= 2) {
      PolyMatrix swapped = m;
      std::swap(swapped[0], swapped[1]);
      CHECK(det_cofactor(swapped) == -c);
      swapped[0] = swapped[1];
      CHECK(det_bareiss(swapped).is_zero());
    }
  }
}

TEST_CASE("determinants of constant matrices match the permutation sum") {
  support::Rng rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(support::uniform(rng, 1, 6));
    PolyMatrix m(n, std::vector<Polynomial>(n));
    std::vector<std::vector<oracle::Q>> q(n, std::vector<oracle::Q>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        q[i][j] = support::uniform(rng, -3, 3);
        m[i][j] = Polynomial::constant(1, q[i][j]);
      }
    }
    CHECK(det_poly_matrix(m) == Polynomial::constant(1, oracle::leibniz_det(q)));
  }
}

TEST_CASE("w-form examples") {
  const Foliation fol = Foliation::diagonal({{1}, {2}});
  const std::vector<Polynomial> xy{P("x"), P("y")};
  CHECK(w_form(xy, fol) == P("xy"));
  const Polynomial f = P("x^2 + 3y");
  const std::vector<Polynomial> one_f{P("1"), f};
  CHECK(w_form(one_f, fol) == apply_derivation(fol.derivations()[0], f));
  const Polynomial u = P("x + y");
  const std::vector<Polynomial> scaled{u * P("x"), u * P("y")};
  CHECK(w_form(scaled, fol) == u.pow(2) * P("xy"));
  const std::vector<Polynomial> three{P("x"), P("y"), P("1")};
  CHECK_THROWS_AS(w_form(three, fol), StructuralError);
}

TEST_CASE("w-form homogeneity on random inputs") {
  support::Rng rng(15);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(support::uniform(rng, 1, 3));
    const std::size_t r = static_cast<std::size_t>(support::uniform(rng, 1, static_cast<int>(std::min<std::size_t>(n, 2))));
    const Foliation fol = support::random_foliation(rng, n, r);
    std::vector<Polynomial> fs;
    std::vector<Polynomial> ufs;
    const Polynomial u = support::random_polynomial(rng, n, 2, 2);
    for (std::size_t i = 0; i <= r; ++i) {
      fs.push_back(support::random_polynomial(rng, n, 2, 3));
      ufs.push_back(u * fs.back());
    }
    CHECK(w_form(ufs, fol) == u.pow(static_cast<unsigned>(r + 1)) * w_form(fs, fol));
  }
}

TEST_CASE("foliation shape checks") {
  CHECK_THROWS_AS(Foliation({}), StructuralError);
  CHECK_THROWS_AS(Foliation({Derivation::diagonal({1, 2}), Derivation::diagonal({1})}), StructuralError);
  const Foliation fol = Foliation::diagonal({{1, 0}, {0, 1}, {1, 1}});
  CHECK(fol.rank() == 2);
  CHECK(fol.nvars() == 3);
  CHECK(fol.is_diagonal());
  CHECK((*fol.weight_rows())[2] == std::vector<Rational>{1, 1});
}
