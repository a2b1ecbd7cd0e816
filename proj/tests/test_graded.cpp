#include <doctest.h>

#include "foliate/graded.hpp"
#include "support.hpp"

using namespace foliate;
using support::FI;
using support::M;

namespace {

const VariableNames kX{"x"};

GaussState cusp_state(std::size_t steps = 3) {
  const auto ring = support::cusp_ring();
  IterateOptions opt;
  opt.max_steps = steps;
  return iterate(FractionalIdeal::unit(ring.ambient()), ring, opt);
}

}  // namespace

TEST_CASE("base expansions") {
  CHECK(base_expansion(98, 8).digits == std::vector<std::uint64_t>{8, 9});
  CHECK(base_expansion(101, 8).digits == std::vector<std::uint64_t>{1, 0, 1});
  CHECK(base_expansion(98, 1).digits == std::vector<std::uint64_t>{2, 2, 1, 0, 1});
  CHECK(base_expansion(98, 1).to_string() == "[2, 2, 1, 0, 1]");
  CHECK(base_expansion(0, 3).digits.empty());
  CHECK_THROWS_AS(base_expansion(5, 0), Error);

  for (std::size_t r = 1; r <= 10; ++r) {
    for (std::uint64_t i = 0; i <= 10000; i += (r == 1 ? 1 : 7)) {
      const BaseExpansion b = base_expansion(i, r);
      CHECK(b.value() == i);
      CHECK(b.radix == r + 2);
      if (!b.digits.empty()) CHECK(b.digits.back() != 0);
      for (auto d : b.digits) CHECK(d < r + 2);
    }
  }
}

TEST_CASE("degree bookkeeping") {
  CHECK(f_degree(21, 2) == 64);
  CHECK(f_degree(0, 1) == 1);
  CHECK(geometric_partial_sum(0, 1) == 1);
  CHECK(geometric_partial_sum(2, 1) == 13);
  // Exact at sizes where 64-bit arithmetic would overflow.
  CHECK(geometric_partial_sum(40, 8) == mpz_class(std::string(41, '1')));
  for (std::size_t r = 1; r <= 12; ++r) {
    for (std::size_t s = 0; s <= 60; ++s) CHECK(carrying_identity_holds(s, r));
  }
  for (std::size_t r = 1; r <= 5; ++r) {
    for (std::size_t s = 0; s <= 8; ++s) {
      const std::uint64_t g = geometric_partial_sum(s, r).get_ui();
      const std::uint64_t next = geometric_partial_sum(s + 1, r).get_ui();
      const std::uint64_t d = 1 + (r + 1) * g;
      CHECK(f_degree(d, r) == (r + 1) * d + 1);
      CHECK(d * (r + 2) == 1 + (r + 1) * next);
    }
  }
}

TEST_CASE("slices of R") {
  const GaussState s = cusp_state();
  REQUIRE(s.L.size() >= 3);
  CHECK(ideal_equal(r_slice(0, s).ideal, FractionalIdeal::unit(s.seed.ambient())));
  CHECK(ideal_equal(r_slice(1, s).ideal, s.L[0]));
  CHECK(ideal_equal(r_slice(3, s).ideal, s.L[1]));
  CHECK(ideal_equal(r_slice(9, s).ideal, s.L[2]));
  CHECK(ideal_equal(r_slice(5, s).ideal, ideal_product(ideal_power(s.L[0], 2), s.L[1])));
  CHECK(r_slice(5, s).expansion.digits == std::vector<std::uint64_t>{2, 1});
  CHECK_THROWS_WITH_AS(r_slice(200, s), doctest::Contains("L_0..L_4"), Error);

  for (std::uint64_t i = 0; i < 20; ++i) {
    for (std::uint64_t j = 0; j < 20; ++j) {
      if (i + j >= 27) continue;
      CHECK(carry_multiply_check(i, j, s).holds);
    }
  }
  const CarryReport rep = carry_multiply_check(2, 1, s);
  CHECK(rep.chain == std::vector<std::string>{"L_0^3 -> L_1"});
  CHECK(carry_multiply_check(1, 1, s).chain.empty());
  CHECK(carry_multiply_check(8, 1, s).chain.size() == 2);
}

TEST_CASE("the cusp table") {
  const auto ring = support::cusp_ring();
  const KTRingTable t = ktring_enumerate(ring, FractionalIdeal::unit(ring.ambient()), 4);
  CHECK(render_table(t, 8, kX) ==
        "x^8  Tx^8  T^2x^8  T^3x^8  T^4x^8\n"
        "x^7  Tx^7  T^2x^7  T^3x^7  T^4x^7\n"
        "x^6  Tx^6  T^2x^6  T^3x^6\n"
        "x^5  Tx^5  T^2x^5  T^3x^5\n"
        "x^4  Tx^4  T^2x^4\n"
        "x^3  Tx^3\n"
        "x^2  Tx^2\n"
        "\n"
        "1\n");
  const auto leaders = t.leaders();
  REQUIRE(leaders.size() == 2);
  CHECK(leaders[0].monomial == M({2}));
  CHECK(leaders[0].t_degree == 1);
  CHECK(leaders[1].monomial == M({5}));
  CHECK(leaders[1].t_degree == 3);
  CHECK(t.truncated);
  CHECK(t.determinant_degrees == std::vector<std::uint64_t>{0, 1, 4});
  CHECK_FALSE(t.contains(M({1}), 0));
  CHECK_FALSE(t.contains(M({4}), 3));
  CHECK(t.contains(M({5}), 3));
  CHECK(t.contains(M({0}), 0));
}

TEST_CASE("table columns at powers of r+2 are the L_i") {
  const auto ring = support::cusp_ring();
  const KTRingTable t = ktring_enumerate(ring, FractionalIdeal::unit(ring.ambient()), 9);
  const GaussState s = cusp_state();
  CHECK(ideal_equal(t.columns[1], s.L[0]));
  CHECK(ideal_equal(t.columns[3], s.L[1]));
  CHECK(ideal_equal(t.columns[9], s.L[2]));
  CHECK(ideal_equal(t.columns[9], ideal_power(t.columns[3], 3)));
}

TEST_CASE("tables are closed under multiplication") {
  for (auto [a, b] : {std::pair{1, 2}, std::pair{1, 1}, std::pair{2, 3}}) {
    const FoliatedRing ring = support::plane(a, b);
    const KTRingTable t = ktring_enumerate(ring, FractionalIdeal::unit(ring.ambient()), 6);
    REQUIRE(t.columns.size() == 7);
    for (std::size_t i = 1; i <= 6; ++i) {
      for (std::size_t j = i; i + j <= 6; ++j) {
        CHECK(ideal_contains(t.columns[i + j], ideal_product(t.columns[i], t.columns[j])));
      }
    }
  }
  const auto cusp = support::cusp_ring();
  const KTRingTable t = ktring_enumerate(cusp, FractionalIdeal::unit(cusp.ambient()), 8);
  for (std::size_t i = 1; i <= 8; ++i) {
    for (std::size_t j = i; i + j <= 8; ++j) {
      CHECK(ideal_contains(t.columns[i + j], ideal_product(t.columns[i], t.columns[j])));
    }
  }
}

TEST_CASE("table edge cases") {
  const auto ring = support::cusp_ring();
  const KTRingTable zero = ktring_enumerate(ring, FractionalIdeal::unit(ring.ambient()), 0);
  CHECK(zero.columns.size() == 1);
  CHECK(zero.leaders().empty());
  CHECK(render_table(zero, 2, kX) == "x^2\n\n1\n");
  const Foliation fol({Derivation({support::P("y"), support::P("-x")})});
  const FoliatedRing rot(Ambient::polynomial(2), fol);
  CHECK_THROWS_AS(ktring_enumerate(rot, FractionalIdeal::unit(rot.ambient()), 3), Error);
}

TEST_CASE("finite type verdicts follow the iteration") {
  const FiniteTypeVerdict yes = finite_type_verdict(cusp_state(), kX);
  CHECK(yes.kind == FiniteType::finite_type);
  CHECK(yes.t == 1);
  CHECK(yes.evidence.rfind("L_2 = L_1^3", 0) == 0);

  IterateOptions opt;
  opt.max_steps = 3;
  const GaussState s = iterate(FractionalIdeal::unit(Ambient::polynomial(2)), support::plane(1, 2), opt);
  CHECK(finite_type_verdict(s, support::xy()).kind == FiniteType::not_finite_type);

  const Foliation fol({Derivation({support::P("y"), support::P("-x")})});
  opt.max_steps = 1;
  const GaussState u = iterate(FI(Ambient::polynomial(2), {{1, 0}, {0, 1}}), FoliatedRing(Ambient::polynomial(2), fol), opt);
  const FiniteTypeVerdict unknown = finite_type_verdict(u, support::xy());
  CHECK(unknown.kind == FiniteType::unknown);
  CHECK(unknown.bound == 1);

  // A guard that fires early limits the claim to the checks that ran.
  GaussState cut = u;
  cut.max_steps = 5;
  cut.stabilization_checks = {false};
  CHECK(finite_type_verdict(cut, support::xy()).bound == 0);
  cut.stabilization_checks.clear();
  CHECK(finite_type_verdict(cut, support::xy()).evidence == "no stabilization check completed");
}

TEST_CASE("divisor expressions") {
  const DivisorExpr x2 = divisor_X(2, 1);
  CHECK(x2.to_string() == "18*E + 6*K_0 + 2*K_1 + K_2");
  CHECK(divisor_X(0, 1).to_string() == "2*E + K_0");
  CHECK(divisor_X(1, 2).to_string() == "12*E + 3*K_0 + K_1");
  CHECK(x2.coefficient(DivisorExpr::kE) == 18);
  CHECK(x2.coefficient(7) == 0);
  const DivisorExpr e = DivisorExpr::symbol(DivisorExpr::kE);
  CHECK((e + DivisorExpr::symbol(DivisorExpr::kE, -1)).terms().empty());
  CHECK(Rational(3) * e == DivisorExpr::symbol(DivisorExpr::kE, 3));
  CHECK(DivisorExpr::symbol(0).substitute(0, 1) == DivisorExpr::symbol(1));
  CHECK_THROWS_AS(DivisorExpr::symbol(-2), Error);
  CHECK_THROWS_AS(divisor_recurrence_check(0, 1), Error);

  for (std::size_t r = 1; r <= 5; ++r) {
    for (std::size_t i = 1; i <= 8; ++i) {
      CHECK(divisor_recurrence_check(i, r));
      // Coefficients read off the closed form.
      const DivisorExpr x = divisor_X(i, r);
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), r + 2, i);
      CHECK(x.coefficient(DivisorExpr::kE) == Rational(p * (r + 1)));
      CHECK(x.coefficient(static_cast<int>(i)) == 1);
      for (std::size_t t = 0; t < i; ++t) {
        mpz_ui_pow_ui(p.get_mpz_t(), r + 2, i - 1 - t);
        CHECK(x.coefficient(static_cast<int>(t)) == Rational(p * (r + 1)));
      }
      CHECK(x.substitute(static_cast<int>(i), static_cast<int>(i) - 1) ==
            Rational(static_cast<long>(r + 2)) * divisor_X(i - 1, r));
    }
  }
}
