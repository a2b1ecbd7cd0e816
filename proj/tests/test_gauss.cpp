#include <doctest.h>

#include "oracle.hpp"
#include "support.hpp"

using namespace foliate;
using support::FI;
using support::MI;
using support::P;

namespace {

const Ambient kPlane = Ambient::polynomial(2);

std::vector<oracle::Exps> exps_of(const MonomialIdeal& m) {
  std::vector<oracle::Exps> out;
  for (const auto& g : m.generators()) out.emplace_back(g.exponents().begin(), g.exponents().end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> int_rows(const std::vector<std::vector<Rational>>& rows) {
  std::vector<std::vector<int>> out;
  for (const auto& row : rows) {
    std::vector<int> r;
    for (const auto& w : row) r.push_back(static_cast<int>(w.get_num().get_si()));
    out.push_back(r);
  }
  return out;
}

FractionalIdeal F(const FractionalIdeal& a, const FoliatedRing& ring) { return gauss_map(a, ring); }

}  // namespace

TEST_CASE("candidate sets") {
  const std::vector<Polynomial> coords{P("1"), P("x"), P("y")};
  CHECK(candidate_set(FractionalIdeal::unit(kPlane), coords) == std::vector<Polynomial>{P("1"), P("x"), P("y")});
  const auto c = candidate_set(FI(kPlane, {{1, 0}, {0, 1}}), coords);
  CHECK(c.size() == 5);
  for (const char* m : {"x", "y", "x^2", "xy", "y^2"}) CHECK(std::find(c.begin(), c.end(), P(m)) != c.end());
  const auto cusp = support::cusp_ring();
  const auto cc = candidate_set(FractionalIdeal::unit(cusp.ambient()), cusp.coordinates());
  const VariableNames x{"x"};
  CHECK(cc == std::vector<Polynomial>{P("1", x), P("x^2", x), P("x^3", x)});
  const std::vector<Polynomial> bad{P("x"), P("y")};
  CHECK_THROWS_AS(candidate_set(FractionalIdeal::unit(kPlane), bad), StructuralError);
}

TEST_CASE("F on the named fixtures") {
  const FractionalIdeal unit = FractionalIdeal::unit(kPlane);
  const FractionalIdeal m = FI(kPlane, {{1, 0}, {0, 1}});
  CHECK(ideal_equal(F(unit, support::plane(1, 2)), m));
  CHECK(ideal_equal(F(unit, support::plane(1, 1)), m));
  CHECK(ideal_equal(F(m, support::plane(1, 1)), ideal_power(m, 3)));
  // Brute force over the candidates {x, y, x^2, xy, y^2}: y and y^2 have
  // weights 2 and 4, so y^3 is a generator alongside x^3 and xy.
  CHECK(ideal_equal(F(m, support::plane(1, 2)), FI(kPlane, {{3, 0}, {1, 1}, {0, 3}})));
  const auto cusp = support::cusp_ring();
  CHECK(ideal_equal(F(FractionalIdeal::unit(cusp.ambient()), cusp), FractionalIdeal(support::cusp_from(2))));
}

TEST_CASE("the two routes agree on the fixtures") {
  const std::vector<Polynomial> coords{P("1"), P("x"), P("y")};
  for (auto [a, b] : {std::pair{1, 2}, std::pair{1, 1}, std::pair{1, 0}, std::pair{2, 3}}) {
    const FoliatedRing ring = support::plane(a, b);
    for (const auto& seed : {FractionalIdeal::unit(kPlane), FI(kPlane, {{1, 0}, {0, 1}}), FI(kPlane, {{2, 0}, {0, 1}})}) {
      CHECK(ideal_equal(gauss_map_general(seed, ring.foliation(), coords), F(seed, ring)));
    }
  }
}

TEST_CASE("monomial route matches the brute-force oracle") {
  support::Rng rng(41);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = static_cast<std::size_t>(support::uniform(rng, 1, 3));
    const std::size_t r = static_cast<std::size_t>(support::uniform(rng, 1, static_cast<int>(std::min<std::size_t>(n, 2))));
    const auto rows = support::random_weights(rng, n, r);
    const WeightSystem w(rows);
    const MonomialIdeal ideal = support::random_monomial_ideal(rng, n, 3, 3);
    const auto expected = oracle::gauss_map(exps_of(ideal), int_rows(rows));
    if (expected.empty()) {
      CHECK_THROWS_AS(gauss_map_monomial(ideal, w), Error);
      continue;
    }
    CHECK(exps_of(gauss_map_monomial(ideal, w)) == expected);
  }
}

TEST_CASE("monomial and general routes agree on random diagonal instances") {
  support::Rng rng(42);
  int compared = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(support::uniform(rng, 1, 3));
    const std::size_t r = static_cast<std::size_t>(support::uniform(rng, 1, static_cast<int>(std::min<std::size_t>(n, 2))));
    const Foliation fol = Foliation::diagonal(support::random_weights(rng, n, r));
    const FoliatedRing ring(Ambient::polynomial(n), fol);
    const FractionalIdeal ideal(support::random_monomial_ideal(rng, n, 2, 2));
    const auto coords = ring.coordinates();
    bool degenerate = false;
    std::optional<FractionalIdeal> general;
    try {
      general = gauss_map_general(ideal, fol, coords);
    } catch (const ResourceError&) {
      throw;
    } catch (const Error&) {
      degenerate = true;
    }
    if (degenerate) {
      CHECK_THROWS_AS(F(ideal, ring), Error);
      continue;
    }
    CHECK(ideal_equal(*general, F(ideal, ring)));
    ++compared;
  }
  CHECK(compared > 30);
}

TEST_CASE("scaling law for a principal factor") {
  support::Rng rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = static_cast<std::size_t>(support::uniform(rng, 1, 2));
    const FoliatedRing ring(Ambient::polynomial(2), Foliation::diagonal(support::random_weights(rng, 2, r, 0, 3)));
    const FractionalIdeal j(support::random_monomial_ideal(rng, 2, 3, 2));
    const Monomial t = support::random_monomial(rng, 2, 2);
    const FractionalIdeal tj(j.monomial_numerator().times(t));
    FractionalIdeal fj = FractionalIdeal::unit(kPlane);
    try {
      fj = F(j, ring);
    } catch (const Error&) {
      continue;
    }
    CHECK(ideal_equal(F(tj, ring), fj.scaled(Polynomial::term(1, t.pow(static_cast<Exponent>(r + 1))))));
  }
}

TEST_CASE("containment relations on random monomial inputs") {
  support::Rng rng(44);
  for (int trial = 0; trial < 40; ++trial) {
    const FoliatedRing ring(Ambient::polynomial(2), Foliation::diagonal(support::random_weights(rng, 2, 1, 1, 4)));
    const FractionalIdeal j(support::random_monomial_ideal(rng, 2, 3, 2));
    const FractionalIdeal x(support::random_monomial_ideal(rng, 2, 3, 2));
    const ContainmentReport rep = containment_suite(j, x, ring);
    CHECK(rep.polarization);
    CHECK(rep.square_law);
    CHECK(rep.mixed_containment);
  }
  const FoliatedRing ring = support::plane(1, 2);
  const FractionalIdeal unit = FractionalIdeal::unit(kPlane);
  const ContainmentReport rep = containment_suite(unit, unit, ring);
  CHECK(rep.all_hold());
  CHECK_FALSE(rep.polarization_equal);
}

TEST_CASE("iteration verdicts") {
  SUBCASE("cusp stabilizes at t = 1") {
    const auto ring = support::cusp_ring();
    const GaussState s = iterate(FractionalIdeal::unit(ring.ambient()), ring);
    CHECK(s.verdict == Verdict::stabilized);
    CHECK(s.t == 1);
    CHECK(s.L[0].monomial_numerator().exponent_set() == ExponentSet{{}, 2});
    CHECK(s.L[1].monomial_numerator().exponent_set() == ExponentSet{{}, 5});
    CHECK(ideal_equal(s.L[2], ideal_power(s.L[1], 3)));
    CHECK(s.stabilization_checks == std::vector<bool>{false, true});
  }
  SUBCASE("weights (1,1) stabilize at t = 0") {
    const auto ring = support::plane(1, 1);
    const GaussState s = iterate(FractionalIdeal::unit(kPlane), ring);
    CHECK(s.verdict == Verdict::stabilized);
    CHECK(s.t == 0);
  }
  SUBCASE("weights (1,0) stabilize at t = 0") {
    const auto ring = support::plane(1, 0);
    const GaussState s = iterate(FractionalIdeal::unit(kPlane), ring);
    CHECK(s.verdict == Verdict::stabilized);
    CHECK(s.t == 0);
    CHECK(ideal_equal(s.L[1], FI(kPlane, {{3, 0}})));
  }
  SUBCASE("weights (1,2) never stabilize and carry a toric certificate") {
    const auto ring = support::plane(1, 2);
    IterateOptions opt;
    opt.max_steps = 4;
    const GaussState s = iterate(FractionalIdeal::unit(kPlane), ring, opt);
    CHECK(s.verdict == Verdict::toric_nonresolvable);
    CHECK(s.stabilization_checks.size() == 5);
    for (bool b : s.stabilization_checks) CHECK_FALSE(b);
    REQUIRE(s.toric_certificate.has_value());
    CHECK_FALSE(s.toric_certificate->resolvable);
    CHECK(s.J.size() == s.L.size());
    for (std::size_t i = 0; i + 1 < s.J.size(); ++i) CHECK(ideal_equal(s.J[i + 1], ideal_product(s.J[i], s.L[i])));
  }
  SUBCASE("r = 2 identity weights") {
    const FoliatedRing ring(Ambient::polynomial(2), Foliation::diagonal({{1, 0}, {0, 1}}));
    const GaussState s = iterate(FractionalIdeal::unit(ring.ambient()), ring);
    CHECK(ideal_equal(s.L[0], FI(ring.ambient(), {{1, 1}})));
    CHECK(ideal_equal(s.L[1], FI(ring.ambient(), {{4, 4}})));
    CHECK(s.verdict == Verdict::stabilized);
    CHECK(s.t == 0);
  }
  SUBCASE("a non-diagonal field stays inconclusive, never negative") {
    const Foliation fol({Derivation({P("y"), P("-x")})});
    const FoliatedRing ring(kPlane, fol);
    IterateOptions opt;
    opt.max_steps = 1;
    const GaussState s = iterate(FI(kPlane, {{1, 0}, {0, 1}}), ring, opt);
    CHECK(s.verdict == Verdict::inconclusive);
    CHECK_FALSE(s.monomial_path);
    CHECK(ideal_equal(s.L[0], FractionalIdeal(PolyIdeal(2, {P("x^2 + y^2"), P("x y^2"), P("y^3")}), P("1"))));
  }
  SUBCASE("resource guards give inconclusive verdicts with diagnostics") {
    const auto ring = support::plane(1, 2);
    IterateOptions opt;
    opt.max_steps = 8;
    opt.map.max_monomial_subsets = 50;
    opt.map.max_candidates = 50;
    const GaussState s = iterate(FractionalIdeal::unit(kPlane), ring, opt);
    CHECK(s.resource_exhausted);
    CHECK_FALSE(s.diagnostics.empty());
    CHECK(s.verdict == Verdict::toric_nonresolvable);
  }
  SUBCASE("audit recomputes everything") {
    const auto ring = support::plane(1, 2);
    IterateOptions opt;
    opt.max_steps = 2;
    opt.audit = true;
    const GaussState s = iterate(FractionalIdeal::unit(kPlane), ring, opt);
    CHECK(s.diagnostics.back().rfind("audit:", 0) == 0);
  }
  CHECK_THROWS_AS(iterate(FractionalIdeal::unit(kPlane), support::plane(1, 1), IterateOptions{0, false, {}}), Error);
}

TEST_CASE("stabilization test on the fixtures") {
  const auto cusp = support::cusp_ring();
  CHECK(stabilization_test(FractionalIdeal(support::cusp_from(2)), cusp));
  CHECK_FALSE(stabilization_test(FractionalIdeal::unit(kPlane), support::plane(1, 2)));
  CHECK(stabilization_test(FractionalIdeal::unit(kPlane), support::plane(1, 1)));
}

TEST_CASE("iteration is deterministic") {
  const auto ring = support::plane(1, 3);
  IterateOptions opt;
  opt.max_steps = 3;
  const GaussState a = iterate(FractionalIdeal::unit(kPlane), ring, opt);
  const GaussState b = iterate(FractionalIdeal::unit(kPlane), ring, opt);
  REQUIRE(a.L.size() == b.L.size());
  for (std::size_t i = 0; i < a.L.size(); ++i) CHECK(a.L[i].to_string(support::xy()) == b.L[i].to_string(support::xy()));
}
