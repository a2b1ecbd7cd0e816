#include "foliate/ideals.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_set>
#include <utility>

namespace foliate {

// ------------------------------------------------------ NumericalSemigroup

NumericalSemigroup::NumericalSemigroup(std::vector<Exponent> generators) {
  std::erase(generators, Exponent{0});
  if (generators.empty()) throw StructuralError("numerical semigroup needs a positive generator");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  Exponent g = 0;
  for (auto x : generators) g = std::gcd(g, x);
  if (g != 1) throw StructuralError("semigroup generators must be coprime (finite complement in N)");

  // Frobenius number is below min * max.
  const std::size_t bound = static_cast<std::size_t>(generators.front()) * generators.back() + generators.back();
  std::vector<bool> reach(bound + 1, false);
  reach[0] = true;
  for (std::size_t e = 1; e <= bound; ++e) {
    for (auto x : generators) {
      if (x <= e && reach[e - x]) {
        reach[e] = true;
        break;
      }
    }
  }
  for (auto x : generators) {
    // x is redundant when it is a sum of smaller generators.
    bool redundant = false;
    std::vector<bool> r(x + 1, false);
    r[0] = true;
    for (Exponent e = 1; e <= x; ++e) {
      for (auto y : gens_) {
        if (y <= e && r[e - y]) {
          r[e] = true;
          break;
        }
      }
    }
    redundant = r[x];
    if (!redundant) gens_.push_back(x);
  }
  std::size_t last_gap = 0;
  bool any_gap = false;
  for (std::size_t e = 0; e <= bound; ++e) {
    if (!reach[e]) {
      last_gap = e;
      any_gap = true;
    }
  }
  conductor_ = any_gap ? static_cast<Exponent>(last_gap + 1) : 0;
  below_conductor_.assign(reach.begin(), reach.begin() + conductor_);
}

bool NumericalSemigroup::contains(std::int64_t e) const {
  if (e < 0) return false;
  if (e >= conductor_) return true;
  return below_conductor_[static_cast<std::size_t>(e)];
}

// ----------------------------------------------------------------- Ambient

bool Ambient::monomial_divides(const Monomial& a, const Monomial& b) const {
  if (!semigroup) return a.divides(b);
  return semigroup->contains(static_cast<std::int64_t>(b[0]) - static_cast<std::int64_t>(a[0]));
}

std::vector<Monomial> Ambient::coordinate_monomials() const {
  std::vector<Monomial> out{Monomial(nvars)};
  if (semigroup) {
    for (auto g : semigroup->generators()) out.push_back(Monomial::variable(1, 0, g));
  } else {
    for (std::size_t k = 0; k < nvars; ++k) out.push_back(Monomial::variable(nvars, k));
  }
  return out;
}

bool ExponentSet::contains(std::int64_t e) const {
  if (e < 0) return false;
  if (e >= conductor) return true;
  return std::binary_search(sporadic.begin(), sporadic.end(), static_cast<Exponent>(e));
}

// ------------------------------------------------------------ Minimalizing

std::vector<Monomial> minimal_monomials(std::vector<Monomial> gens) {
  if (gens.empty()) return gens;
  const std::size_t n = gens.front().nvars();
  for (const auto& g : gens) {
    if (g.nvars() != n) throw StructuralError("monomial variable count mismatch");
  }
  if (n == 0) return {gens.front()};
  if (n == 1) {
    auto it = std::min_element(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a[0] < b[0]; });
    return {*it};
  }
  std::vector<Monomial> kept;
  if (n == 2) {
    // Staircase sweep: ascending x, keep strictly decreasing y.
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
      return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
    });
    for (auto& g : gens) {
      if (kept.empty() || g[1] < kept.back()[1]) kept.push_back(std::move(g));
    }
  } else {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return grevlex_less(a, b); });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (auto& g : gens) {
      const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
      if (!redundant) kept.push_back(std::move(g));
    }
  }
  std::sort(kept.begin(), kept.end(), [](const Monomial& a, const Monomial& b) { return grevlex_less(a, b); });
  return kept;
}

namespace {

std::vector<Monomial> minimal_in_semigroup(const NumericalSemigroup& s, std::vector<Monomial> gens) {
  std::vector<Exponent> exps;
  exps.reserve(gens.size());
  for (const auto& g : gens) exps.push_back(g[0]);
  std::sort(exps.begin(), exps.end());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::vector<Exponent> kept;
  for (auto e : exps) {
    const bool redundant = std::any_of(kept.begin(), kept.end(), [&](Exponent k) {
      return s.contains(static_cast<std::int64_t>(e) - static_cast<std::int64_t>(k));
    });
    if (!redundant) kept.push_back(e);
  }
  std::vector<Monomial> out;
  for (auto e : kept) out.push_back(Monomial::variable(1, 0, e));
  return out;
}

}  // namespace

// ----------------------------------------------------------- MonomialIdeal

MonomialIdeal::MonomialIdeal(Ambient ambient, std::vector<Monomial> generators) : ambient_(std::move(ambient)) {
  if (generators.empty()) throw Error("the zero ideal is not supported");
  for (const auto& g : generators) {
    if (g.nvars() != ambient_.nvars) throw StructuralError("generator variable count does not match the ambient ring");
  }
  if (ambient_.is_semigroup()) {
    gens_ = minimal_in_semigroup(*ambient_.semigroup, std::move(generators));
  } else {
    gens_ = minimal_monomials(std::move(generators));
  }
}

MonomialIdeal minimalize(const Ambient& ambient, std::vector<Monomial> gens) {
  return MonomialIdeal(ambient, std::move(gens));
}

bool monomial_ideal_equal(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(a.ambient() == b.ambient())) throw StructuralError("comparing monomial ideals of different rings");
  return a == b;
}

MonomialIdeal MonomialIdeal::unit(const Ambient& ambient) { return MonomialIdeal(ambient, {Monomial(ambient.nvars)}); }

MonomialIdeal MonomialIdeal::from_exponent_set(const Ambient& ambient, const ExponentSet& set) {
  if (!ambient.is_semigroup()) throw StructuralError("exponent sets describe semigroup-mode ideals only");
  const Exponent mult = ambient.semigroup->generators().front();
  std::vector<Monomial> gens;
  for (auto e : set.sporadic) gens.push_back(Monomial::variable(1, 0, e));
  for (Exponent e = set.conductor; e < set.conductor + mult; ++e) gens.push_back(Monomial::variable(1, 0, e));
  return MonomialIdeal(ambient, std::move(gens));
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.nvars() != ambient_.nvars) throw StructuralError("monomial variable count does not match the ambient ring");
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return ambient_.monomial_divides(g, m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  if (!(ambient_ == other.ambient_)) throw StructuralError("containment between ideals of different rings");
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& g) { return contains(g); });
}

ExponentSet MonomialIdeal::exponent_set() const {
  if (!ambient_.is_semigroup()) throw StructuralError("exponent sets describe semigroup-mode ideals only");
  const auto& s = *ambient_.semigroup;
  const std::int64_t lo = gens_.front()[0];
  const std::int64_t hi = lo + s.conductor();
  auto member = [&](std::int64_t e) {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return s.contains(e - g[0]); });
  };
  std::int64_t conductor = lo;
  for (std::int64_t e = hi - 1; e >= lo; --e) {
    if (!member(e)) {
      conductor = e + 1;
      break;
    }
  }
  ExponentSet out;
  out.conductor = static_cast<Exponent>(conductor);
  for (std::int64_t e = lo; e < conductor; ++e) {
    if (member(e)) out.sporadic.push_back(static_cast<Exponent>(e));
  }
  return out;
}

namespace {

// Staircase product in two variables: best y for every x, then a sweep.
std::vector<Monomial> bivariate_product(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
  constexpr Exponent kNone = std::numeric_limits<Exponent>::max();
  Exponent max_a = 0;
  Exponent max_b = 0;
  for (const auto& g : a) max_a = std::max(max_a, g[0]);
  for (const auto& g : b) max_b = std::max(max_b, g[0]);
  std::vector<Exponent> best(static_cast<std::size_t>(max_a) + max_b + 1, kNone);
  std::vector<std::pair<Exponent, Exponent>> fb;
  fb.reserve(b.size());
  for (const auto& g : b) fb.emplace_back(g[0], g[1]);
  for (const auto& g : a) {
    const Exponent ax = g[0];
    const Exponent ay = g[1];
    for (const auto& [bx, by] : fb) {
      Exponent& slot = best[ax + bx];
      slot = std::min(slot, ay + by);
    }
  }
  std::vector<Monomial> out;
  Exponent running = kNone;
  for (std::size_t x = 0; x < best.size(); ++x) {
    if (best[x] < running) {
      running = best[x];
      out.emplace_back(std::vector<Exponent>{static_cast<Exponent>(x), running});
    }
  }
  return out;
}

}  // namespace

MonomialIdeal MonomialIdeal::operator*(const MonomialIdeal& other) const {
  if (!(ambient_ == other.ambient_)) throw StructuralError("product of ideals of different rings");
  if (!ambient_.is_semigroup() && ambient_.nvars == 2) {
    MonomialIdeal out;
    out.ambient_ = ambient_;
    out.gens_ = bivariate_product(gens_, other.gens_);
    std::sort(out.gens_.begin(), out.gens_.end(), [](const Monomial& x, const Monomial& y) { return grevlex_less(x, y); });
    return out;
  }
  std::vector<Monomial> prods;
  prods.reserve(gens_.size() * other.gens_.size());
  for (const auto& a : gens_) {
    for (const auto& b : other.gens_) prods.push_back(a * b);
  }
  return MonomialIdeal(ambient_, std::move(prods));
}

MonomialIdeal MonomialIdeal::times(const Monomial& m) const {
  MonomialIdeal out;
  out.ambient_ = ambient_;
  out.gens_.reserve(gens_.size());
  for (const auto& g : gens_) out.gens_.push_back(g * m);
  return out;
}

MonomialIdeal MonomialIdeal::pow(unsigned n) const {
  MonomialIdeal result = unit(ambient_);
  MonomialIdeal base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Monomial MonomialIdeal::gcd_of_generators() const {
  Monomial g = gens_.front();
  for (const auto& x : gens_) g = g.gcd(x);
  return g;
}

std::string MonomialIdeal::to_string(const VariableNames& names) const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string(names);
  }
  return out + ")";
}

// ---------------------------------------------------------------- Groebner

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> basis) {
  Polynomial work = p;
  Polynomial rem(p.nvars());
  while (!work.is_zero()) {
    const Monomial lt = work.leading_monomial();
    const Rational lc = work.leading_coefficient();
    bool reduced = false;
    for (const auto& g : basis) {
      if (auto q = lt.divide(g.leading_monomial())) {
        work -= g.mul_term(lc / g.leading_coefficient(), *q);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.add_term(lc, lt);
      work.add_term(-lc, lt);
    }
  }
  return rem;
}

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  const Monomial uf = *l.divide(f.leading_monomial());
  const Monomial ug = *l.divide(g.leading_monomial());
  return f.mul_term(1 / f.leading_coefficient(), uf) - g.mul_term(1 / g.leading_coefficient(), ug);
}

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> g) {
  // Drop elements whose leading monomial is a multiple of another's.
  std::sort(g.begin(), g.end(), [](const Polynomial& a, const Polynomial& b) {
    return grevlex_less(a.leading_monomial(), b.leading_monomial());
  });
  std::vector<Polynomial> minimal;
  for (auto& p : g) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& q) {
      return q.leading_monomial().divides(p.leading_monomial());
    });
    if (!redundant) minimal.push_back(p.monic());
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    const Polynomial tail = minimal[i] - Polynomial::term(1, minimal[i].leading_monomial());
    minimal[i] = Polynomial::term(1, minimal[i].leading_monomial()) + normal_form(tail, others);
  }
  return minimal;
}

}  // namespace

namespace {

// Reduced row echelon form over the term basis; the span, hence the ideal, is unchanged.
std::vector<Polynomial> linear_interreduce(std::vector<Polynomial> gens) {
  std::vector<Polynomial> rows;
  for (auto& g : gens) {
    for (const auto& b : rows) {
      const Rational c = g.coefficient(b.leading_monomial());
      if (c != 0) g -= c * b;
    }
    if (g.is_zero()) continue;
    g = g.monic();
    for (auto& b : rows) {
      const Rational c = b.coefficient(g.leading_monomial());
      if (c != 0) b -= c * g;
    }
    rows.push_back(std::move(g));
  }
  return rows;
}

struct PairKey {
  std::uint64_t degree;
  std::size_t i;
  std::size_t j;
  bool operator>(const PairKey& o) const { return std::tie(degree, j, i) > std::tie(o.degree, o.j, o.i); }
};

}  // namespace

std::vector<Polynomial> groebner_basis(std::span<const Polynomial> gens, const GroebnerOptions& options) {
  std::vector<Polynomial> input;
  for (const auto& g : gens) {
    if (!g.is_zero()) input.push_back(g);
  }
  if (input.empty()) throw Error("Groebner basis of the zero ideal requested");
  const std::size_t nv = input.front().nvars();
  std::vector<Polynomial> basis = linear_interreduce(std::move(input));
  for (const auto& g : basis) {
    if (g.is_constant()) return {Polynomial::one(nv)};
  }

  using Pair = std::pair<std::size_t, std::size_t>;
  std::set<Pair> pending;
  std::priority_queue<PairKey, std::vector<PairKey>, std::greater<PairKey>> queue;
  auto push_pair = [&](std::size_t i, std::size_t j) {
    pending.emplace(i, j);
    queue.push(PairKey{basis[i].leading_monomial().lcm(basis[j].leading_monomial()).total_degree(), i, j});
  };
  for (std::size_t j = 1; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) push_pair(i, j);
  }
  auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

  std::size_t processed = 0;
  while (!queue.empty()) {
    // Normal selection strategy: smallest lcm degree first.
    const PairKey key = queue.top();
    queue.pop();
    const Pair pr{key.i, key.j};
    pending.erase(pr);
    if (++processed > options.max_pairs) {
      throw ResourceError("Groebner guard: more than " + std::to_string(options.max_pairs) +
                          " S-pairs processed (basis size " + std::to_string(basis.size()) + ")");
    }
    const Monomial& li = basis[pr.first].leading_monomial();
    const Monomial& lj = basis[pr.second].leading_monomial();
    const Monomial l = li.lcm(lj);
    if (l == li * lj) continue;  // coprime leading terms
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pr.first || k == pr.second) continue;
      if (basis[k].leading_monomial().divides(l) && !is_pending(pr.first, k) && !is_pending(pr.second, k)) {
        chain = true;
      }
    }
    if (chain) continue;
    Polynomial s = normal_form(s_polynomial(basis[pr.first], basis[pr.second]), basis);
    if (s.is_zero()) continue;
    if (s.is_constant()) return {Polynomial::one(nv)};
    basis.push_back(s.monic());
    const std::size_t idx = basis.size() - 1;
    for (std::size_t i = 0; i < idx; ++i) push_pair(i, idx);
  }
  return reduce_basis(std::move(basis));
}

// --------------------------------------------------------------- PolyIdeal

PolyIdeal::PolyIdeal(std::size_t nvars, std::vector<Polynomial> generators)
    : nvars_(nvars), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (g.nvars() != nvars) throw StructuralError("generator variable count mismatch");
    if (g.is_zero()) continue;
    Polynomial m = g.monic();
    if (std::find(gens_.begin(), gens_.end(), m) == gens_.end()) gens_.push_back(std::move(m));
  }
  if (gens_.empty()) throw Error("the zero ideal is not supported");
}

PolyIdeal PolyIdeal::from_monomial(const MonomialIdeal& ideal) {
  if (ideal.ambient().is_semigroup()) {
    throw StructuralError("semigroup-mode ideals have no general polynomial representation");
  }
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(Polynomial::term(1, g));
  return PolyIdeal(ideal.ambient().nvars, std::move(gens));
}

const std::vector<Polynomial>& PolyIdeal::groebner() const {
  std::call_once(cache_->once, [&] {
    auto basis = groebner_basis(gens_);
    for (const auto& g : gens_) {
      if (!normal_form(g, basis).is_zero()) throw std::logic_error("Groebner basis does not contain a generator");
    }
    cache_->basis = std::move(basis);
  });
  return cache_->basis;
}

bool PolyIdeal::contains(const Polynomial& p) const { return normal_form(p, groebner()).is_zero(); }

bool PolyIdeal::contains(const PolyIdeal& other) const {
  if (other.nvars_ != nvars_) throw StructuralError("containment between ideals of different rings");
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Polynomial& g) { return contains(g); });
}

PolyIdeal PolyIdeal::operator*(const PolyIdeal& other) const {
  if (other.nvars_ != nvars_) throw StructuralError("product of ideals of different rings");
  const auto& a = groebner();
  const auto& b = other.groebner();
  std::vector<Polynomial> prods;
  for (const auto& f : a) {
    for (const auto& g : b) prods.push_back(f * g);
  }
  return PolyIdeal(nvars_, groebner_basis(prods));
}

PolyIdeal PolyIdeal::times(const Polynomial& p) const {
  std::vector<Polynomial> gens;
  for (const auto& g : gens_) gens.push_back(g * p);
  return PolyIdeal(nvars_, std::move(gens));
}

std::string PolyIdeal::to_string(const VariableNames& names) const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string(names);
  }
  return out + ")";
}

bool ideal_equal_general(const PolyIdeal& a, const PolyIdeal& b) { return a.contains(b) && b.contains(a); }

// --------------------------------------------------------- FractionalIdeal

FractionalIdeal::FractionalIdeal(MonomialIdeal numerator)
    : num_(std::move(numerator)), den_(Polynomial::one(std::get<MonomialIdeal>(num_).ambient().nvars)) {}

FractionalIdeal::FractionalIdeal(MonomialIdeal numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  normalize();
}

FractionalIdeal::FractionalIdeal(PolyIdeal numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  normalize();
}

FractionalIdeal FractionalIdeal::unit(const Ambient& ambient) { return FractionalIdeal(MonomialIdeal::unit(ambient)); }

Ambient FractionalIdeal::ambient() const {
  if (auto m = std::get_if<MonomialIdeal>(&num_)) return m->ambient();
  return Ambient::polynomial(std::get<PolyIdeal>(num_).nvars());
}

void FractionalIdeal::normalize() {
  if (den_.is_zero()) throw Error("fractional ideal with zero denominator");
  if (den_.nvars() != nvars()) throw StructuralError("denominator variable count mismatch");
  den_ = den_.monic();
  if (auto* p = std::get_if<PolyIdeal>(&num_)) {
    const bool all_terms =
        std::all_of(p->generators().begin(), p->generators().end(), [](const Polynomial& g) { return g.is_term(); });
    if (all_terms) {
      std::vector<Monomial> gens;
      for (const auto& g : p->generators()) gens.push_back(g.leading_monomial());
      num_ = MonomialIdeal(Ambient::polynomial(p->nvars()), std::move(gens));
    }
  }
  if (auto* m = std::get_if<MonomialIdeal>(&num_)) {
    if (m->ambient().is_semigroup() && !den_.is_term()) {
      throw StructuralError("semigroup-mode fractional ideals need a monomial denominator");
    }
    if (den_.is_term()) {
      const Monomial common = m->gcd_of_generators().gcd(den_.leading_monomial());
      if (!common.is_one()) {
        std::vector<Monomial> gens;
        for (const auto& g : m->generators()) gens.push_back(*g.divide(common));
        num_ = MonomialIdeal(m->ambient(), std::move(gens));
        den_ = Polynomial::term(1, *den_.leading_monomial().divide(common));
      }
    }
  }
}

std::vector<Polynomial> FractionalIdeal::numerator_generators() const {
  if (auto m = std::get_if<MonomialIdeal>(&num_)) {
    std::vector<Polynomial> out;
    for (const auto& g : m->generators()) out.push_back(Polynomial::term(1, g));
    return out;
  }
  return std::get<PolyIdeal>(num_).generators();
}

PolyIdeal FractionalIdeal::numerator_as_poly() const {
  if (auto m = std::get_if<MonomialIdeal>(&num_)) return PolyIdeal::from_monomial(*m);
  return std::get<PolyIdeal>(num_);
}

FractionalIdeal FractionalIdeal::scaled(const Polynomial& t) const {
  if (t.is_zero()) throw Error("scaling a fractional ideal by zero");
  if (auto m = std::get_if<MonomialIdeal>(&num_); m && t.is_term()) {
    return FractionalIdeal(m->times(t.leading_monomial()), den_);
  }
  return FractionalIdeal(numerator_as_poly().times(t), den_);
}

FractionalIdeal FractionalIdeal::divided(const Polynomial& t) const {
  if (t.is_zero()) throw Error("dividing a fractional ideal by zero");
  if (auto m = std::get_if<MonomialIdeal>(&num_)) return FractionalIdeal(*m, den_ * t);
  return FractionalIdeal(std::get<PolyIdeal>(num_), den_ * t);
}

std::string FractionalIdeal::to_string(const VariableNames& names) const {
  const std::string body = std::visit([&](const auto& n) { return n.to_string(names); }, num_);
  if (den_.is_constant()) return body;
  return "(1/(" + den_.to_string(names) + "))*" + body;
}

namespace {

void check_compatible(const FractionalIdeal& a, const FractionalIdeal& b) {
  const Ambient aa = a.ambient();
  const Ambient ab = b.ambient();
  if (!(aa == ab)) throw StructuralError("fractional ideals live in different rings or modes");
}

}  // namespace

FractionalIdeal ideal_product(const FractionalIdeal& a, const FractionalIdeal& b) {
  check_compatible(a, b);
  if (a.has_monomial_numerator() && b.has_monomial_numerator()) {
    return FractionalIdeal(a.monomial_numerator() * b.monomial_numerator(), a.denominator() * b.denominator());
  }
  return FractionalIdeal(a.numerator_as_poly() * b.numerator_as_poly(), a.denominator() * b.denominator());
}

FractionalIdeal ideal_power(const FractionalIdeal& a, unsigned n) {
  if (a.has_monomial_numerator()) {
    return FractionalIdeal(a.monomial_numerator().pow(n), a.denominator().pow(n));
  }
  FractionalIdeal result = FractionalIdeal::unit(a.ambient());
  FractionalIdeal base = a;
  while (n > 0) {
    if (n & 1U) result = ideal_product(result, base);
    n >>= 1U;
    if (n > 0) base = ideal_product(base, base);
  }
  return result;
}

bool ideal_equal(const FractionalIdeal& a, const FractionalIdeal& b) {
  check_compatible(a, b);
  if (a.is_monomial() && b.is_monomial()) {
    return a.denominator_monomial() == b.denominator_monomial() && a.monomial_numerator() == b.monomial_numerator();
  }
  return ideal_equal_general(a.numerator_as_poly().times(b.denominator()), b.numerator_as_poly().times(a.denominator()));
}

bool ideal_contains(const FractionalIdeal& outer, const FractionalIdeal& inner) {
  check_compatible(outer, inner);
  if (outer.is_monomial() && inner.is_monomial()) {
    return outer.monomial_numerator()
        .times(inner.denominator_monomial())
        .contains(inner.monomial_numerator().times(outer.denominator_monomial()));
  }
  return outer.numerator_as_poly()
      .times(inner.denominator())
      .contains(inner.numerator_as_poly().times(outer.denominator()));
}

ClearedIdeal clear_denominators(const FractionalIdeal& a, std::size_t r) {
  const Polynomial& t = a.denominator();
  FractionalIdeal cleared = a.has_monomial_numerator()
                                ? FractionalIdeal(a.monomial_numerator())
                                : FractionalIdeal(std::get<PolyIdeal>(a.numerator()), Polynomial::one(a.nvars()));
  return ClearedIdeal{std::move(cleared), t, static_cast<unsigned>(r + 1)};
}

}  // namespace foliate
