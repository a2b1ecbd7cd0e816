#include "foliate/graded.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace foliate {

std::uint64_t BaseExpansion::value() const {
  std::uint64_t v = 0;
  for (std::size_t k = digits.size(); k-- > 0;) v = v * radix + digits[k];
  return v;
}

std::string BaseExpansion::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(digits[k]);
  }
  return out + "]";
}

BaseExpansion base_expansion(std::uint64_t i, std::size_t r) {
  if (r < 1) throw Error("base expansion needs r >= 1");
  BaseExpansion b;
  b.radix = r + 2;
  while (i > 0) {
    b.digits.push_back(i % b.radix);
    i /= b.radix;
  }
  return b;
}

std::uint64_t f_degree(std::uint64_t d, std::size_t r) { return (r + 1) * d + 1; }

mpz_class geometric_partial_sum(std::size_t s, std::size_t r) {
  mpz_class sum = 0;
  mpz_class p = 1;
  for (std::size_t k = 0; k <= s; ++k) {
    sum += p;
    p *= static_cast<unsigned long>(r + 2);
  }
  return sum;
}

bool carrying_identity_holds(std::size_t s, std::size_t r) {
  const mpz_class lhs = (1 + (r + 1) * geometric_partial_sum(s, r)) * static_cast<unsigned long>(r + 2);
  const mpz_class rhs = 1 + (r + 1) * geometric_partial_sum(s + 1, r);
  return lhs == rhs;
}

RSlice r_slice(std::uint64_t i, const GaussState& state) {
  const BaseExpansion b = base_expansion(i, state.r);
  if (b.digits.size() > state.L.size()) {
    throw Error("R_" + std::to_string(i) + " needs L_0..L_" + std::to_string(b.digits.size() - 1) + " but only " +
                std::to_string(state.L.size()) + " L_i are computed");
  }
  FractionalIdeal ideal = FractionalIdeal::unit(state.seed.ambient());
  for (std::size_t k = 0; k < b.digits.size(); ++k) {
    if (b.digits[k] == 0) continue;
    ideal = ideal_product(ideal, ideal_power(state.L[k], static_cast<unsigned>(b.digits[k])));
  }
  return RSlice{i, b, std::move(ideal)};
}

CarryReport carry_multiply_check(std::uint64_t i, std::uint64_t j, const GaussState& state) {
  const std::uint64_t radix = state.r + 2;
  const BaseExpansion bi = base_expansion(i, state.r);
  const BaseExpansion bj = base_expansion(j, state.r);
  CarryReport rep;
  std::uint64_t carry = 0;
  const std::size_t len = std::max(bi.digits.size(), bj.digits.size());
  for (std::size_t k = 0; k < len || carry > 0; ++k) {
    const std::uint64_t a = k < bi.digits.size() ? bi.digits[k] : 0;
    const std::uint64_t b = k < bj.digits.size() ? bj.digits[k] : 0;
    const std::uint64_t sum = a + b + carry;
    carry = sum / radix;
    if (carry > 0) {
      rep.chain.push_back("L_" + std::to_string(k) + "^" + std::to_string(radix) + " -> L_" + std::to_string(k + 1));
    }
  }
  const RSlice ri = r_slice(i, state);
  const RSlice rj = r_slice(j, state);
  const RSlice rij = r_slice(i + j, state);
  rep.holds = ideal_contains(rij.ideal, ideal_product(ri.ideal, rj.ideal));
  return rep;
}

namespace {

// Sum of two fractional monomial ideals over a common monomial denominator.
FractionalIdeal monomial_sum(const FractionalIdeal& a, const FractionalIdeal& b) {
  const Monomial da = a.denominator_monomial();
  const Monomial db = b.denominator_monomial();
  const Monomial d = da.lcm(db);
  std::vector<Monomial> gens = a.monomial_numerator().times(*d.divide(da)).generators();
  const std::vector<Monomial> more = b.monomial_numerator().times(*d.divide(db)).generators();
  gens.insert(gens.end(), more.begin(), more.end());
  return FractionalIdeal(MonomialIdeal(a.ambient(), std::move(gens)), Polynomial::term(1, d));
}

bool fractional_contains(const FractionalIdeal& col, const Monomial& m) {
  return col.monomial_numerator().contains(m * col.denominator_monomial());
}

std::string entry_label(const Monomial& m, std::uint64_t d, const VariableNames& names) {
  std::string t;
  if (d == 1) t = "T";
  if (d > 1) t = "T^" + std::to_string(d);
  if (m.is_one()) return t.empty() ? "1" : t;
  return t + m.to_string(names);
}

Rational pow_rational(std::size_t base, std::size_t e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), base, e);
  return Rational(p);
}

}  // namespace

std::vector<KTRingTable::Entry> KTRingTable::leaders() const {
  std::vector<Entry> out;
  for (std::uint64_t d = 1; d < columns.size(); ++d) {
    std::optional<FractionalIdeal> products;
    for (std::uint64_t a = 1; a <= d / 2; ++a) {
      FractionalIdeal p = ideal_product(columns[a], columns[d - a]);
      products = products ? monomial_sum(*products, p) : p;
    }
    const FractionalIdeal& col = columns[d];
    // Divisibility in N^n, so for a semigroup ring this is the column minimum.
    for (const auto& g : minimal_monomials(col.monomial_numerator().generators())) {
      auto m = g.divide(col.denominator_monomial());
      if (!m) continue;
      if (products && fractional_contains(*products, *m)) continue;
      out.push_back(Entry{*m, d});
    }
  }
  return out;
}

KTRingTable ktring_enumerate(const FoliatedRing& ring, const FractionalIdeal& seed, std::uint64_t bound) {
  if (!ring.monomial_path(seed)) {
    throw Error("the K[T] table needs a diagonal foliation and a monomial seed ideal");
  }
  KTRingTable table;
  table.ambient = ring.ambient();
  table.r = ring.r();
  table.bound = bound;
  table.columns.push_back(FractionalIdeal::unit(ring.ambient()));

  table.determinant_degrees.push_back(0);
  for (std::size_t s = 0;; ++s) {
    const mpz_class p = geometric_partial_sum(s, table.r);
    if (p > bound) break;
    table.determinant_degrees.push_back(p.get_ui());
  }
  for (std::uint64_t i : table.determinant_degrees) {
    if (f_degree(i, table.r) > bound) table.truncated = true;
  }

  // Every contribution to column d comes from strictly lower columns, so one
  // ascending pass reaches the fixpoint.
  for (std::uint64_t d = 1; d <= bound; ++d) {
    std::optional<FractionalIdeal> col;
    auto add = [&](const FractionalIdeal& part) { col = col ? monomial_sum(*col, part) : part; };
    for (std::uint64_t a = 1; a <= d / 2; ++a) add(ideal_product(table.columns[a], table.columns[d - a]));
    for (std::uint64_t i : table.determinant_degrees) {
      if (f_degree(i, table.r) == d) add(gauss_map(ideal_product(seed, table.columns[i]), ring));
    }
    if (!col) throw Error("T-degree " + std::to_string(d) + " received no generators");
    table.columns.push_back(std::move(*col));
  }
  return table;
}

bool KTRingTable::contains(const Monomial& m, std::uint64_t t_degree) const {
  if (t_degree >= columns.size()) return false;
  if (t_degree == 0) {
    // R_0 is the coordinate ring itself.
    return ambient.is_semigroup() ? ambient.semigroup->contains(m[0]) : true;
  }
  return fractional_contains(columns[t_degree], m);
}

std::string render_table(const KTRingTable& table, std::uint32_t max_row_degree, const VariableNames& names) {
  std::vector<Monomial> rows;
  const std::size_t n = table.ambient.nvars;
  // All monomials of total degree <= max_row_degree, highest grevlex first.
  std::vector<Exponent> e(n, 0);
  std::function<void(std::size_t, std::uint32_t)> visit = [&](std::size_t k, std::uint32_t left) {
    if (k == n) {
      rows.emplace_back(e);
      return;
    }
    for (std::uint32_t v = 0; v <= left; ++v) {
      e[k] = v;
      visit(k + 1, left - v);
    }
    e[k] = 0;
  };
  visit(0, max_row_degree);
  std::sort(rows.begin(), rows.end(), GrevlexGreater{});

  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(table.columns.size(), 0);
  for (const auto& m : rows) {
    std::vector<std::string> row(table.columns.size());
    for (std::uint64_t d = 0; d < table.columns.size(); ++d) {
      if (table.contains(m, d)) row[d] = entry_label(m, d, names);
      width[d] = std::max(width[d], row[d].size());
    }
    cells.push_back(std::move(row));
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t d = 0; d < row.size(); ++d) {
      std::string cell = row[d];
      if (d + 1 < row.size()) cell.resize(width[d] + 2, ' ');
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

FiniteTypeVerdict finite_type_verdict(const GaussState& state, const VariableNames& names) {
  FiniteTypeVerdict v;
  v.bound = state.max_steps;
  v.t = state.t;
  const std::string rp = std::to_string(state.r + 2);
  switch (state.verdict) {
    case Verdict::stabilized:
      v.kind = FiniteType::finite_type;
      v.evidence = "L_" + std::to_string(state.t + 1) + " = L_" + std::to_string(state.t) + "^" + rp + " = " +
                   state.L[state.t + 1].to_string(names);
      break;
    case Verdict::toric_nonresolvable:
      v.kind = FiniteType::not_finite_type;
      v.evidence = state.toric_certificate ? state.toric_certificate->explanation : "toric certificate";
      break;
    case Verdict::inconclusive:
      v.kind = FiniteType::unknown;
      // A resource guard can stop the checks before max_steps.
      if (state.stabilization_checks.empty()) {
        v.bound = 0;
        v.evidence = "no stabilization check completed";
      } else {
        v.bound = state.stabilization_checks.size() - 1;
        v.evidence = "no L_(t+1) = L_t^" + rp + " for t <= " + std::to_string(v.bound);
      }
      break;
  }
  return v;
}

DivisorExpr DivisorExpr::symbol(int s, const Rational& c) {
  DivisorExpr e;
  e.add(s, c);
  return e;
}

Rational DivisorExpr::coefficient(int s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

void DivisorExpr::add(int s, const Rational& c) {
  if (s < kE) throw Error("divisor symbols are E and K_0, K_1, ...");
  Rational& slot = terms_[s];
  slot += c;
  if (slot == 0) terms_.erase(s);
}

DivisorExpr& DivisorExpr::operator+=(const DivisorExpr& other) {
  for (const auto& [s, c] : other.terms_) add(s, c);
  return *this;
}

DivisorExpr operator*(const Rational& c, const DivisorExpr& a) {
  DivisorExpr out;
  if (c == 0) return out;
  for (const auto& [s, v] : a.terms_) out.terms_[s] = c * v;
  return out;
}

DivisorExpr DivisorExpr::substitute(int from, int to) const {
  DivisorExpr out;
  for (const auto& [s, c] : terms_) out.add(s == from ? to : s, c);
  return out;
}

std::string DivisorExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [s, c] : terms_) {
    const std::string name = s == kE ? "E" : "K_" + std::to_string(s);
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += name;
  }
  return out;
}

DivisorExpr divisor_X(std::size_t j, std::size_t r) {
  const int top = static_cast<int>(j);
  DivisorExpr inner = DivisorExpr::symbol(DivisorExpr::kE, pow_rational(r + 2, j));
  for (std::size_t t = 0; t < j; ++t) inner += DivisorExpr::symbol(static_cast<int>(t), pow_rational(r + 2, j - 1 - t));
  return DivisorExpr::symbol(top) + Rational(static_cast<long>(r + 1)) * inner;
}

bool divisor_recurrence_check(std::size_t i, std::size_t r) {
  if (i < 1) throw Error("the recurrence starts at i = 1");
  const DivisorExpr lhs = divisor_X(i, r).substitute(static_cast<int>(i), static_cast<int>(i - 1));
  const DivisorExpr rhs = Rational(static_cast<long>(r + 2)) * divisor_X(i - 1, r);
  return lhs == rhs;
}

}  // namespace foliate
