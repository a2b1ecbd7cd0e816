#include "foliate/polyalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace foliate {

VariableNames default_variable_names(std::size_t nvars) {
  static const char* kShort[] = {"x", "y", "z"};
  VariableNames names;
  for (std::size_t k = 0; k < nvars; ++k) {
    names.push_back(nvars <= 3 ? std::string(kShort[k]) : "x" + std::to_string(k + 1));
  }
  return names;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t nvars, std::size_t k, Exponent power) {
  if (k >= nvars) throw StructuralError("variable index out of range");
  Monomial m(nvars);
  m.exps_[k] = power;
  return m;
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  if (nvars() != other.nvars()) throw StructuralError("monomial variable count mismatch");
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] > other.exps_[k]) return false;
  }
  return true;
}

std::optional<Monomial> Monomial::divide(const Monomial& divisor) const {
  if (!divisor.divides(*this)) return std::nullopt;
  Monomial q(nvars());
  for (std::size_t k = 0; k < exps_.size(); ++k) q.exps_[k] = exps_[k] - divisor.exps_[k];
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  if (nvars() != other.nvars()) throw StructuralError("monomial variable count mismatch");
  Monomial out(nvars());
  for (std::size_t k = 0; k < exps_.size(); ++k) out.exps_[k] = std::max(exps_[k], other.exps_[k]);
  return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
  if (nvars() != other.nvars()) throw StructuralError("monomial variable count mismatch");
  Monomial out(nvars());
  for (std::size_t k = 0; k < exps_.size(); ++k) out.exps_[k] = std::min(exps_[k], other.exps_[k]);
  return out;
}

Monomial Monomial::pow(Exponent e) const {
  Monomial out(*this);
  for (auto& x : out.exps_) x *= e;
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(*this);
  out *= other;
  return out;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  if (nvars() != other.nvars()) throw StructuralError("monomial variable count mismatch");
  for (std::size_t k = 0; k < exps_.size(); ++k) exps_[k] += other.exps_[k];
  return *this;
}

std::string Monomial::to_string(const VariableNames& names) const {
  std::string out;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += names.at(k);
    if (exps_[k] > 1) out += '^' + std::to_string(exps_[k]);
  }
  return out.empty() ? "1" : out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto e : m.exponents()) h = (h ^ e) * 0x100000001b3ULL + (h >> 7);
  return h;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da < db;
  for (std::size_t k = a.nvars(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] > b[k];
  }
  return false;
}

// -------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(c, Monomial(nvars));
  return p;
}

Polynomial Polynomial::term(const Rational& c, const Monomial& m) {
  Polynomial p(m.nvars());
  p.add_term(c, m);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t k) {
  return term(1, Monomial::variable(nvars, k));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::int64_t Polynomial::degree() const {
  if (terms_.empty()) return kZeroDegree;
  std::int64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max<std::int64_t>(d, static_cast<std::int64_t>(m.total_degree()));
  return d;
}

void Polynomial::add_term(const Rational& c, const Monomial& m) {
  if (c == 0) return;
  if (m.nvars() != nvars_) throw StructuralError("term variable count mismatch");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_same(const Polynomial& other) const {
  if (nvars_ != other.nvars_) throw StructuralError("polynomial variable count mismatch");
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial out(*this);
  const Rational inv = 1 / leading_coefficient();
  for (auto& [m, c] : out.terms_) c *= inv;
  return out;
}

Polynomial Polynomial::partial(std::size_t k) const {
  if (k >= nvars_) throw StructuralError("partial derivative: variable index out of range");
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[k] == 0) continue;
    std::vector<Exponent> e(m.exponents().begin(), m.exponents().end());
    Rational factor = c * e[k];
    e[k] -= 1;
    out.add_term(factor, Monomial(std::move(e)));
  }
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = one(nvars_);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::mul_term(const Rational& c, const Monomial& m) const {
  Polynomial out(nvars_);
  if (c == 0) return out;
  // Multiplying by a monomial preserves grevlex order, so hinted insertion is linear.
  for (const auto& [mm, cc] : terms_) out.terms_.emplace_hint(out.terms_.end(), mm * m, cc * c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same(other);
  for (const auto& [m, c] : other.terms_) add_term(c, m);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same(other);
  for (const auto& [m, c] : other.terms_) add_term(-c, m);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, cc] : terms_) cc *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same(b);
  Polynomial out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ca * cb, ma * mb);
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::string Polynomial::to_string(const VariableNames& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << m.to_string(names);
    } else {
      os << mag.get_str() << '*' << m.to_string(names);
    }
  }
  return os.str();
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error("division by the zero polynomial");
  if (a.nvars() != b.nvars()) throw StructuralError("polynomial variable count mismatch");
  Polynomial rem = a;
  Polynomial quot(a.nvars());
  const Monomial& lb = b.leading_monomial();
  const Rational& cb = b.leading_coefficient();
  while (!rem.is_zero()) {
    auto q = rem.leading_monomial().divide(lb);
    if (!q) throw Error("divide_exact: divisor does not divide dividend");
    Rational c = rem.leading_coefficient() / cb;
    quot.add_term(c, *q);
    rem -= b.mul_term(c, *q);
  }
  return quot;
}

// -------------------------------------------------------------- Derivation

Derivation::Derivation(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw StructuralError("derivation needs at least one variable");
  const std::size_t n = coeffs_.size();
  std::vector<Rational> weights(n);
  bool diagonal = true;
  for (std::size_t k = 0; k < n && diagonal; ++k) {
    if (coeffs_[k].nvars() != n) throw StructuralError("derivation coefficient variable count mismatch");
    if (coeffs_[k].is_zero()) continue;
    const Monomial xk = Monomial::variable(n, k);
    if (coeffs_[k].is_term() && coeffs_[k].leading_monomial() == xk) {
      weights[k] = coeffs_[k].leading_coefficient();
    } else {
      diagonal = false;
    }
  }
  if (diagonal) diagonal_ = std::move(weights);
}

Derivation Derivation::diagonal(std::vector<Rational> weights) {
  const std::size_t n = weights.size();
  std::vector<Polynomial> coeffs;
  coeffs.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    coeffs.push_back(Polynomial::term(weights[k], Monomial::variable(n, k)));
  }
  return Derivation(std::move(coeffs));
}

Polynomial Derivation::operator()(const Polynomial& p) const {
  if (p.nvars() != nvars()) throw StructuralError("derivation applied to polynomial in a different ring");
  if (!diagonal_) return apply_by_coefficients(p);
  const auto& w = *diagonal_;
  Polynomial out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    Rational weight = 0;
    for (std::size_t k = 0; k < m.nvars(); ++k) weight += w[k] * m[k];
    out.add_term(c * weight, m);
  }
  return out;
}

Polynomial Derivation::apply_by_coefficients(const Polynomial& p) const {
  if (p.nvars() != nvars()) throw StructuralError("derivation applied to polynomial in a different ring");
  Polynomial out(p.nvars());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    out += coeffs_[k] * p.partial(k);
  }
  return out;
}

Polynomial apply_derivation(const Derivation& d, const Polynomial& p) { return d(p); }

Foliation::Foliation(std::vector<Derivation> derivations) : derivations_(std::move(derivations)) {
  if (derivations_.empty()) throw StructuralError("a foliation needs r >= 1 derivations");
  for (const auto& d : derivations_) {
    if (d.nvars() != derivations_.front().nvars()) {
      throw StructuralError("derivations of a foliation must share the ambient variable count");
    }
  }
}

Foliation Foliation::diagonal(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty() || rows.front().empty()) throw StructuralError("empty weight matrix");
  const std::size_t r = rows.front().size();
  std::vector<Derivation> ders;
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<Rational> w;
    for (const auto& row : rows) {
      if (row.size() != r) throw StructuralError("ragged weight matrix");
      w.push_back(row[j]);
    }
    ders.push_back(Derivation::diagonal(std::move(w)));
  }
  return Foliation(std::move(ders));
}

bool Foliation::is_diagonal() const {
  return std::all_of(derivations_.begin(), derivations_.end(),
                     [](const Derivation& d) { return d.diagonal_weights().has_value(); });
}

std::optional<std::vector<std::vector<Rational>>> Foliation::weight_rows() const {
  if (!is_diagonal()) return std::nullopt;
  std::vector<std::vector<Rational>> rows(nvars(), std::vector<Rational>(rank()));
  for (std::size_t j = 0; j < rank(); ++j) {
    const auto& w = *derivations_[j].diagonal_weights();
    for (std::size_t k = 0; k < nvars(); ++k) rows[k][j] = w[k];
  }
  return rows;
}

// ------------------------------------------------------------ Determinants

namespace {

void check_square(const PolyMatrix& m) {
  if (m.empty()) throw StructuralError("determinant of an empty matrix");
  for (const auto& row : m) {
    if (row.size() != m.size()) throw StructuralError("determinant of a non-square matrix");
  }
}

Polynomial cofactor_rec(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t nv = m[0][0].nvars();
  if (cols.size() == 1) return m[row][cols[0]];
  Polynomial out(nv);
  for (std::size_t idx = 0; idx < cols.size(); ++idx) {
    const Polynomial& entry = m[row][cols[idx]];
    if (entry.is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(cols.size() - 1);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (j != idx) rest.push_back(cols[j]);
    }
    Polynomial minor = cofactor_rec(m, rest, row + 1);
    if (idx % 2 == 0) {
      out += entry * minor;
    } else {
      out -= entry * minor;
    }
  }
  return out;
}

}  // namespace

Polynomial det_cofactor(const PolyMatrix& m) {
  check_square(m);
  std::vector<std::size_t> cols(m.size());
  std::iota(cols.begin(), cols.end(), 0);
  return cofactor_rec(m, cols, 0);
}

Polynomial det_bareiss(const PolyMatrix& input) {
  check_square(input);
  PolyMatrix a = input;
  const std::size_t n = a.size();
  const std::size_t nv = a[0][0].nvars();
  Polynomial prev = Polynomial::one(nv);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return Polynomial(nv);
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = divide_exact(num, prev);
      }
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

Polynomial det_poly_matrix(const PolyMatrix& m) {
  check_square(m);
  return m.size() <= 4 ? det_cofactor(m) : det_bareiss(m);
}

PolyMatrix gauss_matrix(std::span<const Polynomial> fs, const Foliation& fol) {
  PolyMatrix rows;
  rows.reserve(fs.size());
  for (const auto& f : fs) {
    if (f.nvars() != fol.nvars()) throw StructuralError("polynomial and foliation live in different rings");
    std::vector<Polynomial> row;
    row.reserve(fol.rank() + 1);
    row.push_back(f);
    for (const auto& d : fol.derivations()) row.push_back(d(f));
    rows.push_back(std::move(row));
  }
  return rows;
}

Polynomial w_form(std::span<const Polynomial> fs, const Foliation& fol) {
  if (fs.size() != fol.rank() + 1) {
    throw StructuralError("w-form needs exactly r+1 = " + std::to_string(fol.rank() + 1) +
                          " arguments, got " + std::to_string(fs.size()));
  }
  return det_poly_matrix(gauss_matrix(fs, fol));
}

}  // namespace foliate
