#include "foliate/linsys.hpp"

#include <functional>
#include <stdexcept>

#include "foliate/error.hpp"

namespace foliate {

Polynomial PolySpan::reduce(Polynomial p) const {
  // Basis elements never mention each other's leads, so one pass suffices.
  for (const auto& b : basis_) {
    const Rational c = p.coefficient(b.leading_monomial());
    if (c != 0) p -= c * b;
  }
  return p;
}

bool PolySpan::insert(Polynomial p) {
  if (p.nvars() != nvars_) throw Error("span element has the wrong number of variables");
  p = reduce(std::move(p));
  if (p.is_zero()) return false;
  p = p.monic();
  const Monomial& lead = p.leading_monomial();
  for (auto& b : basis_) {
    const Rational c = b.coefficient(lead);
    if (c != 0) b -= c * p;
  }
  auto pos = basis_.begin();
  while (pos != basis_.end() && grevlex_less(lead, pos->leading_monomial())) ++pos;
  basis_.insert(pos, std::move(p));
  return true;
}

bool PolySpan::contains(const PolySpan& other) const {
  for (const auto& b : other.basis_) {
    if (!contains(b)) return false;
  }
  return true;
}

std::optional<std::int64_t> PolySpan::homogeneous_degree() const {
  std::optional<std::int64_t> deg;
  for (const auto& b : basis_) {
    for (const auto& [m, c] : b.terms()) {
      const auto d = static_cast<std::int64_t>(m.total_degree());
      if (deg && *deg != d) return std::nullopt;
      deg = d;
    }
  }
  return deg;
}

std::string PolySpan::to_string(const VariableNames& names) const {
  std::string out = "span{";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) out += ", ";
    out += basis_[i].to_string(names);
  }
  return out + "}";
}

PolySpan span_reduce(std::size_t nvars, std::span<const Polynomial> polys) {
  PolySpan s(nvars);
  for (const auto& p : polys) s.insert(p);
  return s;
}

namespace {

void charge(std::size_t& used, std::size_t n, const LinsysOptions& options) {
  used += n;
  if (used > options.max_evaluations) {
    throw ResourceError("span image needs more than " + std::to_string(options.max_evaluations) + " evaluations");
  }
}

// Calls visit on every k-subset (strictly increasing indices) of [0, n).
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void require_one(const PolySpan& t) {
  if (!t.contains(Polynomial::one(t.nvars()))) throw Error("T must contain the constant 1");
}

void check_foliation(const PolySpan& x, const Foliation& fol) {
  if (fol.nvars() != x.nvars()) throw Error("foliation and spans disagree on the number of variables");
}

}  // namespace

PolySpan product_span(const PolySpan& a, const PolySpan& b) {
  if (a.nvars() != b.nvars()) throw Error("spans disagree on the number of variables");
  PolySpan out(a.nvars());
  for (const auto& p : a.basis()) {
    for (const auto& q : b.basis()) out.insert(p * q);
  }
  return out;
}

PolySpan w_image(const PolySpan& xt, const Foliation& fol, const LinsysOptions& options) {
  check_foliation(xt, fol);
  PolySpan out(xt.nvars());
  std::size_t used = 0;
  const auto& basis = xt.basis();
  std::vector<Polynomial> fs(fol.rank() + 1);
  // Multilinear and alternating: basis subsets span everything.
  for_each_subset(basis.size(), fol.rank() + 1, [&](const std::vector<std::size_t>& idx) {
    charge(used, 1, options);
    for (std::size_t i = 0; i < idx.size(); ++i) fs[i] = basis[idx[i]];
    out.insert(w_form(fs, fol));
  });
  return out;
}

PolySpan power_image(const PolySpan& x, const PolySpan& t, const Foliation& fol, const LinsysOptions& options) {
  require_one(t);
  check_foliation(x, fol);
  const PolySpan x0 = w_image(product_span(x, t), fol, options);
  PolySpan out(x.nvars());
  const auto& basis = x0.basis();
  const std::size_t k = fol.rank() + 2;
  if (basis.empty()) return out;
  std::size_t used = 0;
  std::vector<std::size_t> idx(k, 0);
  // Nondecreasing index tuples enumerate the symmetric power.
  std::function<void(std::size_t, std::size_t, const Polynomial&)> visit = [&](std::size_t pos, std::size_t from,
                                                                                const Polynomial& acc) {
    if (pos == k) {
      charge(used, 1, options);
      out.insert(acc);
      return;
    }
    for (std::size_t i = from; i < basis.size(); ++i) visit(pos + 1, i, acc * basis[i]);
  };
  visit(0, 0, Polynomial::one(x.nvars()));
  return out;
}

PolySpan nested_image(const PolySpan& x, const PolySpan& t, const Foliation& fol, const LinsysOptions& options) {
  require_one(t);
  check_foliation(x, fol);
  const PolySpan x0 = w_image(product_span(x, t), fol, options);
  return w_image(product_span(t, product_span(x, x0)), fol, options);
}

std::string to_string(SectionOutcome o) {
  return o == SectionOutcome::equal ? "equal" : "proper_containment";
}

SectionReport section_power_test(const PolySpan& x, const PolySpan& t, const Foliation& fol,
                                 const LinsysOptions& options) {
  PolySpan power = power_image(x, t, fol, options);
  PolySpan nested = nested_image(x, t, fol, options);
  if (!nested.contains(power)) throw std::logic_error("power image escaped the nested image");
  const SectionOutcome o = power == nested ? SectionOutcome::equal : SectionOutcome::proper_containment;
  return SectionReport{o, std::move(power), std::move(nested)};
}

}  // namespace foliate
