#include "foliate/gauss.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace foliate {

FoliatedRing::FoliatedRing(Ambient ambient, Foliation foliation)
    : ambient_(std::move(ambient)), foliation_(std::move(foliation)) {
  if (foliation_.nvars() != ambient_.nvars) {
    throw StructuralError("foliation acts on " + std::to_string(foliation_.nvars()) + " variables, ring has " +
                          std::to_string(ambient_.nvars));
  }
  if (foliation_.is_diagonal()) weights_ = WeightSystem::from_foliation(foliation_);
}

std::vector<Polynomial> FoliatedRing::coordinates() const {
  std::vector<Polynomial> out;
  for (const auto& m : ambient_.coordinate_monomials()) out.push_back(Polynomial::term(1, m));
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::stabilized:
      return "stabilized";
    case Verdict::inconclusive:
      return "inconclusive";
    case Verdict::toric_nonresolvable:
      return "toric_nonresolvable";
  }
  return "unknown";
}

std::vector<Polynomial> candidate_set(const FractionalIdeal& ideal, std::span<const Polynomial> coords) {
  if (coords.empty() || coords.front() != Polynomial::one(coords.front().nvars())) {
    throw StructuralError("coordinate list must start with the constant 1");
  }
  std::vector<Polynomial> out;
  for (const auto& g : ideal.numerator_generators()) {
    for (const auto& c : coords) {
      Polynomial p = c * g;
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
  }
  return out;
}

namespace {

std::size_t checked_binomial(std::size_t n, std::size_t k, std::size_t cap) {
  if (k > n) return 0;
  long double acc = 1;
  for (std::size_t i = 0; i < k; ++i) acc = acc * static_cast<long double>(n - i) / static_cast<long double>(i + 1);
  if (acc > static_cast<long double>(cap)) return cap + 1;
  return static_cast<std::size_t>(acc + 0.5L);
}

// Weight rows scaled by a common denominator; affine independence is scale invariant.
std::vector<std::vector<std::int64_t>> integer_weights(const WeightSystem& w) {
  mpz_class lcm = 1;
  for (const auto& row : w.rows()) {
    for (const auto& q : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  }
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& row : w.rows()) {
    std::vector<std::int64_t> irow;
    for (const auto& q : row) {
      mpz_class v = q.get_num() * (lcm / q.get_den());
      if (!v.fits_slong_p() || abs(v) > (mpz_class(1) << 30)) throw ResourceError("weights too large for the exponent route");
      irow.push_back(v.get_si());
    }
    out.push_back(std::move(irow));
  }
  return out;
}

using Int = __int128;

Int abs128(Int v) { return v < 0 ? -v : v; }

Int gcd128(Int a, Int b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Fraction-free echelon rows for incremental affine-independence checks.
struct Echelon {
  std::vector<std::vector<Int>> rows;
  std::vector<std::size_t> pivots;

  // Returns false when v lies in the span.
  bool try_add(std::vector<Int> v) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::size_t c = pivots[i];
      if (v[c] == 0) continue;
      const Int a = rows[i][c];
      const Int b = v[c];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = a * v[j] - b * rows[i][j];
      Int g = 0;
      for (auto x : v) g = gcd128(g, x);
      if (g > 1) {
        for (auto& x : v) x /= g;
      }
      for (auto x : v) {
        if (abs128(x) > (Int(1) << 60)) throw ResourceError("weight arithmetic overflow in the exponent route");
      }
    }
    auto it = std::find_if(v.begin(), v.end(), [](Int x) { return x != 0; });
    if (it == v.end()) return false;
    pivots.push_back(static_cast<std::size_t>(it - v.begin()));
    rows.push_back(std::move(v));
    return true;
  }
};

class ProductSink {
 public:
  explicit ProductSink(const Ambient& ambient) : ambient_(ambient), n_(ambient.nvars) {}

  void add(std::span<const Exponent> e) {
    if (ambient_.is_semigroup() || n_ == 1) {
      const std::size_t v = e[0];
      if (v >= seen_.size()) seen_.resize(std::max<std::size_t>(v + 1, seen_.size() * 2), false);
      seen_[v] = true;
    } else if (n_ == 2) {
      const std::size_t x = e[0];
      if (x >= best_y_.size()) best_y_.resize(std::max<std::size_t>(x + 1, best_y_.size() * 2), kNone);
      best_y_[x] = std::min(best_y_[x], e[1]);
    } else {
      general_.emplace(std::vector<Exponent>(e.begin(), e.end()));
    }
    any_ = true;
  }

  bool empty() const { return !any_; }

  MonomialIdeal finish() const {
    std::vector<Monomial> gens;
    if (ambient_.is_semigroup() || n_ == 1) {
      for (std::size_t v = 0; v < seen_.size(); ++v) {
        if (seen_[v]) gens.push_back(Monomial::variable(1, 0, static_cast<Exponent>(v)));
      }
    } else if (n_ == 2) {
      Exponent running = kNone;
      for (std::size_t x = 0; x < best_y_.size(); ++x) {
        if (best_y_[x] < running) {
          running = best_y_[x];
          gens.push_back(Monomial(std::vector<Exponent>{static_cast<Exponent>(x), running}));
        }
      }
    } else {
      gens.assign(general_.begin(), general_.end());
    }
    return MonomialIdeal(ambient_, std::move(gens));
  }

 private:
  static constexpr Exponent kNone = std::numeric_limits<Exponent>::max();
  const Ambient& ambient_;
  std::size_t n_;
  bool any_ = false;
  std::vector<bool> seen_;
  std::vector<Exponent> best_y_;
  std::unordered_set<Monomial, MonomialHash> general_;
};

}  // namespace

MonomialIdeal gauss_map_monomial(const MonomialIdeal& ideal, const WeightSystem& weights,
                                 const GaussMapOptions& options) {
  const Ambient& ambient = ideal.ambient();
  const std::size_t n = ambient.nvars;
  if (weights.nvars() != n) throw StructuralError("weight system and ideal have different variable counts");
  const std::size_t r = weights.rank_r();

  std::vector<Monomial> cands;
  {
    std::unordered_set<Monomial, MonomialHash> seen;
    const auto coords = ambient.coordinate_monomials();
    for (const auto& g : ideal.generators()) {
      for (const auto& c : coords) {
        Monomial m = g * c;
        if (seen.insert(m).second) cands.push_back(std::move(m));
      }
    }
  }
  if (cands.size() > options.max_candidates) {
    throw ResourceError("candidate guard: " + std::to_string(cands.size()) + " candidates exceed " +
                        std::to_string(options.max_candidates));
  }
  if (cands.size() < r + 1) throw Error("fewer than r+1 candidates; F is undefined on this input");

  const auto iw = integer_weights(weights);
  const std::size_t c = cands.size();
  std::vector<std::int64_t> f(c * r, 0);
  std::vector<Exponent> exps(c * n);
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      exps[i * n + k] = cands[i][k];
      for (std::size_t j = 0; j < r; ++j) f[i * r + j] += static_cast<std::int64_t>(cands[i][k]) * iw[k][j];
    }
  }

  ProductSink sink(ambient);
  std::vector<Exponent> prod(n);
  std::size_t enumerated = 0;

  if (r == 1) {
    if (checked_binomial(c, 2, options.max_monomial_subsets) > options.max_monomial_subsets) {
      throw ResourceError("subset guard: " + std::to_string(c) + " candidates give too many pairs");
    }
    for (std::size_t i = 0; i < c; ++i) {
      const Exponent* ei = &exps[i * n];
      for (std::size_t j = i + 1; j < c; ++j) {
        if (f[i] == f[j]) continue;
        const Exponent* ej = &exps[j * n];
        for (std::size_t k = 0; k < n; ++k) prod[k] = ei[k] + ej[k];
        sink.add(prod);
      }
    }
  } else {
    std::vector<std::size_t> chosen;
    // Depth-first over index-increasing subsets, pruning affinely dependent prefixes.
    auto rec = [&](auto&& self, std::size_t start, const Echelon& ech) -> void {
      if (chosen.size() == r + 1) {
        if (++enumerated > options.max_monomial_subsets) throw ResourceError("subset guard exceeded in the exponent route");
        std::fill(prod.begin(), prod.end(), 0);
        for (auto idx : chosen) {
          for (std::size_t k = 0; k < n; ++k) prod[k] += exps[idx * n + k];
        }
        sink.add(prod);
        return;
      }
      const std::size_t remaining = r + 1 - chosen.size();
      for (std::size_t j = start; j + remaining <= c; ++j) {
        if (chosen.empty()) {
          chosen.push_back(j);
          self(self, j + 1, ech);
          chosen.pop_back();
          continue;
        }
        std::vector<Int> diff(r);
        const std::size_t base = chosen.front();
        for (std::size_t q = 0; q < r; ++q) diff[q] = Int(f[j * r + q]) - Int(f[base * r + q]);
        Echelon next = ech;
        if (!next.try_add(std::move(diff))) continue;
        chosen.push_back(j);
        self(self, j + 1, next);
        chosen.pop_back();
      }
    };
    rec(rec, 0, Echelon{});
  }
  if (sink.empty()) throw Error("F is the zero ideal: every candidate subset has affinely dependent weights");
  return sink.finish();
}

FractionalIdeal gauss_map_general(const FractionalIdeal& ideal, const Foliation& fol,
                                  std::span<const Polynomial> coords, const GaussMapOptions& options) {
  const std::size_t r = fol.rank();
  if (fol.nvars() != ideal.nvars()) throw StructuralError("foliation and ideal live in different rings");
  const ClearedIdeal cleared = clear_denominators(ideal, r);
  const auto cands = candidate_set(cleared.ideal, coords);
  if (cands.size() < r + 1) throw Error("fewer than r+1 candidates; F is undefined on this input");
  if (checked_binomial(cands.size(), r + 1, options.max_determinants) > options.max_determinants) {
    throw ResourceError("determinant guard: C(" + std::to_string(cands.size()) + ", " + std::to_string(r + 1) +
                        ") exceeds " + std::to_string(options.max_determinants));
  }

  // Rows are computed once per candidate; every subset picks r+1 of them.
  const PolyMatrix rows = gauss_matrix(cands, fol);
  std::vector<Polynomial> dets;
  std::vector<std::size_t> idx(r + 1);
  std::iota(idx.begin(), idx.end(), 0);
  const std::size_t c = cands.size();
  for (;;) {
    PolyMatrix m;
    m.reserve(r + 1);
    for (auto i : idx) m.push_back(rows[i]);
    Polynomial d = det_poly_matrix(m);
    if (!d.is_zero()) {
      d = d.monic();
      if (std::find(dets.begin(), dets.end(), d) == dets.end()) dets.push_back(std::move(d));
    }
    std::size_t pos = r + 1;
    while (pos > 0 && idx[pos - 1] == c - (r + 1) + (pos - 1)) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t q = pos; q < r + 1; ++q) idx[q] = idx[q - 1] + 1;
  }
  if (dets.empty()) throw Error("F is the zero ideal: every determinant vanishes");

  const Ambient ambient = cleared.ideal.ambient();
  const Polynomial den = cleared.t.pow(cleared.f_exponent);
  const bool all_terms = std::all_of(dets.begin(), dets.end(), [](const Polynomial& p) { return p.is_term(); });
  if (all_terms) {
    std::vector<Monomial> gens;
    for (const auto& d : dets) gens.push_back(d.leading_monomial());
    return FractionalIdeal(MonomialIdeal(ambient, std::move(gens)), den);
  }
  if (ambient.is_semigroup()) {
    throw StructuralError("non-monomial determinants in semigroup mode are not supported");
  }
  return FractionalIdeal(PolyIdeal(ambient.nvars, groebner_basis(dets)), den);
}

FractionalIdeal gauss_map(const FractionalIdeal& ideal, const FoliatedRing& ring, const GaussMapOptions& options) {
  if (!(ideal.ambient() == ring.ambient())) throw StructuralError("ideal and foliated ring do not match");
  if (ring.monomial_path(ideal)) {
    const unsigned e = static_cast<unsigned>(ring.r() + 1);
    return FractionalIdeal(gauss_map_monomial(ideal.monomial_numerator(), *ring.weights(), options),
                           ideal.denominator().pow(e));
  }
  const auto coords = ring.coordinates();
  return gauss_map_general(ideal, ring.foliation(), coords, options);
}

bool stabilization_test(const FractionalIdeal& j, const FoliatedRing& ring, const GaussMapOptions& options) {
  const FractionalIdeal fj = gauss_map(j, ring, options);
  const FractionalIdeal lhs = ideal_power(fj, static_cast<unsigned>(ring.r() + 2));
  const FractionalIdeal rhs = gauss_map(ideal_product(j, fj), ring, options);
  return ideal_equal(lhs, rhs);
}

namespace {

void audit_state(const GaussState& s, const FoliatedRing& ring, const IterateOptions& options, GaussState& out) {
  FractionalIdeal running = s.seed;
  for (std::size_t i = 0; i < s.L.size(); ++i) {
    if (!ideal_equal(running, s.J[i])) throw std::logic_error("audit: J_" + std::to_string(i) + " != I*L_0*...*L_{i-1}");
    if (!ideal_equal(gauss_map(s.J[i], ring, options.map), s.L[i])) {
      throw std::logic_error("audit: L_" + std::to_string(i) + " != F(J_" + std::to_string(i) + ")");
    }
    if (s.monomial_path) {
      GaussMapOptions small = options.map;
      small.max_determinants = 20000;
      try {
        const auto coords = ring.coordinates();
        if (!ideal_equal(gauss_map_general(s.J[i], ring.foliation(), coords, small), s.L[i])) {
          throw std::logic_error("audit: exponent and determinant routes disagree on L_" + std::to_string(i));
        }
        out.diagnostics.push_back("audit: L_" + std::to_string(i) + " confirmed by the determinant route");
      } catch (const ResourceError&) {
        out.diagnostics.push_back("audit: L_" + std::to_string(i) + " too large for the determinant route cross-check");
      }
    }
    running = ideal_product(running, s.L[i]);
  }
  out.diagnostics.push_back("audit: " + std::to_string(s.L.size()) + " stored L_i and J_i recomputed and matched");
}

}  // namespace

GaussState iterate(const FractionalIdeal& seed, const FoliatedRing& ring, const IterateOptions& options) {
  if (options.max_steps < 1) throw Error("iterate needs max_steps >= 1");
  GaussState s{.seed = seed};
  s.r = ring.r();
  s.max_steps = options.max_steps;
  s.monomial_path = ring.monomial_path(seed);
  const unsigned power = static_cast<unsigned>(s.r + 2);
  bool stabilized = false;
  try {
    s.J.push_back(seed);
    s.L.push_back(gauss_map(seed, ring, options.map));
    for (std::size_t t = 0; t <= options.max_steps; ++t) {
      FractionalIdeal next_j = ideal_product(s.J[t], s.L[t]);
      FractionalIdeal next_l = gauss_map(next_j, ring, options.map);
      const bool eq = ideal_equal(next_l, ideal_power(s.L[t], power));
      s.J.push_back(std::move(next_j));
      s.L.push_back(std::move(next_l));
      s.stabilization_checks.push_back(eq);
      if (eq) {
        stabilized = true;
        s.t = t;
        break;
      }
    }
  } catch (const ResourceError& e) {
    s.resource_exhausted = true;
    s.diagnostics.push_back(std::string("resource guard: ") + e.what());
    // Drop a J without its L so stored pairs stay aligned.
    if (s.J.size() > s.L.size()) s.J.pop_back();
  }

  if (stabilized) {
    s.verdict = Verdict::stabilized;
  } else {
    s.verdict = Verdict::inconclusive;
    if (!ring.ambient().is_semigroup() && ring.weights() && seed.is_monomial()) {
      try {
        ToricVerdict tv = toric_resolvable(*ring.weights());
        if (!tv.resolvable) s.verdict = Verdict::toric_nonresolvable;
        s.toric_certificate = std::move(tv);
      } catch (const StructuralError& e) {
        s.diagnostics.push_back(std::string("no toric certificate: ") + e.what());
      }
    }
  }
  if (options.audit) audit_state(s, ring, options, s);
  return s;
}

ContainmentReport containment_suite(const FractionalIdeal& j, const FractionalIdeal& x, const FoliatedRing& ring,
                                    const GaussMapOptions& options) {
  const unsigned r = static_cast<unsigned>(ring.r());
  ContainmentReport rep;
  const FractionalIdeal fj = gauss_map(j, ring, options);
  const FractionalIdeal lhs = ideal_power(fj, r + 2);
  const FractionalIdeal rhs = gauss_map(ideal_product(j, fj), ring, options);
  rep.polarization = ideal_contains(rhs, lhs);
  rep.polarization_equal = rep.polarization && ideal_contains(lhs, rhs);

  const FractionalIdeal f_square = gauss_map(ideal_power(j, 2), ring, options);
  rep.square_law = ideal_equal(f_square, ideal_product(ideal_power(j, r + 1), fj));

  const FractionalIdeal fx = gauss_map(x, ring, options);
  rep.mixed_containment =
      ideal_contains(gauss_map(ideal_product(j, x), ring, options), ideal_product(ideal_power(j, r + 1), fx));
  return rep;
}

}  // namespace foliate
