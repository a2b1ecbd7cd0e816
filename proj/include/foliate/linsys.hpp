#pragma once

// Finite-dimensional polynomial spans in the affine chart x_0 = 1 and the
// power test X_0^(r+2) = X_1 for a space of sections X.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "foliate/polyalg.hpp"

namespace foliate {

/// Subspace of k[x_1..x_n] held in reduced row echelon form over the grevlex
/// term basis: monic, leading monomials strictly decreasing, and no basis
/// element mentions another's leading monomial.
class PolySpan {
 public:
  explicit PolySpan(std::size_t nvars) : nvars_(nvars) {}

  std::size_t nvars() const { return nvars_; }
  std::size_t dimension() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Polynomial>& basis() const { return basis_; }

  /// Adds p to the span; returns false when p was already in it.
  bool insert(Polynomial p);
  Polynomial reduce(Polynomial p) const;
  bool contains(const Polynomial& p) const { return reduce(p).is_zero(); }
  bool contains(const PolySpan& other) const;

  /// Common total degree when every basis element is homogeneous of it.
  std::optional<std::int64_t> homogeneous_degree() const;

  std::string to_string(const VariableNames& names) const;

  friend bool operator==(const PolySpan& a, const PolySpan& b) {
    return a.nvars_ == b.nvars_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t nvars_;
  std::vector<Polynomial> basis_;
};

PolySpan span_reduce(std::size_t nvars, std::span<const Polynomial> polys);

struct LinsysOptions {
  /// Guard on spanning products or w-forms evaluated by one image computation.
  std::size_t max_evaluations = 2000000;
};

/// span{ x t : x in X, t in T }.
PolySpan product_span(const PolySpan& a, const PolySpan& b);

/// span{ w(f_0..f_r) : f_i in a basis of X T }.
PolySpan w_image(const PolySpan& xt, const Foliation& fol, const LinsysOptions& options = {});

/// X_0^(r+2) with X_0 = w_image(X T). Requires 1 in T.
PolySpan power_image(const PolySpan& x, const PolySpan& t, const Foliation& fol, const LinsysOptions& options = {});

/// w over (r+1)-subsets of a basis of T X X_0. Requires 1 in T.
PolySpan nested_image(const PolySpan& x, const PolySpan& t, const Foliation& fol, const LinsysOptions& options = {});

enum class SectionOutcome { equal, proper_containment };

std::string to_string(SectionOutcome o);

struct SectionReport {
  SectionOutcome outcome = SectionOutcome::equal;
  PolySpan power;
  PolySpan nested;
};

/// Throws std::logic_error if power_image is not inside nested_image.
SectionReport section_power_test(const PolySpan& x, const PolySpan& t, const Foliation& fol,
                                 const LinsysOptions& options = {});

}  // namespace foliate
