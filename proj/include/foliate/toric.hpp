#pragma once

// Weight systems of diagonal foliations and the toric resolvability test.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "foliate/polyalg.hpp"

namespace foliate {

using WeightVector = std::vector<Rational>;

/// Row k is the weight of x_k under the r commuting diagonal derivations.
class WeightSystem {
 public:
  explicit WeightSystem(std::vector<WeightVector> rows);
  static WeightSystem from_foliation(const Foliation& fol);

  std::size_t nvars() const { return rows_.size(); }
  std::size_t rank_r() const { return r_; }
  const std::vector<WeightVector>& rows() const { return rows_; }

  /// Rank of the row span; the representation is faithful when it equals r.
  std::size_t rank() const;
  bool is_faithful() const { return rank() == r_; }

  Foliation foliation() const { return Foliation::diagonal(rows_); }

 private:
  std::vector<WeightVector> rows_;
  std::size_t r_;
};

/// Exact rank by Gaussian elimination over Q.
std::size_t rational_rank(std::vector<WeightVector> rows);

/// sum_k e_k * alpha_k; a monoid homomorphism from monomials to Q^r.
WeightVector weight_of(const Monomial& m, const WeightSystem& w);

/// r+1 vectors in Q^r: the matrix with rows (1, v_i) is nonsingular.
bool affinely_independent(std::span<const WeightVector> vs);

struct ToricVerdict {
  bool resolvable = false;
  /// Nonzero weight rows, deduplicated, in first-occurrence order.
  std::vector<WeightVector> distinct_nonzero;
  std::size_t distinct_rank = 0;
  std::string explanation;
};

/// Resolvable by blowing up a monomial ideal iff the distinct nonzero
/// weights form a basis of the dual of the r-dimensional Lie algebra.
/// Throws StructuralError for a non-faithful weight system.
ToricVerdict toric_resolvable(const WeightSystem& w);

std::string weight_to_string(const WeightVector& v);

}  // namespace foliate
