#pragma once

// The determinant operator F on fractional ideals, the ideal iteration
// J_{i+1} = I L_0 ... L_i, L_i = F(J_i), and its stabilization test.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "foliate/ideals.hpp"
#include "foliate/polyalg.hpp"
#include "foliate/toric.hpp"

namespace foliate {

/// An ambient ring together with the foliation acting on it.
class FoliatedRing {
 public:
  FoliatedRing(Ambient ambient, Foliation foliation);

  const Ambient& ambient() const { return ambient_; }
  const Foliation& foliation() const { return foliation_; }
  std::size_t r() const { return foliation_.rank(); }
  std::size_t nvars() const { return ambient_.nvars; }

  /// Algebra generators of the coordinate ring, first element 1.
  std::vector<Polynomial> coordinates() const;
  /// Present when every derivation is diagonal.
  const std::optional<WeightSystem>& weights() const { return weights_; }

  /// The exponent-vector route applies to this ideal.
  bool monomial_path(const FractionalIdeal& ideal) const { return weights_.has_value() && ideal.is_monomial(); }

 private:
  Ambient ambient_;
  Foliation foliation_;
  std::optional<WeightSystem> weights_;
};

struct GaussMapOptions {
  /// Guard on the deduplicated candidate set.
  std::size_t max_candidates = 400000;
  /// Guard on enumerated (r+1)-subsets in the exponent-vector route.
  std::size_t max_monomial_subsets = 4000000000ULL;
  /// Guard on (r+1)-subset determinants in the polynomial route.
  std::size_t max_determinants = 200000;
};

/// Pairwise products x_i * y_j of coordinates with numerator generators,
/// deduplicated, in first-occurrence order. coords[0] must be 1.
std::vector<Polynomial> candidate_set(const FractionalIdeal& ideal, std::span<const Polynomial> coords);

/// F through (r+1)x(r+1) determinants over every (r+1)-subset of the
/// candidate set. Denominators are cleared first and the result rescaled by
/// denominator^(r+1).
FractionalIdeal gauss_map_general(const FractionalIdeal& ideal, const Foliation& fol,
                                  std::span<const Polynomial> coords, const GaussMapOptions& options = {});

/// F for diagonal foliations: products m_0...m_r over candidate subsets with
/// affinely independent weights.
MonomialIdeal gauss_map_monomial(const MonomialIdeal& ideal, const WeightSystem& weights,
                                 const GaussMapOptions& options = {});

/// Picks the exponent-vector route whenever it applies.
FractionalIdeal gauss_map(const FractionalIdeal& ideal, const FoliatedRing& ring, const GaussMapOptions& options = {});

enum class Verdict { stabilized, inconclusive, toric_nonresolvable };

std::string to_string(Verdict v);

struct IterateOptions {
  /// Stabilization is tested for t = 0..max_steps.
  std::size_t max_steps = 8;
  /// Recompute every stored L_i and J_i and cross-check the two routes on small inputs.
  bool audit = false;
  GaussMapOptions map;
};

struct GaussState {
  FractionalIdeal seed;
  std::size_t r = 0;
  std::vector<FractionalIdeal> L{};
  std::vector<FractionalIdeal> J{};
  /// stabilization_checks[t] compares L_t^(r+2) with L_(t+1).
  std::vector<bool> stabilization_checks{};
  Verdict verdict = Verdict::inconclusive;
  /// Index t of the first stabilization when verdict == stabilized.
  std::size_t t = 0;
  std::size_t max_steps = 0;
  bool monomial_path = false;
  bool resource_exhausted = false;
  std::optional<ToricVerdict> toric_certificate{};
  std::vector<std::string> diagnostics{};
};

/// Requires max_steps >= 1. Never reports a negative verdict without a toric certificate.
GaussState iterate(const FractionalIdeal& seed, const FoliatedRing& ring, const IterateOptions& options = {});

/// F(J)^(r+2) == F(J * F(J)).
bool stabilization_test(const FractionalIdeal& j, const FoliatedRing& ring, const GaussMapOptions& options = {});

struct ContainmentReport {
  /// F(J)^(r+2) inside F(J F(J)).
  bool polarization = false;
  bool polarization_equal = false;
  /// F(J^2) == J^(r+1) F(J).
  bool square_law = false;
  /// J^(r+1) F(X) inside F(J X).
  bool mixed_containment = false;

  bool all_hold() const { return polarization && square_law && mixed_containment; }
};

ContainmentReport containment_suite(const FractionalIdeal& j, const FractionalIdeal& x, const FoliatedRing& ring,
                                    const GaussMapOptions& options = {});

}  // namespace foliate
