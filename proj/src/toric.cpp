#include "foliate/toric.hpp"

#include <algorithm>

namespace foliate {

WeightSystem::WeightSystem(std::vector<WeightVector> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw StructuralError("weight system needs at least one variable");
  r_ = rows_.front().size();
  if (r_ == 0) throw StructuralError("weight system needs r >= 1");
  for (const auto& row : rows_) {
    if (row.size() != r_) throw StructuralError("ragged weight matrix");
  }
}

WeightSystem WeightSystem::from_foliation(const Foliation& fol) {
  auto rows = fol.weight_rows();
  if (!rows) throw StructuralError("foliation is not diagonal; no weight system");
  return WeightSystem(std::move(*rows));
}

std::size_t rational_rank(std::vector<WeightVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::size_t WeightSystem::rank() const { return rational_rank(rows_); }

WeightVector weight_of(const Monomial& m, const WeightSystem& w) {
  if (m.nvars() != w.nvars()) throw StructuralError("monomial and weight system have different variable counts");
  WeightVector out(w.rank_r(), Rational(0));
  for (std::size_t k = 0; k < m.nvars(); ++k) {
    if (m[k] == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += w.rows()[k][j] * m[k];
  }
  return out;
}

bool affinely_independent(std::span<const WeightVector> vs) {
  if (vs.empty()) throw StructuralError("affine independence of an empty family");
  const std::size_t r = vs.front().size();
  if (vs.size() != r + 1) {
    throw StructuralError("affine independence needs exactly r+1 = " + std::to_string(r + 1) + " vectors");
  }
  std::vector<WeightVector> rows;
  rows.reserve(vs.size());
  for (const auto& v : vs) {
    if (v.size() != r) throw StructuralError("vectors of different dimensions");
    WeightVector row{Rational(1)};
    row.insert(row.end(), v.begin(), v.end());
    rows.push_back(std::move(row));
  }
  return rational_rank(std::move(rows)) == r + 1;
}

std::string weight_to_string(const WeightVector& v) {
  if (v.size() == 1) return v[0].get_str();
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}

ToricVerdict toric_resolvable(const WeightSystem& w) {
  const std::size_t r = w.rank_r();
  if (!w.is_faithful()) {
    throw StructuralError("weight system is not faithful: weights span a space of dimension " +
                          std::to_string(w.rank()) + " < r = " + std::to_string(r) +
                          " (the criterion assumes a faithful representation)");
  }
  ToricVerdict v;
  for (const auto& row : w.rows()) {
    const bool zero = std::all_of(row.begin(), row.end(), [](const Rational& q) { return q == 0; });
    if (zero) continue;
    if (std::find(v.distinct_nonzero.begin(), v.distinct_nonzero.end(), row) == v.distinct_nonzero.end()) {
      v.distinct_nonzero.push_back(row);
    }
  }
  v.distinct_rank = rational_rank(v.distinct_nonzero);
  v.resolvable = v.distinct_nonzero.size() == r && v.distinct_rank == r;

  std::string listed;
  for (std::size_t i = 0; i < v.distinct_nonzero.size(); ++i) {
    if (i) listed += ", ";
    listed += weight_to_string(v.distinct_nonzero[i]);
  }
  v.explanation = "distinct nonzero weights {" + listed + "}: " + std::to_string(v.distinct_nonzero.size()) +
                  " element(s) of rank " + std::to_string(v.distinct_rank) + ", r = " + std::to_string(r) +
                  (v.resolvable ? "; they form a basis of the dual Lie algebra"
                                : "; they do not form a basis of the dual Lie algebra");
  return v;
}

}  // namespace foliate
