#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qtree/rational.hpp"

namespace qtree {

/// Sparse exact-rational vector over an abstract uint32 index space,
/// kept sorted by index with no explicit zeros.
struct SparseVec {
  std::vector<std::pair<std::uint32_t, Rational>> entries;

  static SparseVec from_dense(const std::vector<Rational>& v);
  bool empty() const { return entries.empty(); }
  std::uint32_t leading_index() const { return entries.front().first; }
  const Rational& leading_coeff() const { return entries.front().second; }

  void axpy(const Rational& c, const SparseVec& other);  // *this += c * other
  void scale(const Rational& c);
};

/// Incremental row echelon form with exact arithmetic. Rows are normalized
/// to leading coefficient 1 and indexed by their pivot.
class RowEchelon {
 public:
  /// Reduces v against the pivots; inserts the residual as a new row when it
  /// is nonzero. Returns true when the rank grew.
  bool add(SparseVec v);

  /// Residual of v against the current pivots (v itself is not inserted).
  SparseVec residual(SparseVec v) const;

  /// Residual with every pivot coordinate eliminated, not just leading
  /// ones; the result is supported on non-pivot coordinates only.
  SparseVec reduce_fully(SparseVec v) const;

  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce_in_place(SparseVec& v) const;

  std::map<std::uint32_t, SparseVec> rows_;  // pivot index -> normalized row
};

}  // namespace qtree
