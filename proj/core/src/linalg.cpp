#include "qtree/linalg.hpp"

#include <algorithm>

namespace qtree {

SparseVec SparseVec::from_dense(const std::vector<Rational>& v) {
  SparseVec out;
  for (std::uint32_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) out.entries.emplace_back(i, v[i]);
  }
  return out;
}

void SparseVec::axpy(const Rational& c, const SparseVec& other) {
  if (c == 0 || other.empty()) return;
  std::vector<std::pair<std::uint32_t, Rational>> merged;
  merged.reserve(entries.size() + other.entries.size());
  std::size_t i = 0, j = 0;
  while (i < entries.size() || j < other.entries.size()) {
    if (j == other.entries.size() ||
        (i < entries.size() && entries[i].first < other.entries[j].first)) {
      merged.push_back(entries[i++]);
    } else if (i == entries.size() ||
               other.entries[j].first < entries[i].first) {
      merged.emplace_back(other.entries[j].first, c * other.entries[j].second);
      ++j;
    } else {
      Rational sum = entries[i].second + c * other.entries[j].second;
      if (sum != 0) merged.emplace_back(entries[i].first, std::move(sum));
      ++i;
      ++j;
    }
  }
  entries = std::move(merged);
}

void SparseVec::scale(const Rational& c) {
  for (auto& [i, x] : entries) x *= c;
}

void RowEchelon::reduce_in_place(SparseVec& v) const {
  while (!v.empty()) {
    auto it = rows_.find(v.leading_index());
    if (it == rows_.end()) return;
    Rational c = -v.leading_coeff();
    v.axpy(c, it->second);
  }
}

bool RowEchelon::add(SparseVec v) {
  reduce_in_place(v);
  if (v.empty()) return false;
  Rational inv = Rational(1) / v.leading_coeff();
  v.scale(inv);
  std::uint32_t pivot = v.leading_index();
  rows_.emplace(pivot, std::move(v));
  return true;
}

SparseVec RowEchelon::residual(SparseVec v) const {
  reduce_in_place(v);
  return v;
}

SparseVec RowEchelon::reduce_fully(SparseVec v) const {
  // entries at or above the scan position only ever move right, so one
  // monotone left-to-right sweep suffices
  std::size_t i = 0;
  while (i < v.entries.size()) {
    auto it = rows_.find(v.entries[i].first);
    if (it == rows_.end()) {
      ++i;
      continue;
    }
    Rational c = -v.entries[i].second;
    v.axpy(c, it->second);
    // the entry at this index is gone; positions before i are untouched
  }
  return v;
}

}  // namespace qtree
