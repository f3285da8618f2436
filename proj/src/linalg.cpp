#include "ktree/linalg.hpp"

namespace ktree {

namespace {

// row -= f * piv, both sorted by column.
SparseRow axpy(const SparseRow& row, const Rational& f, const SparseRow& piv) {
  SparseRow out;
  out.reserve(row.size() + piv.size());
  std::size_t a = 0, b = 0;
  while (a < row.size() || b < piv.size()) {
    if (b == piv.size() || (a < row.size() && row[a].first < piv[b].first)) {
      out.push_back(row[a++]);
    } else if (a == row.size() || piv[b].first < row[a].first) {
      out.emplace_back(piv[b].first, -f * piv[b].second);
      ++b;
    } else {
      Rational v = row[a].second - f * piv[b].second;
      if (v != 0) out.emplace_back(row[a].first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

}  // namespace

bool Echelon::add(SparseRow row) {
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) {
      Rational lead = row.front().second;
      for (auto& [c, v] : row) v /= lead;
      std::size_t col = row.front().first;
      pivots_.emplace(col, std::move(row));
      return true;
    }
    Rational f = row.front().second;
    row = axpy(row, f, it->second);
  }
  return false;
}

std::vector<std::vector<Rational>> Echelon::nullspace() const {
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (pivots_.count(f)) continue;
    std::vector<Rational> x(cols_);
    x[f] = 1;
    // Back substitution: pivots in decreasing column order only see larger columns.
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      if (it->first > f) continue;
      Rational s = 0;
      for (std::size_t k = 1; k < it->second.size(); ++k)
        s += it->second[k].second * x[it->second[k].first];
      x[it->first] = -s;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

SparseRow dense_to_sparse(const std::vector<Rational>& v) {
  SparseRow r;
  for (std::size_t c = 0; c < v.size(); ++c)
    if (v[c] != 0) r.emplace_back(c, v[c]);
  return r;
}

}  // namespace ktree
