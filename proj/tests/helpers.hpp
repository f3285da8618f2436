#pragma once
// Independent oracles for the tests. Nothing here calls into the library's
// linear algebra or stability code, so agreement is a real cross-check.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "ktree/quiver.hpp"

namespace testing_oracle {

using Q = mpq_class;
using Dense = std::vector<std::vector<Q>>;

// Plain Gauss elimination on a copy.
inline std::size_t dense_rank(Dense a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Q f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

// dim Hom(X,Y) from the full dense system φ_t X_a - Y_a φ_s = 0.
inline std::size_t dense_hom_dim(const ktree::Representation& x, const ktree::Representation& y) {
  std::map<std::string, std::size_t> offset;
  std::size_t n = 0;
  for (const auto& v : x.quiver.vertices()) {
    offset[v] = n;
    n += static_cast<std::size_t>(y.dims[v] * x.dims[v]);
  }
  Dense rows;
  for (const auto& a : x.quiver.arrows()) {
    const auto& xa = x.matrix(a.id);
    const auto& ya = y.matrix(a.id);
    const long xs = x.dims[a.source], xt = x.dims[a.target];
    const long ys = y.dims[a.source], yt = y.dims[a.target];
    // entry (r, c) of a yt x xs matrix
    for (long r = 0; r < yt; ++r)
      for (long c = 0; c < xs; ++c) {
        std::vector<Q> row(n);
        // (φ_t X_a)(r,c) = Σ_k φ_t(r,k) X_a(k,c), φ_t is yt x xt
        for (long k = 0; k < xt; ++k) row[offset[a.target] + r * xt + k] += xa(k, c);
        // (Y_a φ_s)(r,c) = Σ_k Y_a(r,k) φ_s(k,c), φ_s is ys x xs
        for (long k = 0; k < ys; ++k) row[offset[a.source] + k * xs + c] -= ya(r, k);
        rows.push_back(std::move(row));
      }
  }
  if (n == 0) return 0;
  return n - dense_rank(rows);
}

// Stability inequalities of a simple tuple, straight from the definition:
// d(l-k+1) > (t+1)(s_k+...+s_l + l-k) over every window but the full one.
inline bool tuple_stable(const std::vector<long>& s) {
  const long T = static_cast<long>(s.size());
  const long d = std::accumulate(s.begin(), s.end(), 0L) + T - 1;
  for (long k = 1; k <= T; ++k)
    for (long l = k; l <= T; ++l) {
      if (k == 1 && l == T) continue;
      long w = l - k;
      for (long i = k; i <= l; ++i) w += s[i - 1];
      if (!(d * (l - k + 1) > T * w)) return false;
    }
  return true;
}

inline void compositions(long sum, long parts, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
  if (parts == 1) {
    cur.push_back(sum);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (long a = 0; a <= sum; ++a) {
    cur.push_back(a);
    compositions(sum - a, parts - 1, cur, out);
    cur.pop_back();
  }
}

// All stable tuples of type (d,e) with parameter n.
inline std::vector<std::vector<long>> brute_tuples(long d, long e, long n) {
  const long T = e - (n - 1) * d;
  const long S = d - T + 1;
  std::vector<std::vector<long>> all, out;
  if (T < 1 || S < 0) return out;
  std::vector<long> cur;
  compositions(S, T, cur, all);
  for (auto& c : all)
    if (tuple_stable(c)) out.push_back(c);
  return out;
}

// Sinks adjacent to a set of sources (all dims 1).
inline long thin_image(const ktree::Quiver& q, const std::vector<std::string>& subset) {
  std::vector<std::string> hit;
  for (const auto& a : q.arrows())
    for (const auto& s : subset)
      if (a.source == s) hit.push_back(a.target);
  std::sort(hit.begin(), hit.end());
  hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
  return static_cast<long>(hit.size());
}

inline long ceil_div(long a, long b) { return (a + b - 1) / b; }

}  // namespace testing_oracle
