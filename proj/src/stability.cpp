#include "ktree/stability.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

#include "ktree/error.hpp"

namespace ktree {

Slope slope(const DimVector& dims, const std::vector<std::string>& sources) {
  long total = dims.total();
  if (total == 0) throw InvalidInput("slope of zero dimension vector");
  long theta = 0;
  for (const auto& v : sources) theta += dims[v];
  long g = std::gcd(theta, total);
  return {theta / g, total / g};
}

ImageDims generic_image_dim(const Quiver& q, const DimVector& dims, const std::vector<std::string>& subset) {
  Bipartition b = q.require_bipartite();
  std::set<std::string> chosen(subset.begin(), subset.end());
  for (const auto& v : chosen)
    if (!q.is_source(v)) throw InvalidInput("generic_image_dim: " + v + " is not a source");
  for (const auto& a : q.arrows())
    if (dims[a.source] > dims[a.target] && dims[a.target] > 0)
      throw InvalidInput("generic_image_dim: dim " + a.source + " exceeds dim " + a.target);
  ImageDims out;
  NeighborSets ns = neighbor_sets(q, dims);
  for (const auto& j : b.sinks) {
    long sum = 0;
    for (const auto& i : ns.A[j])
      if (chosen.count(i)) sum += dims[i];
    long img = std::min(dims[j], sum);
    out.per_sink[j] = img;
    out.total += img;
  }
  return out;
}

StabilityResult is_stable_generic(const Quiver& q, const DimVector& dims) {
  Bipartition b = q.require_bipartite();
  std::vector<std::string> I;
  for (const auto& i : b.sources)
    if (dims[i] > 0) I.push_back(i);
  std::sort(I.begin(), I.end());
  if (I.size() > 30) throw InvalidInput("is_stable_generic: too many sources for exhaustive scan");
  for (const auto& a : q.arrows())
    if (dims[a.source] > dims[a.target] && dims[a.target] > 0)
      throw InvalidInput("is_stable_generic: dim " + a.source + " exceeds dim " + a.target);

  std::map<std::string, std::size_t> sink_index;
  std::vector<long> sink_dim;
  for (const auto& j : b.sinks) {
    sink_index.emplace(j, sink_dim.size());
    sink_dim.push_back(dims[j]);
  }
  std::vector<long> src_dim;
  std::vector<std::vector<std::size_t>> adj(I.size());
  for (std::size_t k = 0; k < I.size(); ++k) {
    src_dim.push_back(dims[I[k]]);
    std::set<std::size_t> targets;
    for (auto ai : q.out_arrows(I[k])) {
      const auto& t = q.arrows()[ai].target;
      if (dims[t] > 0) targets.insert(sink_index.at(t));
    }
    adj[k].assign(targets.begin(), targets.end());
  }
  long d = 0, e = 0;
  for (auto x : src_dim) d += x;
  for (auto x : sink_dim) e += x;

  StabilityResult res;
  if (I.empty()) return res;
  const std::uint64_t full = (std::uint64_t{1} << I.size()) - 1;
  std::vector<long> acc(sink_dim.size());
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    std::fill(acc.begin(), acc.end(), 0);
    long dp = 0;
    for (std::size_t k = 0; k < I.size(); ++k) {
      if (!(mask >> k & 1)) continue;
      dp += src_dim[k];
      for (auto j : adj[k]) acc[j] += src_dim[k];
    }
    long du = 0;
    for (std::size_t j = 0; j < acc.size(); ++j) du += std::min(acc[j], sink_dim[j]);
    if (mask == full && du == e) continue;  // the whole representation
    // Unstable iff dp/(dp+du) >= d/(d+e), i.e. dp*e >= d*du.
    if (dp * e >= d * du) {
      res.stable = false;
      for (std::size_t k = 0; k < I.size(); ++k)
        if (mask >> k & 1) res.witness.push_back(I[k]);
      res.witness_d = dp;
      res.witness_e = du;
      return res;
    }
  }
  return res;
}

namespace {
long ceil_div(long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }
}  // namespace

bool glueing_condition(long d, long e, long ds, long es) {
  if (d <= 0 || e <= 0 || ds < 0 || es < 0) throw InvalidInput("glueing_condition: need d,e > 0 and d_s,e_s >= 0");
  const long D = d + ds, E = e + es;
  // With d_s = 0 (only possible for d = 1) the first bullet holds with equality.
  if (ds == 0 ? (E * d) > (e + 1) * D : !((E * d) < (e + 1) * D)) return false;
  if (!((E * d) > e * D)) return false;
  if (d != 1) {
    if (!((es - 1) * d <= e * ds)) return false;
  } else if ((es - 1) * d != e * ds) {
    return false;
  }
  for (long dp = 1; dp < d; ++dp)
    if (!(E * dp < ceil_div(e * dp, d) * D)) return false;
  return std::gcd(D, E) == 1;
}

long f_map(long d1, const GlueContext& c) {
  const long D = c.k * c.d + c.ds;
  if (d1 <= 0 || d1 > D) throw InvalidInput("f_map: d1 out of range");
  const long base = (c.k * c.e + c.es) * d1;
  long r = base % D;
  return r == 0 ? 0 : D - r;
}

std::optional<TupleWindow> simple_stable_witness(const Tuple& s) {
  const long T = static_cast<long>(s.size());
  long d = T - 1;
  for (auto x : s) d += x;
  std::vector<long> pre(T + 1, 0);
  for (long i = 0; i < T; ++i) pre[i + 1] = pre[i] + s[i];
  for (long k = 1; k <= T; ++k)
    for (long l = k; l <= T; ++l) {
      if (k == 1 && l == T) continue;
      long w = pre[l] - pre[k - 1] + (l - k);
      if (!(d * (l - k + 1) > T * w)) return TupleWindow{k, l};
    }
  return std::nullopt;
}

bool simple_stable(const Tuple& s) {
  if (s.empty()) throw InvalidInput("simple_stable: empty tuple");
  return !simple_stable_witness(s).has_value();
}

bool simple_stable_symmetric(const Tuple& s) {
  if (s.empty()) throw InvalidInput("simple_stable_symmetric: empty tuple");
  if (!std::equal(s.begin(), s.end(), s.rbegin())) throw InvalidInput("simple_stable_symmetric: tuple is not palindromic");
  const long T = static_cast<long>(s.size());
  long d = T - 1;
  for (auto x : s) d += x;
  long pre = 0;
  for (long l = 1; l < T; ++l) {
    pre += s[l - 1];
    if (!(d * l > (pre + l - 1) * T)) return false;
  }
  return true;
}

bool chain_stable(const Tuple& s, long t) {
  if (static_cast<long>(s.size()) != t + 1) throw InvalidInput("chain_stable: tuple must have t+1 entries");
  long total = 0;
  for (auto x : s) total += x;
  long pre = 0;
  for (long l = 1; l <= t; ++l) {
    pre += s[l - 1];
    long mid = t * pre + l;
    if (!(total * l + t > mid)) return false;
    if (!(mid > total * (l - 1) + 1)) return false;
  }
  return true;
}

}  // namespace ktree
