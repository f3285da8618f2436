#include "ktree/construct.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ktree/error.hpp"

namespace ktree {

namespace {

long ceil_div(long a, long b) { return (a + b - 1) / b; }

void require_coprime(long d, long e, const char* op) {
  if (d < 0 || e < 0 || std::gcd(d, e) != 1) throw InvalidInput(std::string(op) + ": (d,e) must be coprime");
}

std::string fresh_id(const Quiver& q, char prefix, bool vertex) {
  for (std::size_t k = 1;; ++k) {
    std::string id = padded_id(std::string(1, prefix), k);
    if (vertex ? !q.has_vertex(id) : !q.has_arrow(id)) return id;
  }
}

// All compositions of `total` into `parts` nonnegative parts, lexicographic.
template <class F>
bool for_each_composition(long total, long parts, Tuple& cur, F&& f) {
  if (parts == 1) {
    cur.push_back(total);
    bool stop = f(cur);
    cur.pop_back();
    return stop;
  }
  for (long a = 0; a <= total; ++a) {
    cur.push_back(a);
    bool stop = for_each_composition(total - a, parts - 1, cur, f);
    cur.pop_back();
    if (stop) return true;
  }
  return false;
}

}  // namespace

long SimpleTuple::d() const {
  long d = t();
  for (auto x : s) d += x;
  return d;
}

long SimpleTuple::e() const { return (n - 1) * d() + t() + 1; }

long default_n(long d, long e, long m) {
  if (d <= 0) throw InvalidInput("default_n: d must be positive");
  return std::clamp(ceil_div(e, d), 2L, std::max(2L, m - 1));
}

std::pair<long, long> starting_vector(long d, long e) {
  require_coprime(d, e, "starting_vector");
  if (d == 0) throw InvalidInput("starting_vector: d must be positive");
  if (d == 1) return {0, 1};
  long ds = 1;
  while ((1 + e * ds) % d != 0) ++ds;
  return {ds, (1 + ds * e) / d};
}

Decomposition decompose(long d, long e) {
  require_coprime(d, e, "decompose");
  if (d <= 0 || e <= 0) throw InvalidInput("decompose: d and e must be positive");
  long ep = 1;
  while ((1 + d * ep) % e != 0) ++ep;
  long dp = (1 + ep * d) / e;
  auto [ds, es] = starting_vector(dp, ep);
  if ((d - ds) % dp != 0) throw PropertyViolation("decompose: non-integral multiplicity");
  long k = (d - ds) / dp;
  if (ds + k * dp != d || es + k * ep != e) throw PropertyViolation("decompose: inconsistent decomposition");
  return {ds, es, k, dp, ep};
}

std::vector<long> n_list(long d, long e) {
  std::vector<long> out;
  while (true) {
    Decomposition dc = decompose(d, e);
    out.push_back(dc.k);
    if (dc.dp == 1) return out;
    d = dc.dp;
    e = dc.ep;
  }
}

Word eta(long n, long l, const Word& w) {
  Word out;
  for (long x : w) {
    if (x == l - 1) {
      out.push_back(l - 1);
      out.insert(out.end(), n - 1, l);
    } else if (x == l) {
      out.push_back(l - 1);
      out.insert(out.end(), n, l);
    } else {
      throw InvalidInput("eta: letter " + std::to_string(x) + " outside {l-1, l}");
    }
  }
  return out;
}

Word theta(long n, long l, const Word& w) {
  Word out;
  for (long x : w) {
    if (x == l - 1) {
      out.insert(out.end(), n + 1, l - 1);
    } else if (x == l) {
      out.insert(out.end(), n, l - 1);
    } else {
      throw InvalidInput("theta: letter " + std::to_string(x) + " outside {l-1, l}");
    }
    out.push_back(l);
  }
  return out;
}

std::pair<QuiverFunctionChain, Word> quiver_function_chain(long d, long e, long n) {
  require_coprime(d, e, "quiver_function_chain");
  long k1 = n * d - e, k2 = e - (n - 1) * d;
  if (k1 < 0 || k2 < 0) throw InvalidInput("quiver_function_chain: need (n-1)d <= e <= nd");
  QuiverFunctionChain chain;
  if (k1 == 0) {
    chain.shortcut = true;
    return {chain, Word{0}};
  }
  if (k2 == 0) {
    chain.shortcut = true;
    return {chain, Word{1}};
  }
  const long l = ceil_div(k1, k2);
  chain.type = l;
  chain.ls.push_back(l);
  if (k2 == 1) {
    chain.shortcut = true;
    return {chain, Word{k1}};
  }
  if (k1 == 1) {
    chain.shortcut = true;
    Word w(k2 - 1, 0);
    w.push_back(1);
    return {chain, w};
  }
  // Level 2 counts: letters l-1 and l in ŝ.
  long a = l * k2 - k1, b = k1 - (l - 1) * k2;
  while (true) {
    if (b == 1) {
      chain.steps.push_back({'T', a});
      break;
    }
    long lj = ceil_div(b, a);
    chain.ls.push_back(lj);
    chain.steps.push_back({'E', lj});
    if (a == 1) break;
    long y = b - (lj - 1) * a, x = a - y;
    a = x;
    b = y;
  }
  Word w{l};
  for (auto it = chain.steps.rbegin(); it != chain.steps.rend(); ++it)
    w = it->kind == 'T' ? theta(it->index, l, w) : eta(it->index, l, w);
  return {chain, w};
}

SimpleTuple simple_tuple(long d, long e, long n) {
  require_coprime(d, e, "simple_tuple");
  if (d <= 0) throw InvalidInput("simple_tuple: d must be positive");
  if (n < 1) throw InvalidInput("simple_tuple: n out of range");
  const long T = e - (n - 1) * d;
  if (T < 1 || T > d + 1) throw InvalidInput("simple_tuple: n out of range for (d,e)");
  // Partial sums forced by the prefix inequalities: P_l = ⌊dl/T⌋ - l + 1.
  SimpleTuple st{n, {}};
  long prev = 0;
  for (long l = 1; l <= T; ++l) {
    long p = (d * l) / T - l + 1;
    st.s.push_back(p - prev);
    prev = p;
  }
  return st;
}

Word hat(const Tuple& s) {
  if (s.empty() || s.front() < 1) throw InvalidInput("hat: first entry must be positive");
  Word w = s;
  --w.front();
  return w;
}

Word s_recursion(const std::vector<long>& ns) {
  if (ns.empty()) throw InvalidInput("s_recursion: empty list");
  for (long x : ns)
    if (x < 0) throw InvalidInput("s_recursion: negative entry");
  if (ns.size() == 1) return Word(ns[0] + 1, 1);
  std::vector<long> prefix(ns.begin(), ns.end() - 1);
  const long last = ns.back();
  std::vector<long> dec = prefix;
  if (dec.back() == 0) throw InvalidInput("s_recursion: level would become negative");
  --dec.back();
  if (last == 0) return s_recursion(dec);
  Word out = s_recursion(dec);
  Word h = hat(s_recursion(prefix));
  for (long k = 0; k < last; ++k) out.insert(out.end(), h.begin(), h.end());
  return out;
}

Quiver stars_chain(const std::vector<long>& arities) {
  std::size_t sources = arities.size(), sinks = 0, arrows_n = 0;
  for (std::size_t k = 0; k < arities.size(); ++k) {
    if (arities[k] < 1) throw InvalidInput("stars_chain: arity must be positive");
    sinks += arities[k] - (k > 0 ? 1 : 0);
    arrows_n += arities[k];
  }
  const std::size_t w = std::max<std::size_t>(3, std::to_string(std::max({sources, sinks, arrows_n})).size());
  std::vector<std::string> vertices;
  Bipartition b;
  std::vector<Arrow> arrows;
  std::size_t next_sink = 0;
  std::string last;
  for (std::size_t k = 0; k < arities.size(); ++k) {
    std::string i = padded_id("i", k + 1, w);
    b.sources.push_back(i);
    std::vector<std::string> targets;
    if (k > 0) targets.push_back(last);
    while (static_cast<long>(targets.size()) < arities[k]) {
      std::string j = padded_id("j", ++next_sink, w);
      b.sinks.push_back(j);
      targets.push_back(j);
    }
    for (const auto& j : targets) arrows.push_back({padded_id("a", arrows.size() + 1, w), i, j, std::nullopt});
    last = targets.back();
  }
  vertices = b.sources;
  vertices.insert(vertices.end(), b.sinks.begin(), b.sinks.end());
  return Quiver(std::move(vertices), std::move(arrows), std::move(b));
}

QuiverWithDims realize_simple(const SimpleTuple& st) {
  if (st.s.empty()) throw InvalidInput("realize_simple: empty tuple");
  std::vector<long> arities;
  for (std::size_t k = 0; k < st.s.size(); ++k) {
    if (st.s[k] < 0) throw InvalidInput("realize_simple: negative entry");
    if (k > 0) arities.push_back(st.n + 1);
    arities.insert(arities.end(), st.s[k], st.n);
  }
  if (arities.empty()) throw InvalidInput("realize_simple: tuple describes the empty quiver");
  Quiver q = stars_chain(arities);
  return {q, constant_dims(q, 1)};
}

QuiverWithDims realize_star(long k) {
  Quiver q = stars_chain({k});
  return {q, constant_dims(q, 1)};
}

std::vector<Modification> modify(const QuiverWithDims& t, long m) {
  std::vector<Modification> out;
  Bipartition b = t.quiver.require_bipartite();
  NeighborSets ns = neighbor_sets(t.quiver, t.dims);
  for (const auto& i : b.sources) {
    if (ns.R(i) >= m) continue;
    std::string j = fresh_id(t.quiver, 'j', true), a = fresh_id(t.quiver, 'a', false);
    std::vector<std::string> vertices = t.quiver.vertices();
    vertices.push_back(j);
    std::vector<Arrow> arrows = t.quiver.arrows();
    arrows.push_back({a, i, j, std::nullopt});
    Bipartition nb = b;
    nb.sinks.push_back(j);
    DimVector dims = t.dims;
    dims.set(j, 1);
    out.push_back({{Quiver(std::move(vertices), std::move(arrows), std::move(nb)), std::move(dims)}, j});
  }
  for (const auto& j : b.sinks) {
    long R = ns.R(j), sum = 0;
    for (const auto& i : ns.A[j]) sum += t.dims[i];
    if ((1 < R && R < m) || t.dims[j] < sum) {
      DimVector dims = t.dims;
      dims.set(j, t.dims[j] + 1);
      out.push_back({{t.quiver, std::move(dims)}, j});
    }
  }
  return out;
}

QuiverWithDims realize_chain(const Tuple& s, long n, long m) {
  if (s.size() < 2) throw InvalidInput("realize_chain: need at least two entries");
  if (n + 1 > m) throw InvalidInput("realize_chain: need m > n");
  const long t = static_cast<long>(s.size()) - 1;
  std::vector<long> arities(s[0], n);
  arities.insert(arities.end(), t - 1, n + 1);
  arities.insert(arities.end(), s[t], n);
  if (arities.empty()) throw InvalidInput("realize_chain: empty quiver");
  Quiver spine = stars_chain(arities);
  std::vector<std::string> vertices = spine.vertices();
  std::vector<Arrow> arrows = spine.arrows();
  Bipartition b = *spine.bipartition();

  for (long k = 2; k <= t; ++k) {
    if (s[k - 1] == 0) continue;
    // q_{k-1}: the (k-1)-th star of arity n+1 on the spine.
    const std::string q = b.sources[s[0] + k - 2];
    std::map<std::string, int> deg;
    for (const auto& a : arrows) ++deg[a.target];
    std::string pendant;
    for (const auto& a : arrows)
      if (a.source == q && deg[a.target] == 1) {
        pendant = a.target;
        break;
      }
    if (pendant.empty()) throw PropertyViolation("realize_chain: no pendant sink to attach to");
    Quiver branch = stars_chain(std::vector<long>(s[k - 1], n));
    std::string prefix = "c" + std::to_string(k) + "_";
    const std::string first_sink = branch.arrows().front().target;
    auto rename = [&](const std::string& v) { return v == first_sink ? pendant : prefix + v; };
    for (const auto& v : branch.bipartition()->sources) {
      vertices.push_back(rename(v));
      b.sources.push_back(rename(v));
    }
    for (const auto& v : branch.bipartition()->sinks) {
      if (v == first_sink) continue;
      vertices.push_back(rename(v));
      b.sinks.push_back(rename(v));
    }
    for (const auto& a : branch.arrows()) arrows.push_back({prefix + a.id, rename(a.source), rename(a.target), std::nullopt});
  }
  Quiver q(std::move(vertices), std::move(arrows), std::move(b));
  return {q, constant_dims(q, 1)};
}

ChainQuiver general_stable_quiver(long d, long e, long m) {
  if (d < 1 || e <= d) throw InvalidInput("general_stable_quiver: need 1 <= d < e");
  if (e % d == 0) throw PropertyViolation("general_stable_quiver: e is a multiple of d, no stable chain quiver");
  const long n = std::min(ceil_div(e, d), m - 1);
  const long t = e - (n - 1) * d, total = d - t + 1;
  if (t < 1 || total < 0) throw InvalidInput("general_stable_quiver: (d,e) outside the fundamental range");
  ChainQuiver found{{}, n, {}};
  Tuple cur;
  bool ok = for_each_composition(total, t + 1, cur, [&](const Tuple& s) {
    if (!chain_stable(s, t)) return false;
    QuiverWithDims q = realize_chain(s, n, m);
    if (!is_stable_generic(q.quiver, q.dims).stable) return false;
    found.s = s;
    found.quiver = std::move(q);
    return true;
  });
  if (!ok) throw PropertyViolation("general_stable_quiver: no stable chain tuple for (" + std::to_string(d) + "," +
                                   std::to_string(e) + ")");
  return found;
}

}  // namespace ktree
