#include "ktree/colouring.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "ktree/error.hpp"

namespace ktree {

namespace {

bool backtrack(const Quiver& q, const std::vector<std::size_t>& order, std::size_t pos, int m,
               std::map<std::string, std::set<int>>& used, Colouring& out) {
  if (pos == order.size()) return true;
  const Arrow& a = q.arrows()[order[pos]];
  for (int c = 1; c <= m; ++c) {
    if (used[a.source].count(c) || used[a.target].count(c)) continue;
    used[a.source].insert(c);
    used[a.target].insert(c);
    out[a.id] = c;
    if (backtrack(q, order, pos + 1, m, used, out)) return true;
    used[a.source].erase(c);
    used[a.target].erase(c);
    out.erase(a.id);
  }
  return false;
}

}  // namespace

Colouring stable_colouring(const Quiver& q, int m) {
  q.require_bipartite();
  for (const auto& v : q.vertices())
    if (static_cast<long>(q.degree(v)) > m)
      throw InvalidInput("stable_colouring: vertex " + v + " has " + std::to_string(q.degree(v)) + " arrows, more than m");
  std::vector<std::size_t> order(q.arrows().size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const Arrow &a = q.arrows()[x], &b = q.arrows()[y];
    return std::tie(a.source, a.target, a.id) < std::tie(b.source, b.target, b.id);
  });
  std::map<std::string, std::set<int>> used;
  Colouring out;
  if (!backtrack(q, order, 0, m, used, out)) throw PropertyViolation("stable_colouring: no colouring found");
  return out;
}

bool is_stable_colouring(const Quiver& q, const Colouring& c, int m) {
  std::map<std::string, std::set<int>> used;
  for (const auto& a : q.arrows()) {
    auto it = c.find(a.id);
    if (it == c.end() || it->second < 1 || it->second > m) return false;
    if (!used[a.source].insert(it->second).second) return false;
    if (!used[a.target].insert(it->second).second) return false;
  }
  return true;
}

Quiver kronecker_quiver(int m) {
  if (m < 1) throw InvalidInput("kronecker_quiver: m must be positive");
  std::vector<Arrow> arrows;
  for (int k = 1; k <= m; ++k) arrows.push_back({"a" + std::to_string(k), "1", "2", k});
  return Quiver({"1", "2"}, std::move(arrows), Bipartition{{"1"}, {"2"}});
}

Representation push_down(const Representation& x, int m) {
  x.validate();
  Bipartition b = x.quiver.require_bipartite();
  std::map<std::string, std::size_t> offset;
  std::size_t d = 0, e = 0;
  Representation k{kronecker_quiver(m), {}, {}, {}};
  for (const auto& v : b.sources) {
    offset[v] = d;
    for (long r = 0; r < x.dims[v]; ++r) k.basis["1"].push_back(v + "/" + x.basis.at(v)[r]);
    d += x.dims[v];
  }
  for (const auto& v : b.sinks) {
    offset[v] = e;
    for (long r = 0; r < x.dims[v]; ++r) k.basis["2"].push_back(v + "/" + x.basis.at(v)[r]);
    e += x.dims[v];
  }
  k.dims.set("1", static_cast<long>(d));
  k.dims.set("2", static_cast<long>(e));
  for (int c = 1; c <= m; ++c) k.matrices.emplace("a" + std::to_string(c), Matrix(e, d));
  for (const auto& a : x.quiver.arrows()) {
    if (!a.colour || *a.colour < 1 || *a.colour > m) throw InvalidInput("push_down: arrow " + a.id + " lacks a colour in 1..m");
    Matrix& big = k.matrices.at("a" + std::to_string(*a.colour));
    const Matrix& small = x.matrix(a.id);
    for (std::size_t r = 0; r < small.rows(); ++r)
      for (std::size_t c = 0; c < small.cols(); ++c)
        if (small(r, c) != 0) {
          Rational& slot = big(offset[a.target] + r, offset[a.source] + c);
          slot += small(r, c);
        }
  }
  k.validate();
  return k;
}

Representation generic_representation(const Quiver& q, const DimVector& dims) {
  q.require_bipartite();
  std::map<std::string, Matrix> mats;
  std::map<std::string, long> next_point;
  for (const auto& a : q.arrows()) {
    long rows = dims[a.target], cols = dims[a.source];
    if (cols > rows && rows > 0) throw InvalidInput("generic_representation: dim " + a.source + " exceeds dim " + a.target);
    Matrix m(rows, cols);
    if (rows == 1 && cols == 1) {
      m(0, 0) = 1;
    } else if (rows > 0) {
      for (long c = 0; c < cols; ++c) {
        long x = ++next_point[a.target];
        Rational p = 1;
        for (long r = 0; r < rows; ++r) {
          m(r, c) = p;
          p *= x;
        }
      }
    }
    mats.emplace(a.id, std::move(m));
  }
  return make_representation(q, dims, std::move(mats));
}

Representation realize_kronecker(const Quiver& q, const DimVector& dims, const Colouring& c, int m) {
  if (q.vertices().empty()) throw InvalidInput("realize_kronecker: empty quiver");
  if (!is_stable_colouring(q, c, m)) throw InvalidInput("realize_kronecker: colouring is not stable");
  return push_down(generic_representation(q.with_colours(c), dims), m);
}

WeightReport cover_weights(const Quiver& q, const Colouring& c, const std::string& root, int m) {
  if (!q.has_vertex(root)) throw InvalidInput("cover_weights: unknown root " + root);
  Bipartition b = q.require_bipartite();
  WeightReport rep;
  std::set<std::string> sources(b.sources.begin(), b.sources.end());
  auto colour_of = [&](const Arrow& a) {
    auto it = c.find(a.id);
    if (it == c.end() || it->second < 1 || it->second > m) throw InvalidInput("cover_weights: arrow " + a.id + " lacks a colour");
    return it->second;
  };
  rep.weight[root] = Weight(m, 0);
  std::deque<std::string> queue{root};
  while (!queue.empty()) {
    std::string v = queue.front();
    queue.pop_front();
    auto visit = [&](const Arrow& a, bool forward) {
      const std::string& w = forward ? a.target : a.source;
      Weight chi = rep.weight[v];
      chi[colour_of(a) - 1] += forward ? 1 : -1;
      auto it = rep.weight.find(w);
      if (it == rep.weight.end()) {
        rep.weight[w] = chi;
        queue.push_back(w);
      } else if (it->second != chi) {
        throw PropertyViolation("cover_weights: inconsistent weight at " + w);
      }
    };
    for (auto ai : q.out_arrows(v)) visit(q.arrows()[ai], true);
    for (auto ai : q.in_arrows(v)) visit(q.arrows()[ai], false);
  }
  std::map<std::pair<int, Weight>, std::string> seen;
  std::set<std::tuple<std::string, std::string, int>> arrows;
  for (const auto& a : q.arrows()) arrows.insert({a.source, a.target, colour_of(a)});
  std::map<Weight, std::vector<std::string>> sinks_at;
  for (const auto& [v, chi] : rep.weight) {
    int side = sources.count(v) ? 1 : 2;
    rep.side[v] = side;
    auto [it, fresh] = seen.emplace(std::make_pair(side, chi), v);
    if (!fresh) rep.collisions.emplace_back(it->second, v);
    if (side == 2) sinks_at[chi].push_back(v);
  }
  for (const auto& [v, chi] : rep.weight) {
    if (rep.side[v] != 1) continue;
    for (int k = 1; k <= m; ++k) {
      Weight w = chi;
      ++w[k - 1];
      auto it = sinks_at.find(w);
      if (it == sinks_at.end()) continue;
      for (const auto& j : it->second)
        if (!arrows.count({v, j, k})) rep.induced.push_back({v, j, k});
    }
  }
  return rep;
}

}  // namespace ktree
