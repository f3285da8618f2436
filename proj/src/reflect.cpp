#include "ktree/reflect.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ktree/colouring.hpp"
#include "ktree/construct.hpp"
#include "ktree/error.hpp"
#include "ktree/linalg.hpp"
#include "ktree/oracle.hpp"
#include "ktree/stability.hpp"

namespace ktree {

namespace {

// Stacked rows of the blocks (each n_k x a).
Matrix stack_rows(const std::vector<const Matrix*>& blocks, std::size_t a) {
  std::size_t rows = 0;
  for (auto* b : blocks) rows += b->rows();
  Matrix h(rows, a);
  std::size_t off = 0;
  for (auto* b : blocks) {
    for (std::size_t r = 0; r < b->rows(); ++r)
      for (std::size_t c = 0; c < a; ++c) h(off + r, c) = (*b)(r, c);
    off += b->rows();
  }
  return h;
}

SparseRow row_of(const Matrix& h, std::size_t r) {
  SparseRow row;
  for (std::size_t c = 0; c < h.cols(); ++c)
    if (h(r, c) != 0) row.emplace_back(c, h(r, c));
  return row;
}

// Lexicographically first set of rows forming a basis of the row space.
std::vector<std::size_t> greedy_rows(const Matrix& h) {
  Echelon ech(h.cols());
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < h.rows() && rows.size() < h.cols(); ++r)
    if (ech.add(row_of(h, r))) rows.push_back(r);
  return rows;
}

bool rows_independent(const Matrix& h, const std::vector<std::size_t>& rows) {
  Echelon ech(h.cols());
  for (auto r : rows)
    if (!ech.add(row_of(h, r))) return false;
  return true;
}

// Cokernel of h (R x a, injective) with basis the non-pivot coordinate rows.
// Returns the projection π (c x R) with π h = 0.
Matrix cokernel_projection(const Matrix& h, const std::vector<std::size_t>& pivots) {
  const std::size_t R = h.rows(), a = h.cols(), c = R - a;
  std::vector<bool> is_pivot(R, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> rest;
  for (std::size_t r = 0; r < R; ++r)
    if (!is_pivot[r]) rest.push_back(r);
  Matrix hp(a, a), hn(c, a);
  for (std::size_t s = 0; s < a; ++s)
    for (std::size_t k = 0; k < a; ++k) hp(s, k) = h(pivots[s], k);
  for (std::size_t s = 0; s < c; ++s)
    for (std::size_t k = 0; k < a; ++k) hn(s, k) = h(rest[s], k);
  Matrix mm = a == 0 ? Matrix(c, 0) : hn * inverse(hp);
  Matrix pi(c, R);
  for (std::size_t s = 0; s < c; ++s) pi(s, rest[s]) = 1;
  for (std::size_t s = 0; s < a; ++s)
    for (std::size_t r = 0; r < c; ++r) pi(r, pivots[s]) = -mm(r, s);
  return pi;
}

// Split columns of pi into the per-block new maps (c x n_k).
std::vector<Matrix> split_columns(const Matrix& pi, const std::vector<const Matrix*>& blocks) {
  std::vector<Matrix> out;
  std::size_t off = 0;
  for (auto* b : blocks) {
    Matrix m(pi.rows(), b->rows());
    for (std::size_t r = 0; r < pi.rows(); ++r)
      for (std::size_t c = 0; c < b->rows(); ++c) m(r, c) = pi(r, off + c);
    out.push_back(std::move(m));
    off += b->rows();
  }
  return out;
}

std::vector<std::string> default_labels(long n) {
  std::vector<std::string> v;
  for (long k = 1; k <= n; ++k) v.push_back("b" + std::to_string(k));
  return v;
}

// Recompute a bipartition from arrow directions, keeping isolated vertices
// on their old side; nullopt if some vertex has arrows in both directions.
std::optional<Bipartition> infer_bipartition(const std::vector<std::string>& vertices, const std::vector<Arrow>& arrows,
                                             const std::optional<Bipartition>& old) {
  std::set<std::string> has_in, has_out;
  for (const auto& a : arrows) {
    has_out.insert(a.source);
    has_in.insert(a.target);
  }
  std::set<std::string> old_sources;
  if (old) old_sources.insert(old->sources.begin(), old->sources.end());
  Bipartition b;
  for (const auto& v : vertices) {
    bool in = has_in.count(v), out = has_out.count(v);
    if (in && out) return std::nullopt;
    bool source = out || (!in && old_sources.count(v));
    (source ? b.sources : b.sinks).push_back(v);
  }
  return b;
}

struct Builder {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  DimVector dims;
  std::map<std::string, Matrix> mats;
  std::map<std::string, std::vector<std::string>> basis;

  explicit Builder(const Representation& x)
      : vertices(x.quiver.vertices()), arrows(x.quiver.arrows()), dims(x.dims), mats(x.matrices), basis(x.basis) {}

  // Drop zero-dimensional vertices and their arrows unless told otherwise.
  Representation finish(std::optional<Bipartition> bip, bool prune = true) {
    std::vector<std::string> keep_v;
    for (const auto& v : vertices)
      if (!prune || dims[v] > 0) keep_v.push_back(v);
    std::set<std::string> keep(keep_v.begin(), keep_v.end());
    std::vector<Arrow> keep_a;
    std::map<std::string, Matrix> keep_m;
    for (const auto& a : arrows)
      if (keep.count(a.source) && keep.count(a.target)) {
        keep_a.push_back(a);
        keep_m.emplace(a.id, mats.at(a.id));
      }
    DimVector nd;
    std::map<std::string, std::vector<std::string>> nb;
    for (const auto& v : keep_v) {
      nd.set(v, dims[v]);
      nb[v] = basis.at(v);
    }
    if (bip) {
      Bipartition f;
      for (const auto& v : bip->sources)
        if (keep.count(v)) f.sources.push_back(v);
      for (const auto& v : bip->sinks)
        if (keep.count(v)) f.sinks.push_back(v);
      bip = f;
    }
    Representation r{Quiver(std::move(keep_v), std::move(keep_a), std::move(bip)), std::move(nd), std::move(keep_m),
                     std::move(nb)};
    r.validate();
    return r;
  }
};

struct UnionFind {
  std::map<BasisToken, BasisToken> parent;
  BasisToken find(BasisToken x) {
    auto it = parent.find(x);
    if (it == parent.end()) return x;
    BasisToken r = find(it->second);
    parent[x] = r;
    return r;
  }
  bool unite(const BasisToken& a, const BasisToken& b) {
    BasisToken ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
    return true;
  }
};

// Advance to the next a-subset of [0, n) in lexicographic order.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t a = c.size();
  for (std::size_t i = a; i-- > 0;) {
    if (c[i] < n - a + i) {
      ++c[i];
      for (std::size_t k = i + 1; k < a; ++k) c[k] = c[k - 1] + 1;
      return true;
    }
  }
  return false;
}

constexpr std::size_t kMaxPivotTrials = 20000;

}  // namespace

std::vector<std::vector<long>> cartan_matrix(const Quiver& q) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t k = 0; k < q.vertices().size(); ++k) idx[q.vertices()[k]] = k;
  std::vector<std::vector<long>> a(q.vertices().size(), std::vector<long>(q.vertices().size(), 0));
  for (std::size_t k = 0; k < a.size(); ++k) a[k][k] = 2;
  for (const auto& ar : q.arrows()) {
    std::size_t s = idx[ar.source], t = idx[ar.target];
    if (s == t) throw InvalidInput("cartan_matrix: loops are not supported");
    --a[s][t];
    --a[t][s];
  }
  return a;
}

std::pair<long, long> kronecker_reflect_dim(long d, long e, long m) { return {e, m * e - d}; }

Representation reflect_source(const Representation& x, const std::string& q) {
  x.validate();
  if (!x.quiver.has_vertex(q)) throw InvalidInput("reflect_source: unknown vertex " + q);
  if (!x.quiver.in_arrows(q).empty()) throw InvalidInput("reflect_source: " + q + " is not a source");
  const auto& outs = x.quiver.out_arrows(q);
  std::vector<const Matrix*> blocks;
  for (auto ai : outs) blocks.push_back(&x.matrix(x.quiver.arrows()[ai].id));
  const std::size_t a = x.dims[q];
  Matrix h = stack_rows(blocks, a);
  std::vector<std::size_t> piv = greedy_rows(h);
  if (piv.size() < a) throw PropertyViolation("reflect_source: map at " + q + " is not injective (E_" + q + " summand)");
  Matrix pi = cokernel_projection(h, piv);
  std::vector<Matrix> maps = split_columns(pi, blocks);

  Builder b(x);
  b.dims.set(q, static_cast<long>(pi.rows()));
  b.basis[q] = default_labels(static_cast<long>(pi.rows()));
  for (std::size_t k = 0; k < outs.size(); ++k) {
    Arrow& ar = b.arrows[outs[k]];
    std::swap(ar.source, ar.target);
    b.mats[ar.id] = maps[k];
  }
  return b.finish(infer_bipartition(b.vertices, b.arrows, x.quiver.bipartition()));
}

Representation reflect_sink(const Representation& x, const std::string& q) {
  return dual(reflect_source(dual(x), q));
}

Representation reflect_all_sources(const Representation& x, int m, bool prune) {
  x.validate();
  Bipartition bip = x.quiver.require_bipartite();
  Builder b(x);
  std::set<std::string> used_ids(b.vertices.begin(), b.vertices.end());
  for (const auto& a : b.arrows) used_ids.insert(a.id);
  std::size_t pad_v = 0, pad_a = 0;
  auto fresh = [&](const char* prefix, std::size_t& counter) {
    std::string id;
    do id = padded_id(prefix, ++counter); while (used_ids.count(id));
    used_ids.insert(id);
    return id;
  };

  // Pad every nonzero sink to its full neighbourhood in the cover.
  std::vector<std::string> sources = bip.sources;
  for (const auto& j : bip.sinks) {
    if (x.dims[j] == 0) continue;
    std::set<int> colours;
    for (auto ai : x.quiver.in_arrows(j)) {
      const auto& c = x.quiver.arrows()[ai].colour;
      if (!c || *c < 1 || *c > m) throw InvalidInput("reflect_all_sources: arrow " + x.quiver.arrows()[ai].id + " lacks a colour in 1..m");
      if (!colours.insert(*c).second) throw InvalidInput("reflect_all_sources: colouring is not stable at " + j);
    }
    for (int c = 1; c <= m; ++c) {
      if (colours.count(c)) continue;
      std::string p = fresh("p", pad_v), a = fresh("e", pad_a);
      b.vertices.push_back(p);
      b.dims.set(p, 0);
      b.basis[p] = {};
      b.arrows.push_back({a, p, j, c});
      b.mats.emplace(a, Matrix(x.dims[j], 0));
      sources.push_back(p);
    }
  }
  Quiver padded(b.vertices, b.arrows, Bipartition{sources, bip.sinks});

  UnionFind uf;
  for (const auto& i : sources) {
    const auto& outs = padded.out_arrows(i);
    std::vector<const Matrix*> blocks;
    for (auto ai : outs) blocks.push_back(&b.mats.at(padded.arrows()[ai].id));
    const std::size_t a = b.dims[i];
    Matrix h = stack_rows(blocks, a);
    if (a > h.rows()) throw PropertyViolation("reflect_all_sources: map at " + i + " is not injective (E_" + i + " summand)");
    std::vector<std::size_t> greedy = greedy_rows(h);
    if (greedy.size() < a) throw PropertyViolation("reflect_all_sources: map at " + i + " is not injective (E_" + i + " summand)");

    // Tokens of the rows of h: (sink, basis index).
    std::vector<BasisToken> row_token;
    for (std::size_t k = 0; k < outs.size(); ++k)
      for (std::size_t r = 0; r < blocks[k]->rows(); ++r) row_token.push_back({padded.arrows()[outs[k]].target, r});

    std::vector<Matrix> maps;
    auto try_pivots = [&](const std::vector<std::size_t>& piv) {
      Matrix pi = cokernel_projection(h, piv);
      UnionFind attempt = uf;
      for (std::size_t r = 0; r < pi.rows(); ++r)
        for (std::size_t g = 0; g < pi.cols(); ++g)
          if (pi(r, g) != 0 && !attempt.unite(BasisToken{i, r}, row_token[g])) return false;
      uf = std::move(attempt);
      maps = split_columns(pi, blocks);
      return true;
    };
    bool placed = try_pivots(greedy);
    if (!placed && a > 0) {
      std::vector<std::size_t> piv(a);
      std::iota(piv.begin(), piv.end(), 0);
      std::size_t trials = 0;
      do {
        if (piv != greedy && rows_independent(h, piv) && try_pivots(piv)) {
          placed = true;
          break;
        }
      } while (++trials < kMaxPivotTrials && next_combination(piv, h.rows()));
    }
    if (!placed) maps = split_columns(cokernel_projection(h, greedy), blocks);

    const long c = static_cast<long>(h.rows() - a);
    b.dims.set(i, c);
    b.basis[i] = default_labels(c);
    for (std::size_t k = 0; k < outs.size(); ++k) {
      Arrow& ar = b.arrows[outs[k]];
      std::swap(ar.source, ar.target);
      b.mats[ar.id] = maps[k];
    }
  }
  return b.finish(Bipartition{bip.sinks, sources}, prune);
}

Representation reflect_all_sinks(const Representation& x) {
  x.validate();
  Bipartition bip = x.quiver.require_bipartite();
  Representation d = dual(x);
  Builder b(d);
  for (const auto& j : bip.sinks) {
    const auto& outs = d.quiver.out_arrows(j);
    std::vector<const Matrix*> blocks;
    for (auto ai : outs) blocks.push_back(&d.matrix(d.quiver.arrows()[ai].id));
    const std::size_t a = d.dims[j];
    Matrix h = stack_rows(blocks, a);
    std::vector<std::size_t> piv = greedy_rows(h);
    if (piv.size() < a) throw PropertyViolation("reflect_all_sinks: map at " + j + " is not surjective (E_" + j + " summand)");
    std::vector<Matrix> maps = split_columns(cokernel_projection(h, piv), blocks);
    const long c = static_cast<long>(h.rows() - a);
    b.dims.set(j, c);
    b.basis[j] = default_labels(c);
    for (std::size_t k = 0; k < outs.size(); ++k) {
      Arrow& ar = b.arrows[outs[k]];
      std::swap(ar.source, ar.target);
      b.mats[ar.id] = maps[k];
    }
  }
  // b is the dual picture after reflecting; dualize back.
  Representation r = b.finish(Bipartition{bip.sources, bip.sinks});
  return dual(r);
}

TreeBasis tree_basis_after_reflection(const Representation& x, int m) {
  Representation r = reflect_all_sources(x, m);
  CoefficientQuiver g = coefficient_quiver(r);
  if (!is_tree(g)) throw PropertyViolation("tree_basis_after_reflection: no pivot choice gives a tree coefficient quiver");
  return {std::move(r), std::move(g)};
}

Representation dual(const Representation& x) {
  x.validate();
  std::vector<Arrow> arrows = x.quiver.arrows();
  std::map<std::string, Matrix> mats;
  for (auto& a : arrows) {
    std::swap(a.source, a.target);
    mats.emplace(a.id, x.matrix(a.id).transpose());
  }
  std::optional<Bipartition> bip;
  if (x.quiver.bipartition()) bip = Bipartition{x.quiver.bipartition()->sinks, x.quiver.bipartition()->sources};
  return {Quiver(x.quiver.vertices(), std::move(arrows), std::move(bip)), x.dims, std::move(mats), x.basis};
}

namespace {

// Rename vertices 1 <-> 2 of a K(m)-shaped representation with arrows 2 -> 1.
Representation swap_kronecker_vertices(const Representation& x) {
  int m = static_cast<int>(x.quiver.arrows().size());
  Representation k{kronecker_quiver(m), {}, {}, {}};
  k.dims.set("1", x.dims["2"]);
  k.dims.set("2", x.dims["1"]);
  if (x.basis.count("2")) k.basis["1"] = x.basis.at("2");
  if (x.basis.count("1")) k.basis["2"] = x.basis.at("1");
  for (const auto& a : k.quiver.arrows()) {
    const Arrow& old = x.quiver.arrow(a.id);
    if (old.source != "2" || old.target != "1") throw InvalidInput("expected arrows 2 -> 1");
    k.matrices.emplace(a.id, x.matrix(a.id));
  }
  k.validate();
  return k;
}

void require_kronecker(const Representation& x) {
  const auto& q = x.quiver;
  if (q.vertices().size() != 2 || !q.has_vertex("1") || !q.has_vertex("2"))
    throw InvalidInput("expected a representation of K(m) with vertices 1 and 2");
  for (const auto& a : q.arrows())
    if (a.source != "1" || a.target != "2") throw InvalidInput("expected arrows 1 -> 2");
}

}  // namespace

Representation kronecker_dual(const Representation& x) {
  require_kronecker(x);
  return swap_kronecker_vertices(dual(x));
}

Representation kronecker_reflect(const Representation& x) {
  require_kronecker(x);
  return swap_kronecker_vertices(reflect_source(x, "1"));
}

Representation kronecker_coreflect(const Representation& x) {
  require_kronecker(x);
  // Inverse of kronecker_reflect: rename back, then R^+ at the old source.
  std::vector<Arrow> arrows;
  for (const auto& a : x.quiver.arrows()) arrows.push_back({a.id, "2", "1", a.colour});
  Representation y{Quiver({"1", "2"}, arrows, Bipartition{{"2"}, {"1"}}), {}, {}, {}};
  y.dims.set("1", x.dims["2"]);
  y.dims.set("2", x.dims["1"]);
  if (x.basis.count("2")) y.basis["1"] = x.basis.at("2");
  if (x.basis.count("1")) y.basis["2"] = x.basis.at("1");
  y.matrices = x.matrices;
  y.validate();
  Representation r = reflect_sink(y, "1");
  return with_quiver(r, kronecker_quiver(static_cast<int>(x.quiver.arrows().size())));
}

Representation with_quiver(const Representation& x, const Quiver& q) {
  std::set<std::string> a(x.quiver.vertices().begin(), x.quiver.vertices().end()), b(q.vertices().begin(), q.vertices().end());
  if (a != b) throw InvalidInput("with_quiver: vertex sets differ");
  if (x.quiver.arrows().size() != q.arrows().size()) throw InvalidInput("with_quiver: arrow sets differ");
  for (const auto& ar : q.arrows()) {
    const Arrow& old = x.quiver.arrow(ar.id);
    if (old.source != ar.source || old.target != ar.target) throw InvalidInput("with_quiver: arrow " + ar.id + " differs");
  }
  Representation r{q, x.dims, x.matrices, x.basis};
  r.validate();
  return r;
}

Representation factor_module(const Representation& x, long e_target) {
  x.validate();
  Bipartition bip = x.quiver.require_bipartite();
  long e = 0;
  for (const auto& j : bip.sinks) e += x.dims[j];
  if (e_target > e) throw InvalidInput("factor_module: target exceeds the sink dimension");
  long remove = e - e_target;
  std::set<std::string> gone;
  for (const auto& j : bip.sinks) {
    if (remove == 0) break;
    if (x.dims[j] == 1 && x.quiver.in_arrows(j).size() == 1) {
      gone.insert(j);
      --remove;
    }
  }
  if (remove > 0) throw PropertyViolation("factor_module: not enough degree-one sinks");
  Builder b(x);
  for (const auto& j : gone) b.dims.set(j, 0);
  return b.finish(bip);
}

ReflectionPlan normalize_root(long d, long e, long m) {
  if (d < 0 || e < 0 || (d == 0 && e == 0)) throw InvalidInput("normalize_root: need a nonzero nonnegative vector");
  if (m < 1) throw InvalidInput("normalize_root: m must be positive");
  ReflectionPlan plan;
  plan.d = d;
  plan.e = e;
  std::vector<PlanStep> back;
  for (int guard = 0; guard < 256; ++guard) {
    if (d > e) {
      back.push_back({PlanStep::Op::Swap, e, d, d, e});
      std::swap(d, e);
    } else if (d >= 1 && e > (m - 1) * d + 1) {
      long nd = m * d - e;
      if (nd < 0) throw InvalidInput("normalize_root: (" + std::to_string(plan.d) + "," + std::to_string(plan.e) + ") is not a root");
      back.push_back({PlanStep::Op::Reflect, nd, d, d, e});
      e = d;
      d = nd;
    } else {
      break;
    }
  }
  if (d == 0 && e != 1) throw InvalidInput("normalize_root: (" + std::to_string(plan.d) + "," + std::to_string(plan.e) + ") is not a root");
  plan.d0 = d;
  plan.e0 = e;
  plan.steps.assign(back.rbegin(), back.rend());
  return plan;
}

namespace {

Stage make_stage(const std::string& op, const Representation& cover) {
  auto [d, e] = dimension_type(cover.quiver, cover.dims);
  CoefficientQuiver g = coefficient_quiver(cover);
  return {op, d, e, g.vertices.size(), g.arrows.size(), is_tree(g)};
}

Representation coloured_thin(const QuiverWithDims& q, int m) {
  Colouring c = stable_colouring(q.quiver, m);
  return generic_representation(q.quiver.with_colours(c), q.dims);
}

}  // namespace

TreeModule construct_tree_module(long d, long e, int m, bool require_stable) {
  if (m < 3) throw InvalidInput("construct_tree_module: m must be at least 3");
  RootClass cls = classify_root(d, e, m);
  if (cls.kind == RootKind::NotRoot)
    throw InvalidInput("construct_tree_module: (" + std::to_string(d) + "," + std::to_string(e) + ") is not a root");
  TreeModule tm;
  tm.plan = normalize_root(d, e, m);
  const long d0 = tm.plan.d0, e0 = tm.plan.e0;

  QuiverWithDims base;
  if (d0 == 0) {
    base = {Quiver({"j001"}, {}, Bipartition{{}, {"j001"}}), {}};
    base.dims.set("j001", 1);
    tm.construction = "simple-E2";
  } else if (d0 == 1) {
    base = realize_star(e0);
    tm.construction = "star";
  } else if (std::gcd(d0, e0) == 1) {
    SimpleTuple st = simple_tuple(d0, e0, default_n(d0, e0, m));
    tm.tuple = st.s;
    base = realize_simple(st);
    tm.construction = "simple";
  } else if (require_stable) {
    if (e0 % d0 == 0)
      throw PropertyViolation("no stable tree module from this construction: excluded family r^l(n,kn)");
    ChainQuiver cq = general_stable_quiver(d0, e0, m);
    tm.tuple = cq.s;
    base = cq.quiver;
    tm.construction = "chain";
  } else {
    long ec = e0;
    while (std::gcd(d0, ec) != 1) ++ec;
    SimpleTuple st = simple_tuple(d0, ec, default_n(d0, ec, m));
    tm.tuple = st.s;
    base = realize_simple(st);
    tm.construction = "factor";
  }

  Representation cover = coloured_thin(base, m);
  if (tm.construction == "factor") cover = factor_module(cover, e0);

  if (d0 == 0) {
    tm.stable = true;
    tm.stability_note = "simple representation";
  } else {
    StabilityResult sr = is_stable_generic(cover.quiver, cover.dims);
    tm.stable = sr.stable;
    if (sr.stable) {
      tm.stability_note = "base passes the coordinate stability test; reflections preserve it";
    } else if (e0 % d0 == 0 && d0 >= 2) {
      tm.stability_note = "excluded family r^l(n,kn)";
    } else {
      tm.stability_note = "base fails the coordinate stability test";
    }
  }

  tm.stages.push_back(make_stage("base", cover));
  for (const auto& step : tm.plan.steps) {
    if (step.op == PlanStep::Op::Reflect) {
      cover = reflect_all_sources(cover, m);
      tm.stages.push_back(make_stage("reflect", cover));
    } else {
      cover = dual(cover);
      tm.stages.push_back(make_stage("swap", cover));
    }
  }
  tm.kronecker = push_down(cover, m);
  tm.gamma = coefficient_quiver(tm.kronecker);
  tm.cover = std::move(cover);
  return tm;
}

}  // namespace ktree
