#include "ktree/quiver.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "ktree/error.hpp"

namespace ktree {

namespace {
const std::vector<std::size_t> kNoArrows;
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows,
               std::optional<Bipartition> bipartition)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)), bipartition_(std::move(bipartition)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (!vindex_.emplace(vertices_[i], i).second) throw InvalidInput("duplicate vertex id " + vertices_[i]);
  for (std::size_t k = 0; k < arrows_.size(); ++k) {
    const Arrow& a = arrows_[k];
    if (!aindex_.emplace(a.id, k).second) throw InvalidInput("duplicate arrow id " + a.id);
    if (!has_vertex(a.source)) throw InvalidInput("arrow " + a.id + ": unknown source " + a.source);
    if (!has_vertex(a.target)) throw InvalidInput("arrow " + a.id + ": unknown target " + a.target);
    if (a.colour && *a.colour < 1) throw InvalidInput("arrow " + a.id + ": colour must be positive");
    out_[a.source].push_back(k);
    in_[a.target].push_back(k);
  }
  if (bipartition_) {
    std::set<std::string> I(bipartition_->sources.begin(), bipartition_->sources.end());
    std::set<std::string> J(bipartition_->sinks.begin(), bipartition_->sinks.end());
    if (I.size() != bipartition_->sources.size() || J.size() != bipartition_->sinks.size())
      throw InvalidInput("bipartition lists a vertex twice");
    for (const auto& v : I)
      if (J.count(v)) throw InvalidInput("bipartition: vertex " + v + " in both I and J");
    if (I.size() + J.size() != vertices_.size()) throw InvalidInput("bipartition does not cover all vertices");
    for (const auto& v : vertices_)
      if (!I.count(v) && !J.count(v)) throw InvalidInput("bipartition misses vertex " + v);
    for (const auto& a : arrows_)
      if (!I.count(a.source) || !J.count(a.target))
        throw InvalidInput("arrow " + a.id + " does not go from I to J");
  }
}

const Arrow& Quiver::arrow(const std::string& id) const {
  auto it = aindex_.find(id);
  if (it == aindex_.end()) throw InvalidInput("unknown arrow " + id);
  return arrows_[it->second];
}

const std::vector<std::size_t>& Quiver::out_arrows(const std::string& v) const {
  auto it = out_.find(v);
  return it == out_.end() ? kNoArrows : it->second;
}

const std::vector<std::size_t>& Quiver::in_arrows(const std::string& v) const {
  auto it = in_.find(v);
  return it == in_.end() ? kNoArrows : it->second;
}

std::size_t Quiver::degree(const std::string& v) const { return out_arrows(v).size() + in_arrows(v).size(); }

bool Quiver::is_source(const std::string& v) const {
  if (bipartition_)
    return std::find(bipartition_->sources.begin(), bipartition_->sources.end(), v) != bipartition_->sources.end();
  return in_arrows(v).empty();
}

bool Quiver::is_sink(const std::string& v) const {
  if (bipartition_)
    return std::find(bipartition_->sinks.begin(), bipartition_->sinks.end(), v) != bipartition_->sinks.end();
  return out_arrows(v).empty();
}

std::vector<std::string> Quiver::sources() const { return require_bipartite().sources; }
std::vector<std::string> Quiver::sinks() const { return require_bipartite().sinks; }

Bipartition Quiver::require_bipartite() const {
  if (bipartition_) return *bipartition_;
  Bipartition b;
  for (const auto& v : vertices_) {
    bool in = !in_arrows(v).empty(), out = !out_arrows(v).empty();
    if (in && out) throw InvalidInput("quiver is not bipartite at vertex " + v);
    (out ? b.sources : b.sinks).push_back(v);
  }
  return b;
}

Quiver Quiver::with_colours(const std::map<std::string, int>& colours) const {
  std::vector<Arrow> arrows = arrows_;
  for (auto& a : arrows) {
    auto it = colours.find(a.id);
    a.colour = it == colours.end() ? std::nullopt : std::optional<int>(it->second);
  }
  return Quiver(vertices_, std::move(arrows), bipartition_);
}

DimVector::DimVector(std::map<std::string, long> entries) : entries_(std::move(entries)) {
  for (const auto& [v, d] : entries_)
    if (d < 0) throw InvalidInput("negative dimension at " + v);
}

long DimVector::operator[](const std::string& v) const {
  auto it = entries_.find(v);
  return it == entries_.end() ? 0 : it->second;
}

void DimVector::set(const std::string& v, long d) {
  if (d < 0) throw InvalidInput("negative dimension at " + v);
  entries_[v] = d;
}

long DimVector::total() const {
  long t = 0;
  for (const auto& [v, d] : entries_) t += d;
  return t;
}

bool operator==(const DimVector& a, const DimVector& b) {
  auto nz = [](const DimVector& x) {
    std::map<std::string, long> m;
    for (const auto& [v, d] : x.entries_)
      if (d) m[v] = d;
    return m;
  };
  return nz(a) == nz(b);
}

DimVector constant_dims(const Quiver& q, long value) {
  DimVector d;
  for (const auto& v : q.vertices()) d.set(v, value);
  return d;
}

std::pair<long, long> dimension_type(const Quiver& q, const DimVector& dims) {
  Bipartition b = q.require_bipartite();
  long d = 0, e = 0;
  for (const auto& v : b.sources) d += dims[v];
  for (const auto& v : b.sinks) e += dims[v];
  return {d, e};
}

void Representation::validate() const {
  for (const auto& [v, d] : dims.entries())
    if (!quiver.has_vertex(v)) throw InvalidInput("dimension given for unknown vertex " + v);
  for (const auto& a : quiver.arrows()) {
    auto it = matrices.find(a.id);
    if (it == matrices.end()) throw InvalidInput("missing matrix for arrow " + a.id);
    const Matrix& m = it->second;
    if (m.rows() != static_cast<std::size_t>(dims[a.target]) || m.cols() != static_cast<std::size_t>(dims[a.source]))
      throw InvalidInput("matrix of arrow " + a.id + " has wrong shape");
  }
  for (const auto& [id, m] : matrices)
    if (!quiver.has_arrow(id)) throw InvalidInput("matrix given for unknown arrow " + id);
  for (const auto& v : quiver.vertices()) {
    auto it = basis.find(v);
    std::size_t n = it == basis.end() ? 0 : it->second.size();
    if (n != static_cast<std::size_t>(dims[v])) throw InvalidInput("basis of vertex " + v + " has wrong length");
    if (it != basis.end()) {
      std::set<std::string> seen(it->second.begin(), it->second.end());
      if (seen.size() != n) throw InvalidInput("repeated basis label at vertex " + v);
    }
  }
  for (const auto& [v, labels] : basis)
    if (!quiver.has_vertex(v)) throw InvalidInput("basis given for unknown vertex " + v);
}

const Matrix& Representation::matrix(const std::string& arrow) const {
  auto it = matrices.find(arrow);
  if (it == matrices.end()) throw InvalidInput("missing matrix for arrow " + arrow);
  return it->second;
}

Representation make_representation(Quiver q, DimVector dims, std::map<std::string, Matrix> matrices) {
  Representation x{std::move(q), std::move(dims), std::move(matrices), {}};
  for (const auto& v : x.quiver.vertices()) {
    long n = x.dims[v];
    if (n == 0) continue;
    auto& labels = x.basis[v];
    for (long k = 1; k <= n; ++k) labels.push_back("b" + std::to_string(k));
  }
  x.validate();
  return x;
}

Representation thin_representation(const Quiver& q) {
  std::map<std::string, Matrix> mats;
  for (const auto& a : q.arrows()) {
    Matrix m(1, 1);
    m(0, 0) = 1;
    mats.emplace(a.id, std::move(m));
  }
  return make_representation(q, constant_dims(q, 1), std::move(mats));
}

Representation direct_sum(const Representation& x, const Representation& y) {
  if (!(x.quiver == y.quiver)) throw InvalidInput("direct sum of representations over different quivers");
  DimVector dims;
  for (const auto& v : x.quiver.vertices()) dims.set(v, x.dims[v] + y.dims[v]);
  std::map<std::string, Matrix> mats;
  for (const auto& a : x.quiver.arrows()) {
    const Matrix &p = x.matrix(a.id), &r = y.matrix(a.id);
    Matrix m(p.rows() + r.rows(), p.cols() + r.cols());
    for (std::size_t i = 0; i < p.rows(); ++i)
      for (std::size_t j = 0; j < p.cols(); ++j) m(i, j) = p(i, j);
    for (std::size_t i = 0; i < r.rows(); ++i)
      for (std::size_t j = 0; j < r.cols(); ++j) m(p.rows() + i, p.cols() + j) = r(i, j);
    mats.emplace(a.id, std::move(m));
  }
  return make_representation(x.quiver, std::move(dims), std::move(mats));
}

CoefficientQuiver coefficient_quiver(const Representation& x) {
  x.validate();
  CoefficientQuiver g;
  for (const auto& v : x.quiver.vertices()) {
    long n = x.dims[v];
    for (long k = 0; k < n; ++k) {
      g.vertices.push_back({v, static_cast<std::size_t>(k)});
      g.labels.push_back(v + "/" + x.basis.at(v)[k]);
    }
  }
  for (const auto& a : x.quiver.arrows()) {
    const Matrix& m = x.matrix(a.id);
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (std::size_t r = 0; r < m.rows(); ++r)
        if (m(r, c) != 0) g.arrows.push_back({a.id, {a.source, c}, {a.target, r}, m(r, c)});
  }
  return g;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

bool is_tree(const CoefficientQuiver& g) {
  if (g.vertices.empty()) return false;
  if (g.arrows.size() + 1 != g.vertices.size()) return false;
  std::map<BasisToken, std::size_t> idx;
  for (std::size_t k = 0; k < g.vertices.size(); ++k) idx.emplace(g.vertices[k], k);
  UnionFind uf(g.vertices.size());
  for (const auto& a : g.arrows)
    if (!uf.unite(idx.at(a.source), idx.at(a.target))) return false;
  return true;
}

bool is_tree_quiver(const Quiver& q) {
  if (q.vertices().empty() || q.arrows().size() + 1 != q.vertices().size()) return false;
  std::map<std::string, std::size_t> idx;
  for (std::size_t k = 0; k < q.vertices().size(); ++k) idx.emplace(q.vertices()[k], k);
  UnionFind uf(q.vertices().size());
  for (const auto& a : q.arrows())
    if (!uf.unite(idx.at(a.source), idx.at(a.target))) return false;
  return true;
}

long NeighborSets::R(const std::string& v) const {
  auto it = A.find(v);
  return it == A.end() ? 0 : static_cast<long>(it->second.size());
}

NeighborSets neighbor_sets(const Quiver& q, const DimVector& dims) {
  NeighborSets ns;
  for (const auto& v : q.vertices()) {
    ns.A[v];
    ns.N[v];
  }
  for (const auto& a : q.arrows()) {
    ns.N[a.source].insert(a.target);
    ns.N[a.target].insert(a.source);
    if (dims[a.target] > 0) ns.A[a.source].insert(a.target);
    if (dims[a.source] > 0) ns.A[a.target].insert(a.source);
  }
  return ns;
}

QuiverWithDims glue(const QuiverWithDims& q, const std::string& j0, const QuiverWithDims& q2,
                    const std::string& j1, const std::string& prefix) {
  Bipartition b1 = q.quiver.require_bipartite(), b2 = q2.quiver.require_bipartite();
  auto contains = [](const std::vector<std::string>& v, const std::string& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  if (!contains(b1.sinks, j0)) throw InvalidInput("glue: " + j0 + " is not a sink of the first quiver");
  if (!contains(b2.sinks, j1)) throw InvalidInput("glue: " + j1 + " is not a sink of the second quiver");
  auto rename = [&](const std::string& v) { return v == j1 ? j0 : prefix + v; };

  std::vector<std::string> vertices = q.quiver.vertices();
  Bipartition b = b1;
  DimVector dims = q.dims;
  for (const auto& v : q2.quiver.vertices()) {
    if (v == j1) continue;
    std::string nv = rename(v);
    if (q.quiver.has_vertex(nv)) throw InvalidInput("glue: vertex id clash on " + nv + "; use another prefix");
    vertices.push_back(nv);
    (contains(b2.sources, v) ? b.sources : b.sinks).push_back(nv);
    dims.set(nv, q2.dims[v]);
  }
  dims.set(j0, q.dims[j0] + q2.dims[j1] - 1);
  std::vector<Arrow> arrows = q.quiver.arrows();
  for (const auto& a : q2.quiver.arrows()) {
    Arrow na{prefix + a.id, rename(a.source), rename(a.target), a.colour};
    if (q.quiver.has_arrow(na.id)) throw InvalidInput("glue: arrow id clash on " + na.id + "; use another prefix");
    arrows.push_back(std::move(na));
  }
  return {Quiver(std::move(vertices), std::move(arrows), std::move(b)), std::move(dims)};
}

std::vector<std::vector<std::string>> boundary_quivers(const Quiver& q) {
  Bipartition b = q.require_bipartite();
  std::vector<std::string> I = b.sources;
  std::sort(I.begin(), I.end());
  const std::size_t n = I.size();
  if (n > 20) throw InvalidInput("boundary_quivers: too many sources for exhaustive scan");
  NeighborSets ns = neighbor_sets(q, constant_dims(q, 1));

  std::vector<std::uint32_t> boundary;
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    std::set<std::string> rest;
    for (std::size_t k = 0; k < n; ++k)
      if (!(mask >> k & 1)) rest.insert(ns.N[I[k]].begin(), ns.N[I[k]].end());
    int with_one = 0, with_more = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (!(mask >> k & 1)) continue;
      std::size_t shared = 0;
      for (const auto& j : ns.N[I[k]]) shared += rest.count(j);
      if (shared == 1) ++with_one;
      else if (shared > 1) ++with_more;
    }
    if (with_one == 1 && with_more == 0) boundary.push_back(mask);
  }
  std::vector<std::vector<std::string>> out;
  for (auto m : boundary) {
    bool minimal = true;
    for (auto o : boundary)
      if (o != m && (o & m) == o) minimal = false;
    if (!minimal) continue;
    std::vector<std::string> subset;
    for (std::size_t k = 0; k < n; ++k)
      if (m >> k & 1) subset.push_back(I[k]);
    out.push_back(std::move(subset));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Quiver source_subquiver(const Quiver& q, const std::vector<std::string>& sources) {
  std::set<std::string> keep(sources.begin(), sources.end());
  for (const auto& a : q.arrows())
    if (keep.count(a.source)) keep.insert(a.target);
  std::vector<std::string> vertices;
  Bipartition b;
  Bipartition full = q.require_bipartite();
  for (const auto& v : q.vertices())
    if (keep.count(v)) vertices.push_back(v);
  for (const auto& v : full.sources)
    if (keep.count(v)) b.sources.push_back(v);
  for (const auto& v : full.sinks)
    if (keep.count(v)) b.sinks.push_back(v);
  std::vector<Arrow> arrows;
  for (const auto& a : q.arrows())
    if (keep.count(a.source)) arrows.push_back(a);
  return Quiver(std::move(vertices), std::move(arrows), std::move(b));
}

std::string padded_id(const std::string& prefix, std::size_t n, std::size_t width) {
  std::string s = std::to_string(n);
  if (s.size() < width) s.insert(0, width - s.size(), '0');
  return prefix + s;
}

}  // namespace ktree
