#include "ktree/oracle.hpp"

#include <functional>
#include <numeric>
#include <set>

#include "ktree/error.hpp"
#include "ktree/linalg.hpp"

namespace ktree {

namespace {

void require_same_shape(const Representation& x, const Representation& y) {
  const auto &qa = x.quiver, &qb = y.quiver;
  if (qa.vertices().size() != qb.vertices().size() || qa.arrows().size() != qb.arrows().size())
    throw InvalidInput("hom_space: representations live on different quivers");
  for (const auto& v : qa.vertices())
    if (!qb.has_vertex(v)) throw InvalidInput("hom_space: vertex " + v + " missing from second quiver");
  for (const auto& a : qa.arrows()) {
    if (!qb.has_arrow(a.id)) throw InvalidInput("hom_space: arrow " + a.id + " missing from second quiver");
    const Arrow& b = qb.arrow(a.id);
    if (a.source != b.source || a.target != b.target) throw InvalidInput("hom_space: arrow " + a.id + " differs");
  }
}

}  // namespace

HomSpace hom_space(const Representation& x, const Representation& y) {
  x.validate();
  y.validate();
  require_same_shape(x, y);
  // φ_v is dimY_v x dimX_v; unknown (v, r, c) at offset[v] + r * dimX_v + c.
  std::map<std::string, std::size_t> offset;
  std::size_t n = 0;
  for (const auto& v : x.quiver.vertices()) {
    offset[v] = n;
    n += static_cast<std::size_t>(x.dims[v] * y.dims[v]);
  }
  Echelon ech(n);
  for (const auto& a : x.quiver.arrows()) {
    const Matrix &X = x.matrix(a.id), &Y = y.matrix(a.id);
    const std::size_t xi = x.dims[a.source], xj = x.dims[a.target], yi = y.dims[a.source], yj = y.dims[a.target];
    for (std::size_t r = 0; r < yj; ++r)
      for (std::size_t c = 0; c < xi; ++c) {
        std::map<std::size_t, Rational> eq;
        for (std::size_t k = 0; k < xj; ++k)
          if (X(k, c) != 0) eq[offset[a.target] + r * xj + k] += X(k, c);
        for (std::size_t k = 0; k < yi; ++k)
          if (Y(r, k) != 0) eq[offset[a.source] + k * xi + c] -= Y(r, k);
        SparseRow row;
        for (auto& [col, v] : eq)
          if (v != 0) row.emplace_back(col, v);
        ech.add(std::move(row));
      }
  }
  HomSpace hs;
  for (const auto& vec : ech.nullspace()) {
    Morphism phi;
    for (const auto& v : x.quiver.vertices()) {
      std::size_t rows = y.dims[v], cols = x.dims[v];
      Matrix m(rows, cols);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = vec[offset[v] + r * cols + c];
      phi.emplace(v, std::move(m));
    }
    hs.basis.push_back(std::move(phi));
  }
  return hs;
}

std::size_t hom_dim(const Representation& x, const Representation& y) { return hom_space(x, y).dim(); }

long euler_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  long s = 0;
  for (const auto& v : q.vertices()) s += a[v] * b[v];
  for (const auto& ar : q.arrows()) s -= a[ar.source] * b[ar.target];
  return s;
}

long kronecker_euler_form(long d, long e, long d2, long e2, long m) { return d * d2 + e * e2 - m * d * e2; }

long ext_dim(const Representation& x, const Representation& y) {
  long h = static_cast<long>(hom_dim(x, y));
  long ext = h - euler_form(x.quiver, x.dims, y.dims);
  if (ext < 0) throw PropertyViolation("ext_dim: negative value, Hom computation is inconsistent");
  return ext;
}

IndecomposabilityResult is_indecomposable(const Representation& x) {
  if (x.dims.total() == 0) throw InvalidInput("is_indecomposable: zero representation");
  HomSpace end = hom_space(x, x);
  const std::size_t n = end.dim();
  auto tr = [&](const Morphism& a, const Morphism& b) {
    Rational t = 0;
    for (const auto& [v, m] : a)
      if (m.rows() > 0) t += trace(m * b.at(v));
    return t;
  };
  Matrix gram(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) gram(a, b) = gram(b, a) = tr(end.basis[a], end.basis[b]);
  IndecomposabilityResult res;
  res.end_dim = n;
  res.top_dim = rank(gram);
  res.indecomposable = res.top_dim == 1;
  if (res.top_dim > 1) {
    if (auto e = find_idempotent(end)) {
      res.witness = std::move(e);
      res.witness_is_idempotent = true;
      return res;
    }
    const Rational total = x.dims.total();
    std::vector<Rational> traces(n);
    for (std::size_t a = 0; a < n; ++a) {
      traces[a] = 0;
      for (const auto& [v, m] : end.basis[a])
        if (m.rows() > 0) traces[a] += trace(m);
    }
    for (std::size_t a = 0; a < n && !res.witness; ++a) {
      Rational lambda = traces[a] / total;
      for (std::size_t b = 0; b < n; ++b)
        if (gram(a, b) - lambda * traces[b] != 0) {
          Morphism psi = end.basis[a];
          for (auto& [v, m] : psi)
            for (std::size_t k = 0; k < m.rows(); ++k) m(k, k) -= lambda;
          res.witness = std::move(psi);
          break;
        }
    }
  }
  return res;
}

namespace {

Matrix power(const Matrix& a, std::size_t k) {
  Matrix r = Matrix::identity(a.rows());
  for (std::size_t i = 0; i < k; ++i) r = r * a;
  return r;
}

// Indices of a maximal independent set of columns.
std::vector<std::size_t> independent_columns(const Matrix& a) {
  Echelon ech(a.rows());
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    SparseRow col;
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (a(r, c) != 0) col.emplace_back(r, a(r, c));
    if (ech.add(std::move(col))) cols.push_back(c);
  }
  return cols;
}

// Projection onto im(ψ^N) along ker(ψ^N) at every vertex, if both are nonzero somewhere.
std::optional<Morphism> fitting_projection(const Morphism& psi) {
  std::size_t big = 0;
  for (const auto& [v, m] : psi) big = std::max(big, m.rows());
  Morphism proj;
  std::size_t image_total = 0, kernel_total = 0;
  for (const auto& [v, m] : psi) {
    const std::size_t n = m.rows();
    if (n == 0) {
      proj.emplace(v, Matrix(0, 0));
      continue;
    }
    Matrix a = power(m, big);
    std::vector<std::size_t> cols = independent_columns(a);
    Echelon ech(n);
    for (std::size_t r = 0; r < n; ++r) {
      SparseRow row;
      for (std::size_t c = 0; c < n; ++c)
        if (a(r, c) != 0) row.emplace_back(c, a(r, c));
      ech.add(std::move(row));
    }
    auto ker = ech.nullspace();
    if (cols.size() + ker.size() != n) return std::nullopt;
    Matrix p(n, n);
    for (std::size_t k = 0; k < cols.size(); ++k)
      for (std::size_t r = 0; r < n; ++r) p(r, k) = a(r, cols[k]);
    for (std::size_t k = 0; k < ker.size(); ++k)
      for (std::size_t r = 0; r < n; ++r) p(r, cols.size() + k) = ker[k][r];
    Matrix diag(n, n);
    for (std::size_t k = 0; k < cols.size(); ++k) diag(k, k) = 1;
    proj.emplace(v, p * diag * inverse(p));
    image_total += cols.size();
    kernel_total += ker.size();
  }
  if (image_total == 0 || kernel_total == 0) return std::nullopt;
  return proj;
}

}  // namespace

std::optional<Morphism> find_idempotent(const HomSpace& end) {
  for (const auto& phi : end.basis) {
    std::set<Rational> lambdas{Rational(0)};
    for (const auto& [v, m] : phi)
      for (std::size_t k = 0; k < m.rows(); ++k) lambdas.insert(m(k, k));
    for (const auto& lambda : lambdas) {
      Morphism psi = phi;
      for (auto& [v, m] : psi)
        for (std::size_t k = 0; k < m.rows(); ++k) m(k, k) -= lambda;
      if (auto p = fitting_projection(psi)) return p;
    }
  }
  return std::nullopt;
}

std::vector<Tuple> brute_simple_tuples(long d, long e, long n) {
  std::vector<Tuple> out;
  const long T = e - (n - 1) * d, total = d - T + 1;
  if (T < 1 || total < 0) return out;
  Tuple cur(T, 0);
  // Odometer over compositions of `total` into T parts, lexicographic.
  std::function<void(long, long)> rec = [&](long pos, long left) {
    if (pos == T - 1) {
      cur[pos] = left;
      if (simple_stable(cur)) out.push_back(cur);
      return;
    }
    for (long a = 0; a <= left; ++a) {
      cur[pos] = a;
      rec(pos + 1, left - a);
    }
  };
  rec(0, total);
  return out;
}

RootClass classify_root(long d, long e, long m) {
  if (d == 0 && e == 0) throw InvalidInput("classify_root: zero vector");
  RootClass rc;
  rc.q = d * d + e * e - m * d * e;
  rc.slope_bound = rc.q <= 0;
  if (d < 0 || e < 0) return rc;
  if (rc.q <= 0) {
    rc.kind = RootKind::Imaginary;
    return rc;
  }
  if (rc.q != 1) return rc;
  for (int step = 0; step < 64; ++step) {
    if ((d == 1 && e == 0) || (d == 0 && e == 1)) {
      rc.kind = RootKind::Real;
      return rc;
    }
    long d1 = m * e - d, e2 = m * d - e;
    if (d1 >= 0 && d1 < d) {
      d = d1;
    } else if (e2 >= 0 && e2 < e) {
      e = e2;
    } else {
      return rc;
    }
  }
  rc.bounded_search = true;
  return rc;
}

const char* to_string(RootKind k) {
  switch (k) {
    case RootKind::Real: return "real";
    case RootKind::Imaginary: return "imaginary";
    default: return "not-root";
  }
}

StabilityResult is_stable_coordinate(const Representation& x, std::size_t max_vectors) {
  x.validate();
  Bipartition b = x.quiver.require_bipartite();
  struct Vec {
    std::string vertex;
    std::size_t index;
  };
  std::vector<Vec> vecs;
  long d = 0, e = 0;
  for (const auto& i : b.sources) {
    for (long k = 0; k < x.dims[i]; ++k) vecs.push_back({i, static_cast<std::size_t>(k)});
    d += x.dims[i];
  }
  for (const auto& j : b.sinks) e += x.dims[j];
  if (vecs.size() > max_vectors) throw InvalidInput("is_stable_coordinate: too many source basis vectors");
  StabilityResult res;
  const std::uint64_t full = (std::uint64_t{1} << vecs.size()) - 1;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    long dp = 0, du = 0;
    for (const auto& j : b.sinks) {
      long n = x.dims[j];
      if (n == 0) continue;
      std::vector<std::vector<Rational>> cols;
      for (std::size_t k = 0; k < vecs.size(); ++k) {
        if (!(mask >> k & 1)) continue;
        for (auto ai : x.quiver.in_arrows(j)) {
          const Arrow& a = x.quiver.arrows()[ai];
          if (a.source != vecs[k].vertex) continue;
          const Matrix& m = x.matrix(a.id);
          std::vector<Rational> col(n);
          for (long r = 0; r < n; ++r) col[r] = m(r, vecs[k].index);
          cols.push_back(std::move(col));
        }
      }
      Echelon ech(n);
      for (auto& c : cols) ech.add(dense_to_sparse(c));
      du += static_cast<long>(ech.rank());
    }
    for (std::size_t k = 0; k < vecs.size(); ++k)
      if (mask >> k & 1) ++dp;
    if (mask == full && du == e) continue;
    if (dp * e >= d * du) {
      res.stable = false;
      for (std::size_t k = 0; k < vecs.size(); ++k)
        if (mask >> k & 1) res.witness.push_back(vecs[k].vertex + "/" + x.basis.at(vecs[k].vertex)[vecs[k].index]);
      res.witness_d = dp;
      res.witness_e = du;
      return res;
    }
  }
  return res;
}

}  // namespace ktree
