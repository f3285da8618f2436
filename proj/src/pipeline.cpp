#include "ktree/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <set>
#include <thread>

#include "ktree/construct.hpp"
#include "ktree/error.hpp"
#include "ktree/oracle.hpp"

namespace ktree {

namespace {

Json tree_witness(const Representation& x, const CoefficientQuiver& g) {
  Json w;
  w["vertices"] = g.vertices.size();
  w["arrows"] = g.arrows.size();
  // First arrow closing a cycle, if any.
  std::map<BasisToken, BasisToken> parent;
  std::function<BasisToken(BasisToken)> find = [&](BasisToken t) {
    auto it = parent.find(t);
    if (it == parent.end()) return t;
    BasisToken r = find(it->second);
    parent[t] = r;
    return r;
  };
  for (const auto& a : g.arrows) {
    BasisToken ra = find(a.source), rb = find(a.target);
    if (ra == rb) {
      w["cycle_closed_by"] = Json{{"arrow", a.arrow},
                                  {"source", a.source.vertex + "/" + x.basis.at(a.source.vertex)[a.source.index]},
                                  {"target", a.target.vertex + "/" + x.basis.at(a.target.vertex)[a.target.index]}};
      return w;
    }
    parent[ra] = rb;
  }
  std::set<BasisToken> roots;
  for (const auto& v : g.vertices) roots.insert(find(v));
  w["components"] = roots.size();
  return w;
}

template <class Row, class F>
std::vector<Row> parallel_map(const std::vector<SweepItem>& items, unsigned jobs, F&& f) {
  std::vector<Row> rows(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < items.size(); k = next++) rows[k] = f(items[k]);
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, items.size()))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

}  // namespace

Json morphism_to_json(const Morphism& phi) {
  Json j = Json::object();
  for (const auto& [v, m] : phi) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
      rows.push_back(std::move(row));
    }
    j[v] = std::move(rows);
  }
  return j;
}

std::vector<Check> run_checks(const Representation& x, const std::vector<std::string>& names) {
  static const std::set<std::string> known{"dims", "tree", "stable", "indecomposable", "exceptional"};
  for (const auto& n : names)
    if (!known.count(n)) throw InvalidInput("unknown check \"" + n + "\"");
  std::vector<Check> out;
  for (const auto& name : names) {
    Check c{name, false, nullptr};
    if (name == "dims") {
      x.validate();
      c.pass = true;
      Json dims = Json::object();
      for (const auto& v : x.quiver.vertices()) dims[v] = x.dims[v];
      c.witness = Json{{"dims", dims}, {"total", x.dims.total()}};
    } else if (name == "tree") {
      CoefficientQuiver g = coefficient_quiver(x);
      c.pass = is_tree(g);
      if (!c.pass) c.witness = tree_witness(x, g);
    } else if (name == "stable") {
      try {
        StabilityResult s = is_stable_coordinate(x, 22);
        c.pass = s.stable;
        if (!s.stable) c.witness = Json{{"subspace", s.witness}, {"dimension", {s.witness_d, s.witness_e}}};
      } catch (const InvalidInput& e) {
        c.witness = Json{{"reason", e.what()}};
      }
    } else if (name == "indecomposable") {
      IndecomposabilityResult r = is_indecomposable(x);
      c.pass = r.indecomposable;
      if (!c.pass) {
        c.witness = Json{{"end_dim", r.end_dim}, {"top_dim", r.top_dim}};
        if (r.witness) {
          c.witness["kind"] = r.witness_is_idempotent ? "idempotent" : "non-local endomorphism";
          c.witness["endomorphism"] = morphism_to_json(*r.witness);
        }
      }
    } else if (name == "exceptional") {
      long h = static_cast<long>(hom_dim(x, x));
      long ext = h - euler_form(x.quiver, x.dims, x.dims);
      c.pass = h == 1 && ext == 0;
      if (!c.pass) c.witness = Json{{"hom", h}, {"ext", ext}};
    }
    out.push_back(std::move(c));
  }
  return out;
}

Json checks_to_json(const std::vector<Check>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) arr.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  return Json{{"checks", arr}};
}

Json plan_to_json(const ReflectionPlan& plan) {
  Json arr = Json::array();
  for (const auto& s : plan.steps)
    arr.push_back(Json{{"op", s.op == PlanStep::Op::Reflect ? "reflect" : "swap"},
                       {"from", {s.d_before, s.e_before}},
                       {"to", {s.d_after, s.e_after}}});
  return arr;
}

Json stages_to_json(const std::vector<Stage>& stages) {
  Json arr = Json::array();
  for (const auto& s : stages)
    arr.push_back(Json{{"op", s.op},
                       {"dims", {s.d, s.e}},
                       {"gamma_vertices", s.gamma_vertices},
                       {"gamma_arrows", s.gamma_arrows},
                       {"tree", s.tree}});
  return arr;
}

std::vector<SweepItem> fundamental_coprime(long m, long max_d) {
  std::vector<SweepItem> items;
  for (long d = 1; d <= max_d; ++d)
    for (long e = d; e <= (m - 1) * d + 1; ++e)
      if (std::gcd(d, e) == 1) items.push_back({d, e});
  return items;
}

std::vector<UniquenessRow> sweep_uniqueness(long m, long max_d, unsigned jobs) {
  std::vector<SweepItem> items;
  for (const auto& it : fundamental_coprime(m, max_d))
    if (it.e > it.d) items.push_back(it);
  return parallel_map<UniquenessRow>(items, jobs, [m](const SweepItem& it) {
    long n = default_n(it.d, it.e, m);
    UniquenessRow row{it.d, it.e, n, brute_simple_tuples(it.d, it.e, n), simple_tuple(it.d, it.e, n).s, false};
    row.ok = row.brute.size() == 1 && row.brute.front() == row.closed_form;
    return row;
  });
}

std::vector<PipelineRow> sweep_pipeline(long m, long max_d, unsigned jobs) {
  return parallel_map<PipelineRow>(fundamental_coprime(m, max_d), jobs, [m](const SweepItem& it) {
    PipelineRow row{it.d, it.e, "", 0, 0, false, false, ""};
    try {
      TreeModule tm = construct_tree_module(it.d, it.e, static_cast<int>(m));
      row.construction = tm.construction;
      row.gamma_vertices = tm.gamma.vertices.size();
      row.gamma_arrows = tm.gamma.arrows.size();
      row.tree = is_tree(tm.gamma);
      row.indecomposable = is_indecomposable(tm.kronecker).indecomposable;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    return row;
  });
}

}  // namespace ktree
