// ktree: build, reflect and verify tree modules of the m-Kronecker quiver.
// Exit codes: 0 success, 1 property violation, 2 invalid input.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "ktree/colouring.hpp"
#include "ktree/construct.hpp"
#include "ktree/error.hpp"
#include "ktree/oracle.hpp"
#include "ktree/pipeline.hpp"

namespace fs = std::filesystem;
using namespace ktree;

namespace {

constexpr int kOk = 0, kViolation = 1, kInvalid = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << text;
}

std::string tuple_str(const std::vector<long>& s) {
  std::string out = "(";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
  return out + ")";
}

std::string chain_str(const QuiverFunctionChain& c, const Word& w) {
  if (c.shortcut || c.steps.empty()) return "closed form -> " + tuple_str(w);
  std::string out;
  for (std::size_t k = 0; k < c.steps.size(); ++k) {
    if (k) out += " . ";
    out += (c.steps[k].kind == 'E' ? "eta_" : "theta_") + std::to_string(c.steps[k].index);
  }
  return out + " (" + std::to_string(c.type) + ") = " + tuple_str(w);
}

struct SimpleOpts {
  long m = 3, d = 0, e = 0, n = 0;
  std::string out, format = "json";
};

int cmd_simple(const SimpleOpts& o) {
  if (o.m < 3 || o.d < 1 || o.e < 1) throw InvalidInput("need m >= 3 and d, e >= 1");
  if (std::gcd(o.d, o.e) != 1) throw InvalidInput("non-coprime; use tree-module");
  QuiverWithDims q;
  if (o.d == 1 && o.e <= o.m && o.n == 0) {
    q = realize_star(o.e);
    std::cout << "star Q^" << o.e << "\n";
  } else {
    long n = o.n ? o.n : default_n(o.d, o.e, o.m);
    SimpleTuple st = simple_tuple(o.d, o.e, n);
    if (n + (st.t() > 0 ? 1 : 0) > o.m) throw InvalidInput("star arities exceed m");
    std::cout << "n " << n << "\n";
    std::cout << "tuple " << tuple_str(st.s) << "\n";
    if (o.e <= n * o.d) {
      auto [chain, w] = quiver_function_chain(o.d, o.e, n);
      std::cout << "chain " << chain_str(chain, w) << "\n";
    } else {
      std::cout << "chain n/a (e > nd)\n";
    }
    q = realize_simple(st);
  }
  Quiver coloured = q.quiver.with_colours(stable_colouring(q.quiver, static_cast<int>(o.m)));
  std::string text;
  if (o.format == "json") text = serialize(coloured, q.dims);
  else if (o.format == "dot") text = to_dot(coloured, q.dims);
  else if (o.format == "tikz") text = to_tikz(coloured, q.dims);
  else throw InvalidInput("unknown format " + o.format);
  auto [d, e] = dimension_type(coloured, q.dims);
  std::cout << "quiver " << coloured.vertices().size() << " vertices, " << coloured.arrows().size()
            << " arrows, type (" << d << "," << e << ")\n";
  if (o.out.empty()) std::cout << text;
  else write_file(o.out, text);
  return kOk;
}

struct TreeOpts {
  long m = 3, d = 0, e = 0;
  std::string out;
  bool stable = false;
};

int cmd_tree_module(const TreeOpts& o) {
  if (o.m < 3 || o.d < 0 || o.e < 0 || (o.d == 0 && o.e == 0)) throw InvalidInput("need m >= 3 and a nonzero (d,e)");
  TreeModule tm = construct_tree_module(o.d, o.e, static_cast<int>(o.m), o.stable);

  std::vector<Check> checks;
  auto [d, e] = std::pair<long, long>{tm.kronecker.dims["1"], tm.kronecker.dims["2"]};
  checks.push_back({"dims", d == o.d && e == o.e, Json{{"dims", {d, e}}}});
  checks.push_back({"tree", is_tree(tm.gamma), Json{{"vertices", tm.gamma.vertices.size()}, {"arrows", tm.gamma.arrows.size()}}});
  const bool small = d + e <= 60;
  IndecomposabilityResult ind = is_indecomposable(small ? tm.kronecker : tm.cover);
  checks.push_back({small ? "indecomposable" : "indecomposable (cover)", ind.indecomposable,
                    Json{{"end_dim", ind.end_dim}, {"top_dim", ind.top_dim}}});
  if (o.stable) checks.push_back({"stable", tm.stable, Json{{"note", tm.stability_note}}});

  Json report;
  report["command"] = "tree-module";
  report["input"] = Json{{"m", o.m}, {"d", o.d}, {"e", o.e}, {"stable", o.stable}};
  report["fundamental"] = {tm.plan.d0, tm.plan.e0};
  report["construction"] = tm.construction;
  report["tuple"] = tm.tuple;
  report["plan"] = plan_to_json(tm.plan);
  report["stages"] = stages_to_json(tm.stages);
  report["dims"] = {d, e};
  report["stable"] = tm.stable;
  report["stability_note"] = tm.stability_note;
  report["checks"] = checks_to_json(checks)["checks"];
  report["artifacts"] = Json::array();
  if (!o.out.empty()) {
    fs::path dir(o.out);
    const std::vector<std::pair<std::string, std::string>> files{
        {"representation.json", serialize(tm.kronecker)},
        {"cover.json", serialize(tm.cover)},
        {"coefficient_quiver.dot", to_dot(tm.gamma)}};
    for (const auto& [name, text] : files) {
      write_file(dir / name, text);
      report["artifacts"].push_back((dir / name).string());
    }
    report["artifacts"].push_back((dir / "report.json").string());
    write_file(dir / "report.json", report.dump(2) + "\n");
  }
  std::cout << report.dump(2) << "\n";
  for (const auto& c : checks)
    if (!c.pass) return kViolation;
  return kOk;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_verify(const std::string& in, const std::string& checks) {
  Representation x = deserialize_representation(read_file(in));
  std::vector<Check> res = run_checks(x, split_list(checks));
  std::cout << checks_to_json(res).dump(2) << "\n";
  for (const auto& c : res)
    if (!c.pass) return kViolation;
  return kOk;
}

int cmd_batch(long m, long max_d, unsigned jobs, const std::string& check) {
  if (m < 3 || max_d < 0) throw InvalidInput("need m >= 3 and max-d >= 0");
  if (check == "uniqueness") {
    auto rows = sweep_uniqueness(m, max_d, jobs);
    std::size_t bad = 0;
    std::cout << "d\te\tn\ttuples\tsimple_tuple\tok\n";
    for (const auto& r : rows) {
      std::cout << r.d << "\t" << r.e << "\t" << r.n << "\t" << r.brute.size() << "\t" << tuple_str(r.closed_form)
                << "\t" << (r.ok ? "yes" : "NO") << "\n";
      bad += !r.ok;
    }
    if (rows.empty()) std::cout << "empty sweep\n";
    else if (bad == 0) std::cout << "all unique: " << rows.size() << " dimension vectors\n";
    else std::cout << bad << " anomalies out of " << rows.size() << "\n";
    return bad ? kViolation : kOk;
  }
  if (check == "pipeline") {
    auto rows = sweep_pipeline(m, max_d, jobs);
    std::size_t bad = 0;
    std::cout << "d\te\tconstruction\tvertices\tarrows\ttree\tindecomposable\n";
    for (const auto& r : rows) {
      std::cout << r.d << "\t" << r.e << "\t" << r.construction << "\t" << r.gamma_vertices << "\t" << r.gamma_arrows
                << "\t" << (r.tree ? "yes" : "NO") << "\t" << (r.indecomposable ? "yes" : "NO");
      if (!r.error.empty()) std::cout << "\terror: " << r.error;
      std::cout << "\n";
      bad += !r.ok();
    }
    if (rows.empty()) std::cout << "empty sweep\n";
    else if (bad == 0) std::cout << "all pass: " << rows.size() << " dimension vectors\n";
    else std::cout << bad << " anomalies out of " << rows.size() << "\n";
    return bad ? kViolation : kOk;
  }
  throw InvalidInput("unknown check " + check);
}

int cmd_reflect(const std::string& in, const std::string& out, bool inverse) {
  Representation x = deserialize_representation(read_file(in));
  Representation r = inverse ? kronecker_coreflect(x) : kronecker_reflect(x);
  std::string text = serialize(r);
  if (out.empty()) std::cout << text;
  else write_file(out, text);
  return kOk;
}

int cmd_factor(const std::string& in, long e, const std::string& out) {
  Representation x = deserialize_representation(read_file(in));
  std::string text = serialize(factor_module(x, e));
  if (out.empty()) std::cout << text;
  else write_file(out, text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree modules of the m-Kronecker quiver"};
  app.require_subcommand(1);

  SimpleOpts so;
  auto* simple = app.add_subcommand("simple", "realize the stable simple quiver of type (d,e)");
  simple->add_option("--m", so.m, "number of arrows of K(m)")->required();
  simple->add_option("--d", so.d)->required();
  simple->add_option("--e", so.e)->required();
  simple->add_option("--n", so.n, "star arity (default ceil(e/d) clamped to [2,m-1])");
  simple->add_option("--out", so.out, "output file (default stdout)");
  simple->add_option("--format", so.format)->check(CLI::IsMember({"json", "dot", "tikz"}));

  TreeOpts to;
  auto* tree = app.add_subcommand("tree-module", "construct an indecomposable tree module of dimension (d,e)");
  tree->add_option("--m", to.m)->required();
  tree->add_option("--d", to.d)->required();
  tree->add_option("--e", to.e)->required();
  tree->add_option("--out", to.out, "output directory");
  tree->add_flag("--stable", to.stable, "require a stable construction");

  std::string vin, vchecks = "dims,tree,stable,indecomposable,exceptional";
  auto* verify = app.add_subcommand("verify", "check a representation file");
  verify->add_option("--in", vin)->required();
  verify->add_option("--checks", vchecks);

  long bm = 3, bmax = 0;
  unsigned bjobs = 1;
  std::string bcheck = "uniqueness";
  auto* batch = app.add_subcommand("batch", "sweep coprime (d,e) in the fundamental range");
  batch->add_option("--m", bm);
  batch->add_option("--max-d", bmax)->required();
  batch->add_option("--jobs", bjobs);
  batch->add_option("--check", bcheck)->check(CLI::IsMember({"uniqueness", "pipeline"}));

  std::string rin, rout;
  bool rinverse = false;
  auto* reflect = app.add_subcommand("reflect", "apply the reflection (d,e) -> (e, me-d) to a K(m) representation");
  reflect->add_option("--in", rin)->required();
  reflect->add_option("--out", rout);
  reflect->add_flag("--inverse", rinverse, "apply the inverse reflection");

  std::string fin, fout;
  long fe = 0;
  auto* factor = app.add_subcommand("factor", "remove degree-one sinks down to total sink dimension e");
  factor->add_option("--in", fin)->required();
  factor->add_option("--e", fe)->required();
  factor->add_option("--out", fout);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }
  try {
    if (*simple) return cmd_simple(so);
    if (*tree) return cmd_tree_module(to);
    if (*verify) return cmd_verify(vin, vchecks);
    if (*batch) return cmd_batch(bm, bmax, bjobs, bcheck);
    if (*reflect) return cmd_reflect(rin, rout, rinverse);
    if (*factor) return cmd_factor(fin, fe, fout);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const PropertyViolation& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return kViolation;
  }
  return kInvalid;
}
