#include "ktree/serialize.hpp"

#include <set>
#include <sstream>

#include "ktree/error.hpp"

namespace ktree {

namespace {

void only_fields(const nlohmann::json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!ok.count(it.key())) throw SchemaError(path + "." + it.key(), "unknown field \"" + it.key() + "\"");
  for (const char* f : allowed)
    if (!j.contains(f)) throw SchemaError(path + "." + f, "missing field \"" + std::string(f) + "\"");
}

const std::string& get_string(const nlohmann::json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get_ref<const std::string&>();
}

long get_int(const nlohmann::json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<long>();
}

const nlohmann::json& get_array(const nlohmann::json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

std::vector<std::string> string_list(const nlohmann::json& j, const std::string& path) {
  std::vector<std::string> out;
  const auto& a = get_array(j, path);
  for (std::size_t k = 0; k < a.size(); ++k) out.push_back(get_string(a[k], path + "[" + std::to_string(k) + "]"));
  return out;
}

nlohmann::json parse(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("$", std::string("invalid JSON: ") + e.what());
  }
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json quiver_to_json(const Quiver& q, const DimVector& dims) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& v : q.vertices()) j["vertices"].push_back(Json{{"id", v}, {"dim", dims[v]}});
  j["arrows"] = Json::array();
  for (const auto& a : q.arrows()) {
    Json ja{{"id", a.id}, {"source", a.source}, {"target", a.target}};
    ja["colour"] = a.colour ? Json(*a.colour) : Json(nullptr);
    j["arrows"].push_back(std::move(ja));
  }
  if (q.bipartition())
    j["bipartition"] = Json{{"I", q.bipartition()->sources}, {"J", q.bipartition()->sinks}};
  else
    j["bipartition"] = nullptr;
  return j;
}

Json representation_to_json(const Representation& x) {
  x.validate();
  Json j;
  j["quiver"] = quiver_to_json(x.quiver, x.dims);
  j["matrices"] = Json::object();
  for (const auto& a : x.quiver.arrows()) {
    const Matrix& m = x.matrix(a.id);
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
      rows.push_back(std::move(row));
    }
    j["matrices"][a.id] = std::move(rows);
  }
  j["basis"] = Json::object();
  for (const auto& v : x.quiver.vertices()) {
    auto it = x.basis.find(v);
    j["basis"][v] = it == x.basis.end() ? std::vector<std::string>{} : it->second;
  }
  return j;
}

QuiverWithDims quiver_from_json(const nlohmann::json& j, const std::string& path) {
  only_fields(j, path, {"vertices", "arrows", "bipartition"});
  std::vector<std::string> vertices;
  DimVector dims;
  const auto& jv = get_array(j["vertices"], path + ".vertices");
  for (std::size_t k = 0; k < jv.size(); ++k) {
    std::string p = path + ".vertices[" + std::to_string(k) + "]";
    only_fields(jv[k], p, {"id", "dim"});
    std::string id = get_string(jv[k]["id"], p + ".id");
    long d = get_int(jv[k]["dim"], p + ".dim");
    if (d < 0) throw SchemaError(p + ".dim", "negative dimension");
    vertices.push_back(id);
    dims.set(id, d);
  }
  std::vector<Arrow> arrows;
  const auto& ja = get_array(j["arrows"], path + ".arrows");
  for (std::size_t k = 0; k < ja.size(); ++k) {
    std::string p = path + ".arrows[" + std::to_string(k) + "]";
    only_fields(ja[k], p, {"id", "source", "target", "colour"});
    Arrow a{get_string(ja[k]["id"], p + ".id"), get_string(ja[k]["source"], p + ".source"),
            get_string(ja[k]["target"], p + ".target"), std::nullopt};
    if (!ja[k]["colour"].is_null()) a.colour = static_cast<int>(get_int(ja[k]["colour"], p + ".colour"));
    arrows.push_back(std::move(a));
  }
  std::optional<Bipartition> bip;
  if (!j["bipartition"].is_null()) {
    std::string p = path + ".bipartition";
    only_fields(j["bipartition"], p, {"I", "J"});
    bip = Bipartition{string_list(j["bipartition"]["I"], p + ".I"), string_list(j["bipartition"]["J"], p + ".J")};
  }
  try {
    return {Quiver(std::move(vertices), std::move(arrows), std::move(bip)), std::move(dims)};
  } catch (const SchemaError&) {
    throw;
  } catch (const InvalidInput& e) {
    throw SchemaError(path, e.what());
  }
}

Representation representation_from_json(const nlohmann::json& j, const std::string& path) {
  only_fields(j, path, {"quiver", "matrices", "basis"});
  QuiverWithDims qd = quiver_from_json(j["quiver"], path + ".quiver");
  Representation x{std::move(qd.quiver), std::move(qd.dims), {}, {}};
  const auto& jm = j["matrices"];
  if (!jm.is_object()) throw SchemaError(path + ".matrices", "expected an object");
  for (auto it = jm.begin(); it != jm.end(); ++it) {
    std::string p = path + ".matrices." + it.key();
    if (!x.quiver.has_arrow(it.key())) throw SchemaError(p, "unknown arrow \"" + it.key() + "\"");
    const Arrow& a = x.quiver.arrow(it.key());
    std::size_t rows = x.dims[a.target], cols = x.dims[a.source];
    const auto& jr = get_array(it.value(), p);
    if (jr.size() != rows) throw SchemaError(p, "expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      std::string pr = p + "[" + std::to_string(r) + "]";
      const auto& row = get_array(jr[r], pr);
      if (row.size() != cols) throw SchemaError(pr, "expected " + std::to_string(cols) + " entries");
      for (std::size_t c = 0; c < cols; ++c) {
        std::string pc = pr + "[" + std::to_string(c) + "]";
        try {
          m(r, c) = parse_rational(get_string(row[c], pc));
        } catch (const SchemaError&) {
          throw;
        } catch (const InvalidInput& e) {
          throw SchemaError(pc, e.what());
        }
      }
    }
    x.matrices.emplace(it.key(), std::move(m));
  }
  const auto& jb = j["basis"];
  if (!jb.is_object()) throw SchemaError(path + ".basis", "expected an object");
  for (auto it = jb.begin(); it != jb.end(); ++it) {
    std::string p = path + ".basis." + it.key();
    if (!x.quiver.has_vertex(it.key())) throw SchemaError(p, "unknown vertex \"" + it.key() + "\"");
    auto labels = string_list(it.value(), p);
    if (!labels.empty()) x.basis[it.key()] = std::move(labels);
  }
  try {
    x.validate();
  } catch (const InvalidInput& e) {
    throw SchemaError(path, e.what());
  }
  return x;
}

std::string serialize(const Quiver& q, const DimVector& dims) { return quiver_to_json(q, dims).dump(2) + "\n"; }
std::string serialize(const Representation& x) { return representation_to_json(x).dump(2) + "\n"; }

QuiverWithDims deserialize_quiver(const std::string& text) { return quiver_from_json(parse(text)); }
Representation deserialize_representation(const std::string& text) { return representation_from_json(parse(text)); }

std::string to_dot(const Quiver& q, const DimVector& dims) {
  std::ostringstream os;
  os << "digraph Q {\n  rankdir=LR;\n";
  for (const auto& v : q.vertices()) os << "  " << quote(v) << " [label=" << quote(v + ":" + std::to_string(dims[v])) << "];\n";
  for (const auto& a : q.arrows()) {
    os << "  " << quote(a.source) << " -> " << quote(a.target);
    if (a.colour) os << " [label=" << quote(std::to_string(*a.colour)) << "]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const CoefficientQuiver& g) {
  std::ostringstream os;
  os << "digraph Gamma {\n  rankdir=LR;\n";
  auto name = [](const BasisToken& t) { return quote(t.vertex + "#" + std::to_string(t.index)); };
  for (std::size_t k = 0; k < g.vertices.size(); ++k)
    os << "  " << name(g.vertices[k]) << " [label=" << quote(g.labels[k]) << "];\n";
  for (const auto& a : g.arrows) {
    std::string label = a.arrow;
    if (a.coefficient != 1) label += " (" + to_string(a.coefficient) + ")";
    os << "  " << name(a.source) << " -> " << name(a.target) << " [label=" << quote(label) << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_tikz(const Quiver& q, const DimVector& dims) {
  Bipartition b = q.require_bipartite();
  std::ostringstream os;
  os << "\\begin{tikzpicture}[>=stealth]\n";
  auto node = [&](const std::string& v, int x, std::size_t y) {
    os << "  \\node (" << v << ") at (" << x << ",-" << y << ") {$" << dims[v] << "$};\n";
  };
  for (std::size_t k = 0; k < b.sources.size(); ++k) node(b.sources[k], 0, k);
  for (std::size_t k = 0; k < b.sinks.size(); ++k) node(b.sinks[k], 3, k);
  for (const auto& a : q.arrows()) {
    os << "  \\draw[->] (" << a.source << ") -- (" << a.target << ")";
    if (a.colour) os << " node[midway,above] {\\scriptsize " << *a.colour << "}";
    os << ";\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

}  // namespace ktree
