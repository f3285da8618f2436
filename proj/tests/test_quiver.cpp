#include "doctest.h"
#include "helpers.hpp"
#include "ktree/construct.hpp"
#include "ktree/error.hpp"
#include "ktree/quiver.hpp"
#include "ktree/serialize.hpp"

using namespace ktree;

namespace {

Representation k3_rep(long d, long e, std::vector<Matrix> mats) {
  Quiver q({"1", "2"}, {{"a1", "1", "2", 1}, {"a2", "1", "2", 2}, {"a3", "1", "2", 3}});
  DimVector dims;
  dims.set("1", d);
  dims.set("2", e);
  return make_representation(q, dims, {{"a1", mats[0]}, {"a2", mats[1]}, {"a3", mats[2]}});
}

Matrix one() {
  Matrix m(1, 1);
  m(0, 0) = 1;
  return m;
}

}  // namespace

TEST_SUITE("quiver") {
  TEST_CASE("quiver validation") {
    CHECK_THROWS_AS(Quiver({"a"}, {{"x", "a", "b", std::nullopt}}), InvalidInput);
    CHECK_THROWS_AS(Quiver({"a", "a"}, {}), InvalidInput);
    Quiver q({"i", "j"}, {{"x", "i", "j", std::nullopt}});
    CHECK(q.is_source("i"));
    CHECK(q.is_sink("j"));
    CHECK(q.degree("i") == 1);
    CHECK_THROWS_AS(Quiver({"i", "j", "k"}, {{"x", "i", "j", std::nullopt}, {"y", "j", "k", std::nullopt}})
                        .require_bipartite(),
                    InvalidInput);
  }

  TEST_CASE("coefficient quiver of small K(3) representations") {
    Matrix z(1, 1);
    auto zero = k3_rep(1, 1, {z, z, z});
    auto g0 = coefficient_quiver(zero);
    CHECK(g0.vertices.size() == 2);
    CHECK(g0.arrows.empty());
    CHECK_FALSE(is_tree(g0));

    auto two = k3_rep(1, 1, {one(), one(), z});
    auto g2 = coefficient_quiver(two);
    CHECK(g2.vertices.size() == 2);
    CHECK(g2.arrows.size() == 2);
    CHECK_FALSE(is_tree(g2));
  }

  TEST_CASE("is_tree on trivial inputs") {
    CoefficientQuiver single;
    single.vertices.push_back({"v", 0});
    single.labels.push_back("v/b1");
    CHECK(is_tree(single));
    CHECK_FALSE(is_tree(CoefficientQuiver{}));
  }

  TEST_CASE("realized s_(2,5) has a thin tree coefficient quiver") {
    auto s = realize_simple(simple_tuple(2, 5, 2));
    auto x = thin_representation(s.quiver);
    auto g = coefficient_quiver(x);
    CHECK(g.vertices.size() == 7);
    CHECK(g.arrows.size() == 6);
    CHECK(is_tree(g));
  }

  TEST_CASE("glue") {
    auto star3 = realize_star(3);
    auto g = glue(star3, star3.quiver.sinks().back(), star3, star3.quiver.sinks().front());
    auto b = g.quiver.require_bipartite();
    CHECK(b.sources.size() == 2);
    CHECK(b.sinks.size() == 5);
    CHECK(g.quiver.arrows().size() == 6);

    auto star2 = realize_star(2);
    auto h = glue(star2, star2.quiver.sinks().back(), star2, star2.quiver.sinks().front());
    CHECK(h.quiver.require_bipartite().sources.size() == 2);
    CHECK(h.quiver.require_bipartite().sinks.size() == 3);
    CHECK(h.quiver.arrows().size() == 4);
    CHECK(dimension_type(h.quiver, h.dims) == std::pair<long, long>{2, 3});

    CHECK_THROWS_AS(glue(star2, star2.quiver.sources().front(), star2, star2.quiver.sinks().front()), InvalidInput);
  }

  TEST_CASE("glue of s_(3,5) with a modified s_(5,8) has type (8,13)") {
    auto a = realize_simple(simple_tuple(3, 5, 2));
    auto b = realize_simple(simple_tuple(5, 8, 2));
    bool found = false;
    for (const auto& mod : modify(b, 3)) {
      if (dimension_type(mod.quiver.quiver, mod.quiver.dims) != std::pair<long, long>{5, 9}) continue;
      for (const auto& j : a.quiver.sinks()) {
        auto g = glue(a, j, mod.quiver, mod.sink);
        if (dimension_type(g.quiver, g.dims) == std::pair<long, long>{8, 13}) found = true;
      }
    }
    CHECK(found);
  }

  TEST_CASE("boundary quivers") {
    CHECK(boundary_quivers(realize_star(3).quiver).empty());
    CHECK(boundary_quivers(realize_simple(simple_tuple(2, 5, 2)).quiver).size() == 2);
    CHECK(boundary_quivers(realize_simple(simple_tuple(8, 13, 2)).quiver).size() == 2);
  }

  TEST_CASE("direct sum and dimension vectors") {
    auto x = thin_representation(realize_star(2).quiver);
    auto y = direct_sum(x, x);
    CHECK(y.dims.total() == 6);
    DimVector a, b;
    a.set("v", 1);
    a.set("w", 0);
    b.set("v", 1);
    CHECK(a == b);
  }
}

TEST_SUITE("serialize") {
  TEST_CASE("rationals") {
    CHECK(to_string(Rational(1, 2)) == "1/2");
    CHECK(to_string(Rational(-4, 2)) == "-2");
    CHECK(to_string(Rational(3)) == "3");
    CHECK(parse_rational("2/4") == Rational(1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
    CHECK_THROWS_AS(parse_rational("0.5"), InvalidInput);
  }

  TEST_CASE("representation round trip") {
    Matrix h(1, 1);
    h(0, 0) = Rational(1, 2);
    Matrix z(1, 1);
    auto x = k3_rep(1, 1, {h, one(), z});
    std::string text = serialize(x);
    CHECK(text.find("\"1/2\"") != std::string::npos);
    auto y = deserialize_representation(text);
    CHECK(y.quiver == x.quiver);
    CHECK(y.dims == x.dims);
    CHECK(y.matrix("a1") == h);
    CHECK(serialize(y) == text);
  }

  TEST_CASE("quiver round trip keeps colours and dims") {
    auto s = realize_simple(simple_tuple(8, 13, 2));
    auto back = deserialize_quiver(serialize(s.quiver, s.dims));
    CHECK(back.quiver == s.quiver);
    CHECK(back.dims == s.dims);
  }

  TEST_CASE("unknown field is named in the error") {
    auto j = nlohmann::json::parse(serialize(thin_representation(realize_star(2).quiver)));
    j["quiver"]["arrows"][1]["colr"] = 1;
    try {
      representation_from_json(j);
      FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
      CHECK(std::string(e.what()).find("colr") != std::string::npos);
      CHECK(e.path() == "$.quiver.arrows[1].colr");
    }
  }

  TEST_CASE("malformed matrices are rejected") {
    auto j = nlohmann::json::parse(serialize(thin_representation(realize_star(2).quiver)));
    auto first = j["matrices"].begin().key();
    j["matrices"][first] = nlohmann::json::array({nlohmann::json::array({"1", "1"})});
    CHECK_THROWS_AS(representation_from_json(j), InvalidInput);
  }

  TEST_CASE("dot and tikz mention every vertex") {
    auto s = realize_simple(simple_tuple(2, 5, 2));
    std::string dot = to_dot(s.quiver, s.dims);
    std::string tikz = to_tikz(s.quiver, s.dims);
    for (const auto& v : s.quiver.vertices()) {
      CHECK(dot.find(v) != std::string::npos);
      CHECK(tikz.find(v) != std::string::npos);
    }
  }
}
