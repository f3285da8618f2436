#include "doctest.h"
#include "helpers.hpp"
#include "ktree/colouring.hpp"
#include "ktree/construct.hpp"
#include "ktree/error.hpp"
#include "ktree/oracle.hpp"
#include "ktree/reflect.hpp"

using namespace ktree;
namespace to = testing_oracle;

namespace {

Representation coloured_cover(const QuiverWithDims& q, int m) {
  Quiver coloured = q.quiver.with_colours(stable_colouring(q.quiver, m));
  return generic_representation(coloured, q.dims);
}

std::pair<long, long> type_of(const Representation& x) { return dimension_type(x.quiver, x.dims); }

}  // namespace

TEST_SUITE("reflect") {
  TEST_CASE("cartan matrix and dimension rule") {
    auto c = cartan_matrix(kronecker_quiver(3));
    CHECK(c == std::vector<std::vector<long>>{{2, -3}, {-3, 2}});
    CHECK(kronecker_reflect_dim(1, 3, 3) == std::pair<long, long>{3, 8});
    CHECK(kronecker_reflect_dim(3, 8, 3) == std::pair<long, long>{8, 21});
    CHECK(kronecker_reflect_dim(0, 1, 3) == std::pair<long, long>{1, 3});
  }

  TEST_CASE("simple at a distant sink is fixed") {
    Quiver q({"a", "b", "c", "d"}, {{"x", "a", "b", std::nullopt}, {"y", "c", "d", std::nullopt}});
    DimVector dims;
    dims.set("b", 1);
    auto e = make_representation(q, dims, {{"x", Matrix(1, 0)}, {"y", Matrix(0, 0)}});
    auto r = reflect_source(e, "c");
    CHECK(r.dims == e.dims);
  }

  TEST_CASE("reflection of the star over K(3)") {
    auto star = realize_star(3);
    auto x = push_down(coloured_cover(star, 3), 3);
    auto y = kronecker_reflect(x);
    CHECK(y.dims["1"] == 3);
    CHECK(y.dims["2"] == 8);
    CHECK(hom_dim(y, y) == 1);
    auto back = kronecker_coreflect(y);
    CHECK(back.dims == x.dims);
    CHECK(hom_dim(x, back) == 1);
  }

  TEST_CASE("non-injective source map is rejected") {
    Quiver q({"i", "j"}, {{"a", "i", "j", std::nullopt}});
    DimVector dims;
    dims.set("i", 1);
    dims.set("j", 1);
    auto x = make_representation(q, dims, {{"a", Matrix(1, 1)}});
    CHECK_THROWS_AS(reflect_source(x, "i"), PropertyViolation);
    CHECK_THROWS_AS(reflect_source(x, "j"), InvalidInput);
  }

  TEST_CASE("reflect_all_sources on the paper's small covers") {
    auto star = coloured_cover(realize_star(3), 3);
    CHECK(type_of(reflect_all_sources(star, 3)) == std::pair<long, long>{3, 8});

    auto s25 = coloured_cover(realize_simple(simple_tuple(2, 5, 2)), 3);
    CHECK(type_of(reflect_all_sources(s25, 3)) == std::pair<long, long>{5, 13});
    auto f24 = factor_module(s25, 4);
    CHECK(type_of(f24) == std::pair<long, long>{2, 4});
    CHECK(type_of(reflect_all_sources(f24, 3)) == std::pair<long, long>{4, 10});
    auto f23 = factor_module(s25, 3);
    CHECK(type_of(f23) == std::pair<long, long>{2, 3});
    CHECK(type_of(reflect_all_sources(f23, 3)) == std::pair<long, long>{3, 7});
    CHECK(type_of(factor_module(s25, 5)) == std::pair<long, long>{2, 5});
  }

  TEST_CASE("tree basis after two reflections of the star") {
    auto star = coloured_cover(realize_star(3), 3);
    auto a = tree_basis_after_reflection(star, 3);
    CHECK(a.gamma.vertices.size() == 11);
    CHECK(a.gamma.arrows.size() == 10);
    auto b = tree_basis_after_reflection(a.rep, 3);
    CHECK(b.gamma.vertices.size() == 29);
    CHECK(b.gamma.arrows.size() == 28);
    CHECK(is_tree(b.gamma));
  }

  TEST_CASE("R+ undoes R-") {
    auto s25 = coloured_cover(realize_simple(simple_tuple(2, 5, 2)), 3);
    auto down = reflect_all_sources(s25, 3, false);
    auto up = reflect_all_sinks(down);
    CHECK(up.dims == s25.dims);
    auto aligned = with_quiver(up, s25.quiver);
    CHECK(hom_dim(s25, aligned) == 1);
    CHECK(to::dense_hom_dim(s25, aligned) == 1);
  }

  TEST_CASE("dual is an involution") {
    auto s25 = coloured_cover(realize_simple(simple_tuple(2, 5, 2)), 3);
    auto dd = dual(dual(s25));
    CHECK(dd.quiver == s25.quiver);
    for (const auto& a : s25.quiver.arrows()) CHECK(dd.matrix(a.id) == s25.matrix(a.id));
  }

  TEST_CASE("normalize_root") {
    auto p = normalize_root(8, 21, 3);
    CHECK(p.d0 == 1);
    CHECK(p.e0 == 3);
    REQUIRE(p.steps.size() == 2);
    CHECK(p.steps[0].d_after == 3);
    CHECK(p.steps[0].e_after == 8);
    CHECK(p.steps[1].d_after == 8);
    CHECK(p.steps[1].e_after == 21);
    CHECK(normalize_root(2, 3, 3).steps.empty());
    auto s = normalize_root(3, 1, 3);
    REQUIRE(s.steps.size() == 1);
    CHECK(s.steps[0].op == PlanStep::Op::Swap);
    CHECK(s.d0 == 1);
    CHECK(s.e0 == 3);
    CHECK_THROWS_AS(normalize_root(1, 5, 3), InvalidInput);
  }

  TEST_CASE("tree modules") {
    auto a = construct_tree_module(1, 3, 3);
    CHECK(a.construction == "star");
    CHECK(a.gamma.vertices.size() == 4);

    auto b = construct_tree_module(8, 21, 3);
    CHECK(b.gamma.vertices.size() == 29);
    CHECK(is_tree(b.gamma));
    CHECK(b.kronecker.dims["1"] == 8);
    CHECK(b.kronecker.dims["2"] == 21);

    auto c = construct_tree_module(2, 4, 3);
    CHECK(c.construction == "factor");
    CHECK(c.gamma.vertices.size() == 6);
    CHECK(is_tree(c.gamma));
    CHECK(is_indecomposable(c.kronecker).indecomposable);
    CHECK_THROWS_AS(construct_tree_module(2, 4, 3, true), PropertyViolation);

    auto e2 = construct_tree_module(0, 1, 3);
    CHECK(e2.construction == "simple-E2");
    CHECK(e2.kronecker.dims["2"] == 1);
  }
}
