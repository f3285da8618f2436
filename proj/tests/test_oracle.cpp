#include <numeric>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "ktree/colouring.hpp"
#include "ktree/construct.hpp"
#include "ktree/error.hpp"
#include "ktree/oracle.hpp"
#include "ktree/reflect.hpp"
#include "ktree/stability.hpp"

using namespace ktree;
namespace to = testing_oracle;

namespace {

Representation kron(long d, long e, int m, std::mt19937& rng, int density) {
  Representation x{kronecker_quiver(m), {}, {}, {}};
  x.dims.set("1", d);
  x.dims.set("2", e);
  std::uniform_int_distribution<int> coin(0, 99), val(-2, 2);
  for (const auto& a : x.quiver.arrows()) {
    Matrix mat(e, d);
    for (long r = 0; r < e; ++r)
      for (long c = 0; c < d; ++c)
        if (coin(rng) < density) mat(r, c) = val(rng);
    x.matrices.emplace(a.id, mat);
  }
  return make_representation(x.quiver, x.dims, x.matrices);
}

Representation simple_at(const std::string& v, int m) {
  Quiver q = kronecker_quiver(m);
  DimVector dims;
  dims.set(v, 1);
  std::map<std::string, Matrix> mats;
  for (const auto& a : q.arrows()) mats.emplace(a.id, Matrix(dims["2"], dims["1"]));
  return make_representation(q, dims, mats);
}

Representation s25_kronecker() {
  auto s = realize_simple(simple_tuple(2, 5, 2));
  return realize_kronecker(s.quiver, s.dims, stable_colouring(s.quiver, 3), 3);
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("hom between simples") {
    auto e1 = simple_at("1", 3), e2 = simple_at("2", 3);
    CHECK(hom_dim(e1, e1) == 1);
    CHECK(hom_dim(e1, e2) == 0);
    CHECK(hom_dim(e2, e1) == 0);
  }

  TEST_CASE("s_(2,5) is Schurian over K(3)") {
    auto x = s25_kronecker();
    CHECK(hom_dim(x, x) == 1);
    CHECK(to::dense_hom_dim(x, x) == 1);
  }

  TEST_CASE("hom dimension agrees with a dense solver on random representations") {
    std::mt19937 rng(20261016);
    for (int trial = 0; trial < 60; ++trial) {
      long d = 1 + trial % 3, e = 1 + (trial / 3) % 4;
      int density = 20 + 10 * (trial % 6);
      auto x = kron(d, e, 3, rng, density);
      auto y = kron(1 + (trial + 1) % 3, 1 + trial % 4, 3, rng, density);
      CHECK(hom_dim(x, y) == to::dense_hom_dim(x, y));
      CHECK(hom_dim(x, x) == to::dense_hom_dim(x, x));
    }
  }

  TEST_CASE("hom basis elements intertwine") {
    auto x = s25_kronecker();
    auto y = direct_sum(x, x);
    auto h = hom_space(x, y);
    CHECK(h.dim() == 2);
    for (const auto& phi : h.basis)
      for (const auto& a : x.quiver.arrows())
        CHECK(phi.at(a.target) * x.matrix(a.id) == y.matrix(a.id) * phi.at(a.source));
  }

  TEST_CASE("euler form") {
    auto s = realize_simple(simple_tuple(8, 13, 2));
    CHECK(euler_form(s.quiver, s.dims, s.dims) == 1);
    CHECK(kronecker_euler_form(1, 3, 1, 3, 3) == 1);
    CHECK(kronecker_euler_form(2, 5, 2, 5, 3) == -1);
    auto x = s25_kronecker();
    CHECK(ext_dim(x, x) == 2);
  }

  TEST_CASE("indecomposability") {
    CHECK(is_indecomposable(simple_at("1", 3)).indecomposable);
    auto x = s25_kronecker();
    CHECK(is_indecomposable(x).indecomposable);
    auto r = is_indecomposable(direct_sum(x, x));
    CHECK_FALSE(r.indecomposable);
    CHECK(r.end_dim == 4);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness_is_idempotent);
    for (const auto& [v, p] : *r.witness) CHECK(p * p == p);

    auto s = realize_simple(simple_tuple(2, 5, 2));
    auto cover = generic_representation(s.quiver.with_colours(stable_colouring(s.quiver, 3)), s.dims);
    CHECK(is_indecomposable(push_down(factor_module(cover, 4), 3)).indecomposable);

    Representation zero{kronecker_quiver(3), {}, {}, {}};
    for (const auto& a : zero.quiver.arrows()) zero.matrices.emplace(a.id, Matrix(0, 0));
    CHECK_THROWS_AS(is_indecomposable(make_representation(zero.quiver, zero.dims, zero.matrices)), InvalidInput);
  }

  TEST_CASE("brute force tuples") {
    CHECK(brute_simple_tuples(8, 13, 2) == std::vector<Tuple>{{1, 1, 0, 1, 1}});
    CHECK(brute_simple_tuples(3, 5, 2) == std::vector<Tuple>{{1, 1}});
    CHECK(brute_simple_tuples(2, 4, 2).empty());
    for (long d = 2; d <= 10; ++d)
      for (long e = d + 1; e <= 2 * d + 1; ++e) CHECK(brute_simple_tuples(d, e, 2) == to::brute_tuples(d, e, 2));
  }

  TEST_CASE("root classification") {
    auto a = classify_root(1, 3, 3);
    CHECK(a.kind == RootKind::Real);
    CHECK(a.q == 1);
    auto b = classify_root(2, 5, 3);
    CHECK(b.kind == RootKind::Imaginary);
    CHECK(b.q == -1);
    CHECK(b.slope_bound);
    CHECK(classify_root(1, 5, 3).kind == RootKind::NotRoot);
    CHECK(classify_root(0, 1, 3).kind == RootKind::Real);
    CHECK(classify_root(8, 21, 3).kind == RootKind::Real);
  }

  TEST_CASE("coordinate stability agrees with generic stability on thin covers") {
    for (long d = 2; d <= 5; ++d)
      for (long e = d + 1; e <= 2 * d + 1; ++e) {
        if (std::gcd(d, e) != 1) continue;
        auto s = realize_simple(simple_tuple(d, e, default_n(d, e, 3)));
        auto x = thin_representation(s.quiver);
        CHECK(is_stable_coordinate(x).stable == is_stable_generic(s.quiver, s.dims).stable);
      }
    Quiver two({"i", "j1", "j2", "j3", "k", "l1", "l2", "l3"},
               {{"a", "i", "j1", std::nullopt}, {"b", "i", "j2", std::nullopt}, {"c", "i", "j3", std::nullopt},
                {"d", "k", "l1", std::nullopt}, {"e", "k", "l2", std::nullopt}, {"f", "k", "l3", std::nullopt}});
    CHECK_FALSE(is_stable_coordinate(thin_representation(two)).stable);
  }
}
