#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "c4c8/errors.hpp"
#include "c4c8/generators.hpp"
#include "c4c8/group.hpp"
#include "c4c8/perm.hpp"
#include "oracles.hpp"

using namespace c4c8;

namespace {

Permutation random_permutation(std::uint32_t degree, std::mt19937& rng) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

}  // namespace

TEST_CASE("constructor validates bijections") {
  CHECK_NOTHROW(Permutation({1, 0, 2}));
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);
}

TEST_CASE("identity, compose, inverse, power laws") {
  std::mt19937 rng(99);
  for (std::uint32_t degree : {1u, 2u, 5u, 16u, 37u}) {
    const Permutation id = Permutation::identity(degree);
    CHECK(id.is_identity());
    for (int round = 0; round < 6; ++round) {
      const Permutation p = random_permutation(degree, rng);
      const Permutation q = random_permutation(degree, rng);
      const Permutation r = random_permutation(degree, rng);
      CHECK(compose(p, id) == p);
      CHECK(compose(id, p) == p);
      CHECK(compose(p, inverse(p)).is_identity());
      CHECK(compose(inverse(p), p).is_identity());
      CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
      CHECK(power(p, 0) == id);
      CHECK(power(p, -1) == inverse(p));
      CHECK(power(p, 5) == compose(p, compose(p, compose(p, compose(p, p)))));
      CHECK(power(p, static_cast<std::int64_t>(p.order())).is_identity());
    }
  }
  CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)),
                  std::invalid_argument);
}

TEST_CASE("compose applies the right factor first") {
  // p sends 0->1, q sends 1->2; (q then p at the end) means compose(p, q)
  // routes x through q first.
  const Permutation p({1, 0, 2});
  const Permutation q({0, 2, 1});
  CHECK(compose(p, q)(1) == 2);  // q: 1->2, p: 2->2
  CHECK(compose(q, p)(1) == 0);  // p: 1->0, q: 0->0
}

TEST_CASE("g2*g3 on [3,3] maps v^3_{1,2} to v^2_{3,1}") {
  const GeneratorSet gens = make_generators(TorusParams{3, 3});
  const TorusParams p{3, 3};
  const Permutation g2g3 = compose(gens.g2, *gens.g3);
  CHECK(g2g3(encode_vertex(p, {1, 2, 3})) == encode_vertex(p, {3, 1, 2}));
}

TEST_CASE("inverse of the row shift adds one row back") {
  const TorusParams p{3, 3};
  const GeneratorSet gens = make_generators(p);
  const Permutation g1_inv = inverse(gens.g1);
  for (std::uint32_t x = 0; x < p.point_count(); ++x) {
    const VertexId v = decode_vertex(p, x);
    const VertexId expected{v.j, v.i == p.m ? 1 : v.i + 1, v.t};
    CHECK(g1_inv(x) == encode_vertex(p, expected));
  }
  CHECK(inverse(*gens.g3) == *gens.g3);
  CHECK(inverse(Permutation::identity(8)).is_identity());
}

TEST_CASE("order and cycle_string") {
  const Permutation p({1, 2, 0, 4, 3});  // (0 1 2)(3 4)
  CHECK(p.order() == 6);
  CHECK(p.cycle_string() == "(0 1 2)(3 4)");
  CHECK(Permutation::identity(4).cycle_string() == "()");
  CHECK(Permutation::identity(4).order() == 1);
  CHECK(p.fixed_point_count() == 0);
  CHECK(Permutation({0, 1, 3, 2}).fixed_point_count() == 2);
}

TEST_CASE("closure sizes on the torus groups") {
  CHECK(closure(make_generators(TorusParams{2, 2}).all()).order() == 16);
  CHECK(closure(make_generators(TorusParams{3, 3}).all()).order() == 36);
  CHECK(closure(make_generators(TorusParams{1, 1}).all()).order() == 4);
  CHECK(closure({Permutation::identity(5)}).order() == 1);
}

TEST_CASE("closure is independent of generator order") {
  const GeneratorSet gens = make_generators(TorusParams{3, 3});
  auto list = gens.all();
  const PermGroup reference = closure(list);
  std::mt19937 rng(5);
  for (int round = 0; round < 4; ++round) {
    std::shuffle(list.begin(), list.end(), rng);
    const PermGroup shuffled = closure(list);
    CHECK(shuffled.elements == reference.elements);
  }
}

TEST_CASE("closure enforces its cap and its preconditions") {
  const GeneratorSet gens = make_generators(TorusParams{2, 2});
  CHECK_THROWS_AS(closure(gens.all(), 5), BudgetError);
  CHECK_THROWS_AS(closure({}), std::invalid_argument);
  CHECK_THROWS_AS(
      closure({Permutation::identity(3), Permutation::identity(4)}),
      std::invalid_argument);
}

TEST_CASE("every closure element is an automorphism (n <= 5)") {
  for (std::uint32_t n = 1; n <= 5; ++n) {
    const TorusGraph torus = build_torus(TorusParams{n, n});
    const PermGroup group = closure(make_generators(TorusParams{n, n}).all());
    for (const auto& e : group.elements) CHECK(is_automorphism(torus, e));
  }
}

TEST_CASE("orbits") {
  const GeneratorSet gens = make_generators(TorusParams{3, 3});
  const TorusParams p{3, 3};
  // g1 shifts rows within a fixed column and type.
  const auto row_orbit = orbit({gens.g1}, encode_vertex(p, {1, 1, 0}));
  CHECK(row_orbit == std::vector<std::uint32_t>{
                         encode_vertex(p, {1, 1, 0}), encode_vertex(p, {1, 2, 0}),
                         encode_vertex(p, {1, 3, 0})});
  CHECK(orbit(gens.all(), 0).size() == 36);
  CHECK(orbit({Permutation::identity(6)}, 5) ==
        std::vector<std::uint32_t>{5});
  const auto parts = orbit_partition({gens.g1}, p.point_count());
  CHECK(parts.size() == 12);  // one orbit per (column, type) pair
  for (const auto& part : parts) CHECK(part.size() == 3);
}

TEST_CASE("regularity check distinguishes the three conditions") {
  const PermGroup G = closure(make_generators(TorusParams{3, 3}).all());
  const RegularityCheck on_torus = check_regular_action(G);
  CHECK(on_torus.transitive);
  CHECK(on_torus.stabilizer_trivial);
  CHECK(on_torus.order_matches_degree);
  CHECK(is_regular_action(G));

  // S3 acting on 3 points: transitive but order 6 != 3.
  const PermGroup s3 = closure({Permutation({1, 0, 2}), Permutation({1, 2, 0})});
  CHECK(s3.order() == 6);
  const RegularityCheck s3_check = check_regular_action(s3);
  CHECK(s3_check.transitive);
  CHECK_FALSE(s3_check.stabilizer_trivial);
  CHECK_FALSE(s3_check.order_matches_degree);
  CHECK_FALSE(is_regular_action(s3));

  // The trivial group on 4 points: stabilizer trivial but not transitive.
  const PermGroup trivial = closure({Permutation::identity(4)});
  CHECK_FALSE(check_regular_action(trivial).transitive);
  CHECK_FALSE(is_regular_action(trivial));
}

TEST_CASE("regular action reaches each point through exactly one element") {
  for (std::uint32_t n = 2; n <= 5; ++n) {
    const PermGroup G = closure(make_generators(TorusParams{n, n}).all());
    REQUIRE(is_regular_action(G));
    std::vector<std::uint32_t> hits(G.degree, 0);
    for (const auto& e : G.elements) ++hits[e(0)];
    for (std::uint32_t target = 0; target < G.degree; ++target)
      CHECK(hits[target] == 1);
  }
}

TEST_CASE("normality: H is normal in G, K is not (n = 3)") {
  const GeneratorSet gens = make_generators(TorusParams{3, 3});
  const PermGroup H = closure({gens.g1, gens.g2});
  const PermGroup K = closure({*gens.g3, *gens.g4});
  const PermGroup G = closure(gens.all());
  CHECK(is_normal(H, G));
  CHECK_FALSE(is_normal(K, G));
  CHECK(is_normal(G, G));
  CHECK(is_normal(closure({Permutation::identity(G.degree)}), G));
  CHECK_THROWS_AS(is_normal(K, H), std::invalid_argument);  // not a subset
}

TEST_CASE("intersection of H and K is trivial; Lagrange holds") {
  for (std::uint32_t n : {2u, 3u, 4u}) {
    const GeneratorSet gens = make_generators(TorusParams{n, n});
    const PermGroup H = closure({gens.g1, gens.g2});
    const PermGroup K = closure({*gens.g3, *gens.g4});
    const PermGroup G = closure(gens.all());
    const PermGroup HK = intersect(H, K);
    CHECK(HK.order() == 1);
    CHECK(HK.elements.front().is_identity());
    CHECK(intersect(G, G).order() == G.order());
    CHECK(G.order() % intersect(H, G).order() == 0);
    CHECK(intersect(H, G).order() == H.order());
  }
}

TEST_CASE("is_automorphism on graphs and tori") {
  const TorusGraph torus = build_torus(TorusParams{3, 3});
  const GeneratorSet gens = make_generators(TorusParams{3, 3});
  CHECK(is_automorphism(torus, *gens.g3));
  CHECK(is_automorphism(torus, Permutation::identity(36)));

  // Swapping two vertices of different type degree patterns breaks edges.
  std::vector<std::uint32_t> swap01(16);
  std::iota(swap01.begin(), swap01.end(), 0u);
  std::swap(swap01[0], swap01[4]);
  CHECK_FALSE(
      is_automorphism(build_torus(TorusParams{2, 2}), Permutation(swap01)));

  const Graph square = testing::cycle(4);
  CHECK(is_automorphism(square, Permutation({1, 2, 3, 0})));
  CHECK_FALSE(is_automorphism(square, Permutation({1, 0, 2, 3})));
  CHECK_THROWS_AS(is_automorphism(square, Permutation::identity(5)),
                  std::invalid_argument);
}
