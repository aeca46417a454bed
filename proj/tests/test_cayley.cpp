#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>

#include "c4c8/cayley.hpp"
#include "c4c8/errors.hpp"
#include "c4c8/generators.hpp"
#include "c4c8/group.hpp"
#include "oracles.hpp"

using namespace c4c8;

namespace {

const VertexId kBase{1, 1, 0};

bool contains_all(const PermGroup& big, const PermGroup& small) {
  return std::all_of(small.elements.begin(), small.elements.end(),
                     [&](const Permutation& p) { return big.contains(p); });
}

}  // namespace

TEST_CASE("connection set of [2,2] is the expected three automorphisms") {
  const TorusParams p{2, 2};
  const TorusGraph torus = build_torus(p);
  const GeneratorSet gens = make_generators(p);
  const PermGroup group = closure(gens.all());
  const ConnectionSet s = connection_set(torus, group, kBase);

  std::vector<Permutation> expected = {
      *gens.g3, compose(gens.g1, *gens.g4),
      compose(gens.g1, compose(gens.g2, compose(*gens.g3, *gens.g4)))};
  std::sort(expected.begin(), expected.end());
  CHECK(s.elements == expected);
  CHECK(s.base == kBase);
}

TEST_CASE("connection sets are size 3, identity-free, inverse-closed") {
  for (std::uint32_t n = 2; n <= 6; ++n) {
    const TorusGraph torus = build_torus(TorusParams{n, n});
    const PermGroup group = closure(make_generators(TorusParams{n, n}).all());
    const ConnectionSet s = connection_set(torus, group, kBase);
    CHECK(s.elements.size() == 3);
    CHECK(std::is_sorted(s.elements.begin(), s.elements.end()));
    const std::uint32_t base_idx = encode_vertex(torus.params, kBase);
    for (const auto& e : s.elements) {
      CHECK_FALSE(e.is_identity());
      CHECK(std::binary_search(s.elements.begin(), s.elements.end(),
                               inverse(e)));
      CHECK(is_automorphism(torus, e));
      // phi(e) = e(base) must be one of base's three neighbors.
      const auto& nbrs = torus.adjacency[base_idx];
      CHECK(std::find(nbrs.begin(), nbrs.end(), e(base_idx)) != nbrs.end());
    }
  }
}

TEST_CASE("connection_set rejects non-regular groups") {
  const TorusGraph torus = build_torus(TorusParams{2, 2});
  const PermGroup trivial = closure({Permutation::identity(16)});
  CHECK_THROWS_AS(connection_set(torus, trivial, kBase),
                  std::invalid_argument);
  // The full automorphism group is transitive but too large to be regular.
  const PermGroup aut = brute_force_aut(torus, kDefaultSearchBudget, 256);
  REQUIRE(aut.order() == 128);
  CHECK_THROWS_AS(connection_set(torus, aut, kBase), std::invalid_argument);
}

TEST_CASE("build_cayley on the Klein four-group gives K4") {
  const Permutation a({1, 0, 3, 2});
  const Permutation b({2, 3, 0, 1});
  const PermGroup v4 = closure({a, b});
  REQUIRE(v4.order() == 4);
  std::vector<Permutation> s = {a, b, compose(a, b)};
  const Graph cay = build_cayley(v4, s);
  CHECK(cay.adj == testing::k4().adj);
}

TEST_CASE("build_cayley on C5 with {x, x^-1} gives the 5-cycle") {
  const Permutation x({1, 2, 3, 4, 0});
  const PermGroup c5 = closure({x});
  REQUIRE(c5.order() == 5);
  const Graph cay = build_cayley(c5, {x, power(x, 4)});
  CHECK(cay.order() == 5);
  CHECK(cay.edge_count() == 5);
  for (const auto& row : cay.adj) CHECK(row.size() == 2);
  // A connected 2-regular graph on 5 vertices is the 5-cycle; its
  // automorphism group is the dihedral group of order 10.
  CHECK(brute_force_aut(cay).order() == 10);
}

TEST_CASE("build_cayley validates the connection multiset") {
  const Permutation x({1, 2, 3, 4, 0});
  const PermGroup c5 = closure({x});
  CHECK_THROWS_AS(build_cayley(c5, std::vector<Permutation>{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_cayley(c5, {Permutation::identity(5)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_cayley(c5, {x}), std::invalid_argument);  // x^-1 missing
  CHECK_THROWS_AS(build_cayley(c5, {x, x, power(x, 4)}), std::invalid_argument);
  CHECK_THROWS_AS(build_cayley(c5, {Permutation({1, 0, 2, 3, 4})}),
                  std::invalid_argument);  // not an element of the group
}

TEST_CASE("Cayley graph of the generated group is the torus itself") {
  const TorusParams p{2, 2};
  const TorusGraph torus = build_torus(p);
  const PermGroup group = closure(make_generators(p).all());
  const Graph cay = build_cayley(group, connection_set(torus, group, kBase));
  CHECK(cay.order() == 16);
  CHECK(cay.edge_count() == 24);
  for (const auto& row : cay.adj) CHECK(row.size() == 3);
}

TEST_CASE("canonical isomorphism verifies on square tori") {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    const TorusGraph torus = build_torus(TorusParams{n, n});
    const PermGroup group = closure(make_generators(TorusParams{n, n}).all());
    CHECK(verify_cayley_isomorphism(torus, group, kBase));
  }
}

TEST_CASE("a different regular group also witnesses K4 as Cayley") {
  // [1,1] is K4; the cyclic group C4 acts regularly on its vertices too.
  const TorusGraph torus = build_torus(TorusParams{1, 1});
  const PermGroup c4 = closure({Permutation({1, 2, 3, 0})});
  REQUIRE(is_regular_action(c4));
  CHECK(connection_set(torus, c4, kBase).elements.size() == 3);
  CHECK(verify_cayley_isomorphism(torus, c4, kBase));
}

TEST_CASE("brute_force_aut matches the exhaustive oracle on small graphs") {
  const struct {
    Graph g;
    std::size_t expected_order;
  } cases[] = {
      {testing::k4(), 24},           // S4
      {testing::path(4), 2},         // reversal only
      {testing::cycle(6), 12},       // dihedral
      {testing::two_triangles(), 72},// (S3 x S3) x| C2
      {testing::petersen(), 120},    // S5
  };
  for (const auto& c : cases) {
    const PermGroup aut =
        brute_force_aut(c.g, kDefaultSearchBudget, 256);
    CHECK(aut.order() == c.expected_order);
    CHECK(aut.elements == testing::naive_automorphisms(c.g));
    for (const auto& e : aut.elements) CHECK(is_automorphism(c.g, e));
    CHECK(closure(aut.movers()).order() == aut.order());
  }
}

TEST_CASE("brute_force_aut on tori contains the generated group") {
  const std::size_t expected_aut[] = {24, 128, 72};  // n = 1, 2, 3
  for (std::uint32_t n = 1; n <= 3; ++n) {
    const TorusGraph torus = build_torus(TorusParams{n, n});
    const PermGroup aut = brute_force_aut(torus, kDefaultSearchBudget, 256);
    CHECK(aut.order() == expected_aut[n - 1]);
    const PermGroup group = closure(make_generators(TorusParams{n, n}).all());
    CHECK(contains_all(aut, group));
  }
}

TEST_CASE("brute_force_aut guard rails") {
  CHECK_THROWS_AS(brute_force_aut(Graph{}), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_aut(testing::k4(), 0), std::invalid_argument);
  CHECK_THROWS_AS(
      brute_force_aut(build_torus(TorusParams{3, 3}), kDefaultSearchBudget, 16),
      std::invalid_argument);
  CHECK_THROWS_AS(brute_force_aut(build_torus(TorusParams{3, 2}), 50),
                  BudgetError);
  AutSearchStats stats;
  brute_force_aut(testing::k4(), kDefaultSearchBudget, 64, &stats);
  CHECK(stats.nodes > 0);
}

TEST_CASE("find_regular_subgroup finds witnesses where they exist") {
  // Aut(K4) = S4 on 4 points contains C4 and the Klein group.
  const PermGroup s4 = brute_force_aut(testing::k4());
  const RegularSearchResult on_k4 = find_regular_subgroup(s4, 4);
  REQUIRE(on_k4.status == RegularSearchStatus::kFound);
  CHECK(on_k4.subgroup->order() == 4);
  CHECK(is_regular_action(*on_k4.subgroup));

  // S3 on 3 points contains the rotation subgroup C3.
  const PermGroup s3 = closure({Permutation({1, 0, 2}), Permutation({1, 2, 0})});
  const RegularSearchResult on_s3 = find_regular_subgroup(s3, 3);
  REQUIRE(on_s3.status == RegularSearchStatus::kFound);
  CHECK(on_s3.subgroup->order() == 3);
  for (const auto& e : on_s3.subgroup->elements)
    if (!e.is_identity()) CHECK(e.fixed_point_count() == 0);

  // The full automorphism group of [2,2] contains the generated group.
  const TorusGraph torus = build_torus(TorusParams{2, 2});
  const PermGroup aut = brute_force_aut(torus, kDefaultSearchBudget, 256);
  const RegularSearchResult on_torus = find_regular_subgroup(aut, 16);
  REQUIRE(on_torus.status == RegularSearchStatus::kFound);
  CHECK(on_torus.subgroup->order() == 16);
  CHECK(verify_cayley_isomorphism(torus, *on_torus.subgroup, kBase));
}

TEST_CASE("find_regular_subgroup proves absence for [3,2]") {
  const TorusGraph torus = build_torus(TorusParams{3, 2});
  const PermGroup aut = brute_force_aut(torus, kDefaultSearchBudget, 256);
  REQUIRE(aut.order() == 96);
  const RegularSearchResult res = find_regular_subgroup(aut, 24);
  CHECK(res.status == RegularSearchStatus::kNoneExhaustive);
  CHECK_FALSE(res.subgroup.has_value());
  CHECK(res.steps > 0);
}

TEST_CASE("find_regular_subgroup respects its budget and preconditions") {
  const TorusGraph torus = build_torus(TorusParams{3, 2});
  const PermGroup aut = brute_force_aut(torus, kDefaultSearchBudget, 256);
  const RegularSearchResult res = find_regular_subgroup(aut, 24, 1);
  CHECK(res.status == RegularSearchStatus::kBudgetExceeded);
  CHECK_FALSE(res.subgroup.has_value());

  CHECK_THROWS_AS(find_regular_subgroup(PermGroup{}, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(find_regular_subgroup(aut, 16), std::invalid_argument);
  CHECK_THROWS_AS(find_regular_subgroup(aut, 24, 0), std::invalid_argument);

  // Lagrange pruning: a group of order 6 has no subgroup of order 5, so S3
  // acting on 5 points (two of them fixed) is settled without any search.
  const PermGroup s3 =
      closure({Permutation({1, 0, 2, 3, 4}), Permutation({1, 2, 0, 3, 4})});
  CHECK(find_regular_subgroup(s3, 5).status ==
        RegularSearchStatus::kNoneExhaustive);
}

TEST_CASE("decide_cayley: square tori are Cayley graphs, constructively") {
  for (std::uint32_t n : {1u, 3u}) {
    const CayleyVerdict v = decide_cayley(TorusParams{n, n});
    CHECK(v.is_cayley == CayleyAnswer::kYes);
    CHECK(v.exhaustive);
    CHECK(v.vertex_transitive.has_value());
    CHECK(*v.vertex_transitive);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->order() == 4u * n * n);
    CHECK(v.witness_group_order == 4u * n * n);
    CHECK(v.connection_set_size == 3);
    CHECK(v.notes.find("constructive witness") != std::string::npos);
  }
}

TEST_CASE("decide_cayley: [3,2] and [2,3] are not Cayley graphs") {
  for (const TorusParams p : {TorusParams{3, 2}, TorusParams{2, 3}}) {
    const CayleyVerdict v = decide_cayley(p);
    CHECK(v.is_cayley == CayleyAnswer::kNo);
    CHECK(v.exhaustive);
    CHECK_FALSE(v.budget_exhausted);
    REQUIRE(v.aut_order.has_value());
    CHECK(*v.aut_order == 96);
    CHECK(*v.aut_order % 6 == 0);  // 6mn divides |Aut| per the edge count
    REQUIRE(v.vertex_transitive.has_value());
    CHECK_FALSE(*v.vertex_transitive);
    CHECK_FALSE(v.witness.has_value());
    CHECK(v.notes.find("not vertex-transitive") != std::string::npos);
    CHECK(v.notes.find("previously published") != std::string::npos);
    CHECK(v.notes.find("disagrees") != std::string::npos);
  }
}

TEST_CASE("decide_cayley: degraded outcomes stay honest") {
  // Rectangular and too large for the brute-force path: refused outright.
  CHECK_THROWS_AS(decide_cayley(TorusParams{5, 4}), std::invalid_argument);
  // Budget exhaustion yields inconclusive, never a verdict.
  const CayleyVerdict v = decide_cayley(TorusParams{3, 2}, 50);
  CHECK(v.is_cayley == CayleyAnswer::kInconclusive);
  CHECK(v.budget_exhausted);
  CHECK_FALSE(v.exhaustive);
  CHECK_FALSE(v.witness.has_value());
}

TEST_CASE("CayleyAnswer names") {
  CHECK(std::string(to_string(CayleyAnswer::kYes)) == "yes");
  CHECK(std::string(to_string(CayleyAnswer::kNo)) == "no");
  CHECK(std::string(to_string(CayleyAnswer::kInconclusive)) == "inconclusive");
}
