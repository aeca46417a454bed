#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "c4c8/perm.hpp"
#include "c4c8/torus.hpp"

namespace c4c8 {

// A simple undirected graph as sorted adjacency lists. Cayley graphs and the
// small oracle graphs in the tests use this shape; TorusGraph converts into
// it for the generic algorithms.
struct Graph {
  std::vector<std::vector<std::uint32_t>> adj;

  std::uint32_t order() const { return static_cast<std::uint32_t>(adj.size()); }
  std::size_t edge_count() const;
  bool adjacent(std::uint32_t u, std::uint32_t w) const;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

  // Validates vertex ranges, rejects loops, ignores duplicate pairs.
  static Graph from_edges(
      std::uint32_t order,
      const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);
};

Graph to_graph(const TorusGraph& g);

// Default element cap for closure(); large enough for every group this
// project materializes, small enough to catch runaway generator sets.
inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

// A concrete permutation group: the full element list, canonically sorted
// (lexicographic on image tables -- the identity is always elements[0]),
// plus the generators it was built from.
struct PermGroup {
  std::uint32_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(const Permutation& p) const;

  // Generators if any were recorded, otherwise all elements; every element
  // walk below works off this so trivial subgroups behave.
  const std::vector<Permutation>& movers() const {
    return generators.empty() ? elements : generators;
  }
};

// Breadth-first closure from the identity under left-composition by the
// generators. Throws std::invalid_argument on an empty generator list or
// mixed degrees, BudgetError when the element count would exceed `cap`.
PermGroup closure(const std::vector<Permutation>& generators,
                  std::size_t cap = kDefaultClosureCap);

// Orbit of `point` under the group generated by `generators`, sorted.
std::vector<std::uint32_t> orbit(const std::vector<Permutation>& generators,
                                 std::uint32_t point);

// All orbits, each sorted, ordered by smallest member.
std::vector<std::vector<std::uint32_t>> orbit_partition(
    const std::vector<Permutation>& generators, std::uint32_t degree);

struct RegularityCheck {
  bool transitive = false;
  bool stabilizer_trivial = false;   // stabilizer of point 0
  bool order_matches_degree = false;

  bool regular() const { return transitive && stabilizer_trivial; }
};

RegularityCheck check_regular_action(const PermGroup& g);
bool is_regular_action(const PermGroup& g);

// True iff sub is a normal subgroup of group. It suffices to conjugate
// generators by generators: if those all land in sub, every conjugate does.
// Throws std::invalid_argument when sub is not contained in group.
bool is_normal(const PermGroup& sub, const PermGroup& group);

// Intersection of two groups on the same point set.
PermGroup intersect(const PermGroup& a, const PermGroup& b);

bool is_automorphism(const Graph& g, const Permutation& p);
bool is_automorphism(const TorusGraph& g, const Permutation& p);

}  // namespace c4c8
