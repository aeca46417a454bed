#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "c4c8/generators.hpp"
#include "c4c8/group.hpp"

namespace c4c8 {

// Brute-force automorphism search refuses graphs larger than this by default;
// the bound is a guard rail, not a soft budget.
inline constexpr std::uint32_t kDefaultAutMaxOrder = 64;

// Default node/step budget shared by the backtracking searches.
inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

// S = { g in group : g(base) adjacent to base }. For a regular action this
// has exactly |N(base)| elements, cannot contain the identity, and is closed
// under inverses (every g here is a graph automorphism).
struct ConnectionSet {
  VertexId base;
  std::vector<Permutation> elements;  // canonical (lexicographic) order
};

// Throws std::invalid_argument unless `group` consists of automorphisms of
// `g` acting regularly on its vertices.
ConnectionSet connection_set(const TorusGraph& g, const PermGroup& group,
                             const VertexId& base);

// Cayley graph Cay(group, s): vertices are group elements (in canonical
// order), with an edge {g, g*s} for each s. Validates that s is a subset of
// the group, identity-free and inverse-closed.
Graph build_cayley(const PermGroup& group, const std::vector<Permutation>& s);
Graph build_cayley(const PermGroup& group, const ConnectionSet& s);

// Checks that the canonical map phi(g) = g(base) is an isomorphism from
// Cay(group, connection_set(...)) onto the torus: a bijection that preserves
// edges in both directions. Preconditions as for connection_set.
bool verify_cayley_isomorphism(const TorusGraph& g, const PermGroup& group,
                               const VertexId& base);

struct AutSearchStats {
  std::uint64_t nodes = 0;  // backtracking nodes expanded
};

// Exhaustive automorphism-group computation by anchored backtracking over
// vertex images, pruned with (degree, distance-multiset) vertex classes.
// Throws std::invalid_argument when g.order() > max_order and BudgetError
// when the node budget runs out.
PermGroup brute_force_aut(const Graph& g,
                          std::uint64_t node_budget = kDefaultSearchBudget,
                          std::uint32_t max_order = kDefaultAutMaxOrder,
                          AutSearchStats* stats = nullptr);
PermGroup brute_force_aut(const TorusGraph& g,
                          std::uint64_t node_budget = kDefaultSearchBudget,
                          std::uint32_t max_order = kDefaultAutMaxOrder,
                          AutSearchStats* stats = nullptr);

enum class RegularSearchStatus {
  kFound,            // a regular subgroup of order `degree` exists (witness attached)
  kNoneExhaustive,   // search completed: no regular subgroup of that order
  kBudgetExceeded,   // inconclusive
};

struct RegularSearchResult {
  RegularSearchStatus status = RegularSearchStatus::kBudgetExceeded;
  std::optional<PermGroup> subgroup;
  std::uint64_t steps = 0;  // closure attempts performed
};

// Searches `aut` for a subgroup of order `degree` all of whose non-identity
// elements are fixed-point-free (equivalent to acting regularly). Grows
// subgroups breadth-first from the trivial group by adjoining derangements;
// every intermediate subgroup of a regular subgroup survives the pruning, so
// a completed search is exhaustive.
RegularSearchResult find_regular_subgroup(
    const PermGroup& aut, std::uint32_t degree,
    std::uint64_t budget = kDefaultSearchBudget);

enum class CayleyAnswer { kYes, kNo, kInconclusive };

const char* to_string(CayleyAnswer a);

struct CayleyVerdict {
  TorusParams params;
  CayleyAnswer is_cayley = CayleyAnswer::kInconclusive;
  std::optional<bool> vertex_transitive;
  std::optional<std::size_t> aut_order;
  std::optional<std::size_t> witness_group_order;
  std::optional<std::size_t> connection_set_size;
  // A "yes" always carries a verified witness group; a "no" is only ever
  // reported when the underlying search completed exhaustively.
  std::optional<PermGroup> witness;
  bool exhaustive = false;
  bool budget_exhausted = false;
  std::string notes;
};

// Decides whether the [m, n] torus is a Cayley graph.
//   m == n: constructive -- G = <g1..g4> acts regularly and the canonical
//           isomorphism is verified, so the answer is yes with a witness.
//   m != n: brute-force Aut, then orbit count (not vertex-transitive => no),
//           then exhaustive regular-subgroup search. Budget or size limits
//           degrade the answer to inconclusive, never to a wrong verdict.
CayleyVerdict decide_cayley(const TorusParams& p,
                            std::uint64_t budget = kDefaultSearchBudget,
                            std::uint32_t aut_max_order = kDefaultAutMaxOrder);

}  // namespace c4c8
