#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "c4c8/group.hpp"

namespace c4c8 {

// The distinguished lattice symmetries:
//   g1: (j, i, t) -> (j, i-1, t)            row shift (any m, n)
//   g2: (j, i, t) -> (j+1, i, t)            column shift (any m, n)
//   g3: (j, i, t) -> (i, j, t^1)            transpose, swaps types 0<->1, 2<->3 (square only)
//   g4: (j, i, t) -> (n-j+1, n-i+1, 3-t)    point reflection (square only)
// Each is checked to be a graph automorphism at construction time.
struct GeneratorSet {
  TorusParams params;
  Permutation g1, g2;
  std::optional<Permutation> g3, g4;

  bool has_square_symmetries() const { return g3.has_value(); }

  // id in {1, 2, 3, 4}; throws std::invalid_argument for other ids or when
  // g3/g4 are requested on a rectangular torus.
  const Permutation& generator(int id) const;

  // g1, g2 and, when present, g3, g4.
  std::vector<Permutation> all() const;
};

GeneratorSet make_generators(const TorusParams& p);

// A formal product of generator powers, written left to right; evaluation
// applies the rightmost factor first, matching juxtaposition of mappings.
struct GroupWord {
  std::vector<std::pair<int, std::int64_t>> factors;  // (generator id, exponent)

  // "g1^2*g3", or "1" for the empty word.
  std::string to_string() const;
};

Permutation evaluate(const GroupWord& w, const GeneratorSet& gens);

struct RelationCheck {
  std::string relation;
  bool holds = false;
};

// The nine defining identities among g1..g4, each evaluated as an exact
// permutation equality on the [n, n] torus.
struct RelationReport {
  std::uint32_t n = 0;
  std::vector<RelationCheck> checks;

  bool all_hold() const;
};

RelationReport verify_relations(std::uint32_t n);

// Materializes H = <g1, g2>, K = <g3, g4>, G = <g1..g4> on the [n, n] torus
// and reports the facts behind the semidirect decomposition G = H x| K.
struct StructureReport {
  std::uint32_t n = 0;
  std::size_t H_order = 0;
  std::size_t K_order = 0;
  std::size_t G_order = 0;
  std::size_t intersection_order = 0;  // |H ∩ K|
  bool H_normal = false;
  bool order_product_matches = false;  // |H| * |K| == |G|
  bool K_abelian = false;
  bool K_all_involutions = false;      // every non-identity element squares to 1
  std::string K_type;                  // e.g. "C2 x C2"
  bool factorization_unique = false;   // every g is h*k exactly one way

  bool semidirect() const {
    return H_normal && intersection_order == 1 && order_product_matches;
  }
};

StructureReport verify_group_structure(std::uint32_t n,
                                       std::size_t cap = kDefaultClosureCap);

// A word in g1..g4 mapping v to w on the [n, n] torus, from the closed-form
// transport table. The returned word is normalized (exponents reduced mod
// the generator orders, zero factors dropped) and re-verified by applying it
// to v before being returned.
GroupWord transport(const GeneratorSet& gens, const VertexId& v,
                    const VertexId& w);
GroupWord transport(std::uint32_t n, const VertexId& v, const VertexId& w);

}  // namespace c4c8
