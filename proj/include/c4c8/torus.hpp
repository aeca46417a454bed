#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace c4c8 {

// Parameters of the rhomboidal C4C8(R) nanotorus lattice: m rows (index i)
// and n columns (index j) of 4-vertex cells, wrapped toroidally. Row
// arithmetic is mod m, column arithmetic is mod n.
struct TorusParams {
  std::uint32_t m = 1;
  std::uint32_t n = 1;

  std::uint32_t point_count() const { return 4u * m * n; }

  friend bool operator==(const TorusParams&, const TorusParams&) = default;
};

// One lattice vertex in the 1-based public coordinates: column j in [1, n],
// row i in [1, m], and the in-cell type t in {0, 1, 2, 3}. Within a cell the
// four types form the 4-cycle 0-1-3-2; type 0 also bonds to type 3 of the
// next column, and type 1 to type 2 of the next row.
struct VertexId {
  std::uint32_t j = 1;
  std::uint32_t i = 1;
  std::uint32_t t = 0;

  friend bool operator==(const VertexId&, const VertexId&) = default;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

// Hard cap on 4*m*n, so a mistyped parameter cannot OOM the process.
inline constexpr std::uint32_t kDefaultPointCap = 1u << 20;

// Flat vertex index ((j-1)*m + (i-1))*4 + t; every export format and every
// permutation in this project acts on these indices.
std::uint32_t encode_vertex(const TorusParams& p, const VertexId& v);
VertexId decode_vertex(const TorusParams& p, std::uint32_t point);

// The three closed-neighborhood partners of v, sorted by flat index.
std::array<VertexId, 3> neighbors(const TorusParams& p, const VertexId& v);

// Node label used by the DOT export and diagnostics: "t{t}_r{i}_c{j}".
std::string vertex_label(const VertexId& v);

struct TorusGraph {
  TorusParams params;
  // adjacency[x] holds the three neighbor indices of x, sorted ascending.
  std::vector<std::array<std::uint32_t, 3>> adjacency;

  std::uint32_t order() const {
    return static_cast<std::uint32_t>(adjacency.size());
  }
  // Undirected edge list, each pair (a, b) with a < b, sorted ascending.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;
};

// Builds the full graph. Throws std::invalid_argument for m or n of 0 and
// std::length_error when 4*m*n exceeds point_cap.
TorusGraph build_torus(const TorusParams& p,
                       std::uint32_t point_cap = kDefaultPointCap);

struct ValidationReport {
  std::uint32_t order = 0;  // vertex count
  std::uint32_t size = 0;   // edge count
  bool order_ok = false;    // order == 4*m*n
  bool size_ok = false;     // size == 6*m*n
  bool cubic = false;
  bool simple = false;      // no loops, no repeated neighbor entries
  bool symmetric = false;   // adjacency is its own transpose
  bool connected = false;
  // m == 1 or n == 1: a wrap edge lands in the cell it started from. The
  // graph stays simple (the validation flags above still apply), but such
  // sizes are worth calling out in reports.
  bool degenerate = false;

  bool all_ok() const {
    return order_ok && size_ok && cubic && simple && symmetric && connected;
  }
};

ValidationReport validate_torus(const TorusGraph& g);

}  // namespace c4c8
