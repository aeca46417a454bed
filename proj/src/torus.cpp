#include "c4c8/torus.hpp"

#include <algorithm>
#include <stdexcept>

namespace c4c8 {

namespace {

void check_params(const TorusParams& p) {
  if (p.m == 0 || p.n == 0)
    throw std::invalid_argument("torus parameters m and n must be >= 1");
}

void check_vertex(const TorusParams& p, const VertexId& v) {
  if (v.j < 1 || v.j > p.n)
    throw std::out_of_range("vertex column j outside [1, n]");
  if (v.i < 1 || v.i > p.m)
    throw std::out_of_range("vertex row i outside [1, m]");
  if (v.t > 3) throw std::out_of_range("vertex type t outside {0, 1, 2, 3}");
}

// 1-based cyclic successor/predecessor on [1, mod].
std::uint32_t next1(std::uint32_t x, std::uint32_t mod) {
  return x == mod ? 1 : x + 1;
}
std::uint32_t prev1(std::uint32_t x, std::uint32_t mod) {
  return x == 1 ? mod : x - 1;
}

}  // namespace

std::uint32_t encode_vertex(const TorusParams& p, const VertexId& v) {
  check_params(p);
  check_vertex(p, v);
  return ((v.j - 1) * p.m + (v.i - 1)) * 4 + v.t;
}

VertexId decode_vertex(const TorusParams& p, std::uint32_t point) {
  check_params(p);
  if (point >= p.point_count())
    throw std::out_of_range("vertex index outside [0, 4mn)");
  const std::uint32_t cell = point / 4;
  return VertexId{cell / p.m + 1, cell % p.m + 1, point % 4};
}

std::array<VertexId, 3> neighbors(const TorusParams& p, const VertexId& v) {
  check_params(p);
  check_vertex(p, v);
  const std::uint32_t j = v.j, i = v.i;
  std::array<VertexId, 3> out;
  switch (v.t) {
    case 0:  // in-cell 1 and 2; column bond to type 3 of the next column
      out = {VertexId{next1(j, p.n), i, 3}, VertexId{j, i, 2},
             VertexId{j, i, 1}};
      break;
    case 1:  // in-cell 3 and 0; row bond to type 2 of the next row
      out = {VertexId{j, i, 3}, VertexId{j, next1(i, p.m), 2},
             VertexId{j, i, 0}};
      break;
    case 2:  // in-cell 3 and 0; row bond to type 1 of the previous row
      out = {VertexId{j, i, 3}, VertexId{j, prev1(i, p.m), 1},
             VertexId{j, i, 0}};
      break;
    default:  // t == 3: in-cell 1 and 2; column bond to type 0 of the previous column
      out = {VertexId{prev1(j, p.n), i, 0}, VertexId{j, i, 1},
             VertexId{j, i, 2}};
      break;
  }
  std::sort(out.begin(), out.end(),
            [&](const VertexId& a, const VertexId& b) {
              return encode_vertex(p, a) < encode_vertex(p, b);
            });
  return out;
}

std::string vertex_label(const VertexId& v) {
  return "t" + std::to_string(v.t) + "_r" + std::to_string(v.i) + "_c" +
         std::to_string(v.j);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> TorusGraph::edges()
    const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(adjacency.size() * 3 / 2);
  for (std::uint32_t u = 0; u < adjacency.size(); ++u)
    for (std::uint32_t w : adjacency[u])
      if (u < w) out.emplace_back(u, w);
  std::sort(out.begin(), out.end());
  return out;
}

TorusGraph build_torus(const TorusParams& p, std::uint32_t point_cap) {
  check_params(p);
  // Overflow-safe cap check: m, n are 32-bit, so the product fits in 64 bits.
  const std::uint64_t points = 4ull * p.m * p.n;
  if (points > point_cap)
    throw std::length_error("torus would have " + std::to_string(points) +
                            " vertices, above the cap of " +
                            std::to_string(point_cap));
  TorusGraph g;
  g.params = p;
  g.adjacency.resize(static_cast<std::size_t>(points));
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    const auto nbrs = neighbors(p, decode_vertex(p, x));
    for (std::size_t k = 0; k < 3; ++k)
      g.adjacency[x][k] = encode_vertex(p, nbrs[k]);
  }
  return g;
}

ValidationReport validate_torus(const TorusGraph& g) {
  ValidationReport r;
  const std::uint32_t order = g.order();
  const std::uint64_t expected_order = 4ull * g.params.m * g.params.n;
  r.order = order;
  r.order_ok = order == expected_order && order > 0;
  r.degenerate = g.params.m == 1 || g.params.n == 1;

  r.simple = true;
  r.symmetric = true;
  std::uint64_t degree_sum = 0;
  for (std::uint32_t u = 0; u < order; ++u) {
    const auto& row = g.adjacency[u];
    degree_sum += row.size();
    for (std::size_t k = 0; k < row.size(); ++k) {
      const std::uint32_t w = row[k];
      if (w >= order || w == u) r.simple = false;
      if (k > 0 && row[k] <= row[k - 1]) r.simple = false;  // dup or unsorted
      if (w < order &&
          !std::binary_search(g.adjacency[w].begin(), g.adjacency[w].end(), u))
        r.symmetric = false;
    }
  }
  r.cubic = order > 0 && degree_sum == 3ull * order;
  r.size = static_cast<std::uint32_t>(degree_sum / 2);
  r.size_ok = degree_sum == 2ull * 6ull * g.params.m * g.params.n;

  // Breadth-first traversal from point 0.
  if (order > 0) {
    std::vector<bool> seen(order, false);
    std::vector<std::uint32_t> queue{0};
    seen[0] = true;
    std::size_t head = 0, reached = 1;
    while (head < queue.size()) {
      const std::uint32_t u = queue[head++];
      for (std::uint32_t w : g.adjacency[u]) {
        if (w < order && !seen[w]) {
          seen[w] = true;
          ++reached;
          queue.push_back(w);
        }
      }
    }
    r.connected = reached == order;
  }
  return r;
}

}  // namespace c4c8
