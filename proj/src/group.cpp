#include "c4c8/group.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "c4c8/errors.hpp"

namespace c4c8 {

std::size_t Graph::edge_count() const {
  std::size_t degree_sum = 0;
  for (const auto& row : adj) degree_sum += row.size();
  return degree_sum / 2;
}

bool Graph::adjacent(std::uint32_t u, std::uint32_t w) const {
  return std::binary_search(adj[u].begin(), adj[u].end(), w);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Graph::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(edge_count());
  for (std::uint32_t u = 0; u < adj.size(); ++u)
    for (std::uint32_t w : adj[u])
      if (u < w) out.emplace_back(u, w);
  std::sort(out.begin(), out.end());
  return out;
}

Graph Graph::from_edges(
    std::uint32_t order,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  Graph g;
  g.adj.resize(order);
  for (auto [a, b] : edges) {
    if (a >= order || b >= order)
      throw std::invalid_argument("edge endpoint outside [0, order)");
    if (a == b) throw std::invalid_argument("loops are not allowed");
    g.adj[a].push_back(b);
    g.adj[b].push_back(a);
  }
  for (auto& row : g.adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return g;
}

Graph to_graph(const TorusGraph& g) {
  Graph out;
  out.adj.resize(g.order());
  for (std::uint32_t u = 0; u < g.order(); ++u)
    out.adj[u].assign(g.adjacency[u].begin(), g.adjacency[u].end());
  return out;
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

PermGroup closure(const std::vector<Permutation>& generators,
                  std::size_t cap) {
  if (generators.empty())
    throw std::invalid_argument("closure requires at least one generator");
  const std::uint32_t degree = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw std::invalid_argument("closure: generators of mixed degree");

  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& g : generators) {
        Permutation y = compose(g, x);
        if (seen.insert(y).second) {
          if (seen.size() > cap)
            throw BudgetError("group closure exceeded the cap of " +
                              std::to_string(cap) + " elements");
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }

  PermGroup out;
  out.degree = degree;
  out.generators = generators;
  out.elements.assign(seen.begin(), seen.end());
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

std::vector<std::uint32_t> orbit(const std::vector<Permutation>& generators,
                                 std::uint32_t point) {
  if (generators.empty())
    throw std::invalid_argument("orbit requires at least one permutation");
  const std::uint32_t degree = generators.front().degree();
  if (point >= degree) throw std::out_of_range("orbit point outside degree");
  std::vector<bool> seen(degree, false);
  std::vector<std::uint32_t> queue{point};
  seen[point] = true;
  std::size_t head = 0;
  while (head < queue.size()) {
    const std::uint32_t x = queue[head++];
    for (const auto& g : generators) {
      const std::uint32_t y = g(x);
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<std::vector<std::uint32_t>> orbit_partition(
    const std::vector<Permutation>& generators, std::uint32_t degree) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> assigned(degree, false);
  for (std::uint32_t p = 0; p < degree; ++p) {
    if (assigned[p]) continue;
    auto orb = orbit(generators, p);
    for (std::uint32_t x : orb) assigned[x] = true;
    out.push_back(std::move(orb));
  }
  return out;
}

RegularityCheck check_regular_action(const PermGroup& g) {
  RegularityCheck r;
  if (g.degree == 0 || g.elements.empty()) return r;
  r.transitive = orbit(g.movers(), 0).size() == g.degree;
  std::size_t stabilizer = 0;
  for (const auto& e : g.elements) stabilizer += (e(0) == 0);
  r.stabilizer_trivial = stabilizer == 1;
  r.order_matches_degree = g.order() == g.degree;
  return r;
}

bool is_regular_action(const PermGroup& g) {
  return check_regular_action(g).regular();
}

bool is_normal(const PermGroup& sub, const PermGroup& group) {
  if (sub.degree != group.degree)
    throw std::invalid_argument("is_normal: degree mismatch");
  for (const auto& h : sub.elements)
    if (!group.contains(h))
      throw std::invalid_argument("is_normal: sub is not contained in group");
  for (const auto& g : group.movers()) {
    const Permutation gi = inverse(g);
    for (const auto& h : sub.movers()) {
      if (h.is_identity()) continue;
      if (!sub.contains(compose(gi, compose(h, g)))) return false;
    }
  }
  return true;
}

PermGroup intersect(const PermGroup& a, const PermGroup& b) {
  if (a.degree != b.degree)
    throw std::invalid_argument("intersect: degree mismatch");
  PermGroup out;
  out.degree = a.degree;
  std::set_intersection(a.elements.begin(), a.elements.end(),
                        b.elements.begin(), b.elements.end(),
                        std::back_inserter(out.elements));
  for (const auto& e : out.elements)
    if (!e.is_identity()) out.generators.push_back(e);
  return out;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.order())
    throw std::invalid_argument("is_automorphism: degree mismatch");
  for (std::uint32_t u = 0; u < g.order(); ++u)
    for (std::uint32_t w : g.adj[u])
      if (!g.adjacent(p(u), p(w))) return false;
  return true;
}

bool is_automorphism(const TorusGraph& g, const Permutation& p) {
  if (p.degree() != g.order())
    throw std::invalid_argument("is_automorphism: degree mismatch");
  for (std::uint32_t u = 0; u < g.order(); ++u) {
    const auto& image_row = g.adjacency[p(u)];
    for (std::uint32_t w : g.adjacency[u])
      if (!std::binary_search(image_row.begin(), image_row.end(), p(w)))
        return false;
  }
  return true;
}

}  // namespace c4c8
