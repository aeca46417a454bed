#include "c4c8/generators.hpp"

#include <stdexcept>
#include <unordered_set>

namespace c4c8 {

namespace {

// Euclidean remainder into [0, mod).
std::uint32_t wrap(std::int64_t value, std::uint32_t mod) {
  const std::int64_t r = value % static_cast<std::int64_t>(mod);
  return static_cast<std::uint32_t>(r < 0 ? r + mod : r);
}

}  // namespace

const Permutation& GeneratorSet::generator(int id) const {
  switch (id) {
    case 1:
      return g1;
    case 2:
      return g2;
    case 3:
    case 4:
      if (!has_square_symmetries())
        throw std::invalid_argument(
            "g3/g4 exist only on square tori (m == n)");
      return id == 3 ? *g3 : *g4;
    default:
      throw std::invalid_argument("generator id must be in {1, 2, 3, 4}");
  }
}

std::vector<Permutation> GeneratorSet::all() const {
  std::vector<Permutation> out{g1, g2};
  if (g3) out.push_back(*g3);
  if (g4) out.push_back(*g4);
  return out;
}

GeneratorSet make_generators(const TorusParams& p) {
  const TorusGraph torus = build_torus(p);
  const std::uint32_t m = p.m, n = p.n, points = torus.order();

  // f maps 0-based (column, row, type) to 0-based (column, row, type).
  auto make = [&](auto&& f, const char* name) {
    std::vector<std::uint32_t> images(points);
    for (std::uint32_t x = 0; x < points; ++x) {
      const std::uint32_t t = x % 4, cell = x / 4;
      const auto [J, I, T] = f(cell / m, cell % m, t);
      images[x] = (J * m + I) * 4 + T;
    }
    Permutation perm{std::move(images)};
    if (!is_automorphism(torus, perm))
      throw std::logic_error(std::string("generator ") + name +
                             " failed the automorphism check");
    return perm;
  };

  GeneratorSet gens;
  gens.params = p;
  gens.g1 = make(
      [&](std::uint32_t j, std::uint32_t i, std::uint32_t t) {
        return std::tuple{j, wrap(static_cast<std::int64_t>(i) - 1, m), t};
      },
      "g1");
  gens.g2 = make(
      [&](std::uint32_t j, std::uint32_t i, std::uint32_t t) {
        return std::tuple{wrap(static_cast<std::int64_t>(j) + 1, n), i, t};
      },
      "g2");
  if (m == n) {
    gens.g3 = make(
        [&](std::uint32_t j, std::uint32_t i, std::uint32_t t) {
          return std::tuple{i, j, t ^ 1u};
        },
        "g3");
    gens.g4 = make(
        [&](std::uint32_t j, std::uint32_t i, std::uint32_t t) {
          return std::tuple{n - 1 - j, n - 1 - i, 3u - t};
        },
        "g4");
  }
  return gens;
}

std::string GroupWord::to_string() const {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& [id, exp] : factors) {
    if (!out.empty()) out += '*';
    out += "g" + std::to_string(id);
    if (exp != 1) out += "^" + std::to_string(exp);
  }
  return out;
}

Permutation evaluate(const GroupWord& w, const GeneratorSet& gens) {
  Permutation acc = Permutation::identity(gens.params.point_count());
  // Rightmost factor acts first, so accumulate right to left.
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it)
    acc = compose(power(gens.generator(it->first), it->second), acc);
  return acc;
}

RelationReport verify_relations(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("verify_relations requires n >= 1");
  const GeneratorSet gens = make_generators(TorusParams{n, n});
  const Permutation &g1 = gens.g1, &g2 = gens.g2, &g3 = *gens.g3,
                    &g4 = *gens.g4;

  RelationReport report;
  report.n = n;
  auto add = [&](std::string relation, bool holds) {
    report.checks.push_back({std::move(relation), holds});
  };
  add("g1^n = 1", power(g1, n).is_identity());
  add("g2^n = 1", power(g2, n).is_identity());
  add("g3^2 = 1", compose(g3, g3).is_identity());
  add("g4^2 = 1", compose(g4, g4).is_identity());
  add("g1*g2 = g2*g1", compose(g1, g2) == compose(g2, g1));
  add("g3*g4 = g4*g3", compose(g3, g4) == compose(g4, g3));
  add("g1*g4 = g4*g1^-1", compose(g1, g4) == compose(g4, inverse(g1)));
  add("g2*g4 = g4*g2^-1", compose(g2, g4) == compose(g4, inverse(g2)));
  add("g2*g3 = g3*g1^-1", compose(g2, g3) == compose(g3, inverse(g1)));
  return report;
}

bool RelationReport::all_hold() const {
  for (const auto& c : checks)
    if (!c.holds) return false;
  return !checks.empty();
}

namespace {

// Isomorphism type for the tiny abelian groups this project meets; falls
// back to a descriptive string elsewhere.
std::string classify_group(const PermGroup& g, bool abelian) {
  const std::size_t k = g.order();
  if (k == 1) return "C1";
  if (k == 2) return "C2";
  if (k == 3) return "C3";
  if (k == 4) {
    for (const auto& e : g.elements)
      if (e.order() == 4) return "C4";
    return "C2 x C2";
  }
  return (abelian ? "abelian of order " : "nonabelian of order ") +
         std::to_string(k);
}

}  // namespace

StructureReport verify_group_structure(std::uint32_t n, std::size_t cap) {
  if (n == 0)
    throw std::invalid_argument("verify_group_structure requires n >= 1");
  const GeneratorSet gens = make_generators(TorusParams{n, n});
  const PermGroup H = closure({gens.g1, gens.g2}, cap);
  const PermGroup K = closure({*gens.g3, *gens.g4}, cap);
  const PermGroup G = closure(gens.all(), cap);

  StructureReport r;
  r.n = n;
  r.H_order = H.order();
  r.K_order = K.order();
  r.G_order = G.order();
  r.intersection_order = intersect(H, K).order();
  r.H_normal = is_normal(H, G);
  r.order_product_matches = r.H_order * r.K_order == r.G_order;

  r.K_abelian = true;
  for (const auto& a : K.elements)
    for (const auto& b : K.elements)
      if (compose(a, b) != compose(b, a)) r.K_abelian = false;
  r.K_all_involutions = true;
  for (const auto& a : K.elements)
    if (!a.is_identity() && !compose(a, a).is_identity())
      r.K_all_involutions = false;
  r.K_type = classify_group(K, r.K_abelian);

  // Every g in G factors as h*k in exactly one way iff the |H|*|K| products
  // are pairwise distinct and cover G.
  std::unordered_set<Permutation, PermutationHash> products;
  for (const auto& h : H.elements)
    for (const auto& k : K.elements) products.insert(compose(h, k));
  bool covers = products.size() == r.G_order;
  for (const auto& p : products)
    if (!G.contains(p)) covers = false;
  r.factorization_unique =
      covers && products.size() == r.H_order * r.K_order;
  return r;
}

namespace {

// The closed-form transport table for v = (j,i,a) -> w = (j',i',b) with
// a > b; the remaining mixed pairs are obtained by inverting these. All
// exponent arithmetic is signed, normalized afterwards.
GroupWord transport_word(std::uint32_t n, const VertexId& v,
                         const VertexId& w) {
  const std::int64_t j = v.j, i = v.i, jp = w.j, ip = w.i;
  if (v.t == w.t) return GroupWord{{{1, i - ip}, {2, jp - j}}};
  if (v.t < w.t) {
    // Invert the word for the opposite direction: reverse the factors and
    // negate the exponents.
    GroupWord back = transport_word(n, w, v);
    GroupWord out;
    for (auto it = back.factors.rbegin(); it != back.factors.rend(); ++it)
      out.factors.emplace_back(it->first, -it->second);
    return out;
  }
  switch (v.t * 4 + w.t) {
    case 3 * 4 + 2:
      return GroupWord{{{1, j - ip}, {2, jp - i}, {3, 1}}};
    case 3 * 4 + 0:
      return GroupWord{{{1, -ip - i + 1}, {2, jp + j - 1}, {4, 1}}};
    case 3 * 4 + 1:
      return GroupWord{{{1, -ip - j + 1}, {2, jp + i - 1}, {3, 1}, {4, 1}}};
    case 2 * 4 + 1:
      return GroupWord{{{1, -ip - i + 1}, {2, jp + j - 1}, {4, 1}}};
    case 2 * 4 + 0:
      return GroupWord{{{1, -ip - j + 1}, {2, jp + i - 1}, {4, 1}, {3, 1}}};
    default:  // 1 -> 0
      return GroupWord{{{1, j - ip}, {2, jp - i}, {3, 1}}};
  }
}

GroupWord normalize_word(const GroupWord& w, std::uint32_t n) {
  GroupWord out;
  for (const auto& [id, exp] : w.factors) {
    const std::uint32_t mod = (id == 1 || id == 2) ? n : 2;
    const std::uint32_t reduced = wrap(exp, mod);
    if (reduced != 0) out.factors.emplace_back(id, reduced);
  }
  return out;
}

}  // namespace

GroupWord transport(const GeneratorSet& gens, const VertexId& v,
                    const VertexId& w) {
  if (!gens.has_square_symmetries())
    throw std::invalid_argument("transport is defined on square tori only");
  const std::uint32_t n = gens.params.n;
  const std::uint32_t from = encode_vertex(gens.params, v);
  const std::uint32_t to = encode_vertex(gens.params, w);

  const GroupWord word = normalize_word(transport_word(n, v, w), n);
  if (evaluate(word, gens)(from) != to)
    throw std::logic_error("transport word " + word.to_string() +
                           " fails to map its source to its target");
  return word;
}

GroupWord transport(std::uint32_t n, const VertexId& v, const VertexId& w) {
  if (n == 0) throw std::invalid_argument("transport requires n >= 1");
  return transport(make_generators(TorusParams{n, n}), v, w);
}

}  // namespace c4c8
