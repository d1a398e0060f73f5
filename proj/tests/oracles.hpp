#pragma once
// Brute-force reference implementations used only as test oracles. None of
// them call into the library code they check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "parlearn/matrix.hpp"
#include "parlearn/multigraph.hpp"
#include "parlearn/weighted_graph.hpp"

namespace oracle {

using parlearn::Edge;
using parlearn::LabeledMultigraph;
using parlearn::Matrix;
using parlearn::Rational;
using parlearn::Vector;
using parlearn::Vertex;
using parlearn::WeightedGraph;

// Every simple graph on vertex set {0..n-1} (not up to isomorphism).
inline std::vector<LabeledMultigraph> all_simple_graphs(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<LabeledMultigraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) edges.emplace_back(slots[s].first, slots[s].second);
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

inline bool adjacent(const LabeledMultigraph& g, Vertex a, Vertex b) {
  for (const auto& e : g.edges())
    if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return true;
  return false;
}

// Proper m-colorings by trying all m^n assignments.
inline std::uint64_t coloring_count(const LabeledMultigraph& g, std::size_t m) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> color(n, 0);
  std::uint64_t count = 0;
  while (true) {
    bool proper = true;
    for (const auto& e : g.edges())
      if (color[e.u] == color[e.v]) proper = false;
    if (proper) ++count;
    std::size_t i = 0;
    while (i < n && ++color[i] == m) color[i++] = 0;
    if (i == n) break;
  }
  return count;
}

// sum over independent sets S of x^|S|.
inline Rational independence_polynomial(const LabeledMultigraph& g, const Rational& x) {
  const std::size_t n = g.num_vertices();
  Rational total = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool independent = true;
    for (const auto& e : g.edges())
      if ((s >> e.u & 1) && (s >> e.v & 1)) independent = false;
    if (!independent) continue;
    Rational term = 1;
    for (std::size_t i = 0; i < static_cast<std::size_t>(std::popcount(s)); ++i) term *= x;
    total += term;
  }
  return total;
}

// Direct transcription of the partition-function sum over all maps.
inline Rational hom_by_maps(const LabeledMultigraph& g, const WeightedGraph& h) {
  const std::size_t n = g.num_vertices(), q = h.size();
  std::vector<std::size_t> t(n, 0);
  Rational total = 0;
  while (true) {
    Rational term = 1;
    for (Vertex v = 0; v < n; ++v) term *= h.alpha(t[v]);
    for (const auto& e : g.edges()) term *= h.beta(t[e.u], t[e.v]);
    total += term;
    std::size_t i = 0;
    while (i < n && ++t[i] == q) t[i++] = 0;
    if (i == n) break;
  }
  return total;
}

// Label-preserving isomorphism by trying every permutation.
inline bool brute_isomorphic(const LabeledMultigraph& a, const LabeledMultigraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() ||
      a.arity() != b.arity())
    return false;
  const std::size_t n = a.num_vertices();
  std::vector<Vertex> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  auto sorted_edges = [](std::vector<Edge> e) {
    std::sort(e.begin(), e.end());
    return e;
  };
  const auto target = sorted_edges({b.edges().begin(), b.edges().end()});
  do {
    bool labels_ok = true;
    for (std::size_t l = 0; l < a.arity(); ++l) {
      const auto la = a.labels()[l], lb = b.labels()[l];
      if (la.has_value() != lb.has_value() || (la && sigma[*la] != *lb)) labels_ok = false;
    }
    if (!labels_ok) continue;
    std::vector<Edge> mapped;
    for (const auto& e : a.edges()) mapped.emplace_back(sigma[e.u], sigma[e.v]);
    if (sorted_edges(mapped) == target) return true;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

inline Rational random_rational(std::mt19937_64& rng, long bound, bool allow_zero = true) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  while (true) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    if (allow_zero || r != 0) return r;
  }
}

inline WeightedGraph random_weighted_graph(std::mt19937_64& rng, std::size_t q,
                                           long bound = 3) {
  Vector alpha(q);
  for (auto& a : alpha) a = random_rational(rng, bound, false);
  Matrix beta(q, q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = i; j < q; ++j) beta(i, j) = beta(j, i) = random_rational(rng, bound);
  return WeightedGraph(alpha, beta);
}

// Random multigraph with loops; labels 1..k on distinct vertices.
inline LabeledMultigraph random_multigraph(std::mt19937_64& rng, std::size_t max_vertices,
                                           std::size_t max_edges, std::size_t k = 0) {
  const std::size_t lo = std::max<std::size_t>(k, 1);
  const std::size_t n = std::uniform_int_distribution<std::size_t>(lo, std::max(lo, max_vertices))(rng);
  const std::size_t m = std::uniform_int_distribution<std::size_t>(0, max_edges)(rng);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) edges.emplace_back(pick(rng), pick(rng));
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::optional<Vertex>> labels(order.begin(), order.begin() + static_cast<long>(k));
  return LabeledMultigraph(n, std::move(edges), k, std::move(labels));
}

// Permutation of {0..n-1} fixing the labeled vertices of g.
inline std::vector<Vertex> random_label_fixing_permutation(std::mt19937_64& rng,
                                                           const LabeledMultigraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> free;
  for (Vertex v = 0; v < n; ++v)
    if (!g.label_of(v)) free.push_back(v);
  auto shuffled = free;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  std::vector<Vertex> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  for (std::size_t i = 0; i < free.size(); ++i) sigma[free[i]] = shuffled[i];
  return sigma;
}

// H* of the worked trace: alpha = (1, 2), beta = [[1,1],[1,0]].
inline WeightedGraph h_star() {
  return WeightedGraph({Rational(1), Rational(2)}, Matrix{{1, 1}, {1, 0}});
}

}  // namespace oracle
