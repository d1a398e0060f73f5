#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "parlearn/matrix.hpp"
#include "parlearn/multigraph.hpp"
#include "parlearn/quantum_graph.hpp"

namespace parlearn {

/// H(alpha, beta): vertex weights alpha and a symmetric edge-weight matrix
/// beta (0 = non-edge).
class WeightedGraph {
 public:
  /// Throws ValidationError unless q >= 1, alpha has q entries and beta is
  /// symmetric q x q.
  WeightedGraph(Vector alpha, Matrix beta);

  std::size_t size() const noexcept { return alpha_.size(); }
  const Vector& alpha() const noexcept { return alpha_; }
  const Matrix& beta() const noexcept { return beta_; }
  const Rational& alpha(std::size_t i) const { return alpha_[i]; }
  const Rational& beta(std::size_t i, std::size_t j) const { return beta_(i, j); }

  /// Vertex i becomes sigma[i].
  WeightedGraph permuted(const std::vector<std::size_t>& sigma) const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  Vector alpha_;
  Matrix beta_;
};

using Permutation = std::vector<std::size_t>;

/// Partition function: sum over all maps V(g) -> V(H) of the product of image
/// vertex weights and image edge weights (per edge, with multiplicity). Labels
/// are ignored. Factorizes over connected components and enumerates the maps
/// of each component depth-first.
Rational hom(const LabeledMultigraph& g, const WeightedGraph& h);

/// Reference evaluation: plain loop over all q^|V| maps, no factorization.
Rational hom_naive(const LabeledMultigraph& g, const WeightedGraph& h);

Rational hom_quantum(const QuantumGraph& x, const WeightedGraph& h);

bool is_twin_free(const WeightedGraph& h);

/// Merges vertices with identical beta rows, summing their alpha. Keeps the
/// first vertex of each class in its original relative order.
WeightedGraph make_twin_free(const WeightedGraph& h);

/// All weight-preserving automorphisms, identity first.
std::vector<Permutation> automorphisms(const WeightedGraph& h);
bool is_rigid(const WeightedGraph& h);

/// sigma with alpha2[sigma[i]] == alpha1[i] and
/// beta2[sigma[i]][sigma[j]] == beta1[i][j], if one exists.
std::optional<Permutation> weighted_iso(const WeightedGraph& h1,
                                        const WeightedGraph& h2);

namespace targets {
/// Independence-polynomial graph: alpha = (1, x), beta = [[1,1],[1,0]].
WeightedGraph independence(const Rational& x);
/// Unit-weight complete graph K_m (no loops).
WeightedGraph complete(std::size_t m);
}  // namespace targets

}  // namespace parlearn
