#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "parlearn/multigraph.hpp"
#include "parlearn/weighted_graph.hpp"

namespace parlearn {

/// Random rigid, twin-free target on q vertices. Weights are p/r with r in
/// [1, d]; alpha numerators in [-d, d] \ {0}, beta numerators in [0, d]. Also
/// rejects sum(alpha) == 0, which makes f(K_1) vanish. Deterministic in seed.
/// Throws SamplingCapExceeded after max_attempts rejections.
WeightedGraph generate_target(std::size_t q, std::size_t denominator_bound,
                              std::uint64_t seed,
                              std::size_t max_attempts = 100000);

/// Random multigraph on [max(k,1), max(k,1)+3] vertices with up to 5 edges
/// (loops allowed) and labels 1..k on distinct vertices.
LabeledMultigraph random_labeled_multigraph(std::mt19937_64& rng, std::size_t k);

struct RankReport {
  std::size_t q = 0;
  std::size_t k = 0;
  std::size_t samples = 0;
  std::size_t rank = 0;
  std::size_t bound = 0;  // q^k
  bool within_bound = false;
  bool rigid = false;
  /// rank == q; meaningful for k == 1.
  bool reached_q = false;
};

/// Rank of the sampled connection submatrix (hom(G_a G_b, target))_{a,b} over
/// `samples` distinct random k-labeled multigraphs.
RankReport rank_experiment(const WeightedGraph& target, std::size_t k,
                           std::size_t samples, std::uint64_t seed);

struct RigidityRow {
  std::size_t n = 0;
  std::size_t samples = 0;
  std::size_t rigid = 0;
  double fraction = 0.0;
};

/// Fraction of uniform random simple graphs G(n, 1/2) (unit weights) with a
/// trivial automorphism group, for each n in [n_min, n_max].
std::vector<RigidityRow> rigidity_stats(std::size_t n_min, std::size_t n_max,
                                        std::size_t samples, std::uint64_t seed);

std::string to_csv(const RankReport& report);
std::string to_csv(const std::vector<RigidityRow>& rows);

}  // namespace parlearn
