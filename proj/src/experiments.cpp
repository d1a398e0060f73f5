#include "parlearn/experiments.hpp"

#include <map>
#include <sstream>

#include "parlearn/errors.hpp"
#include "parlearn/linalg.hpp"

namespace parlearn {

WeightedGraph generate_target(std::size_t q, std::size_t denominator_bound,
                              std::uint64_t seed, std::size_t max_attempts) {
  if (q < 1) throw ValidationError("gen-target: q must be >= 1");
  if (denominator_bound < 1) throw ValidationError("gen-target: d must be >= 1");
  const long d = static_cast<long>(denominator_bound);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> den(1, d);
  std::uniform_int_distribution<long> alpha_num(-d, d - 1);  // 0 remapped to d
  std::uniform_int_distribution<long> beta_num(0, d);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    Vector alpha(q);
    Rational total = 0;
    for (auto& a : alpha) {
      long num = alpha_num(rng);
      if (num == 0) num = d;
      a = Rational(num, den(rng));
      a.canonicalize();
      total += a;
    }
    Matrix beta(q, q);
    for (std::size_t i = 0; i < q; ++i) {
      for (std::size_t j = i; j < q; ++j) {
        Rational b(beta_num(rng), den(rng));
        b.canonicalize();
        beta(i, j) = b;
        beta(j, i) = b;
      }
    }
    if (total == 0) continue;
    WeightedGraph h(std::move(alpha), std::move(beta));
    if (is_twin_free(h) && is_rigid(h)) return h;
  }
  throw SamplingCapExceeded("gen-target: no rigid twin-free target after " +
                            std::to_string(max_attempts) + " attempts");
}

LabeledMultigraph random_labeled_multigraph(std::mt19937_64& rng, std::size_t k) {
  const std::size_t lo = std::max<std::size_t>(k, 1);
  const std::size_t n = std::uniform_int_distribution<std::size_t>(lo, lo + 3)(rng);
  const std::size_t m = std::uniform_int_distribution<std::size_t>(0, 5)(rng);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) edges.emplace_back(pick(rng), pick(rng));
  std::vector<Vertex> vertices(n);
  for (Vertex v = 0; v < n; ++v) vertices[v] = v;
  std::shuffle(vertices.begin(), vertices.end(), rng);
  std::vector<std::optional<Vertex>> labels(vertices.begin(),
                                            vertices.begin() + static_cast<std::ptrdiff_t>(k));
  return LabeledMultigraph(n, std::move(edges), k, std::move(labels));
}

RankReport rank_experiment(const WeightedGraph& target, std::size_t k,
                           std::size_t samples, std::uint64_t seed) {
  if (k < 1) throw ValidationError("rank-experiment: k must be >= 1");
  std::mt19937_64 rng(seed);
  std::map<CanonicalCode, LabeledMultigraph> distinct;
  std::vector<LabeledMultigraph> sample;
  // Distinct classes only; duplicates would just repeat rows.
  for (std::size_t tries = 0; sample.size() < samples && tries < 100 * samples;
       ++tries) {
    auto g = random_labeled_multigraph(rng, k);
    if (distinct.emplace(canonical_code(g), g).second) sample.push_back(std::move(g));
  }
  const std::size_t s = sample.size();
  Matrix c(s, s);
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = a; b < s; ++b) {
      c(a, b) = hom(glue(sample[a], sample[b]), target);
      c(b, a) = c(a, b);
    }
  RankReport r;
  r.q = target.size();
  r.k = k;
  r.samples = s;
  r.rank = rank(c);
  r.bound = 1;
  for (std::size_t i = 0; i < k; ++i) r.bound *= r.q;
  r.within_bound = r.rank <= r.bound;
  r.rigid = is_rigid(target);
  r.reached_q = r.rank == r.q;
  return r;
}

std::vector<RigidityRow> rigidity_stats(std::size_t n_min, std::size_t n_max,
                                        std::size_t samples, std::uint64_t seed) {
  if (n_min < 1 || n_max > 10 || n_min > n_max) {
    throw ValidationError("rigidity-stats: n range must lie in [1, 10]");
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<RigidityRow> rows;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    RigidityRow row{n, samples, 0, 0.0};
    for (std::size_t s = 0; s < samples; ++s) {
      Matrix adjacency(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (coin(rng)) adjacency(i, j) = adjacency(j, i) = 1;
      if (is_rigid(WeightedGraph(Vector(n, Rational(1)), std::move(adjacency)))) {
        ++row.rigid;
      }
    }
    row.fraction = samples ? static_cast<double>(row.rigid) / samples : 0.0;
    rows.push_back(row);
  }
  return rows;
}

std::string to_csv(const RankReport& r) {
  std::ostringstream os;
  os << "q,k,samples,rank,bound,within_bound,rigid,reached_q\n"
     << r.q << ',' << r.k << ',' << r.samples << ',' << r.rank << ',' << r.bound
     << ',' << r.within_bound << ',' << r.rigid << ',' << r.reached_q << '\n';
  return os.str();
}

std::string to_csv(const std::vector<RigidityRow>& rows) {
  std::ostringstream os;
  os << "n,samples,rigid,fraction\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.samples << ',' << r.rigid << ',' << r.fraction << '\n';
  }
  return os.str();
}

}  // namespace parlearn
