#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "parlearn/errors.hpp"
#include "parlearn/experiments.hpp"
#include "parlearn/learner.hpp"
#include "parlearn/linalg.hpp"

using namespace parlearn;
using oracle::h_star;

namespace {

// f(B_a B_b B_c) straight from the target, bypassing the learner.
Rational triple(const WeightedGraph& target, const std::vector<LabeledMultigraph>& basis,
                std::size_t a, std::size_t b, std::size_t c) {
  return hom(glue(glue(basis[a], basis[b]), basis[c]), target);
}

}  // namespace

TEST_SUITE("learner") {

TEST_CASE("augment examples under H*") {
  Teacher teacher(h_star());
  Learner learner(teacher);
  learner.initialize();
  CHECK(learner.submatrix().values == Matrix{{3}});
  learner.augment(graphs::loop_vertex());
  CHECK(learner.submatrix().values == Matrix{{3, 1}, {1, 1}});
  CHECK(rank(learner.submatrix().values) == 2);
  CHECK(learner.iteration() == 2);
}

TEST_CASE("augment throws PoolExhausted when nothing raises the rank") {
  // Every 1-labeled graph has the same value on both vertices of unit K_2.
  Teacher teacher(targets::complete(2));
  Learner learner(teacher);
  learner.initialize();
  CHECK_THROWS_AS(learner.augment(graphs::loop_vertex()), PoolExhausted);
  CHECK(learner.submatrix().size() == 1);
}

TEST_CASE("initialize refuses f(K_1) = 0") {
  Teacher teacher(WeightedGraph({Rational(1), Rational(-1)}, Matrix{{1, 0}, {0, 2}}));
  Learner learner(teacher);
  CHECK_THROWS_AS(learner.initialize(), Singular);
}

TEST_CASE("find_basis and generate_hypothesis at n = 1 under H*") {
  Teacher teacher(h_star());
  Learner learner(teacher);
  learner.initialize();
  const auto rep = learner.find_basis();
  CHECK(rep.gamma[0][0] == Vector{Rational(1)});
  CHECK(rep.blocks[0] == Matrix{{1}});
  CHECK(rep.delta[0] == Vector{Rational(1)});
  CHECK(rep.consistent);
  const auto h = learner.generate_hypothesis(rep);
  CHECK(h.normalizers == Vector{Rational(9)});
  CHECK(h.graph == WeightedGraph({Rational(3)}, Matrix{{Rational(5, 9)}}));
}

TEST_CASE("pre-convergence inconsistent systems still yield a hypothesis") {
  std::vector<Matrix> blocks{Matrix::identity(2)};
  CHECK_FALSE(solve_matrix_system(blocks, Matrix::unit(2, 0, 0)).consistent);
}

TEST_CASE("learn H*: two rounds, round-one trace, isomorphic result") {
  Teacher teacher(h_star());
  const auto result = learn(teacher);
  CHECK(result.rounds == 2);
  const auto hyps = result.transcript.events_of("hypothesis");
  REQUIRE(hyps.size() == 2);
  CHECK(weighted_graph_from_json(hyps[0]["hypothesis"]) ==
        WeightedGraph({Rational(3)}, Matrix{{Rational(5, 9)}}));
  const auto cx = result.transcript.events_of("counterexample");
  REQUIRE(cx.size() == 1);
  CHECK(canonical_code(graph_from_json(cx[0]["graph"])) == canonical_code(graphs::loop_vertex()));
  CHECK(weighted_iso(result.hypothesis, h_star()));
}

TEST_CASE("learn a single-vertex target in one round") {
  Teacher teacher(WeightedGraph({Rational(2)}, Matrix{{3}}));
  Learner learner(teacher);
  const auto result = learner.learn();
  CHECK(result.rounds == 1);
  CHECK(result.hypothesis == WeightedGraph({Rational(2)}, Matrix{{3}}));
}

TEST_CASE("non-rigid target ends in PoolExhausted") {
  Teacher teacher(targets::complete(2));
  Learner learner(teacher);
  CHECK_THROWS_AS(learner.learn(), PoolExhausted);
  CHECK(learner.transcript().count("equivalence_query") == 1);
}

TEST_CASE("iteration cap") {
  Teacher teacher(h_star());
  CHECK_THROWS_AS(learn(teacher, LearnerConfig{1}), IterationCapExceeded);
}

TEST_CASE("property: invariants of converged sessions on random targets") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const std::size_t q = 1 + seed % 3;
    const auto target = generate_target(q, 3, seed);
    Teacher teacher(target);
    const auto result = learn(teacher);
    const auto& rep = result.basis;
    const auto& basis = result.submatrix.basis;
    const std::size_t n = basis.size();
    CAPTURE(seed);
    CHECK(n == q);
    CHECK(result.rounds <= q);
    CHECK(weighted_iso(result.hypothesis, target));
    CHECK(is_twin_free(result.hypothesis));
    CHECK(is_rigid(result.hypothesis));
    CHECK(result.submatrix.values == result.submatrix.values.transpose());

    // Rank after each augmentation equals the basis size.
    for (const auto& e : result.transcript.events_of("rank")) CHECK(e["rank"] == e["basis_size"]);

    // The blocks stay linearly independent, idempotents multiply as they should.
    CHECK_NOTHROW(solve_matrix_system(rep.blocks, Matrix::identity(n)));
    for (std::size_t i = 0; i < n; ++i) {
      const auto a_i = multiplication_matrix(rep, rep.delta[i]);
      for (std::size_t j = 0; j < n; ++j) {
        const auto a_j = multiplication_matrix(rep, rep.delta[j]);
        CHECK(a_i * a_j == (i == j ? a_i : Matrix(n, n)));
      }
    }

    // (*) contract against an independent solve.
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 5; ++t) {
      Vector a(n), c(n);
      for (auto& v : a) v = oracle::random_rational(rng, 4);
      for (auto& v : c) v = oracle::random_rational(rng, 4);
      Vector b(n);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) b[k] += a[i] * c[j] * triple(target, basis, i, j, k);
      CHECK(solve(result.submatrix.values, b) == multiplication_matrix(rep, a) * c);
    }

    // N_ij == alpha_i alpha_j before twin merging.
    Learner again(teacher);
    again.initialize();
    for (const auto& g : std::vector<LabeledMultigraph>(basis.begin() + 1, basis.end())) {
      again.augment(g);
    }
    const auto h = again.generate_hypothesis(again.find_basis());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        CHECK(h.normalizers[i * n + j] == h.raw.alpha(i) * h.raw.alpha(j));

    // Query budget per iteration.
    std::map<std::size_t, std::size_t> per_iteration;
    for (const auto& e : result.transcript.events_of("value_query")) ++per_iteration[e["iteration"]];
    for (const auto& [it, count] : per_iteration) CHECK(count <= 10 * it * it);
  }
}

}  // TEST_SUITE
