#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "parlearn/matrix.hpp"
#include "parlearn/multigraph.hpp"
#include "parlearn/quantum_graph.hpp"
#include "parlearn/teacher.hpp"
#include "parlearn/transcript.hpp"
#include "parlearn/weighted_graph.hpp"

namespace parlearn {

struct LearnerConfig {
  /// Equivalence rounds allowed before IterationCapExceeded (4 * q_max with
  /// q_max = 4).
  std::size_t iteration_cap = 16;
  /// Extra fields for the transcript header (e.g. the CLI run configuration).
  Json run_config = Json::object();
};

/// Basis graphs B_1..B_n (1-labeled) and values(i, j) = f(B_i B_j).
struct ConnectionSubmatrix {
  std::vector<LabeledMultigraph> basis;
  Matrix values;

  std::size_t size() const noexcept { return basis.size(); }
};

/// Output of find_basis.
struct BasisRepresentation {
  /// delta[i] = coefficients of the idempotent p_i over B_1..B_n.
  std::vector<Vector> delta;
  /// gamma[i][j] = coefficients of B_i B_j over the basis.
  std::vector<std::vector<Vector>> gamma;
  /// blocks[i] = A_{B_i}, with blocks[i](k, j) = gamma[i][j][k].
  std::vector<Matrix> blocks;
  /// The matrices A_{p_i} the delta were solved against.
  std::vector<Matrix> idempotents;
  /// All matrix systems were solved exactly.
  bool consistent = false;
  /// Idempotent targets came from a split spectral decomposition of the block
  /// algebra (false: fell back to unit matrices E_ii).
  bool spectral = false;

  std::size_t size() const noexcept { return delta.size(); }
};

struct Hypothesis {
  WeightedGraph graph;
  /// Before twin merging.
  WeightedGraph raw;
  /// N_ii entries, row-major over (i, j).
  Vector normalizers;
  bool fallback = false;
  bool consistent = false;
};

struct LearnResult {
  WeightedGraph hypothesis;
  SessionTranscript transcript;
  std::size_t rounds = 0;
  ConnectionSubmatrix submatrix;
  BasisRepresentation basis;
  QueryCounters queries;
};

/// Matrix A_x of a quantum graph x = sum_i a_i B_i, built from the gamma
/// tensor: (A_x)(l, m) = sum_i a_i gamma[i][m][l].
Matrix multiplication_matrix(const BasisRepresentation& rep, const Vector& a);

/// p = sum_k coefficients[k] * basis[k].
QuantumGraph combine(const std::vector<LabeledMultigraph>& basis,
                     const Vector& coefficients);

/// Exact learner for rigid partition functions. One session per instance.
class Learner {
 public:
  explicit Learner(Teacher& teacher, LearnerConfig config = {});

  /// B_1 = K_1 with its vertex labeled. Throws Singular if f(K_1) == 0.
  void initialize();
  /// Adds the counterexample (label 1 on its canonical-first vertex) as
  /// B_{n+1}, or the first pool candidate that raises the rank. Throws
  /// PoolExhausted if none does.
  void augment(const LabeledMultigraph& counterexample);
  BasisRepresentation find_basis();
  Hypothesis generate_hypothesis(const BasisRepresentation& rep);
  /// Single-vertex hypothesis used when the idempotent normalizers vanish.
  Hypothesis fallback_hypothesis();

  LearnResult learn();

  /// VALUE with a per-session cache keyed by connected component; quantum
  /// graphs are evaluated linearly.
  Rational value(const LabeledMultigraph& g);
  Rational value(const QuantumGraph& x);

  const ConnectionSubmatrix& submatrix() const noexcept { return m_; }
  const SessionTranscript& transcript() const noexcept { return transcript_; }
  std::size_t iteration() const noexcept { return iteration_; }

 private:
  std::optional<Matrix> try_augment(const LabeledMultigraph& candidate);
  void push_basis(const LabeledMultigraph& labeled, Matrix values,
                  const char* source);

  Teacher& teacher_;
  LearnerConfig config_;
  ConnectionSubmatrix m_;
  std::vector<LabeledMultigraph> pool_;
  std::size_t iteration_ = 0;
  SessionTranscript transcript_;
  std::map<CanonicalCode, Rational> cache_;
};

/// Convenience: full session against a teacher.
LearnResult learn(Teacher& teacher, LearnerConfig config = {});

}  // namespace parlearn
