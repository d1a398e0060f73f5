#include "parlearn/learner.hpp"

#include <spdlog/spdlog.h>

#include <utility>

#include "parlearn/errors.hpp"
#include "parlearn/linalg.hpp"

namespace parlearn {

Matrix multiplication_matrix(const BasisRepresentation& rep, const Vector& a) {
  const std::size_t n = rep.gamma.size();
  if (a.size() != n) throw DimensionMismatch("multiplication_matrix");
  Matrix out(n, n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t i = 0; i < n; ++i) out(l, m) += a[i] * rep.gamma[i][m][l];
  return out;
}

QuantumGraph combine(const std::vector<LabeledMultigraph>& basis,
                     const Vector& coefficients) {
  if (basis.size() != coefficients.size()) {
    throw DimensionMismatch("combine: basis and coefficient lengths differ");
  }
  QuantumGraph out(basis.empty() ? 1 : basis.front().arity());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    out.add_term(basis[k], coefficients[k]);
  }
  return out;
}

namespace {

constexpr std::size_t kSweepVertices = 4;
constexpr std::size_t kSweepEdges = 5;

LabeledMultigraph label_at(const LabeledMultigraph& g, Vertex v) {
  return LabeledMultigraph(g.num_vertices(), {g.edges().begin(), g.edges().end()},
                           1, {v});
}

// Rank-one projectors onto the eigenspaces of a, if its characteristic
// polynomial has n distinct rational roots.
std::optional<std::vector<Matrix>> eigenprojectors(const Matrix& a) {
  const std::size_t n = a.rows();
  const auto roots = split_rational_roots(characteristic_polynomial(a));
  if (!roots || roots->size() != n) return std::nullopt;
  std::vector<Matrix> out;
  out.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    Matrix p = Matrix::identity(n);
    for (std::size_t s = 0; s < n; ++s) {
      if (s == r) continue;
      Matrix factor = a - (*roots)[s] * Matrix::identity(n);
      factor *= 1 / Rational((*roots)[r] - (*roots)[s]);
      p = p * factor;
    }
    out.push_back(std::move(p));
  }
  return out;
}

// The multiplication matrices of the idempotent basis are the eigenprojectors
// of any element of the block algebra whose eigenvalues separate all points.
// Tries the basis blocks, then sum_k t^k A_{B_k} for t = 1, 2, ...; accepts
// the first split whose projectors all lie in the span of the blocks.
bool spectral_targets(const std::vector<Matrix>& blocks,
                      std::vector<Matrix>& targets,
                      std::vector<MatrixSystemSolution>& solutions) {
  const std::size_t n = blocks.size();
  auto attempt = [&](const Matrix& element) {
    auto projectors = eigenprojectors(element);
    if (!projectors) return false;
    std::vector<MatrixSystemSolution> sols;
    for (const auto& p : *projectors) {
      sols.push_back(solve_matrix_system(blocks, p));
      if (!sols.back().consistent) return false;
    }
    targets = std::move(*projectors);
    solutions = std::move(sols);
    return true;
  };
  for (const auto& b : blocks) {
    if (attempt(b)) return true;
  }
  // Point separation fails for at most n(n-1)/2 * (n-1) values of t.
  const std::size_t tries = n * n * n + 2;
  for (std::size_t t = 1; t <= tries; ++t) {
    Matrix element(n, n);
    Rational power = 1;
    for (std::size_t k = 0; k < n; ++k) {
      element += blocks[k] * power;
      power *= static_cast<long>(t);
    }
    if (attempt(element)) return true;
  }
  return false;
}

}  // namespace

Learner::Learner(Teacher& teacher, LearnerConfig config)
    : teacher_(teacher), config_(std::move(config)) {}

Rational Learner::value(const LabeledMultigraph& g) {
  Rational result = 1;
  for (const auto& component : g.unlabeled().connected_components()) {
    const auto form = canonical_form(component);
    auto it = cache_.find(form.code);
    if (it == cache_.end()) {
      const Rational v = teacher_.value(component);
      transcript_.record({{"event", "value_query"},
                          {"iteration", iteration_},
                          {"graph", to_json(canonical_representative(component))},
                          {"value", to_json(v)}});
      it = cache_.emplace(form.code, v).first;
    }
    result *= it->second;
    if (result == 0) break;
  }
  return result;
}

Rational Learner::value(const QuantumGraph& x) {
  Rational total = 0;
  for (const auto& [code, term] : x.terms()) {
    total += term.coefficient * value(term.graph);
  }
  return total;
}

void Learner::push_basis(const LabeledMultigraph& labeled, Matrix values,
                         const char* source) {
  m_.basis.push_back(labeled);
  m_.values = std::move(values);
  iteration_ = m_.size();
  transcript_.record({{"event", "rank"},
                      {"iteration", iteration_},
                      {"basis_size", m_.size()},
                      {"rank", rank(m_.values)},
                      {"basis_graph", to_json(labeled)},
                      {"source", source}});
}

void Learner::initialize() {
  if (!m_.basis.empty()) throw Error("learner already initialized");
  iteration_ = 1;
  const LabeledMultigraph k1 = graphs::single_vertex(1);
  const Rational v = value(glue(k1, k1));
  if (v == 0) {
    throw Singular("f(K_1) = 0: the initial basis graph has a singular 1x1 "
                   "connection submatrix");
  }
  push_basis(k1, Matrix{{v}}, "initial");
}

std::optional<Matrix> Learner::try_augment(const LabeledMultigraph& candidate) {
  const std::size_t n = m_.size();
  const auto code = canonical_code(candidate);
  for (const auto& b : m_.basis) {
    if (canonical_code(b) == code) return std::nullopt;
  }
  Vector row(n + 1);
  for (std::size_t i = 0; i < n; ++i) row[i] = value(glue(candidate, m_.basis[i]));
  row[n] = value(glue(candidate, candidate));
  Matrix grown = m_.values.bordered(row);
  if (rank(grown) != n + 1) return std::nullopt;
  return grown;
}

void Learner::augment(const LabeledMultigraph& counterexample) {
  if (m_.basis.empty()) throw Error("augment before initialize");
  const LabeledMultigraph plain = counterexample.unlabeled();
  const std::size_t n = m_.size();
  iteration_ = n + 1;

  const LabeledMultigraph primary = assign_label_one(plain);
  if (auto grown = try_augment(primary)) {
    pool_.push_back(plain);
    push_basis(primary, std::move(*grown), "counterexample");
    return;
  }
  spdlog::debug("counterexample {} does not raise rank {}; trying pool",
                describe(plain), n);

  // Pool, cheapest first: other labelings of received counterexamples, then
  // the images of the basis under the generating operations of the algebra
  // (edge extension, loop, product), then 1-connections of counterexamples
  // with the basis, then a sweep over small graphs.
  pool_.push_back(plain);
  std::map<CanonicalCode, bool> seen;
  auto offer = [&](const LabeledMultigraph& g) -> std::optional<Matrix> {
    if (!seen.emplace(canonical_code(g), true).second) return std::nullopt;
    return try_augment(g);
  };
  auto accept = [&](const LabeledMultigraph& g, Matrix grown) {
    spdlog::debug("pool candidate {} raises the rank to {}", describe(g), n + 1);
    push_basis(g, std::move(grown), "pool");
  };
  for (auto it = pool_.rbegin(); it != pool_.rend(); ++it) {
    for (Vertex v = 0; v < it->num_vertices(); ++v) {
      const auto g = label_at(*it, v);
      if (auto grown = offer(g)) return accept(g, std::move(*grown));
    }
  }
  const auto basis = m_.basis;
  for (const auto& b : basis) {
    const Vertex v = *b.labeled_vertex(1);
    const auto g = label_at(b.unlabeled().with_pendant(v), b.num_vertices());
    if (auto grown = offer(g)) return accept(g, std::move(*grown));
  }
  for (const auto& b : basis) {
    const auto g = glue(b, graphs::loop_vertex(1, 1));
    if (auto grown = offer(g)) return accept(g, std::move(*grown));
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      const auto g = glue(basis[i], basis[j]);
      if (auto grown = offer(g)) return accept(g, std::move(*grown));
    }
  }
  for (auto it = pool_.rbegin(); it != pool_.rend(); ++it) {
    for (Vertex v = 0; v < it->num_vertices(); ++v) {
      for (const auto& b : basis) {
        const auto g = glue(label_at(*it, v), b);
        if (auto grown = offer(g)) return accept(g, std::move(*grown));
      }
    }
  }
  for (std::size_t e = 0; e <= kSweepEdges; ++e) {
    for (std::size_t v = 1; v <= kSweepVertices; ++v) {
      for (const auto& h : graph_cell(v, e)) {
        for (Vertex u = 0; u < h.num_vertices(); ++u) {
          const auto g = label_at(h, u);
          if (auto grown = offer(g)) return accept(g, std::move(*grown));
        }
      }
    }
  }
  iteration_ = n;
  throw PoolExhausted("no pool candidate raises the rank of M beyond " +
                      std::to_string(n) + " (" +
                      std::to_string(transcript_.events().size()) +
                      " transcript events)");
}

BasisRepresentation Learner::find_basis() {
  const std::size_t n = m_.size();
  if (n == 0) throw Error("find_basis on an empty basis");
  BasisRepresentation rep;
  rep.gamma.assign(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const LabeledMultigraph bij = glue(m_.basis[i], m_.basis[j]);
      Vector b(n);
      for (std::size_t k = 0; k < n; ++k) b[k] = value(glue(bij, m_.basis[k]));
      rep.gamma[i][j] = solve(m_.values, b);
    }
  }
  rep.blocks.assign(n, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) rep.blocks[i](k, j) = rep.gamma[i][j][k];

  std::vector<MatrixSystemSolution> solutions;
  rep.spectral = spectral_targets(rep.blocks, rep.idempotents, solutions);
  if (!rep.spectral) {
    rep.idempotents.clear();
    solutions.clear();
    for (std::size_t i = 0; i < n; ++i) {
      rep.idempotents.push_back(Matrix::unit(n, i, i));
      solutions.push_back(solve_matrix_system(rep.blocks, rep.idempotents.back()));
    }
  }
  rep.consistent = true;
  for (auto& s : solutions) {
    rep.consistent = rep.consistent && s.consistent;
    rep.delta.push_back(std::move(s.coefficients));
  }
  return rep;
}

Hypothesis Learner::generate_hypothesis(const BasisRepresentation& rep) {
  const std::size_t n = rep.size();
  std::vector<QuantumGraph> p;
  p.reserve(n);
  Vector alpha(n);
  for (std::size_t i = 0; i < n; ++i) {
    p.push_back(combine(m_.basis, rep.delta[i]));
    alpha[i] = value(p.back());
  }
  const QuantumGraph k2(graphs::labeled_edge());
  Matrix beta(n, n);
  Vector normalizers;
  normalizers.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const QuantumGraph pij = tensor2(p[i], p[j]);
      const Rational norm = value(quantum_glue(pij, pij));
      if (norm == 0) {
        throw DegenerateIdempotent("N_" + std::to_string(i + 1) + "," +
                                   std::to_string(j + 1) + " = 0");
      }
      beta(i, j) = value(quantum_glue(k2, pij)) / norm;
      normalizers.push_back(norm);
    }
  }
  WeightedGraph raw(std::move(alpha), std::move(beta));
  Hypothesis h{make_twin_free(raw), raw, std::move(normalizers), false,
               rep.consistent};
  return h;
}

Hypothesis Learner::fallback_hypothesis() {
  const Rational k1 = value(graphs::single_vertex());
  const Rational k2 = value(graphs::edge());
  const Rational b = k1 != 0 ? Rational(k2 / (k1 * k1)) : Rational(0);
  WeightedGraph g({k1}, Matrix{{b}});
  return Hypothesis{g, g, {}, true, false};
}

LearnResult Learner::learn() {
  Json header = {{"event", "header"},
                 {"teacher",
                  {{"max_vertices", teacher_.config().max_vertices},
                   {"max_edges", teacher_.config().max_edges},
                   {"random_samples", teacher_.config().random_samples},
                   {"seed", teacher_.config().seed}}},
                 {"iteration_cap", config_.iteration_cap}};
  for (const auto& [key, v] : config_.run_config.items()) header[key] = v;
  transcript_.record(std::move(header));
  initialize();

  std::size_t rounds = 0;
  while (true) {
    if (rounds == config_.iteration_cap) {
      throw IterationCapExceeded("no correct hypothesis after " +
                                 std::to_string(rounds) + " rounds");
    }
    ++rounds;
    BasisRepresentation rep;
    Hypothesis hyp = [&] {
      try {
        rep = find_basis();
        return generate_hypothesis(rep);
      } catch (const DegenerateBlocks& e) {
        spdlog::debug("round {}: {}; using fallback hypothesis", rounds, e.what());
      } catch (const DegenerateIdempotent& e) {
        spdlog::debug("round {}: {}; using fallback hypothesis", rounds, e.what());
      }
      return fallback_hypothesis();
    }();
    transcript_.record({{"event", "hypothesis"},
                        {"iteration", iteration_},
                        {"hypothesis", to_json(hyp.graph)},
                        {"consistent", hyp.consistent},
                        {"spectral", rep.spectral},
                        {"fallback", hyp.fallback}});
    spdlog::debug("round {}: n = {}, hypothesis on {} vertices", rounds,
                  m_.size(), hyp.graph.size());

    std::optional<LabeledMultigraph> answer;
    try {
      answer = teacher_.equivalent(hyp.graph);
    } catch (const BoundExhausted&) {
      transcript_.record({{"event", "equivalence_query"},
                          {"iteration", iteration_},
                          {"answer", "BOUND_EXHAUSTED"}});
      throw;
    }
    transcript_.record({{"event", "equivalence_query"},
                        {"iteration", iteration_},
                        {"answer", answer ? "NO" : "YES"}});
    if (!answer) {
      return LearnResult{hyp.graph, transcript_, rounds, m_, std::move(rep),
                         teacher_.counters()};
    }
    transcript_.record({{"event", "counterexample"},
                        {"iteration", iteration_},
                        {"graph", to_json(*answer)}});
    augment(*answer);
  }
}

LearnResult learn(Teacher& teacher, LearnerConfig config) {
  Learner learner(teacher, std::move(config));
  return learner.learn();
}

}  // namespace parlearn
