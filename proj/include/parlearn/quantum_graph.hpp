#pragma once

#include <cstddef>
#include <map>

#include "parlearn/multigraph.hpp"
#include "parlearn/rational.hpp"

namespace parlearn {

/// Formal finite rational combination of k-labeled multigraphs. Terms are
/// keyed by canonical code, so isomorphic summands merge; zero coefficients
/// are never stored.
class QuantumGraph {
 public:
  struct Term {
    LabeledMultigraph graph;  // canonical representative
    Rational coefficient;
  };
  using Terms = std::map<CanonicalCode, Term>;

  explicit QuantumGraph(std::size_t arity = 0) : arity_(arity) {}
  /// coefficient * g.
  QuantumGraph(const LabeledMultigraph& g, const Rational& coefficient = 1);

  std::size_t arity() const noexcept { return arity_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool zero() const noexcept { return terms_.empty(); }
  /// Coefficient of the class of g (0 if absent).
  Rational coefficient(const LabeledMultigraph& g) const;

  void add_term(const LabeledMultigraph& g, const Rational& coefficient);

  QuantumGraph& operator+=(const QuantumGraph& other);

  friend bool operator==(const QuantumGraph& a, const QuantumGraph& b);

 private:
  std::size_t arity_;
  Terms terms_;
};

QuantumGraph quantum_add(const QuantumGraph& x, const QuantumGraph& y);
QuantumGraph quantum_scale(const Rational& c, const QuantumGraph& x);
/// Bilinear extension of glue.
QuantumGraph quantum_glue(const QuantumGraph& x, const QuantumGraph& y);

/// 1-labeled p, q -> 2-labeled p (label 1) joined disjointly with q relabeled
/// to 2.
QuantumGraph tensor2(const QuantumGraph& p, const QuantumGraph& q);

}  // namespace parlearn
