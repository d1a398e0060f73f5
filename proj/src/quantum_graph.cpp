#include "parlearn/quantum_graph.hpp"

#include <array>

#include "parlearn/errors.hpp"

namespace parlearn {

namespace {

void require_same_arity(const QuantumGraph& x, const QuantumGraph& y,
                        const char* op) {
  if (x.arity() != y.arity()) {
    throw ArityMismatch(std::string(op) + ": arity " + std::to_string(x.arity()) +
                        " vs " + std::to_string(y.arity()));
  }
}

}  // namespace

QuantumGraph::QuantumGraph(const LabeledMultigraph& g, const Rational& coefficient)
    : arity_(g.arity()) {
  add_term(g, coefficient);
}

Rational QuantumGraph::coefficient(const LabeledMultigraph& g) const {
  const auto it = terms_.find(canonical_code(g));
  return it == terms_.end() ? Rational(0) : it->second.coefficient;
}

void QuantumGraph::add_term(const LabeledMultigraph& g, const Rational& coefficient) {
  if (g.arity() != arity_) {
    throw ArityMismatch("add_term: graph arity " + std::to_string(g.arity()) +
                        " vs " + std::to_string(arity_));
  }
  if (coefficient == 0) return;
  const auto form = canonical_form(g);
  auto it = terms_.find(form.code);
  if (it == terms_.end()) {
    std::vector<Vertex> sigma(g.num_vertices());
    for (std::size_t i = 0; i < form.order.size(); ++i) sigma[form.order[i]] = i;
    terms_.emplace(form.code, Term{g.permuted(sigma), coefficient});
    return;
  }
  it->second.coefficient += coefficient;
  if (it->second.coefficient == 0) terms_.erase(it);
}

QuantumGraph& QuantumGraph::operator+=(const QuantumGraph& other) {
  require_same_arity(*this, other, "quantum_add");
  for (const auto& [code, term] : other.terms_) {
    auto it = terms_.find(code);
    if (it == terms_.end()) {
      terms_.emplace(code, term);
      continue;
    }
    it->second.coefficient += term.coefficient;
    if (it->second.coefficient == 0) terms_.erase(it);
  }
  return *this;
}

bool operator==(const QuantumGraph& a, const QuantumGraph& b) {
  if (a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second.coefficient != ib->second.coefficient)
      return false;
  }
  return true;
}

QuantumGraph quantum_add(const QuantumGraph& x, const QuantumGraph& y) {
  QuantumGraph out = x;
  out += y;
  return out;
}

QuantumGraph quantum_scale(const Rational& c, const QuantumGraph& x) {
  QuantumGraph out(x.arity());
  if (c == 0) return out;
  for (const auto& [code, term] : x.terms()) {
    out.add_term(term.graph, c * term.coefficient);
  }
  return out;
}

QuantumGraph quantum_glue(const QuantumGraph& x, const QuantumGraph& y) {
  require_same_arity(x, y, "quantum_glue");
  QuantumGraph out(x.arity());
  for (const auto& [cx, tx] : x.terms()) {
    for (const auto& [cy, ty] : y.terms()) {
      out.add_term(glue(tx.graph, ty.graph), tx.coefficient * ty.coefficient);
    }
  }
  return out;
}

QuantumGraph tensor2(const QuantumGraph& p, const QuantumGraph& q) {
  if (p.arity() != 1 || q.arity() != 1) {
    throw ArityMismatch("tensor2: both operands must be 1-labeled");
  }
  constexpr std::array<std::size_t, 1> to_two{2};
  QuantumGraph lifted_p(2);
  for (const auto& [code, term] : p.terms()) {
    lifted_p.add_term(term.graph.with_arity(2), term.coefficient);
  }
  QuantumGraph lifted_q(2);
  for (const auto& [code, term] : q.terms()) {
    lifted_q.add_term(term.graph.relabeled(to_two, 2), term.coefficient);
  }
  return quantum_glue(lifted_p, lifted_q);
}

}  // namespace parlearn
