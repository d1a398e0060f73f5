#include "parlearn/weighted_graph.hpp"

#include <algorithm>
#include <functional>

#include "parlearn/errors.hpp"

namespace parlearn {

WeightedGraph::WeightedGraph(Vector alpha, Matrix beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_.empty()) throw ValidationError("weighted graph needs q >= 1");
  if (beta_.rows() != alpha_.size() || beta_.cols() != alpha_.size()) {
    throw ValidationError("beta must be " + std::to_string(alpha_.size()) +
                          "x" + std::to_string(alpha_.size()));
  }
  if (!beta_.symmetric()) throw ValidationError("beta must be symmetric");
}

WeightedGraph WeightedGraph::permuted(const std::vector<std::size_t>& sigma) const {
  const std::size_t q = size();
  Vector alpha(q);
  Matrix beta(q, q);
  for (std::size_t i = 0; i < q; ++i) {
    alpha[sigma[i]] = alpha_[i];
    for (std::size_t j = 0; j < q; ++j) beta(sigma[i], sigma[j]) = beta_(i, j);
  }
  return WeightedGraph(std::move(alpha), std::move(beta));
}

namespace {

mpz_class lcm_of_denominators(std::span<const Rational> values) {
  mpz_class l = 1;
  for (const auto& v : values) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  return l;
}

// Sum over all maps of a connected multigraph, with weights pre-scaled to
// integers: alpha = a / da, beta = b / db.
class ComponentEnumerator {
 public:
  ComponentEnumerator(const LabeledMultigraph& g, const WeightedGraph& h)
      : g_(g), q_(h.size()) {
    const mpz_class da = lcm_of_denominators(h.alpha());
    const mpz_class db = lcm_of_denominators(h.beta().flat());
    scale_ = Rational(1);
    {
      mpz_class den_alpha, den_beta;
      mpz_pow_ui(den_alpha.get_mpz_t(), da.get_mpz_t(), g.num_vertices());
      mpz_pow_ui(den_beta.get_mpz_t(), db.get_mpz_t(), g.num_edges());
      scale_ = Rational(mpz_class(1), den_alpha * den_beta);
      scale_.canonicalize();
    }
    alpha_.resize(q_);
    for (std::size_t i = 0; i < q_; ++i) {
      alpha_[i] = h.alpha(i).get_num() * (da / h.alpha(i).get_den());
    }
    beta_.resize(q_ * q_);
    for (std::size_t i = 0; i < q_; ++i)
      for (std::size_t j = 0; j < q_; ++j) {
        const Rational& b = h.beta(i, j);
        beta_[i * q_ + j] = b.get_num() * (db / b.get_den());
      }

    // BFS order so each vertex sees its edges to already-placed vertices.
    const std::size_t n = g.num_vertices();
    std::vector<std::size_t> position(n, n);
    order_.reserve(n);
    for (Vertex start = 0; start < n; ++start) {
      if (position[start] != n) continue;
      position[start] = order_.size();
      order_.push_back(start);
      for (std::size_t head = order_.size() - 1; head < order_.size(); ++head) {
        const Vertex v = order_[head];
        for (const auto& e : g.edges()) {
          const Vertex w = e.u == v ? e.v : (e.v == v ? e.u : n);
          if (w < n && position[w] == n) {
            position[w] = order_.size();
            order_.push_back(w);
          }
        }
      }
    }
    back_edges_.resize(n);
    std::size_t max_mult = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Vertex v = order_[i];
      for (std::size_t j = 0; j <= i; ++j) {
        const std::size_t m = g.multiplicity(v, order_[j]);
        if (m > 0) {
          back_edges_[i].push_back({j, m});
          max_mult = std::max(max_mult, m);
        }
      }
    }
    powers_.resize(max_mult + 1);
    for (std::size_t m = 1; m <= max_mult; ++m) {
      powers_[m].resize(q_ * q_);
      for (std::size_t k = 0; k < q_ * q_; ++k) {
        mpz_pow_ui(powers_[m][k].get_mpz_t(), beta_[k].get_mpz_t(), m);
      }
    }
  }

  Rational run() {
    const std::size_t n = g_.num_vertices();
    if (n == 0) return 1;
    image_.assign(n, 0);
    partial_.assign(n + 1, 0);
    partial_[0] = 1;
    total_ = 0;
    descend(0);
    Rational out(total_);
    out *= scale_;
    return out;
  }

 private:
  struct BackEdge {
    std::size_t position;
    std::size_t multiplicity;
  };

  void descend(std::size_t depth) {
    if (depth == order_.size()) {
      total_ += partial_[depth];
      return;
    }
    for (std::size_t c = 0; c < q_; ++c) {
      mpz_class& value = partial_[depth + 1];
      value = partial_[depth] * alpha_[c];
      if (value == 0) continue;
      image_[depth] = c;
      for (const auto& be : back_edges_[depth]) {
        value *= powers_[be.multiplicity][image_[be.position] * q_ + c];
        if (value == 0) break;
      }
      if (value == 0) continue;
      descend(depth + 1);
    }
  }

  const LabeledMultigraph& g_;
  std::size_t q_;
  Rational scale_;
  std::vector<mpz_class> alpha_;
  std::vector<mpz_class> beta_;
  std::vector<Vertex> order_;
  std::vector<std::vector<BackEdge>> back_edges_;
  std::vector<std::vector<mpz_class>> powers_;
  std::vector<std::size_t> image_;
  std::vector<mpz_class> partial_;
  mpz_class total_;
};

}  // namespace

Rational hom(const LabeledMultigraph& g, const WeightedGraph& h) {
  Rational result = 1;
  for (const auto& component : g.connected_components()) {
    result *= ComponentEnumerator(component, h).run();
    if (result == 0) break;
  }
  return result;
}

Rational hom_naive(const LabeledMultigraph& g, const WeightedGraph& h) {
  const std::size_t n = g.num_vertices();
  const std::size_t q = h.size();
  std::vector<std::size_t> t(n, 0);
  Rational total = 0;
  while (true) {
    Rational term = 1;
    for (std::size_t v = 0; v < n; ++v) term *= h.alpha(t[v]);
    for (const auto& e : g.edges()) term *= h.beta(t[e.u], t[e.v]);
    total += term;
    std::size_t v = 0;
    while (v < n && ++t[v] == q) t[v++] = 0;
    if (v == n) break;
  }
  return total;
}

Rational hom_quantum(const QuantumGraph& x, const WeightedGraph& h) {
  Rational total = 0;
  for (const auto& [code, term] : x.terms()) {
    total += term.coefficient * hom(term.graph, h);
  }
  return total;
}

bool is_twin_free(const WeightedGraph& h) {
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = i + 1; j < h.size(); ++j)
      if (h.beta().row(i) == h.beta().row(j)) return false;
  return true;
}

WeightedGraph make_twin_free(const WeightedGraph& h) {
  WeightedGraph current = h;
  while (!is_twin_free(current)) {
    const std::size_t q = current.size();
    std::vector<std::size_t> representative;
    std::vector<std::size_t> class_of(q);
    for (std::size_t i = 0; i < q; ++i) {
      const Vector row = current.beta().row(i);
      std::size_t c = 0;
      while (c < representative.size() &&
             current.beta().row(representative[c]) != row) {
        ++c;
      }
      if (c == representative.size()) representative.push_back(i);
      class_of[i] = c;
    }
    const std::size_t r = representative.size();
    Vector alpha(r);
    for (std::size_t i = 0; i < q; ++i) alpha[class_of[i]] += current.alpha(i);
    Matrix beta(r, r);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b)
        beta(a, b) = current.beta(representative[a], representative[b]);
    current = WeightedGraph(std::move(alpha), std::move(beta));
  }
  return current;
}

namespace {

// Visits every sigma with h2 weights matching h1 weights under sigma; the
// visitor returns false to stop. Candidates are tried in increasing order, so
// the identity comes first when h1 == h2.
void for_each_iso(const WeightedGraph& h1, const WeightedGraph& h2,
                  const std::function<bool(const Permutation&)>& visit) {
  const std::size_t q = h1.size();
  if (h2.size() != q) return;
  Permutation sigma(q);
  std::vector<bool> used(q, false);
  bool stop = false;
  std::function<void(std::size_t)> place = [&](std::size_t i) {
    if (i == q) {
      stop = !visit(sigma);
      return;
    }
    for (std::size_t c = 0; c < q && !stop; ++c) {
      if (used[c] || h2.alpha(c) != h1.alpha(i) || h2.beta(c, c) != h1.beta(i, i))
        continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = h2.beta(sigma[j], c) == h1.beta(j, i);
      }
      if (!ok) continue;
      used[c] = true;
      sigma[i] = c;
      place(i + 1);
      used[c] = false;
    }
  };
  place(0);
}

}  // namespace

std::vector<Permutation> automorphisms(const WeightedGraph& h) {
  std::vector<Permutation> out;
  for_each_iso(h, h, [&](const Permutation& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

bool is_rigid(const WeightedGraph& h) {
  std::size_t found = 0;
  for_each_iso(h, h, [&](const Permutation&) { return ++found < 2; });
  return found == 1;
}

std::optional<Permutation> weighted_iso(const WeightedGraph& h1,
                                        const WeightedGraph& h2) {
  std::optional<Permutation> out;
  for_each_iso(h1, h2, [&](const Permutation& s) {
    out = s;
    return false;
  });
  return out;
}

namespace targets {

WeightedGraph independence(const Rational& x) {
  return WeightedGraph({Rational(1), x}, Matrix{{1, 1}, {1, 0}});
}

WeightedGraph complete(std::size_t m) {
  Matrix beta(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) beta(i, j) = i == j ? 0 : 1;
  return WeightedGraph(Vector(m, Rational(1)), std::move(beta));
}

}  // namespace targets

}  // namespace parlearn
