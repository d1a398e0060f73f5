#include "parlearn/multigraph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "parlearn/errors.hpp"

namespace parlearn {

LabeledMultigraph::LabeledMultigraph(std::size_t num_vertices,
                                     std::vector<Edge> edges,
                                     std::size_t arity,
                                     std::vector<std::optional<Vertex>> labels)
    : num_vertices_(num_vertices),
      edges_(std::move(edges)),
      labels_(std::move(labels)) {
  if (labels_.size() > arity) {
    throw InvalidGraph("more label slots than arity " + std::to_string(arity));
  }
  labels_.resize(arity);
  for (auto& e : edges_) {
    e = Edge(e.u, e.v);
    if (e.v >= num_vertices_) {
      throw InvalidGraph("edge endpoint " + std::to_string(e.v) +
                         " out of range for " + std::to_string(num_vertices_) +
                         " vertices");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  std::vector<bool> seen(num_vertices_, false);
  for (const auto& l : labels_) {
    if (!l) continue;
    if (*l >= num_vertices_) throw InvalidGraph("labeled vertex out of range");
    if (seen[*l]) throw InvalidGraph("vertex carries two labels");
    seen[*l] = true;
  }
}

std::optional<Vertex> LabeledMultigraph::labeled_vertex(std::size_t label) const {
  if (label == 0 || label > labels_.size()) return std::nullopt;
  return labels_[label - 1];
}

std::optional<std::size_t> LabeledMultigraph::label_of(Vertex v) const {
  for (std::size_t l = 0; l < labels_.size(); ++l) {
    if (labels_[l] == v) return l + 1;
  }
  return std::nullopt;
}

std::size_t LabeledMultigraph::num_labeled() const {
  return static_cast<std::size_t>(
      std::count_if(labels_.begin(), labels_.end(),
                    [](const auto& l) { return l.has_value(); }));
}

std::size_t LabeledMultigraph::multiplicity(Vertex a, Vertex b) const {
  const Edge e(a, b);
  const auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), e);
  return static_cast<std::size_t>(hi - lo);
}

std::size_t LabeledMultigraph::degree(Vertex v) const {
  std::size_t d = 0;
  for (const auto& e : edges_) d += (e.u == v) + (e.v == v);
  return d;
}

LabeledMultigraph LabeledMultigraph::unlabeled() const {
  return LabeledMultigraph(num_vertices_, edges_, 0, {});
}

LabeledMultigraph LabeledMultigraph::with_arity(std::size_t k) const {
  std::vector<std::optional<Vertex>> labels = labels_;
  if (k < labels.size()) {
    for (std::size_t l = k; l < labels.size(); ++l) {
      if (labels[l]) {
        throw ArityMismatch("label " + std::to_string(l + 1) +
                            " assigned but target arity is " +
                            std::to_string(k));
      }
    }
  }
  labels.resize(k);
  return LabeledMultigraph(num_vertices_, edges_, k, std::move(labels));
}

LabeledMultigraph LabeledMultigraph::relabeled(
    std::span<const std::size_t> label_map, std::size_t new_arity) const {
  if (label_map.size() != labels_.size()) {
    throw ArityMismatch("relabel map must cover every label");
  }
  std::vector<std::optional<Vertex>> labels(new_arity);
  for (std::size_t l = 0; l < labels_.size(); ++l) {
    if (!labels_[l]) continue;
    const std::size_t target = label_map[l];
    if (target == 0 || target > new_arity) {
      throw ArityMismatch("relabel target out of range");
    }
    if (labels[target - 1]) throw InvalidGraph("relabel collision");
    labels[target - 1] = labels_[l];
  }
  return LabeledMultigraph(num_vertices_, edges_, new_arity, std::move(labels));
}

LabeledMultigraph LabeledMultigraph::permuted(std::span<const Vertex> sigma) const {
  if (sigma.size() != num_vertices_) throw InvalidGraph("permutation size");
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const auto& e : edges_) edges.emplace_back(sigma[e.u], sigma[e.v]);
  std::vector<std::optional<Vertex>> labels(labels_.size());
  for (std::size_t l = 0; l < labels_.size(); ++l) {
    if (labels_[l]) labels[l] = sigma[*labels_[l]];
  }
  return LabeledMultigraph(num_vertices_, std::move(edges), labels_.size(),
                           std::move(labels));
}

LabeledMultigraph LabeledMultigraph::with_edge(Edge e) const {
  std::vector<Edge> edges = edges_;
  edges.push_back(e);
  return LabeledMultigraph(num_vertices_, std::move(edges), labels_.size(),
                           labels_);
}

LabeledMultigraph LabeledMultigraph::with_pendant(Vertex anchor) const {
  std::vector<Edge> edges = edges_;
  edges.emplace_back(anchor, num_vertices_);
  return LabeledMultigraph(num_vertices_ + 1, std::move(edges), labels_.size(),
                           labels_);
}

namespace {

std::vector<std::size_t> component_ids(const LabeledMultigraph& g,
                                       std::size_t& count) {
  std::vector<std::size_t> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges()) {
    const auto a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> id(g.num_vertices());
  std::map<std::size_t, std::size_t> root_to_id;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const auto r = find(v);
    auto [it, inserted] = root_to_id.try_emplace(r, root_to_id.size());
    id[v] = it->second;
  }
  count = root_to_id.size();
  return id;
}

}  // namespace

bool LabeledMultigraph::connected() const {
  std::size_t count = 0;
  component_ids(*this, count);
  return count <= 1;
}

std::vector<LabeledMultigraph> LabeledMultigraph::connected_components() const {
  std::size_t count = 0;
  const auto id = component_ids(*this, count);
  std::vector<std::size_t> local(num_vertices_);
  std::vector<std::size_t> sizes(count, 0);
  for (std::size_t v = 0; v < num_vertices_; ++v) local[v] = sizes[id[v]]++;
  std::vector<std::vector<Edge>> edges(count);
  for (const auto& e : edges_) edges[id[e.u]].emplace_back(local[e.u], local[e.v]);
  std::vector<std::vector<std::optional<Vertex>>> labels(
      count, std::vector<std::optional<Vertex>>(labels_.size()));
  for (std::size_t l = 0; l < labels_.size(); ++l) {
    if (labels_[l]) labels[id[*labels_[l]]][l] = local[*labels_[l]];
  }
  std::vector<LabeledMultigraph> out;
  out.reserve(count);
  for (std::size_t c = 0; c < count; ++c) {
    out.emplace_back(sizes[c], std::move(edges[c]), labels_.size(),
                     std::move(labels[c]));
  }
  return out;
}

LabeledMultigraph glue(const LabeledMultigraph& g1, const LabeledMultigraph& g2) {
  if (g1.arity() != g2.arity()) {
    throw ArityMismatch("glue: arity " + std::to_string(g1.arity()) + " vs " +
                        std::to_string(g2.arity()));
  }
  const std::size_t k = g1.arity();
  std::vector<Vertex> image(g2.num_vertices());
  std::size_t next = g1.num_vertices();
  for (Vertex w = 0; w < g2.num_vertices(); ++w) {
    const auto label = g2.label_of(w);
    const auto shared = label ? g1.labeled_vertex(*label) : std::nullopt;
    image[w] = shared ? *shared : next++;
  }
  std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
  for (const auto& e : g2.edges()) edges.emplace_back(image[e.u], image[e.v]);
  std::vector<std::optional<Vertex>> labels(k);
  for (std::size_t l = 1; l <= k; ++l) {
    if (auto v = g1.labeled_vertex(l)) {
      labels[l - 1] = v;
    } else if (auto w = g2.labeled_vertex(l)) {
      labels[l - 1] = image[*w];
    }
  }
  return LabeledMultigraph(next, std::move(edges), k, std::move(labels));
}

LabeledMultigraph disjoint_union(const LabeledMultigraph& g1,
                                 const LabeledMultigraph& g2) {
  const std::size_t k = std::max(g1.arity(), g2.arity());
  std::vector<std::optional<Vertex>> labels(k);
  for (std::size_t l = 1; l <= k; ++l) {
    const auto a = g1.labeled_vertex(l);
    const auto b = g2.labeled_vertex(l);
    if (a && b) throw InvalidGraph("disjoint_union: label " + std::to_string(l) +
                                   " present in both operands");
    if (a) labels[l - 1] = a;
    if (b) labels[l - 1] = *b + g1.num_vertices();
  }
  std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
  for (const auto& e : g2.edges()) {
    edges.emplace_back(e.u + g1.num_vertices(), e.v + g1.num_vertices());
  }
  return LabeledMultigraph(g1.num_vertices() + g2.num_vertices(),
                           std::move(edges), k, std::move(labels));
}

namespace {

void put16(std::string& out, std::size_t value) {
  if (value > 0xFFFF) throw InvalidGraph("canonical code field overflow");
  out.push_back(static_cast<char>((value >> 8) & 0xFF));
  out.push_back(static_cast<char>(value & 0xFF));
}

class Canonizer {
 public:
  explicit Canonizer(const LabeledMultigraph& g)
      : g_(g), n_(g.num_vertices()), mult_(n_ * n_, 0) {
    for (const auto& e : g.edges()) {
      ++mult_[e.u * n_ + e.v];
      if (!e.loop()) ++mult_[e.v * n_ + e.u];
    }
  }

  CanonicalForm run() {
    std::vector<std::int64_t> colors(n_);
    for (Vertex v = 0; v < n_; ++v) {
      const auto label = g_.label_of(v);
      colors[v] = label ? static_cast<std::int64_t>(*label)
                        : static_cast<std::int64_t>(g_.arity() + 1 + mult(v, v));
    }
    search(std::move(colors));
    return {std::move(best_code_), std::move(best_order_)};
  }

 private:
  std::size_t mult(Vertex a, Vertex b) const { return mult_[a * n_ + b]; }

  // Equitable refinement; colors are renumbered 0..c-1 preserving order.
  std::size_t refine(std::vector<std::int64_t>& colors) const {
    std::size_t num_colors = 0;
    std::vector<std::vector<std::int64_t>> sigs(n_);
    while (true) {
      for (Vertex v = 0; v < n_; ++v) {
        std::vector<std::pair<std::int64_t, std::int64_t>> nbrs;
        for (Vertex w = 0; w < n_; ++w) {
          if (w != v && mult(v, w) > 0) {
            nbrs.emplace_back(colors[w], static_cast<std::int64_t>(mult(v, w)));
          }
        }
        std::sort(nbrs.begin(), nbrs.end());
        auto& sig = sigs[v];
        sig.clear();
        sig.push_back(colors[v]);
        for (const auto& [c, m] : nbrs) {
          sig.push_back(c);
          sig.push_back(m);
        }
      }
      std::vector<std::vector<std::int64_t>> distinct = sigs;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for (Vertex v = 0; v < n_; ++v) {
        colors[v] = std::lower_bound(distinct.begin(), distinct.end(), sigs[v]) -
                    distinct.begin();
      }
      if (distinct.size() == num_colors) return num_colors;
      num_colors = distinct.size();
    }
  }

  CanonicalCode encode(const std::vector<Vertex>& order) const {
    std::vector<std::size_t> pos(n_);
    for (std::size_t i = 0; i < n_; ++i) pos[order[i]] = i;
    CanonicalCode code;
    code.reserve(4 + 2 * g_.arity() + n_ * (n_ + 1));
    put16(code, n_);
    put16(code, g_.arity());
    for (const auto& l : g_.labels()) put16(code, l ? pos[*l] + 1 : 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j) put16(code, mult(order[i], order[j]));
    return code;
  }

  void search(std::vector<std::int64_t> colors) {
    const std::size_t num_colors = refine(colors);
    if (num_colors == n_) {
      std::vector<Vertex> order(n_);
      for (Vertex v = 0; v < n_; ++v) order[static_cast<std::size_t>(colors[v])] = v;
      CanonicalCode code = encode(order);
      if (best_order_.size() != n_ || code < best_code_) {
        best_code_ = std::move(code);
        best_order_ = std::move(order);
      }
      return;
    }
    // First non-singleton cell in color order.
    std::vector<std::size_t> cell_size(num_colors, 0);
    for (auto c : colors) ++cell_size[static_cast<std::size_t>(c)];
    std::int64_t target = 0;
    while (cell_size[static_cast<std::size_t>(target)] == 1) ++target;
    for (Vertex v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      std::vector<std::int64_t> next(n_);
      for (Vertex w = 0; w < n_; ++w) {
        next[w] = 2 * colors[w] + ((colors[w] == target && w != v) ? 1 : 0);
      }
      search(std::move(next));
    }
  }

  const LabeledMultigraph& g_;
  std::size_t n_;
  std::vector<std::size_t> mult_;
  CanonicalCode best_code_;
  std::vector<Vertex> best_order_;
};

}  // namespace

CanonicalForm canonical_form(const LabeledMultigraph& g) {
  if (g.num_vertices() == 0) {
    CanonicalCode code;
    put16(code, 0);
    put16(code, g.arity());
    for (std::size_t l = 0; l < g.arity(); ++l) put16(code, 0);
    return {code, {}};
  }
  return Canonizer(g).run();
}

CanonicalCode canonical_code(const LabeledMultigraph& g) {
  return canonical_form(g).code;
}

LabeledMultigraph canonical_representative(const LabeledMultigraph& g) {
  const auto form = canonical_form(g);
  std::vector<Vertex> sigma(g.num_vertices());
  for (std::size_t i = 0; i < form.order.size(); ++i) sigma[form.order[i]] = i;
  return g.permuted(sigma);
}

LabeledMultigraph assign_label_one(const LabeledMultigraph& g) {
  if (g.num_vertices() == 0) {
    throw InvalidGraph("assign_label_one: graph has no vertices");
  }
  const LabeledMultigraph plain = g.unlabeled();
  const auto form = canonical_form(plain);
  return LabeledMultigraph(plain.num_vertices(),
                           {plain.edges().begin(), plain.edges().end()}, 1,
                           {form.order.front()});
}

bool isomorphic(const LabeledMultigraph& a, const LabeledMultigraph& b) {
  return a.num_vertices() == b.num_vertices() &&
         a.num_edges() == b.num_edges() && a.arity() == b.arity() &&
         canonical_code(a) == canonical_code(b);
}

std::string describe(const LabeledMultigraph& g) {
  std::ostringstream os;
  os << "G(n=" << g.num_vertices() << ", E={";
  bool first = true;
  for (const auto& e : g.edges()) {
    os << (first ? "" : ",") << e.u << '-' << e.v;
    first = false;
  }
  os << "}";
  if (g.arity() > 0) {
    os << ", labels={";
    for (std::size_t l = 1; l <= g.arity(); ++l) {
      os << (l > 1 ? "," : "") << l << ':';
      if (auto v = g.labeled_vertex(l)) os << *v; else os << '-';
    }
    os << '}';
  }
  os << ')';
  return os.str();
}

namespace graphs {

LabeledMultigraph single_vertex(std::size_t arity) {
  std::vector<std::optional<Vertex>> labels;
  if (arity >= 1) labels.push_back(0);
  return LabeledMultigraph(1, {}, arity, std::move(labels));
}

LabeledMultigraph loop_vertex(std::size_t loops, std::size_t arity) {
  std::vector<std::optional<Vertex>> labels;
  if (arity >= 1) labels.push_back(0);
  return LabeledMultigraph(1, std::vector<Edge>(loops, Edge(0, 0)), arity,
                           std::move(labels));
}

LabeledMultigraph labeled_edge() {
  return LabeledMultigraph(2, {Edge(0, 1)}, 2, {0, 1});
}

LabeledMultigraph edge(std::size_t multiplicity) {
  return LabeledMultigraph(2, std::vector<Edge>(multiplicity, Edge(0, 1)));
}

LabeledMultigraph path(std::size_t vertices) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v + 1 < vertices; ++v) edges.emplace_back(v, v + 1);
  return LabeledMultigraph(vertices, std::move(edges));
}

LabeledMultigraph cycle(std::size_t vertices) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < vertices; ++v) {
    edges.emplace_back(v, (v + 1) % vertices);
  }
  return LabeledMultigraph(vertices, std::move(edges));
}

LabeledMultigraph complete(std::size_t vertices) {
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < vertices; ++a)
    for (std::size_t b = a + 1; b < vertices; ++b) edges.emplace_back(a, b);
  return LabeledMultigraph(vertices, std::move(edges));
}

LabeledMultigraph labeled_independent_set(std::size_t n) {
  std::vector<std::optional<Vertex>> labels;
  for (std::size_t v = 0; v < n; ++v) labels.push_back(v);
  return LabeledMultigraph(n, {}, n, std::move(labels));
}

}  // namespace graphs

}  // namespace parlearn
