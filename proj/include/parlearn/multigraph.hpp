#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace parlearn {

using Vertex = std::size_t;

/// Undirected edge, stored with u <= v. A loop has u == v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool loop() const noexcept { return u == v; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Byte string identifying a labeled multigraph up to label-preserving
/// isomorphism. Codes are totally ordered; the vertex count leads.
using CanonicalCode = std::string;

/// Finite multigraph with loops in which up to k vertices carry distinct
/// labels from {1..k}. Immutable once built; edges are kept sorted.
class LabeledMultigraph {
 public:
  LabeledMultigraph() = default;
  /// labels[l-1] is the vertex carrying label l, if any; labels.size() must
  /// not exceed arity (missing trailing entries mean unassigned labels).
  LabeledMultigraph(std::size_t num_vertices, std::vector<Edge> edges,
                    std::size_t arity = 0,
                    std::vector<std::optional<Vertex>> labels = {});

  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::size_t arity() const noexcept { return labels_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const std::optional<Vertex>> labels() const noexcept {
    return labels_;
  }

  /// Vertex carrying 1-based label l, if assigned.
  std::optional<Vertex> labeled_vertex(std::size_t label) const;
  /// 1-based label on vertex v, if any.
  std::optional<std::size_t> label_of(Vertex v) const;
  std::size_t num_labeled() const;

  std::size_t multiplicity(Vertex a, Vertex b) const;
  std::size_t degree(Vertex v) const;  // loops count twice

  /// Same graph with every label dropped and arity 0.
  LabeledMultigraph unlabeled() const;
  /// Reinterprets with arity k; labels above k must be unassigned.
  LabeledMultigraph with_arity(std::size_t k) const;
  /// label_map[l-1] gives the new 1-based label for old label l.
  LabeledMultigraph relabeled(std::span<const std::size_t> label_map,
                              std::size_t new_arity) const;
  /// Vertex v becomes sigma[v].
  LabeledMultigraph permuted(std::span<const Vertex> sigma) const;
  LabeledMultigraph with_edge(Edge e) const;
  /// Adds a fresh vertex joined to `anchor` by a single edge.
  LabeledMultigraph with_pendant(Vertex anchor) const;

  bool connected() const;
  /// Components in order of their smallest vertex; labels travel along.
  std::vector<LabeledMultigraph> connected_components() const;

  friend bool operator==(const LabeledMultigraph&,
                         const LabeledMultigraph&) = default;

 private:
  std::size_t num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::optional<Vertex>> labels_;
};

/// k-connection: disjoint union followed by identification of vertices that
/// carry the same label. Throws ArityMismatch when arities differ.
LabeledMultigraph glue(const LabeledMultigraph& g1, const LabeledMultigraph& g2);

/// Disjoint union of graphs whose label sets do not overlap (the result has
/// the larger arity).
LabeledMultigraph disjoint_union(const LabeledMultigraph& g1,
                                 const LabeledMultigraph& g2);

struct CanonicalForm {
  CanonicalCode code;
  /// order[i] is the original vertex placed at canonical position i.
  std::vector<Vertex> order;
};

/// Canonical labeling by individualization/refinement with exhaustive search
/// of the refined cells. Exponential on highly symmetric graphs; fine for the
/// small graphs this library works with.
CanonicalForm canonical_form(const LabeledMultigraph& g);
CanonicalCode canonical_code(const LabeledMultigraph& g);
/// g relabeled into canonical vertex order.
LabeledMultigraph canonical_representative(const LabeledMultigraph& g);

/// Gives label 1 (arity 1) to the first vertex in canonical order of the
/// unlabeled graph. Throws InvalidGraph for the empty graph.
LabeledMultigraph assign_label_one(const LabeledMultigraph& g);

bool isomorphic(const LabeledMultigraph& a, const LabeledMultigraph& b);

std::string describe(const LabeledMultigraph& g);

/// Common small graphs.
namespace graphs {
/// One vertex; labeled 1 if arity >= 1.
LabeledMultigraph single_vertex(std::size_t arity = 0);
/// One vertex with `loops` loops; labeled 1 if arity >= 1.
LabeledMultigraph loop_vertex(std::size_t loops = 1, std::size_t arity = 0);
/// Single edge with both ends labeled 1 and 2 (arity 2).
LabeledMultigraph labeled_edge();
LabeledMultigraph edge(std::size_t multiplicity = 1);
LabeledMultigraph path(std::size_t vertices);
LabeledMultigraph cycle(std::size_t vertices);
LabeledMultigraph complete(std::size_t vertices);
/// n isolated vertices labeled 1..n (arity n).
LabeledMultigraph labeled_independent_set(std::size_t n);
}  // namespace graphs

}  // namespace parlearn
