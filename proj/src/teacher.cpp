#include "parlearn/teacher.hpp"

#include <random>
#include <utility>

#include "parlearn/errors.hpp"

namespace parlearn {

std::uint64_t TeacherConfig::theoretical_bound(std::uint64_t q) {
  std::uint64_t q6 = 1;
  for (int i = 0; i < 6; ++i) q6 *= q;
  return 2 * (1 + q * q) * q6;
}

namespace {

std::mutex cell_mutex;
std::map<std::pair<std::size_t, std::size_t>, std::vector<LabeledMultigraph>>
    cell_cache;

// Caller holds cell_mutex.
const std::vector<LabeledMultigraph>& cell_locked(std::size_t v, std::size_t e) {
  const auto key = std::make_pair(v, e);
  if (auto it = cell_cache.find(key); it != cell_cache.end()) return it->second;

  std::map<CanonicalCode, LabeledMultigraph> classes;
  auto add = [&](const LabeledMultigraph& g) {
    const auto form = canonical_form(g);
    if (classes.count(form.code)) return;
    std::vector<Vertex> sigma(g.num_vertices());
    for (std::size_t i = 0; i < form.order.size(); ++i) sigma[form.order[i]] = i;
    classes.emplace(form.code, g.permuted(sigma));
  };
  if (v == 1 && e == 0) {
    add(graphs::single_vertex());
  } else if (v >= 1 && e + 1 >= v) {
    // A connected multigraph either has an edge on a cycle (drop it and stay
    // connected) or is a tree (drop a leaf).
    if (e >= 1) {
      for (const auto& g : cell_locked(v, e - 1)) {
        for (Vertex a = 0; a < v; ++a)
          for (Vertex b = a; b < v; ++b) add(g.with_edge(Edge(a, b)));
      }
    }
    if (v >= 2 && e >= 1) {
      for (const auto& g : cell_locked(v - 1, e - 1)) {
        for (Vertex a = 0; a + 1 < v; ++a) add(g.with_pendant(a));
      }
    }
  }
  std::vector<LabeledMultigraph> out;
  out.reserve(classes.size());
  for (auto& [code, g] : classes) out.push_back(std::move(g));
  return cell_cache.emplace(key, std::move(out)).first->second;
}

LabeledMultigraph random_connected(std::mt19937_64& rng, std::size_t max_vertices,
                                   std::size_t extra_edges) {
  const std::size_t n =
      std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    edges.emplace_back(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
  }
  const std::size_t extra =
      std::uniform_int_distribution<std::size_t>(0, extra_edges)(rng);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  for (std::size_t i = 0; i < extra; ++i) edges.emplace_back(pick(rng), pick(rng));
  return LabeledMultigraph(n, std::move(edges));
}

}  // namespace

const std::vector<LabeledMultigraph>& graph_cell(std::size_t vertices,
                                                 std::size_t edges) {
  std::lock_guard lock(cell_mutex);
  return cell_locked(vertices, edges);
}

void for_each_graph(const TeacherConfig& cfg,
                    const std::function<bool(const LabeledMultigraph&)>& visit) {
  for (std::size_t v = 1; v <= cfg.max_vertices; ++v) {
    for (std::size_t e = v - 1; e <= cfg.max_edges; ++e) {
      for (const auto& g : graph_cell(v, e)) {
        if (!visit(g)) return;
      }
    }
  }
}

std::vector<LabeledMultigraph> enumerate_graphs(const TeacherConfig& cfg,
                                                std::size_t limit) {
  std::vector<LabeledMultigraph> out;
  for_each_graph(cfg, [&](const LabeledMultigraph& g) {
    out.push_back(g);
    return limit == 0 || out.size() < limit;
  });
  return out;
}

Teacher::Teacher(WeightedGraph target, TeacherConfig config)
    : target_(std::move(target)), config_(config) {
  if (config_.max_vertices < 1 || config_.max_edges < 1) {
    throw ValidationError("teacher bounds must be >= 1");
  }
}

Rational Teacher::value(const LabeledMultigraph& g) {
  ++value_count_;
  return hom(g, target_);
}

Rational Teacher::target_value(const LabeledMultigraph& g) {
  const auto code = canonical_code(g);
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = target_cache_.find(code); it != target_cache_.end()) {
      return it->second;
    }
  }
  Rational v = hom(g, target_);
  std::lock_guard lock(cache_mutex_);
  target_cache_.emplace(code, v);
  return v;
}

std::optional<LabeledMultigraph> Teacher::equivalent(const WeightedGraph& h) {
  ++equivalence_count_;
  if (weighted_iso(make_twin_free(h), target_)) return std::nullopt;

  std::optional<LabeledMultigraph> found;
  for_each_graph(config_, [&](const LabeledMultigraph& g) {
    if (hom(g, h) != target_value(g)) {
      found = g;
      return false;
    }
    return true;
  });
  if (found) return found;

  std::mt19937_64 rng(config_.seed);
  for (std::size_t s = 0; s < config_.random_samples; ++s) {
    const auto g = random_connected(rng, config_.max_vertices + 2, config_.max_edges);
    if (hom(g, h) != hom(g, target_)) return g;
  }
  throw BoundExhausted(
      "no counterexample with <= " + std::to_string(config_.max_vertices) +
      " vertices and <= " + std::to_string(config_.max_edges) +
      " edges, but the hypothesis is not isomorphic to the target (a "
      "counterexample of size <= " +
      std::to_string(TeacherConfig::theoretical_bound(target_.size())) +
      " exists)");
}

QueryCounters Teacher::counters() const {
  return {value_count_.load(), equivalence_count_.load()};
}

}  // namespace parlearn
