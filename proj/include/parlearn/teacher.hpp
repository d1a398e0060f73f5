#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "parlearn/multigraph.hpp"
#include "parlearn/weighted_graph.hpp"

namespace parlearn {

struct TeacherConfig {
  std::size_t max_vertices = 6;
  std::size_t max_edges = 8;
  /// Random connected multigraphs tried after the enumeration runs dry.
  std::size_t random_samples = 0;
  std::uint64_t seed = 0;

  /// Size 2(1+q^2)q^6 below which a counterexample is known to exist. Far
  /// beyond what enumeration can reach; reported, never enforced.
  static std::uint64_t theoretical_bound(std::uint64_t q);
};

struct QueryCounters {
  std::size_t value_count = 0;
  std::size_t equivalence_count = 0;
};

/// Connected loop-allowing multigraphs with exactly `vertices` vertices and
/// `edges` edges, one per isomorphism class, sorted by canonical code.
/// Computed once per cell and cached process-wide.
const std::vector<LabeledMultigraph>& graph_cell(std::size_t vertices,
                                                 std::size_t edges);

/// Visits every class within the bounds in (|V|, |E|, code) order until the
/// visitor returns false.
void for_each_graph(const TeacherConfig& cfg,
                    const std::function<bool(const LabeledMultigraph&)>& visit);

/// The first `limit` items of the enumeration stream (all of it if 0).
std::vector<LabeledMultigraph> enumerate_graphs(const TeacherConfig& cfg,
                                                std::size_t limit = 0);

/// Simulated oracle for hom(-, target). Safe to query from several threads.
class Teacher {
 public:
  explicit Teacher(WeightedGraph target, TeacherConfig config = {});

  Rational value(const LabeledMultigraph& g);

  /// nullopt means YES; otherwise the first graph in enumeration order on
  /// which h and the target disagree. Throws BoundExhausted if none is found
  /// and h is not isomorphic to the target after twin merging.
  std::optional<LabeledMultigraph> equivalent(const WeightedGraph& h);

  QueryCounters counters() const;
  const TeacherConfig& config() const noexcept { return config_; }
  /// Hidden target; for harness checks, never consulted by the learner.
  const WeightedGraph& target() const noexcept { return target_; }

 private:
  Rational target_value(const LabeledMultigraph& g);

  WeightedGraph target_;
  TeacherConfig config_;
  std::atomic<std::size_t> value_count_{0};
  std::atomic<std::size_t> equivalence_count_{0};
  std::mutex cache_mutex_;
  std::map<CanonicalCode, Rational> target_cache_;
};

}  // namespace parlearn
