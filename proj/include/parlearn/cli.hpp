#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "parlearn/learner.hpp"

namespace parlearn::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kBoundExhausted = 2,
  kValidation = 3,
  kIterationCap = 4,
  kOther = 5,
};

struct LearnOptions {
  std::filesystem::path target;
  std::filesystem::path out = "transcript.jsonl";
  /// Defaults to <out stem>.hypothesis.json next to the transcript.
  std::optional<std::filesystem::path> hypothesis_out;
  TeacherConfig teacher;
  std::size_t iteration_cap = LearnerConfig{}.iteration_cap;

  std::filesystem::path hypothesis_path() const;
  Json to_json() const;
};

struct LearnOutcome {
  int exit_code = kOther;
  std::string message;
  SessionTranscript transcript;
  std::optional<LearnResult> result;
};

/// Refuses targets outside the learner's contract: non-rigid, with twins, or
/// with a zero vertex weight or zero total vertex weight. Throws
/// ValidationError naming the failed check.
void validate_target(const WeightedGraph& target);

/// Loads, validates, learns and writes the transcript (also on failure) and,
/// on success, the hypothesis.
LearnOutcome run_learn(const LearnOptions& options);
int cmd_learn(const LearnOptions& options);

/// Writes the target JSON to `out`.
int cmd_gen_target(std::size_t q, std::size_t denominator_bound,
                   std::uint64_t seed, std::ostream& out);
/// Prints hom(graph, target) as a canonical rational.
int cmd_eval(const std::filesystem::path& graph_file,
             const std::filesystem::path& target_file, std::ostream& out);
int cmd_rank_experiment(const std::filesystem::path& target_file, std::size_t k,
                        std::size_t samples, std::uint64_t seed,
                        std::ostream& out);
int cmd_rigidity_stats(std::size_t n_min, std::size_t n_max,
                       std::size_t samples, std::uint64_t seed,
                       std::ostream& out);

}  // namespace parlearn::cli
