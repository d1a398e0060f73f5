#include "parlearn/cli.hpp"

#include <ostream>

#include <spdlog/spdlog.h>

#include "parlearn/errors.hpp"
#include "parlearn/experiments.hpp"

namespace parlearn::cli {

std::filesystem::path LearnOptions::hypothesis_path() const {
  if (hypothesis_out) return *hypothesis_out;
  auto p = out;
  p.replace_extension(".hypothesis.json");
  return p;
}

Json LearnOptions::to_json() const {
  return {{"subcommand", "learn"},
          {"target", target.string()},
          {"out", out.string()},
          {"hypothesis_out", hypothesis_path().string()},
          {"max_vertices", teacher.max_vertices},
          {"max_edges", teacher.max_edges},
          {"seed", teacher.seed},
          {"iteration_cap", iteration_cap}};
}

void validate_target(const WeightedGraph& target) {
  Rational total = 0;
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (target.alpha()[i] == 0) {
      throw ValidationError("target has a zero vertex weight at vertex " +
                            std::to_string(i));
    }
    total += target.alpha()[i];
  }
  if (total == 0) throw ValidationError("target vertex weights sum to zero");
  if (!is_twin_free(target)) throw ValidationError("target has twin vertices");
  if (!is_rigid(target)) throw ValidationError("target is not rigid");
}

namespace {

WeightedGraph load_target(const std::filesystem::path& file) {
  return weighted_graph_from_json(read_json_file(file));
}

}  // namespace

LearnOutcome run_learn(const LearnOptions& options) {
  LearnOutcome outcome;
  std::optional<Teacher> teacher;
  try {
    auto target = load_target(options.target);
    validate_target(target);
    teacher.emplace(std::move(target), options.teacher);
  } catch (const std::exception& e) {
    outcome.exit_code = kValidation;
    outcome.message = e.what();
    return outcome;
  }

  LearnerConfig config;
  config.iteration_cap = options.iteration_cap;
  config.run_config = {{"run_config", options.to_json()}};
  Learner learner(*teacher, config);
  try {
    outcome.result = learner.learn();
    outcome.exit_code = kOk;
    outcome.message = "YES after " + std::to_string(outcome.result->rounds) +
                      " equivalence queries";
  } catch (const BoundExhausted& e) {
    outcome.exit_code = kBoundExhausted;
    outcome.message = e.what();
  } catch (const IterationCapExceeded& e) {
    outcome.exit_code = kIterationCap;
    outcome.message = e.what();
  } catch (const std::exception& e) {
    outcome.exit_code = kOther;
    outcome.message = e.what();
  }
  outcome.transcript = learner.transcript();
  outcome.transcript.write(options.out);
  if (outcome.result) {
    write_text_file(options.hypothesis_path(),
                    to_json(outcome.result->hypothesis).dump(2) + "\n");
  }
  return outcome;
}

int cmd_learn(const LearnOptions& options) {
  const auto outcome = run_learn(options);
  if (outcome.exit_code == kOk) {
    spdlog::info("learn: {}", outcome.message);
  } else {
    spdlog::error("learn: {}", outcome.message);
  }
  return outcome.exit_code;
}

int cmd_gen_target(std::size_t q, std::size_t denominator_bound,
                   std::uint64_t seed, std::ostream& out) {
  out << to_json(generate_target(q, denominator_bound, seed)).dump(2) << '\n';
  return kOk;
}

int cmd_eval(const std::filesystem::path& graph_file,
             const std::filesystem::path& target_file, std::ostream& out) {
  const auto g = graph_from_json(read_json_file(graph_file));
  out << to_string(hom(g, load_target(target_file))) << '\n';
  return kOk;
}

int cmd_rank_experiment(const std::filesystem::path& target_file, std::size_t k,
                        std::size_t samples, std::uint64_t seed,
                        std::ostream& out) {
  out << to_csv(rank_experiment(load_target(target_file), k, samples, seed));
  return kOk;
}

int cmd_rigidity_stats(std::size_t n_min, std::size_t n_max,
                       std::size_t samples, std::uint64_t seed,
                       std::ostream& out) {
  out << to_csv(rigidity_stats(n_min, n_max, samples, seed));
  return kOk;
}

}  // namespace parlearn::cli
