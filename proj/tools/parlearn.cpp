#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <spdlog/cfg/helpers.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "parlearn/cli.hpp"
#include "parlearn/errors.hpp"

namespace {

using namespace parlearn;

// Writes to --out when given, stdout otherwise.
template <typename F>
int with_output(const std::string& out_path, F&& run) {
  if (out_path.empty()) return run(std::cout);
  std::ofstream file(out_path);
  if (!file) throw ParseError("cannot open " + out_path + " for writing");
  return run(file);
}

}  // namespace

int main(int argc, char** argv) {
  spdlog::set_default_logger(spdlog::stderr_color_mt("parlearn"));
  spdlog::set_level(spdlog::level::warn);
  if (const char* level = std::getenv("PARLEARN_LOG")) {
    spdlog::cfg::helpers::load_levels(level);
  }

  CLI::App app{"Exact learning of rigid partition functions"};
  app.require_subcommand(1);

  cli::LearnOptions learn;
  std::string hypothesis_out;
  auto* learn_cmd = app.add_subcommand("learn", "Learn a target through value and equivalence queries");
  learn_cmd->add_option("--target", learn.target, "Target weighted graph JSON")->required();
  learn_cmd->add_option("--out", learn.out, "Transcript JSONL path")->capture_default_str();
  learn_cmd->add_option("--hypothesis-out", hypothesis_out, "Hypothesis JSON path");
  learn_cmd->add_option("--max-vertices", learn.teacher.max_vertices, "Teacher enumeration bound")->capture_default_str();
  learn_cmd->add_option("--max-edges", learn.teacher.max_edges, "Teacher enumeration bound")->capture_default_str();
  learn_cmd->add_option("--samples", learn.teacher.random_samples, "Random graphs tried after enumeration")->capture_default_str();
  learn_cmd->add_option("--seed", learn.teacher.seed, "Seed for teacher random samples")->capture_default_str();
  learn_cmd->add_option("--iteration-cap", learn.iteration_cap, "Maximum equivalence rounds")->capture_default_str();

  std::size_t q = 2, d = 3;
  std::uint64_t seed = 0;
  std::string out;
  auto* gen_cmd = app.add_subcommand("gen-target", "Sample a random rigid twin-free target");
  gen_cmd->add_option("--q", q, "Number of vertices")->capture_default_str();
  gen_cmd->add_option("--denominator-bound,-d", d, "Weight numerator/denominator bound")->capture_default_str();
  gen_cmd->add_option("--seed", seed)->capture_default_str();
  gen_cmd->add_option("--out", out, "Output path (stdout if omitted)");

  std::string graph, target;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate hom(G, H)");
  eval_cmd->add_option("--graph", graph, "Graph JSON")->required();
  eval_cmd->add_option("--target", target, "Weighted graph JSON")->required();

  std::size_t k = 1, samples = 25;
  auto* rank_cmd = app.add_subcommand("rank-experiment", "Rank of a sampled connection matrix");
  rank_cmd->add_option("--target", target, "Weighted graph JSON")->required();
  rank_cmd->add_option("--k", k, "Number of labels (1 or 2)")->capture_default_str()->check(CLI::Range(1, 2));
  rank_cmd->add_option("--samples", samples)->capture_default_str();
  rank_cmd->add_option("--seed", seed)->capture_default_str();
  rank_cmd->add_option("--out", out, "CSV path (stdout if omitted)");

  std::size_t n_min = 4, n_max = 8, rigidity_samples = 200;
  auto* rigid_cmd = app.add_subcommand("rigidity-stats", "Rigid fraction of random graphs per vertex count");
  rigid_cmd->add_option("--n-min", n_min)->capture_default_str()->check(CLI::Range(1, 10));
  rigid_cmd->add_option("--n-max", n_max)->capture_default_str()->check(CLI::Range(1, 10));
  rigid_cmd->add_option("--samples", rigidity_samples)->capture_default_str();
  rigid_cmd->add_option("--seed", seed)->capture_default_str();
  rigid_cmd->add_option("--out", out, "CSV path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*learn_cmd) {
      if (!hypothesis_out.empty()) learn.hypothesis_out = hypothesis_out;
      return cli::cmd_learn(learn);
    }
    if (*gen_cmd) {
      return with_output(out, [&](std::ostream& os) { return cli::cmd_gen_target(q, d, seed, os); });
    }
    if (*eval_cmd) return cli::cmd_eval(graph, target, std::cout);
    if (*rank_cmd) {
      return with_output(out, [&](std::ostream& os) {
        return cli::cmd_rank_experiment(target, k, samples, seed, os);
      });
    }
    if (*rigid_cmd) {
      return with_output(out, [&](std::ostream& os) {
        return cli::cmd_rigidity_stats(n_min, n_max, rigidity_samples, seed, os);
      });
    }
  } catch (const parlearn::ValidationError& e) {
    spdlog::error("{}", e.what());
    return cli::kValidation;
  } catch (const parlearn::ParseError& e) {
    spdlog::error("{}", e.what());
    return cli::kValidation;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return cli::kOther;
  }
  return cli::kUsage;
}
