#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ria/harness.hpp"

namespace {

using namespace ria::harness;

// Writes to `path`, or stdout when it is empty or "-".
template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  fn(out);
}

void add_generator_options(CLI::App* cmd, GeneratorSpec& g) {
  cmd->add_option("--k", g.k, "cache size (paging kinds, mts-from-paging)");
  cmd->add_option("--n", g.n, "pages, states or universe size");
  cmd->add_option("--m", g.m, "number of sets (sc-random)");
  cmd->add_option("--depth", g.depth, "tree depth (sc-tree)");
  cmd->add_option("--phases", g.phases, "disjoint trees (sc-tree)");
  cmd->add_option("--length", g.length, "sequence length");
  cmd->add_option("--density", g.density, "set membership probability (sc-random)");
  cmd->add_option("--mass", g.mass, "sc-tree mass: unadvised | mixed");
  cmd->add_option("--mass-alpha", g.alpha, "alpha of the mixed mass (sc-tree)");
}

std::vector<double> default_grid() { return acceptance::alpha_grid(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online algorithms with randomly infused advice: paging, uniform MTS, set cover"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "estimate competitive ratios over an alpha sweep");
  std::string run_problem, run_instance, run_generate, run_out;
  std::vector<double> run_alpha, run_alphas;
  std::size_t run_trials = 100;
  std::uint64_t run_seed = 1;
  GeneratorSpec run_gen;
  run->add_option("--problem", run_problem, "paging | mts | setcover (checked against the instance)");
  auto* inst_opt = run->add_option("--instance", run_instance, "instance JSON file")->check(CLI::ExistingFile);
  auto* gen_opt = run->add_option("--generate", run_generate, "generator kind instead of a file");
  inst_opt->excludes(gen_opt);
  run->add_option("--alpha", run_alpha, "infusion parameter (repeatable)");
  run->add_option("--alphas", run_alphas, "comma separated alphas")->delimiter(',');
  run->add_option("--trials", run_trials, "independent games per alpha");
  run->add_option("--seed", run_seed, "master seed");
  run->add_option("--gen-seed", run_gen.seed, "generator seed");
  run->add_option("--out", run_out, "CSV output file (default stdout)");
  add_generator_options(run, run_gen);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "emit theoretical bound curves");
  BoundRequest breq;
  std::size_t bk = 0, bn = 0, bd = 0;
  std::string bounds_out;
  bounds->add_option("--problem", breq.problem, "paging | mts | setcover")->required();
  auto* bk_opt = bounds->add_option("--k", bk, "cache size (paging)");
  auto* bn_opt = bounds->add_option("--n", bn, "states (mts) or universe size (setcover)");
  auto* bd_opt = bounds->add_option("--d", bd, "maximum element degree (setcover)");
  bounds->add_option("--alphas", breq.alphas, "comma separated alphas")->delimiter(',');
  bounds->add_option("--constant", breq.constant, "set cover constant C");
  bounds->add_option("--out", bounds_out, "CSV output file (default stdout)");

  // generate
  auto* gen = app.add_subcommand("generate", "write a generated instance as JSON");
  GeneratorSpec gspec;
  std::string gen_out;
  gen->add_option("kind", gspec.kind, "generator kind")
      ->required()
      ->check(CLI::IsMember(generator_kinds()));
  gen->add_option("--seed", gspec.seed, "generator seed");
  gen->add_option("--out", gen_out, "output file (default stdout)");
  add_generator_options(gen, gspec);

  // accept
  auto* accept = app.add_subcommand("accept", "run the acceptance criteria");
  std::vector<int> accept_ids;
  accept->add_option("--only", accept_ids, "criterion numbers to run")->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      if (run_instance.empty() == run_generate.empty()) {
        throw std::invalid_argument("run needs exactly one of --instance or --generate");
      }
      Instance inst = [&]() -> Instance {
        if (!run_instance.empty()) return load_instance(run_instance);
        run_gen.kind = run_generate;
        return generate(run_gen);
      }();
      if (!run_problem.empty() && run_problem != instance_problem(inst)) {
        throw std::invalid_argument("--problem " + run_problem + " but the instance is " +
                                    instance_problem(inst));
      }
      ExperimentPlan plan;
      plan.alphas = run_alpha;
      plan.alphas.insert(plan.alphas.end(), run_alphas.begin(), run_alphas.end());
      if (plan.alphas.empty()) plan.alphas = default_grid();
      plan.trials = run_trials;
      plan.master_seed = run_seed;
      const auto rows = run_plan(inst, plan);
      with_output(run_out, [&](std::ostream& os) { write_results_csv(os, rows); });
      bool failed = false;
      for (const auto& r : rows) {
        if (!r.message.empty()) {
          std::cerr << "alpha " << format_double(r.result.alpha) << ": " << r.message << '\n';
          failed = true;
        }
      }
      return failed ? 2 : 0;
    }
    if (bounds->parsed()) {
      if (*bk_opt) breq.k = bk;
      if (*bn_opt) breq.n = bn;
      if (*bd_opt) breq.d = bd;
      if (breq.alphas.empty()) breq.alphas = default_grid();
      const auto rows = bound_curve(breq);
      with_output(bounds_out, [&](std::ostream& os) { write_bounds_csv(os, rows); });
      return 0;
    }
    if (gen->parsed()) {
      const Instance inst = generate(gspec);
      validate(inst);
      with_output(gen_out, [&](std::ostream& os) { os << dump_instance(inst); });
      return 0;
    }
    if (accept->parsed()) {
      const auto outcomes = run_acceptance(accept_ids, [](const CriterionOutcome& c) {
        std::cout << format_outcome(c) << std::endl;
      });
      const bool ok = all_passed(outcomes);
      std::cout << (ok ? "acceptance: all criteria passed" : "acceptance: FAILED") << std::endl;
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
