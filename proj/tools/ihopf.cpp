// Command-line front end: verify suites, evaluate expressions, list presets.
// Exit status: 0 success, 1 a check failed, 2 invalid configuration or expression.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ihopf/expr.hpp"
#include "ihopf/scenario.hpp"

namespace {

using namespace ihopf;

struct VerifyFlags {
  std::string config;
  std::vector<std::string> presets, cartan_files, suites;
  int height = 0, depth = 0;
  std::uint64_t seed = 0;
  std::string json;
};

std::vector<std::string> flatten(const std::vector<std::string>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs)
    for (auto& s : split_list(x)) out.push_back(std::move(s));
  return out;
}

int run_verify(const VerifyFlags& fl, const CLI::App& cmd) {
  ScenarioConfig cfg = fl.config.empty() ? ScenarioConfig{} : scenario_from_config(load_config_file(fl.config));
  // flags override the config file
  if (cmd.count("--preset")) cfg.presets = flatten(fl.presets);
  if (cmd.count("--cartan-file")) cfg.cartan_files = fl.cartan_files;
  if (cmd.count("--suite")) {
    cfg.suites = flatten(fl.suites);
    cfg.suites_given = true;
  }
  if (cmd.count("--height")) cfg.options.height = fl.height;
  if (cmd.count("--depth")) cfg.options.depth = fl.depth;
  if (cmd.count("--seed")) cfg.options.seed = fl.seed;
  if (cmd.count("--json")) cfg.json_path = fl.json;

  const std::vector<Job> jobs = scenario_jobs(cfg);
  const auto records = run_jobs(jobs, cfg.options, worker_cap());
  std::cout << report_text(records);
  if (!cfg.json_path.empty()) {
    std::ofstream out(cfg.json_path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + cfg.json_path);
    out << report_json(records, cfg.options);
  }
  for (const auto& r : records)
    if (!r.pass) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of iHopf and iquantum group identities"};
  app.require_subcommand(1);

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "Run verification suites and report every check");
  verify->add_option("--config", vf.config, "key = value file mirroring the flags")->check(CLI::ExistingFile);
  verify->add_option("--preset", vf.presets, "Preset name(s); repeat or separate by commas");
  verify->add_option("--cartan-file", vf.cartan_files, "Satake datum file(s)")->check(CLI::ExistingFile);
  verify->add_option("--suite", vf.suites, "Suite name(s); an empty value selects none")->expected(0, -1);
  verify->add_option("--height", vf.height, "Weight-height bound (>= 2)")->check(CLI::Range(2, 1000));
  verify->add_option("--seed", vf.seed, "Base random seed");
  verify->add_option("--depth", vf.depth, "Parameter range multiplier (>= 1)")->check(CLI::Range(1, 1000));
  verify->add_option("--json", vf.json, "Write the JSON report to this path");

  std::string ctx = "f", expr, eval_preset = "A2split", eval_file;
  int truncation = 8;
  auto* eval = app.add_subcommand("eval", "Print the normal form of an expression");
  eval->add_option("--ctx", ctx, "Context: f, borel, star, u, iword")->check(CLI::IsMember(eval_contexts()));
  eval->add_option("--preset", eval_preset, "Preset name");
  eval->add_option("--cartan-file", eval_file, "Satake datum file (overrides --preset)")->check(CLI::ExistingFile);
  eval->add_option("--height", truncation, "Truncation height of the Serre reduction")->check(CLI::Range(2, 1000));
  eval->add_option("expr", expr, "Expression")->required();

  auto* list = app.add_subcommand("list-presets", "List the shipped Satake data");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*verify) return run_verify(vf, *verify);
    if (*eval) {
      const CartanData cd = eval_file.empty() ? preset(eval_preset) : load_satake(load_config_file(eval_file));
      const EvalResult r = eval_expression(expr, ctx, cd, truncation);
      std::cout << r.normal_form << "\n";
      std::cout << "grading:";
      for (const auto& g : r.gradings) std::cout << " " << g;
      std::cout << "\n";
      if (!r.embedding.empty()) std::cout << "embedding: " << r.embedding << "\n";
      return 0;
    }
    if (*list) {
      for (const auto& p : preset_list()) std::cout << p.name << "  " << p.summary << "\n";
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
