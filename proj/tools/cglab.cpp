#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "cglab/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"cglab: exact conjugacy / primitive / commensurability growth for free groups "
               "and free products of finite cyclic groups"};
  app.require_subcommand(1);

  cglab::RunConfig cfg;
  if (const char* env = std::getenv("CGLAB_CACHE")) cfg.cache_dir = env;

  auto add_group = [&cfg](CLI::App* cmd) {
    cmd->add_option("--group", cfg.group, "group descriptor: free:K or zm*zn:M,N")
        ->capture_default_str();
  };

  CLI::App* growth = app.add_subcommand("growth", "growth tables");
  CLI::App* growth_count = growth->add_subcommand("count", "compute one growth table");
  add_group(growth_count);
  growth_count->add_option("--kind", cfg.kind, "ball|conj|pconj|comm")->capture_default_str();
  growth_count->add_option("--mode", cfg.mode, "strict|cumulative")->capture_default_str();
  growth_count->add_option("--max-n", cfg.n_max, "largest length n")->capture_default_str();
  growth_count->add_option("--engine", cfg.engine, "enum|formula")->capture_default_str();
  growth_count->add_option("--format", cfg.format, "csv|json")->capture_default_str();
  growth_count->add_option("--cache-dir", cfg.cache_dir,
                           "table cache directory (default: $CGLAB_CACHE)");
  growth_count->add_option("--enum-cap", cfg.enum_cap, "enumerate-engine n cap")
      ->capture_default_str();
  growth_count->add_option("--formula-cap", cfg.formula_cap, "formula-engine n cap")
      ->capture_default_str();

  CLI::App* series = app.add_subcommand("series", "growth series diagnostics");
  CLI::App* analyze = series->add_subcommand("analyze", "linear recurrence (rationality) test");
  analyze->add_option("--input", cfg.input_path, "growth table JSON")->required();
  analyze->add_option("--test", cfg.test, "test name (recurrence)")->capture_default_str();
  analyze->add_option("--max-order", cfg.max_order, "largest recurrence order tried")
      ->capture_default_str();
  CLI::App* asym = series->add_subcommand("asymptotics", "band check and e^{hn} n^p shape fit");
  asym->add_option("--input", cfg.input_path, "growth table JSON")->required();
  asym->add_option("--base", cfg.base, "'exact' or a float value for e^h")->capture_default_str();
  asym->add_option("--range", cfg.range, "fit range LO:HI")->capture_default_str();

  CLI::App* fsa = app.add_subcommand("fsa", "automata");
  CLI::App* fsa_build = fsa->add_subcommand("build", "build and print one automaton");
  fsa_build->add_option("--which", cfg.which, "bcd|lex|S|delta")->capture_default_str();
  add_group(fsa_build);
  fsa_build->add_option("--K", cfg.K, "fellow-travel / conjugator bound")->capture_default_str();
  fsa_build->add_option("--out", cfg.fsa_out, "dot|json")->capture_default_str();

  CLI::App* delta = app.add_subcommand("delta", "the lex-minimal conjugacy partner map");
  CLI::App* delta_apply = delta->add_subcommand("apply", "apply the map to one word");
  add_group(delta_apply);
  delta_apply->add_option("--K", cfg.K, "fellow-travel / conjugator bound")->capture_default_str();
  delta_apply->add_option("--word", cfg.word, "input word, e.g. ba or aBA")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  if (growth_count->parsed()) cfg.command = "growth-count";
  else if (analyze->parsed()) cfg.command = "series-analyze";
  else if (asym->parsed()) cfg.command = "series-asymptotics";
  else if (fsa_build->parsed()) cfg.command = "fsa-build";
  else if (delta_apply->parsed()) cfg.command = "delta-apply";
  else {
    std::cerr << "error: missing subcommand (see --help)\n";
    return 2;
  }
  return cglab::run(cfg, std::cout, std::cerr);
}
