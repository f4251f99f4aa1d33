#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "krows/cli.hpp"

namespace krows {

/// Parses a full command line (without the program name) and dispatches to
/// the subcommand implementations. Results go to `out`, diagnostics to
/// `err`; the return value is the process exit status.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"BDD model counting and fixed-cardinality model enumeration"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string count_file;
  bool per_cardinality = false;
  auto* count = app.add_subcommand("count", "Count the models of a BDD");
  count->add_option("file", count_file, "BDD file")->required();
  count->add_flag("--per-cardinality", per_cardinality,
                  "Also print the per-cardinality counts N_0..N_n");
  count->callback([&] { exit_code = cmd_count(count_file, per_cardinality, out); });

  std::string enum_file, format;
  int enum_k = 0, method = 3;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate the models with exactly k ones");
  enumerate->add_option("file", enum_file, "BDD file")->required();
  enumerate->add_option("-k,--ones", enum_k, "Required number of ones")->required();
  enumerate->add_option("--method", method, "Enumeration method (default 3)")
      ->check(CLI::Range(1, 3));
  enumerate->add_option("--format", format, "Output format: rows or bits")
      ->check(CLI::IsMember({"rows", "bits"}));
  enumerate->callback([&] { exit_code = cmd_enumerate(enum_file, enum_k, method, format, out); });

  std::string stats_file;
  int stats_k = 0;
  auto* stats = app.add_subcommand("stats", "Print structure and cardinality-set schedule");
  stats->add_option("file", stats_file, "BDD file")->required();
  auto* stats_k_opt = stats->add_option("-k,--ones", stats_k, "Also print card2 sets for this k");
  stats->callback([&] {
    exit_code = cmd_stats(stats_file,
                          stats_k_opt->count() ? std::optional<int>(stats_k) : std::nullopt, out);
  });

  std::string check_file;
  int kmax = -1, limit = 20;
  auto* check = app.add_subcommand("check", "Cross-validate all methods against brute force");
  check->add_option("file", check_file, "BDD file")->required();
  check->add_option("--kmax", kmax, "Check k = 0..kmax (default: all)");
  check->add_option("--limit", limit, "Refuse brute force beyond this many variables");
  check->callback([&] { exit_code = cmd_check(check_file, kmax, limit, out); });

  std::string cnf_file, cnf_out;
  auto* from_cnf = app.add_subcommand("from-cnf", "Build a BDD from a DIMACS CNF file");
  from_cnf->add_option("file", cnf_file, "DIMACS CNF file")->required();
  from_cnf->add_option("-o,--output", cnf_out, "Output BDD file")->required();
  from_cnf->callback([&] { exit_code = cmd_from_cnf(cnf_file, cnf_out); });

  int gen_n = 0, gen_nodes = 0;
  uint64_t gen_seed = 1;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen-random", "Generate a seeded random ordered BDD");
  gen->add_option("-n,--nvars", gen_n, "Number of variables")->required();
  gen->add_option("--nodes", gen_nodes, "Number of branching nodes")->required();
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("-o,--output", gen_out, "Output BDD file")->required();
  gen->callback([&] { exit_code = cmd_gen_random(gen_n, gen_nodes, gen_seed, gen_out); });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("krows");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}

} // namespace krows
