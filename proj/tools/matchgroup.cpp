#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "matchgroup/cli.hpp"

namespace mg = matchgroup;

int main(int argc, char** argv) {
  CLI::App app{"Matchings between finite subsets of groups, with theorem checks"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  std::size_t jobs = 1;
  std::uint64_t seed = 1;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();
  app.add_option("--jobs", jobs, "Worker threads (1 = single-threaded)")->capture_default_str();
  app.add_option("--seed", seed, "Seed for sampled sweeps")->capture_default_str();

  std::string group, a_lit, b_lit;

  auto* match = app.add_subcommand("match", "Find a matching from A to B or a Hall violator");
  match->add_option("group", group, "Group spec (C4, D3, S3, Q8, C2xC4, Z^2) or Cayley-table file")->required();
  match->add_option("A", a_lit, "Subset literal, e.g. {0,2}")->required();
  match->add_option("B", b_lit, "Subset literal, e.g. {1,2}")->required();

  std::vector<std::string> checks{"all"};
  std::size_t cap_order = 0, samples = 0;
  auto* verify = app.add_subcommand("verify", "Run theorem checks on one finite group");
  verify->add_option("group", group, "Group spec or Cayley-table file")->required();
  verify->add_option("--checks", checks, "kemperman, corollary, olson, automatching, matching-property, hall, all")
      ->delimiter(',')
      ->capture_default_str();
  verify->add_option("--cap-order", cap_order, "Largest order swept exhaustively (pair sweeps)");
  verify->add_option("--samples", samples, "Sampled instances for groups above the exhaustive cap");

  auto* counter = app.add_subcommand("counterexample", "Build a pair (A, B) without a matching");
  counter->add_option("group", group, "Group spec or Cayley-table file")->required();

  mg::LatticeCheckParams lattice_params;
  auto* lattice = app.add_subcommand("lattice", "Randomized matching check on Z^d");
  lattice->add_option("-d,--dimension", lattice_params.dimension, "Lattice dimension")->capture_default_str();
  lattice->add_option("-t,--trials", lattice_params.trials, "Number of instances")->capture_default_str();
  lattice->add_option("-m,--max-size", lattice_params.max_size, "Largest |A| = |B| (<= 10)")->capture_default_str();
  lattice->add_option("-b,--bound", lattice_params.coordinate_bound, "Coordinates drawn from [-b, b]")
      ->capture_default_str();

  mg::SuiteOptions suite_options;
  auto* suite = app.add_subcommand("suite", "Run every check over the group catalog and Z^1..Z^3");
  suite->add_option("--lattice-trials", suite_options.lattice_trials, "Trials per lattice dimension")
      ->capture_default_str();

  auto* table = app.add_subcommand("table", "Print a group in the Cayley-table file format");
  table->add_option("group", group, "Group spec or Cayley-table file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : mg::cli::kInputError;
  }

  const auto format = format_name == "machine" ? mg::ReportFormat::Machine : mg::ReportFormat::Text;
  mg::LabConfig cfg;
  cfg.seed = seed;
  cfg.jobs = jobs;
  if (cap_order) {
    cfg.pair_sweep_cap = cap_order;
    cfg.property_exhaustive_cap = cap_order;
  }
  if (samples) cfg.samples = samples;

  if (*match) return mg::cli::cmd_match(group, a_lit, b_lit, format, std::cout, std::cerr);
  if (*verify) return mg::cli::cmd_verify(group, checks, cfg, format, std::cout, std::cerr);
  if (*counter) return mg::cli::cmd_counterexample(group, format, std::cout, std::cerr);
  if (*lattice) {
    lattice_params.seed = seed;
    return mg::cli::cmd_lattice(lattice_params, jobs, format, std::cout, std::cerr);
  }
  if (*suite) {
    suite_options.lab = cfg;
    return mg::cli::cmd_suite(suite_options, format, std::cout, std::cerr);
  }
  if (*table) return mg::cli::cmd_table(group, std::cout, std::cerr);
  return mg::cli::kInputError;
}
