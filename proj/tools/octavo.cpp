// octavo: verification driver for statistics on the hyperoctahedral groups.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "octavo/cli/commands.hpp"
#include "octavo/errors.hpp"
#include "octavo/parallel.hpp"
#include "octavo/q_analogs.hpp"

using octavo::IndexSet;
using octavo::SignedPermutation;
namespace cli = octavo::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact statistics and verification sweeps on signed permutation groups"};
  app.require_subcommand(1);
  // Global flags may also follow the subcommand.
  app.fallthrough();

  bool as_json = false;
  unsigned jobs = octavo::default_jobs();
  bool oracle = false;
  bool corrupt_f = false;
  app.add_flag("--json", as_json, "Print the JSON report instead of text");
  app.add_option("--jobs", jobs, "Parallel sweep width")->check(CLI::Range(1u, 1024u));
  app.add_flag("--oracle", oracle, "Enumerate by filtering the whole group (slow cross-check)");
  // Test hook: adds 1 to every product polynomial so the failure path can be exercised.
  app.add_flag("--corrupt-f", corrupt_f)->group("");

  int n = 0;
  std::string set_text;
  std::string window_text;
  int column = -1;
  bool trace = false;

  auto* verify = app.add_subcommand("verify", "Compare the signed class sums with the product formula");
  verify->add_option("--n", n, "Rank")->required();
  verify->add_option("--set", set_text, "Restrict to one descent bound, e.g. 0,2");

  auto* conjecture = app.add_subcommand("conjecture", "Check divisibility of the bivariate sums by X*t+1");
  conjecture->add_option("--n", n, "Rank")->required();
  conjecture->add_option("--set", set_text, "Restrict to one descent bound");

  auto* stats = app.add_subcommand("stats", "Statistics of one signed permutation");
  stats->add_option("--window", window_text, "Window, e.g. 3,4,9,-8,-5,-2,1,6,7")->required();

  auto* gf = app.add_subcommand("gf", "Generating function of one descent class");
  gf->add_option("--n", n, "Rank")->required();
  gf->add_option("--set", set_text, "Descent bound (empty for none)");

  auto* bijection = app.add_subcommand("bijection", "Lowering/raising round trip");
  bijection->add_option("--n", n, "Rank (class mode)");
  bijection->add_option("--set", set_text, "Descent bound (class mode)");
  bijection->add_option("--window", window_text, "Single element to lower");
  bijection->add_option("--j", column, "Column holding n")->required();
  bijection->add_flag("--trace", trace, "Include per-stage traces");

  auto* swaps = app.add_subcommand("swaps", "Swaps, blocks and uncanceled classification at a column");
  swaps->add_option("--window", window_text, "Window")->required();
  swaps->add_option("--j", column, "Reference column k")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsage;
  }

  cli::SweepOptions opts;
  opts.jobs = jobs;
  opts.mode = oracle ? octavo::EnumerationMode::whole_group_filter : octavo::EnumerationMode::pruned;
  if (corrupt_f) {
    opts.f_override = [](int rank, const IndexSet& I) { return octavo::f_poly(rank, I) + octavo::UniPoly{1}; };
  }

  nlohmann::json report;
  try {
    auto optional_set = [&]() -> std::optional<IndexSet> {
      if (set_text.empty()) return std::nullopt;
      return IndexSet::from_text(n, set_text);
    };
    if (verify->parsed()) {
      report = cli::cmd_verify(n, optional_set(), opts);
    } else if (conjecture->parsed()) {
      report = cli::cmd_conjecture(n, optional_set(), opts);
    } else if (stats->parsed()) {
      report = cli::cmd_stats(SignedPermutation::from_text(window_text));
    } else if (gf->parsed()) {
      report = cli::cmd_gf(n, IndexSet::from_text(n, set_text), opts);
    } else if (bijection->parsed()) {
      if (!window_text.empty())
        report = cli::cmd_bijection_single(SignedPermutation::from_text(window_text), column, trace);
      else if (n > 0)
        report = cli::cmd_bijection(n, IndexSet::from_text(n, set_text), column, trace, opts);
      else
        throw std::invalid_argument("bijection needs --window or --n");
    } else if (swaps->parsed()) {
      report = cli::cmd_swaps(SignedPermutation::from_text(window_text), column);
    }
  } catch (const octavo::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return cli::kUsage;
  } catch (const octavo::RankCapError& e) {
    std::cerr << "rank cap: " << e.what() << "\n";
    return cli::kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return cli::kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return cli::kUsage;
  }

  if (as_json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << cli::render_text(report);
  return cli::exit_code(report);
}
