#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"dominating tree metrics and low-routing-cost spanning trees"};
  app.require_subcommand(1);
  rccli::Options opts;

  auto* embed = app.add_subcommand(
      "embed", "build a dominating 2-HST or ultrametric for a distance matrix or point set");
  embed->add_option("input", opts.input,
                    "distance matrix CSV, point file, or random:matrix:n=64")
      ->required();
  embed->add_option("--mode", opts.mode, "hst or ultra")
      ->required()
      ->check(CLI::IsMember({"hst", "ultra"}));

  auto* spantree = app.add_subcommand(
      "spantree", "build a low-routing-cost spanning tree for a Euclidean point set");
  spantree->add_option("input", opts.input, "point file or random:points:d=2,n=256")->required();
  spantree->add_option("--alpha", opts.alpha, "cut band parameter in (0, 1/2)")
      ->capture_default_str();

  auto* verify = app.add_subcommand(
      "verify", "recheck a tree JSON against the source input it was built from");
  verify->add_option("tree", opts.tree_path, "tree JSON written by embed or spantree")->required();
  verify->add_option("source", opts.source_path, "the matching source input")->required();

  auto* lowerbound = app.add_subcommand(
      "lowerbound", "path-family cut ratio 2(n-1)/n versus the exact line DP");
  lowerbound->add_option("n", opts.n, "number of path points")->required();

  auto* cutscan = app.add_subcommand(
      "cutscan", "prefix aggregates and the optimal cut of a 1-D value list");
  cutscan->add_option("input", opts.input, "file of reals, whitespace-separated")->required();
  cutscan->add_option("--interval", opts.interval, "restrict the cut to lo:hi");

  for (CLI::App* sub : {embed, spantree, verify, lowerbound, cutscan}) {
    sub->add_option("--out", opts.out, "output path, - for stdout")->capture_default_str();
    sub->add_option("--format", opts.format, "output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"json"}));
    sub->add_option("--seed", opts.seed, "seed for random: inputs")->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  for (CLI::App* sub : {embed, spantree, verify, lowerbound, cutscan})
    if (app.got_subcommand(sub)) return rccli::dispatch(sub->get_name(), opts);
  return 1;
}
