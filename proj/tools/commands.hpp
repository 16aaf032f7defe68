#pragma once

#include <string>

namespace rccli {

struct Options {
  std::string input;
  std::string out = "-";
  std::string format = "json";
  std::string mode;        // embed: hst | ultra
  double alpha = 0.25;     // spantree
  long long seed = 0;      // random: inputs
  std::string interval;    // cutscan: "lo:hi"
  std::string tree_path;   // verify
  std::string source_path; // verify
  int n = 0;               // lowerbound
};

int cmd_embed(const Options& opts);
int cmd_spantree(const Options& opts);
int cmd_verify(const Options& opts);
int cmd_lowerbound(const Options& opts);
int cmd_cutscan(const Options& opts);

// Runs a command with the error contract applied: exit 0 success, 1 bad
// input (error JSON on stderr), 2 failed verification.
int dispatch(const std::string& command, const Options& opts);

}  // namespace rccli
