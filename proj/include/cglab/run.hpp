#pragma once

#include <ostream>
#include <string>

namespace cglab {

// Parsed command line; `run` dispatches and returns the process exit code:
// 0 success, 1 IO/cache failure, 2 bad arguments, 3 resource cap, 4 internal
// invariant violation.
struct RunConfig {
  std::string command;  // growth-count | series-analyze | series-asymptotics |
                        // fsa-build | delta-apply
  std::string group = "free:2";
  std::string kind = "conj";
  std::string mode = "cumulative";
  std::string engine = "enum";
  int n_max = 12;
  int K = 2;
  int max_order = 8;
  int enum_cap = 12;
  int formula_cap = 30;
  std::string format = "csv";  // growth output: csv | json
  std::string which = "bcd";   // fsa build: bcd | lex | S | delta
  std::string fsa_out = "dot";  // fsa build output form: dot | json
  std::string input_path;      // series input table
  std::string range = "10:18";
  std::string base = "exact";
  std::string word;
  std::string cache_dir;  // empty = no cache
  std::string test = "recurrence";
};

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace cglab
