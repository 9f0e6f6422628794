#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cycloschur {

struct RunConfig {
  std::string command;
  std::string sub;
  int n = -1;
  int r = 1;
  int e = 2;
  std::vector<int> charge;
  std::vector<int> m;
  std::string la;
  std::string vector;
  std::string op;
  int i = -1;
  int l = 1;
  std::string format = "text";
  std::string out;
  int workers = 0;
  unsigned seed = 1;
  int samples = 200;
  std::string perturb = "none";
  bool costandard = false;
  bool failures_only = false;
};

/// Exit codes: 0 success, 1 verification failure, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// --workers, else CYCLOSCHUR_WORKERS, else the hardware thread count.
int resolve_workers(int requested);

}  // namespace cycloschur
