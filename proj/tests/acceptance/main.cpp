// One line per acceptance criterion; nonzero exit if any fails.
#include <cstring>
#include <iostream>

#include "clusteraut/checks.hpp"

int main(int argc, char** argv) {
  clusteraut::CheckOptions opt;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--slow") == 0) opt.slow = true;
  int failed = 0;
  for (const auto& r : clusteraut::run_checks(opt)) {
    std::cout << clusteraut::format_check(r) << '\n';
    failed += r.pass ? 0 : 1;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << (opt.slow ? "(with slow tier)" : "(fast tier)") << '\n';
  return failed ? 1 : 0;
}
