#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace clusteraut {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckOptions {
  bool slow = false;          // include E6 and F4
  std::uint32_t seed = 20240607;
};

CheckResult check_tau_groups(const CheckOptions& opt);
CheckResult check_simply_laced_aut(const CheckOptions& opt);
CheckResult check_non_simply_laced_aut(const CheckOptions& opt);
CheckResult check_tau_law(const CheckOptions& opt);
CheckResult check_graph_sizes(const CheckOptions& opt);
CheckResult check_belt(const CheckOptions& opt);
CheckResult check_folding(const CheckOptions& opt);
CheckResult check_universal(const CheckOptions& opt);
CheckResult check_properties(const CheckOptions& opt);

/// Every check, in order 1..9. Exceptions inside a check turn into a failure.
std::vector<CheckResult> run_checks(const CheckOptions& opt);

/// "PASS [3] name: detail"
std::string format_check(const CheckResult& r);

}  // namespace clusteraut
