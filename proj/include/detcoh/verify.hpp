#pragma once

// Cross-check suites. Each one compares two independent computations over a
// finite sweep and reports the number of cases and the first disagreement.

#include <string>
#include <utility>
#include <vector>

#include "detcoh/weights.hpp"

namespace detcoh {

struct SuiteReport {
  std::string name;
  bool passed = true;
  long long cases = 0;
  std::string detail;  // first counterexample when failed, a summary otherwise
};

struct VerifyScope {
  int gauss_max = 10;
  int bott_max_length = 4;
  int bott_entry_bound = 8;
  int bott_extra_d = 15;  // d ranges over n..n+bott_extra_d for the Grassmannian step
  std::vector<std::pair<int, int>> ext_dims{{2, 1}, {2, 2}, {3, 2}, {4, 3}};
  int ext_max_x1 = 3;
  int ext_box_below = 6;  // beta entries in [-m-ext_box_below, ext_box_high]
  int ext_box_high = 3;
  int filtration_max_m = 3;
  int filtration_max_x1 = 2;
  int reg_max_n = 4;
  int reg_max_x1 = 4;
  int loccoh_max_n = 3;  // maximal minors use every n <= m
  int loccoh_max_m = 4;
  int cauchy_max = 4;
  int cauchy_max_r = 6;

  /// The sweep sizes of the acceptance gate.
  static VerifyScope full() { return {}; }
  /// A reduced sweep that finishes in a few seconds.
  static VerifyScope quick();
};

/// Every partition with at most n rows and x_1 <= max_part, in (|x|, x) order.
std::vector<Partition> partitions_up_to(int n, int max_part);

SuiteReport verify_gauss(const VerifyScope& scope);
SuiteReport verify_bott(const VerifyScope& scope);
SuiteReport verify_ext_oracle(const VerifyScope& scope);
SuiteReport verify_pipeline_roundtrip(const VerifyScope& scope);
SuiteReport verify_ext_structure(const VerifyScope& scope);
SuiteReport verify_filtration(const VerifyScope& scope);
SuiteReport verify_regularity(const VerifyScope& scope);
SuiteReport verify_maximal_minors(const VerifyScope& scope);
SuiteReport verify_stabilization(const VerifyScope& scope);
SuiteReport verify_cohomological_range(const VerifyScope& scope);
SuiteReport verify_cauchy(const VerifyScope& scope);
SuiteReport verify_box_restriction(const VerifyScope& scope);

/// Names accepted by `run_suite`, in execution order.
const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const VerifyScope& scope);
std::vector<SuiteReport> run_all_suites(const VerifyScope& scope);

}  // namespace detcoh
