#pragma once

#include <functional>
#include <string>
#include <vector>

namespace ultralip {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double budget = 0;
};

// Runs one acceptance criterion (1..9) with its pinned seeds and tolerances.
CriterionResult run_criterion(int id);

// Suite names: lemmas, freenorm, mideal, extreme, spherical, membed, all.
// Throws UnknownSuite.
std::vector<int> suite_criteria(const std::string& name);
std::vector<CriterionResult> run_suite(const std::string& name);

// Number of worker threads for suite fan-out; ULTRALIP_THREADS caps it.
int thread_cap();
// Runs fn(0..count-1), possibly across threads; rethrows the first failure.
void parallel_trials(int count, const std::function<void(int)>& fn);

}  // namespace ultralip
