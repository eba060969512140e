#pragma once

#include <string>
#include <vector>

namespace hourglass {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool checks_passed = false;
  std::string detail;
  double seconds = 0.0;
  double limit_seconds = 0.0;
  bool within_limit() const { return seconds <= limit_seconds; }
  bool passed() const { return checks_passed && within_limit(); }
};

constexpr int kCriterionCount = 11;

/// Runs acceptance criterion `id` (1..11). Tableau sweeps cover
/// 2 <= r <= max_r; the other ranges are fixed. Never throws: exceptions
/// become failures with the message as detail.
CriterionResult run_criterion(int id, int max_r = 6);

/// All criteria, concurrently when `parallel`; results in id order.
std::vector<CriterionResult> verify_all(int max_r = 6, bool parallel = true);

/// "[PASS] 3 name (1.23 s / 60 s) detail"
std::string format_result(const CriterionResult& r);

}  // namespace hourglass
