#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "cohere/perm_group.hpp"

namespace cohere {

using JoinFn = std::function<SetPartition(SetPartition const &, SetPartition const &)>;

struct VerifyOptions
{
  bool slow = false;
  EnumerationLimits limits;
  /// Join used by the lattice claim; replaceable for negative controls.
  JoinFn join_under_test;
  std::filesystem::path data_dir;
};

struct ClaimResult
{
  int id = 0;
  std::string title;
  bool slow = false;
  bool skipped = false;
  bool passed = false;
  double seconds = 0;
  double budget_seconds = 0;
  /// Failure descriptions, or a short note on success.
  std::vector<std::string> details;
};

inline constexpr int claim_count = 12;

std::string claim_title(int id);
double claim_budget_seconds(int id);
bool claim_is_slow(int id);

/// Runs one claim regardless of the slow gate. Passing requires every check
/// to hold and the runtime to stay within the claim's budget.
ClaimResult run_claim(int id, VerifyOptions const &options);

/// Runs claims 1..claim_count, skipping slow ones unless options.slow.
std::vector<ClaimResult> run_verify(VerifyOptions const &options,
                                    std::function<void(ClaimResult const &)> const &on_result = {});

/// One line: status, id, title, timing, then indented details on failure.
std::string format_claim(ClaimResult const &result);

} // namespace cohere
