#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cohere/perm_group.hpp"

namespace cohere {

struct CensusEntry
{
  std::size_t index = 0;
  PermGroup group;
  bool transitive = false;
  bool join_coherent = false;
  bool meet_coherent = false;
  bool is_chain = false;
};

struct CensusResult
{
  std::size_t degree = 0;
  std::vector<CensusEntry> entries;
};

/// Every subgroup of S_n (n <= 6) with its verdicts, in the order given by
/// subgroups().
CensusResult run_census(std::size_t degree, EnumerationLimits const &limits = {});

/// One JSON object per subgroup, then a line with key "summary".
std::vector<std::string> census_json_lines(CensusResult const &census);

} // namespace cohere
