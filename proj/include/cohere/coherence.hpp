#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cohere/perm_group.hpp"

namespace cohere {

enum class LatticeOp { join, meet };

using PartitionPair = std::pair<SetPartition, SetPartition>;

struct ClosureResult
{
  bool closed = true;
  /// Lexicographically least pair (by canonical code, first <= second)
  /// whose join or meet lies outside the set.
  std::optional<PartitionPair> witness;
};

/// Pairwise closure of pi(G) under join or meet. Rows are split among
/// workers; the verdict and witness do not depend on the worker count.
ClosureResult check_closure(PiSet const &pi, LatticeOp op, unsigned workers = 1);

struct CoherenceOptions
{
  bool join = true;
  bool meet = true;
  bool chain = false;
  EnumerationLimits limits;
};

struct CoherenceReport
{
  std::string group;
  std::size_t degree = 0;
  Order order;
  std::size_t pi_size = 0;
  std::optional<bool> join_coherent;
  std::optional<bool> meet_coherent;
  std::optional<bool> is_chain;
  std::optional<PartitionPair> join_witness;
  std::optional<PartitionPair> meet_witness;
  double ms_elapsed = 0;
};

CoherenceReport check_coherence(PermGroup const &group, std::string const &description,
                                CoherenceOptions const &options = {});

CoherenceReport check_join_coherent(PermGroup const &group, EnumerationLimits const &limits = {});
CoherenceReport check_meet_coherent(PermGroup const &group, EnumerationLimits const &limits = {});

bool is_join_coherent(PermGroup const &group, EnumerationLimits const &limits = {});
bool is_meet_coherent(PermGroup const &group, EnumerationLimits const &limits = {});

/// Single-line JSON. With timing off, ms_elapsed is written as null so that
/// output is reproducible byte for byte.
std::string to_json(CoherenceReport const &report, bool timing = true);

struct ChainReport
{
  bool is_chain = false;
  bool group_is_cyclic_prime_power = false;
};

ChainReport classify_chain(PermGroup const &group, EnumerationLimits const &limits = {});

bool is_prime_power(Order const &n);

/// First element in stream order whose orbit partition is P.
std::optional<Permutation> find_witness_element(PermGroup const &group, SetPartition const &p,
                                                std::uint64_t cap = 20'000'000);

/// For every pair g, h of elements, the orbits of <g, h> (by closure) are the
/// orbit partition of a single element.
bool check_subgroup_characterization(PermGroup const &group, std::uint64_t cap = 10'000);

struct NormalCyclicCase
{
  /// Elements of H as residues mod n, ascending.
  std::vector<unsigned> multipliers;
  Order order;
  bool verdict = false;
  bool prediction = false;
};

struct NormalCyclicReport
{
  unsigned n = 0;
  std::vector<NormalCyclicCase> cases;
  bool all_agree() const;
};

/// For every subgroup H of the unit group mod n, compares the join-coherence
/// of Z_n x| H on Z_n with the prediction from the prime-power factors.
NormalCyclicReport verify_normal_cyclic_classification(unsigned n,
                                                       EnumerationLimits const &limits = {});

} // namespace cohere
