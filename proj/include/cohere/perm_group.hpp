#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cohere/partition.hpp"
#include "cohere/permutation.hpp"

namespace cohere {

using Order = boost::multiprecision::cpp_int;

/// Caps and parallelism for anything that walks the elements of a group.
struct EnumerationLimits
{
  std::uint64_t element_cap = 20'000'000;
  unsigned workers = 1;
};

/// A permutation group given by generators, with a deterministic
/// Schreier-Sims stabilizer chain. Immutable once constructed.
class PermGroup
{
public:
  static constexpr std::size_t max_degree = 64;

  struct Level
  {
    std::size_t base_point = 0;
    /// Strong generators fixing every earlier base point.
    std::vector<Permutation> generators;
    /// Orbit of base_point under generators, in discovery order.
    std::vector<std::size_t> orbit;
    /// transversal[k] maps base_point to orbit[k].
    std::vector<Permutation> transversal;
    /// Index into orbit for each point, or -1.
    std::vector<int> position;
  };

  /// Identity generators are dropped; an empty list gives the trivial group.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const { return degree_; }
  std::vector<Permutation> const &generators() const { return generators_; }
  std::vector<std::size_t> base() const;
  std::span<Level const> levels() const { return levels_; }

  Order const &order() const { return order_; }

  /// The order as an integer, or CapExceeded if it is larger than cap.
  std::uint64_t checked_order(std::uint64_t cap, std::string const &what) const;

  bool contains(Permutation const &p) const;

  bool is_trivial() const { return levels_.empty(); }

private:
  void schreier_sims();
  void recompute_level(std::size_t i);
  /// Sifts h through levels from `start`; returns the residue and the index
  /// of the level where sifting stopped (levels_.size() if it passed).
  std::pair<Permutation, std::size_t> strip(Permutation h, std::size_t start) const;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  Order order_;
};

/// Streams every element exactly once as a product of transversal elements,
/// deepest level varying fastest. Memory is the chain plus one product per
/// level.
class ElementStream
{
public:
  explicit ElementStream(PermGroup const &group);

  /// Only elements whose top-level transversal index lies in
  /// [first_begin, first_end). Shards partition the group.
  ElementStream(PermGroup const &group, std::size_t first_begin, std::size_t first_end);

  /// Advance; false once exhausted. The first call yields the first element.
  bool next();

  Permutation const &current() const { return products_.empty() ? identity_ : products_.back(); }

private:
  void rebuild_from(std::size_t level);

  PermGroup const *group_;
  std::vector<std::size_t> index_;
  std::vector<Permutation> products_;
  Permutation identity_;
  std::size_t first_end_;
  bool started_ = false;
  bool done_ = false;
};

/// Collect all elements in stream order.
std::vector<Permutation> elements(PermGroup const &group, std::uint64_t cap = 20'000'000);

/// Calls fn on each element in stream order until it returns false. Returns
/// false if stopped early.
bool for_each_element(PermGroup const &group, std::function<bool(Permutation const &)> const &fn,
                      std::uint64_t cap = 20'000'000);

/// Orbits of the group, computed as the join of its generators' orbit
/// partitions.
SetPartition orbit_partition_of_group(PermGroup const &group);

/// Orbits computed by breadth-first closure under generators.
SetPartition orbits_by_closure(std::size_t degree, std::span<Permutation const> generators);

bool is_transitive(PermGroup const &group);

/// Every point stabilizer trivial.
bool is_semiregular(PermGroup const &group);

/// Contains an element whose order equals the group order.
bool is_cyclic(PermGroup const &group, std::uint64_t cap = 20'000'000);

PermGroup point_stabilizer(PermGroup const &group, std::size_t point);

/// Subgroup of elements satisfying pred; pred must define a subgroup.
PermGroup subgroup_by_predicate(PermGroup const &group,
                                std::function<bool(Permutation const &)> const &pred,
                                std::uint64_t cap = 20'000'000);

/// Elements fixing every block of the partition set-wise.
PermGroup set_stabilizer_of_blocks(PermGroup const &group, SetPartition const &blocks,
                                   std::uint64_t cap = 20'000'000);

/// Permutation group induced on the blocks of a group-invariant partition;
/// block k of the result is block k of `blocks`.
PermGroup block_action(PermGroup const &group, SetPartition const &blocks);

/// The set pi(G) of orbit partitions of elements, deduplicated by canonical
/// code. Only codes are stored, never the element list.
class PiSet
{
public:
  PiSet(std::size_t degree, Order source_order, std::vector<SetPartition> partitions);

  // The index views into partitions_; copying would leave it dangling.
  PiSet(PiSet const &) = delete;
  PiSet &operator=(PiSet const &) = delete;
  PiSet(PiSet &&) = default;
  PiSet &operator=(PiSet &&) = default;

  std::size_t degree() const { return degree_; }
  Order const &source_order() const { return source_order_; }
  std::size_t size() const { return partitions_.size(); }

  /// Sorted by canonical code.
  std::span<SetPartition const> partitions() const { return partitions_; }

  bool contains(SetPartition const &p) const { return contains_code(p.code()); }
  bool contains_code(std::string_view code) const { return index_.contains(code); }

private:
  struct CodeHash
  {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
  };

  std::size_t degree_;
  Order source_order_;
  std::vector<SetPartition> partitions_;
  std::unordered_set<std::string_view, CodeHash, std::equal_to<>> index_;
};

PiSet pi_set(PermGroup const &group, EnumerationLimits const &limits = {});

} // namespace cohere
