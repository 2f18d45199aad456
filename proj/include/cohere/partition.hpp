#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cohere {

/// A partition of {0..n-1} stored as a restricted-growth string: point i
/// carries the label of its block, block labels appear in order of their
/// minimum point. Two partitions are equal iff their strings are equal, so
/// the string doubles as a hash key.
class SetPartition
{
public:
  static constexpr std::size_t max_degree = 255;

  static SetPartition discrete(std::size_t degree);
  /// The one-block partition.
  static SetPartition trivial(std::size_t degree);

  /// Canonicalize a collection of disjoint nonempty blocks covering
  /// {0..degree-1}. Input order of blocks and of points is irrelevant.
  static SetPartition from_blocks(std::vector<std::vector<std::size_t>> const &blocks,
                                  std::size_t degree);

  /// Canonicalize arbitrary per-point labels (points sharing a label share a
  /// block).
  static SetPartition from_labels(std::span<std::size_t const> labels);

  /// Adopt an already canonical restricted-growth code; validated.
  static SetPartition from_code(std::string code);

  std::size_t degree() const { return code_.size(); }
  std::size_t block_count() const { return blocks_; }
  std::size_t block_of(std::size_t point) const
  { return static_cast<unsigned char>(code_[point]); }

  /// Restricted-growth code, one byte per point.
  std::string const &code() const { return code_; }

  /// Blocks sorted by minimum element, each block sorted.
  std::vector<std::vector<std::size_t>> blocks() const;
  std::vector<std::size_t> block_sizes() const;

  bool is_discrete() const { return blocks_ == code_.size(); }
  bool is_trivial() const { return blocks_ <= 1; }

  friend bool operator==(SetPartition const &, SetPartition const &) = default;
  friend std::strong_ordering operator<=>(SetPartition const &a, SetPartition const &b)
  { return a.code_ <=> b.code_; }

private:
  SetPartition(std::string code, std::size_t blocks)
    : code_(std::move(code)), blocks_(blocks) {}

  std::string code_;
  std::size_t blocks_ = 0;
};

SetPartition join(SetPartition const &p, SetPartition const &q);
SetPartition meet(SetPartition const &p, SetPartition const &q);

/// True iff every block of p lies inside a block of q.
bool refines(SetPartition const &p, SetPartition const &q);

/// True iff the partitions are pairwise comparable under refinement.
bool is_chain(std::span<SetPartition const> partitions);

/// "{1,2|3|4}" with 1-based points.
std::string to_string(SetPartition const &p);

/// Inverse of to_string; degree is explicit. Points not mentioned are an error.
SetPartition parse_partition(std::string_view text, std::size_t degree);

/// All partitions of {0..n-1} in lexicographic restricted-growth order.
std::vector<SetPartition> all_partitions(std::size_t degree);

/// Restriction of p to a subset of points, relabelled 0..k-1 in the order
/// given.
SetPartition restrict_to(SetPartition const &p, std::span<std::size_t const> points);

} // namespace cohere
