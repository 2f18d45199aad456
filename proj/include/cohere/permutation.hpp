#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cohere/partition.hpp"

namespace cohere {

/// A bijection of {0..n-1}. Maps act on the right: compose(p, q) applies p
/// first, then q. External notation is 1-based cycle notation.
class Permutation
{
public:
  static constexpr std::size_t max_degree = 255;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree = 1);

  /// Validates that images is a bijection of {0..n-1}.
  static Permutation from_images(std::span<std::size_t const> images);

  std::size_t degree() const { return images_.size(); }
  std::size_t operator[](std::size_t point) const { return images_[point]; }
  std::span<std::uint8_t const> images() const { return images_; }

  bool is_identity() const;

  /// Smallest point moved, or degree() for the identity.
  std::size_t first_moved_point() const;

  /// Raw bytes of the image table; usable as a hash key.
  std::string_view key() const
  { return {reinterpret_cast<char const *>(images_.data()), images_.size()}; }

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &, Permutation const &) = default;

private:
  friend Permutation compose(Permutation const &, Permutation const &);
  friend void compose_into(Permutation const &, Permutation const &, Permutation &);
  friend Permutation inverse(Permutation const &);

  std::vector<std::uint8_t> images_;
};

/// i -> (i p) q.
Permutation compose(Permutation const &p, Permutation const &q);

/// compose(p, q) written into out, which must already have the same degree.
void compose_into(Permutation const &p, Permutation const &q, Permutation &out);

Permutation inverse(Permutation const &p);

/// by^-1 p by, so that orbit_partition(conjugate(p, by)) is
/// apply(orbit_partition(p), by).
Permutation conjugate(Permutation const &p, Permutation const &by);

/// p^k for any integer k.
Permutation power(Permutation const &p, long long k);

struct CycleDecomposition
{
  /// Disjoint cycles covering every point, fixed points included. Each cycle
  /// starts at its minimum point and cycles are sorted by that point.
  std::vector<std::vector<std::size_t>> cycles;
  /// lcm of the cycle lengths.
  std::uint64_t order = 1;
};

CycleDecomposition cycle_decomposition(Permutation const &p);

/// Parse a product of disjoint cycles in 1-based notation, e.g. "(1 7)(4 10)".
/// Points may be separated by whitespace or commas; "" and "()" are the
/// identity.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Canonical 1-based cycle notation with fixed points omitted; "()" for the
/// identity.
std::string to_cycle_string(Permutation const &p);

/// The partition of the points into the cycles of p.
SetPartition orbit_partition(Permutation const &p);

/// The image of a partition under g: blocks B become B^g.
SetPartition apply(SetPartition const &partition, Permutation const &g);

} // namespace cohere
