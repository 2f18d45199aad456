#pragma once

#include <string>

#include "cohere/perm_group.hpp"

namespace cohere {

/// Precomputed data about G and H for repeated wreath-criterion queries. The
/// groups are copied; G must be small enough to list.
class WreathContext
{
public:
  WreathContext(PermGroup g, PermGroup h, std::uint64_t cap = 100'000);

  PermGroup const &base_group() const { return g_; }
  PermGroup const &top_group() const { return h_; }
  std::vector<Permutation> const &base_elements() const { return g_elems_; }
  PiSet const &base_pi() const { return g_pi_; }
  PiSet const &top_pi() const { return h_pi_; }
  std::size_t degree() const { return g_.degree() * h_.degree(); }

private:
  PermGroup g_, h_;
  std::vector<Permutation> g_elems_;
  PiSet g_pi_, h_pi_;
};

struct WreathConditions
{
  /// Some h in H has orbit partition P~ (blocks joined through P).
  bool c1 = false;
  /// Every P_[y] is the orbit partition of some element of G.
  bool c2 = false;
  /// Blocks joined in P~ are matched by elements of G.
  bool c4 = false;
  bool overall = false;
  /// Name of the first failing condition, empty if none.
  std::string failure;
};

/// Points (x, y) are encoded as y|X| + x as in wreath_imprimitive.
SetPartition block_quotient(SetPartition const &p, std::size_t block_size);
SetPartition block_section(SetPartition const &p, std::size_t block_size, std::size_t y);

WreathConditions wreath_partition_conditions(SetPartition const &p, WreathContext const &ctx);
WreathConditions wreath_partition_conditions(SetPartition const &p, PermGroup const &g,
                                             PermGroup const &h);

/// An element of G wr H whose orbit partition is P. Throws Error naming the
/// failing condition if there is none.
Permutation build_wreath_element(SetPartition const &p, WreathContext const &ctx);
Permutation build_wreath_element(SetPartition const &p, PermGroup const &g, PermGroup const &h);

/// P refines the partition of points by the length of their g-cycle, and
/// P^g = P.
bool centralizer_partition_conditions(SetPartition const &p, Permutation const &g);

/// An h commuting with g whose orbit partition is P, built part by part of
/// P v pi(g). Throws Error if the conditions fail.
Permutation build_centralizer_element(SetPartition const &p, Permutation const &g);

} // namespace cohere
