#pragma once

#include <cstdint>
#include <vector>

#include "cohere/perm_group.hpp"

namespace cohere {

/// Every subgroup of G exactly once, sorted by order and then by element set
/// (in element-stream order). Each subgroup is grown from the trivial group
/// by adjoining one cyclic subgroup at a time.
std::vector<PermGroup> subgroups(PermGroup const &group, std::uint64_t order_cap = 10'000);

} // namespace cohere
