#include "cohere/subgroups.hpp"

#include <algorithm>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "cohere/error.hpp"

namespace cohere {

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash
{
  std::size_t operator()(Bits const &b) const
  {
    std::size_t h = 0;
    for (auto w : b)
      h = h * 0x9e3779b97f4a7c15ULL + (w ^ (w >> 29));
    return h;
  }
};

bool test(Bits const &b, std::size_t i) { return (b[i >> 6] >> (i & 63)) & 1; }
void set(Bits &b, std::size_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

class Multiplier
{
public:
  explicit Multiplier(std::vector<Permutation> const &elems) : elems_(elems)
  {
    std::size_t const n = elems.size();
    for (std::size_t i = 0; i < n; ++i)
      index_.emplace(elems[i].key(), i);
    if (n <= table_limit) {
      table_.resize(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          table_[i * n + j] = static_cast<std::uint32_t>(lookup(compose(elems[i], elems[j])));
    }
  }

  std::size_t operator()(std::size_t i, std::size_t j) const
  {
    if (!table_.empty())
      return table_[i * elems_.size() + j];
    return lookup(compose(elems_[i], elems_[j]));
  }

private:
  static constexpr std::size_t table_limit = 4096;

  std::size_t lookup(Permutation const &p) const { return index_.at(std::string(p.key())); }

  std::vector<Permutation> const &elems_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::uint32_t> table_;
};

struct Found
{
  Bits bits;
  std::size_t order;
  std::vector<std::size_t> gens;
};

} // namespace

std::vector<PermGroup> subgroups(PermGroup const &group, std::uint64_t order_cap)
{
  std::vector<Permutation> elems = elements(group, order_cap);
  std::size_t const n = elems.size();
  std::size_t const words = (n + 63) / 64;
  Multiplier mul(elems);
  std::size_t identity = 0;
  while (!elems[identity].is_identity())
    ++identity;

  auto closure = [&](std::vector<std::size_t> const &gens) {
    Found out{Bits(words, 0), 0, gens};
    std::vector<std::size_t> members{identity};
    set(out.bits, identity);
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (std::size_t g : gens) {
        std::size_t x = mul(members[k], g);
        if (!test(out.bits, x)) {
          set(out.bits, x);
          members.push_back(x);
        }
      }
    }
    out.order = members.size();
    return out;
  };

  // One generator per cyclic subgroup.
  std::vector<std::size_t> cyclic_gens;
  {
    std::unordered_set<Bits, BitsHash> seen;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == identity)
        continue;
      if (seen.insert(closure({i}).bits).second)
        cyclic_gens.push_back(i);
    }
  }

  std::vector<Found> found{closure({})};
  std::unordered_set<Bits, BitsHash> seen{found[0].bits};
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (std::size_t c : cyclic_gens) {
      if (test(found[k].bits, c))
        continue;
      std::vector<std::size_t> gens = found[k].gens;
      gens.push_back(c);
      Found next = closure(gens);
      if (seen.insert(next.bits).second)
        found.push_back(std::move(next));
    }
  }

  // Sort by order, then by the element set read in stream order.
  auto bit_order = [&](Bits const &a, Bits const &b) {
    for (std::size_t i = 0; i < n; ++i) {
      bool x = test(a, i), y = test(b, i);
      if (x != y)
        return x;
    }
    return false;
  };
  std::sort(found.begin(), found.end(), [&](Found const &a, Found const &b) {
    if (a.order != b.order)
      return a.order < b.order;
    return bit_order(a.bits, b.bits);
  });

  std::vector<PermGroup> out;
  out.reserve(found.size());
  for (auto const &f : found) {
    std::vector<Permutation> gens;
    for (std::size_t g : f.gens)
      gens.push_back(elems[g]);
    out.emplace_back(group.degree(), std::move(gens));
  }
  return out;
}

} // namespace cohere
