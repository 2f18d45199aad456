#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>
#include <vector>

#include "cohere/perm_group.hpp"

namespace testing {

using namespace cohere;

inline Permutation cyc(std::string_view text, std::size_t n) { return parse_cycles(text, n); }

inline PermGroup group(std::size_t n, std::initializer_list<std::string_view> gens)
{
  std::vector<Permutation> v;
  for (auto g : gens)
    v.push_back(parse_cycles(g, n));
  return PermGroup(n, std::move(v));
}

inline SetPartition blocks(std::vector<std::vector<std::size_t>> const &b, std::size_t n)
{
  return SetPartition::from_blocks(b, n);
}

inline SetPartition random_partition(std::size_t n, std::mt19937_64 &rng)
{
  std::size_t k = std::uniform_int_distribution<std::size_t>(1, n)(rng);
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  std::vector<std::size_t> labels(n);
  for (auto &l : labels)
    l = pick(rng);
  return SetPartition::from_labels(labels);
}

inline Permutation random_permutation(std::size_t n, std::mt19937_64 &rng)
{
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(images);
}

/// Brute-force orbit partition by repeatedly applying p, independent of the
/// cycle machinery.
inline SetPartition orbits_by_iteration(Permutation const &p)
{
  std::size_t n = p.degree();
  std::vector<std::size_t> label(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t least = x;
    for (std::size_t y = p[x]; y != x; y = p[y])
      least = std::min(least, y);
    label[x] = least;
  }
  return SetPartition::from_labels(label);
}

/// The right regular representation of G on its own elements.
inline PermGroup regular_action(PermGroup const &g)
{
  auto elems = elements(g);
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i)
    index.emplace(elems[i].key(), i);
  std::vector<Permutation> gens;
  for (auto const &s : g.generators()) {
    std::vector<std::size_t> images(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i)
      images[i] = index.at(std::string(compose(elems[i], s).key()));
    gens.push_back(Permutation::from_images(images));
  }
  return PermGroup(elems.size(), std::move(gens));
}

/// Sorted element keys; equal iff the groups are equal as sets.
inline std::vector<std::string> element_set(PermGroup const &g)
{
  std::vector<std::string> out;
  for (auto const &e : elements(g))
    out.emplace_back(e.key());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace testing
