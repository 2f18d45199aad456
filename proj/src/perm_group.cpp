#include "cohere/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <thread>

#include "cohere/error.hpp"

namespace cohere {

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
  : degree_(degree)
{
  if (degree == 0 || degree > max_degree)
    throw Error("group degree " + std::to_string(degree) + " out of range 1.." +
                std::to_string(max_degree));
  for (auto &g : generators) {
    if (g.degree() != degree)
      throw Error("generator of degree " + std::to_string(g.degree()) +
                  " in a group of degree " + std::to_string(degree));
    if (!g.is_identity() &&
        std::find(generators_.begin(), generators_.end(), g) == generators_.end())
      generators_.push_back(std::move(g));
  }
  schreier_sims();
}

std::vector<std::size_t> PermGroup::base() const
{
  std::vector<std::size_t> out;
  for (auto const &level : levels_)
    out.push_back(level.base_point);
  return out;
}

std::uint64_t PermGroup::checked_order(std::uint64_t cap, std::string const &what) const
{
  if (order_ > cap)
    throw CapExceeded(what + ": group order exceeds enumeration cap", cap, order_.str());
  return order_.convert_to<std::uint64_t>();
}

bool PermGroup::contains(Permutation const &p) const
{
  if (p.degree() != degree_)
    throw Error("membership test: degree mismatch");
  auto [residue, level] = strip(p, 0);
  return level == levels_.size() && residue.is_identity();
}

void PermGroup::recompute_level(std::size_t i)
{
  Level &level = levels_[i];
  level.orbit.assign(1, level.base_point);
  level.transversal.assign(1, Permutation(degree_));
  level.position.assign(degree_, -1);
  level.position[level.base_point] = 0;

  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    std::size_t beta = level.orbit[k];
    for (auto const &s : level.generators) {
      std::size_t gamma = s[beta];
      if (level.position[gamma] >= 0)
        continue;
      level.position[gamma] = static_cast<int>(level.orbit.size());
      level.orbit.push_back(gamma);
      level.transversal.push_back(compose(level.transversal[k], s));
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::strip(Permutation h, std::size_t start) const
{
  for (std::size_t l = start; l < levels_.size(); ++l) {
    Level const &level = levels_[l];
    std::size_t beta = h[level.base_point];
    int pos = level.position[beta];
    if (pos < 0)
      return {std::move(h), l};
    h = compose(h, inverse(level.transversal[pos]));
  }
  return {std::move(h), levels_.size()};
}

// Deterministic incremental Schreier-Sims. Levels are processed from the
// deepest upwards; whenever a Schreier generator fails to sift, its residue
// is added as a strong generator to the levels it fixes and processing
// resumes at the deepest affected level.
void PermGroup::schreier_sims()
{
  levels_.clear();
  for (auto const &g : generators_) {
    bool fixes_base = std::all_of(levels_.begin(), levels_.end(),
                                  [&](Level const &l) { return g[l.base_point] == l.base_point; });
    if (fixes_base) {
      Level level;
      level.base_point = g.first_moved_point();
      levels_.push_back(std::move(level));
    }
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (auto const &g : generators_) {
      bool fixes_prefix = true;
      for (std::size_t l = 0; l < i; ++l)
        fixes_prefix = fixes_prefix && g[levels_[l].base_point] == levels_[l].base_point;
      if (fixes_prefix)
        levels_[i].generators.push_back(g);
    }
    recompute_level(i);
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    Level const *level = &levels_[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < level->orbit.size() && !restarted; ++k) {
      for (std::size_t s = 0; s < level->generators.size(); ++s) {
        Permutation const &gen = level->generators[s];
        std::size_t gamma = gen[level->orbit[k]];
        Permutation const &u_gamma = level->transversal[level->position[gamma]];
        Permutation schreier = compose(compose(level->transversal[k], gen), inverse(u_gamma));
        if (schreier.is_identity())
          continue;

        auto [residue, stop] = strip(std::move(schreier), static_cast<std::size_t>(i) + 1);
        if (residue.is_identity())
          continue;

        if (stop == levels_.size()) {
          Level fresh;
          fresh.base_point = residue.first_moved_point();
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= stop; ++l) {
          levels_[l].generators.push_back(residue);
          recompute_level(l);
        }
        i = static_cast<std::ptrdiff_t>(stop);
        restarted = true;
        break;
      }
    }
    if (!restarted)
      --i;
  }

  order_ = 1;
  for (auto const &level : levels_)
    order_ *= level.orbit.size();
}

ElementStream::ElementStream(PermGroup const &group)
  : ElementStream(group, 0, group.is_trivial() ? 1 : group.levels()[0].orbit.size())
{}

ElementStream::ElementStream(PermGroup const &group, std::size_t first_begin,
                             std::size_t first_end)
  : group_(&group), identity_(group.degree())
{
  auto levels = group.levels();
  std::size_t top = levels.empty() ? 1 : levels[0].orbit.size();
  first_end_ = std::min(first_end, top);
  index_.assign(levels.size(), 0);
  if (!levels.empty())
    index_[0] = first_begin;
  products_.assign(levels.size(), Permutation(group.degree()));
  done_ = first_begin >= first_end_;
  if (levels.empty())
    done_ = first_begin != 0 || first_end_ == 0;
}

void ElementStream::rebuild_from(std::size_t level)
{
  auto levels = group_->levels();
  for (std::size_t m = level; m < levels.size(); ++m) {
    Permutation const &x = levels[m].transversal[index_[m]];
    if (m == 0)
      products_[0] = x;
    else
      compose_into(x, products_[m - 1], products_[m]);
  }
}

bool ElementStream::next()
{
  if (done_)
    return false;
  if (!started_) {
    started_ = true;
    rebuild_from(0);
    return true;
  }
  auto levels = group_->levels();
  for (std::size_t l = levels.size(); l-- > 0;) {
    std::size_t limit = l == 0 ? first_end_ : levels[l].orbit.size();
    if (++index_[l] < limit) {
      rebuild_from(l);
      return true;
    }
    index_[l] = 0;
  }
  done_ = true;
  return false;
}

std::vector<Permutation> elements(PermGroup const &group, std::uint64_t cap)
{
  std::vector<Permutation> out;
  out.reserve(group.checked_order(cap, "element listing"));
  ElementStream stream(group);
  while (stream.next())
    out.push_back(stream.current());
  return out;
}

bool for_each_element(PermGroup const &group, std::function<bool(Permutation const &)> const &fn,
                      std::uint64_t cap)
{
  group.checked_order(cap, "element stream");
  ElementStream stream(group);
  while (stream.next()) {
    if (!fn(stream.current()))
      return false;
  }
  return true;
}

SetPartition orbit_partition_of_group(PermGroup const &group)
{
  SetPartition out = SetPartition::discrete(group.degree());
  for (auto const &g : group.generators())
    out = join(out, orbit_partition(g));
  return out;
}

SetPartition orbits_by_closure(std::size_t degree, std::span<Permutation const> generators)
{
  std::vector<std::size_t> label(degree, degree);
  for (std::size_t start = 0; start < degree; ++start) {
    if (label[start] != degree)
      continue;
    std::deque<std::size_t> queue{start};
    label[start] = start;
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (auto const &g : generators) {
        std::size_t y = g[x];
        if (label[y] == degree) {
          label[y] = start;
          queue.push_back(y);
        }
      }
    }
  }
  return SetPartition::from_labels(label);
}

bool is_transitive(PermGroup const &group)
{
  return orbit_partition_of_group(group).is_trivial();
}

bool is_semiregular(PermGroup const &group)
{
  SetPartition orbits = orbit_partition_of_group(group);
  for (std::size_t size : orbits.block_sizes()) {
    if (Order(size) != group.order())
      return false;
  }
  return true;
}

bool is_cyclic(PermGroup const &group, std::uint64_t cap)
{
  std::uint64_t order = group.checked_order(cap, "cyclicity test");
  bool found = false;
  for_each_element(group, [&](Permutation const &g) {
    found = cycle_decomposition(g).order == order;
    return !found;
  }, cap);
  return found;
}

PermGroup point_stabilizer(PermGroup const &group, std::size_t point)
{
  std::size_t const n = group.degree();
  if (point >= n)
    throw Error("point " + std::to_string(point + 1) + " out of range");

  // Schreier's lemma over the orbit of the point.
  std::vector<std::size_t> orbit{point};
  std::vector<int> position(n, -1);
  std::vector<Permutation> transversal{Permutation(n)};
  position[point] = 0;
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (auto const &s : group.generators()) {
      std::size_t y = s[orbit[k]];
      if (position[y] >= 0)
        continue;
      position[y] = static_cast<int>(orbit.size());
      orbit.push_back(y);
      transversal.push_back(compose(transversal[k], s));
    }
  }

  // Add Schreier generators one at a time, skipping those already present.
  PermGroup stab = PermGroup::trivial(n);
  std::vector<Permutation> gens;
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (auto const &s : group.generators()) {
      Permutation const &u = transversal[position[s[orbit[k]]]];
      Permutation h = compose(compose(transversal[k], s), inverse(u));
      if (h.is_identity() || stab.contains(h))
        continue;
      gens.push_back(std::move(h));
      stab = PermGroup(n, gens);
    }
  }
  return stab;
}

PermGroup subgroup_by_predicate(PermGroup const &group,
                                std::function<bool(Permutation const &)> const &pred,
                                std::uint64_t cap)
{
  std::vector<Permutation> gens;
  PermGroup sub = PermGroup::trivial(group.degree());
  for_each_element(group, [&](Permutation const &g) {
    if (pred(g) && !sub.contains(g)) {
      gens.push_back(g);
      sub = PermGroup(group.degree(), gens);
    }
    return true;
  }, cap);
  return sub;
}

PermGroup set_stabilizer_of_blocks(PermGroup const &group, SetPartition const &blocks,
                                   std::uint64_t cap)
{
  if (blocks.degree() != group.degree())
    throw Error("block stabilizer: degree mismatch");
  return subgroup_by_predicate(group, [&](Permutation const &g) {
    for (std::size_t x = 0; x < g.degree(); ++x) {
      if (blocks.block_of(g[x]) != blocks.block_of(x))
        return false;
    }
    return true;
  }, cap);
}

PermGroup block_action(PermGroup const &group, SetPartition const &blocks)
{
  if (blocks.degree() != group.degree())
    throw Error("block action: degree mismatch");
  std::size_t const m = blocks.block_count();
  std::vector<Permutation> gens;
  for (auto const &g : group.generators()) {
    std::vector<std::size_t> image(m, m);
    for (std::size_t x = 0; x < g.degree(); ++x) {
      std::size_t from = blocks.block_of(x), to = blocks.block_of(g[x]);
      if (image[from] == m)
        image[from] = to;
      else if (image[from] != to)
        throw Error("block action: partition is not invariant under the group");
    }
    gens.push_back(Permutation::from_images(image));
  }
  return PermGroup(m, std::move(gens));
}

PiSet::PiSet(std::size_t degree, Order source_order, std::vector<SetPartition> partitions)
  : degree_(degree), source_order_(std::move(source_order)), partitions_(std::move(partitions))
{
  std::sort(partitions_.begin(), partitions_.end());
  partitions_.erase(std::unique(partitions_.begin(), partitions_.end()), partitions_.end());
  index_.reserve(partitions_.size());
  for (auto const &p : partitions_)
    index_.insert(std::string_view(p.code()));
}

namespace {

struct TransparentHash
{
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
};

using CodeSet = std::unordered_set<std::string, TransparentHash, std::equal_to<>>;

void collect_codes(PermGroup const &group, std::size_t first_begin, std::size_t first_end,
                   CodeSet &codes)
{
  std::size_t const n = group.degree();
  std::string code(n, '\0');
  std::vector<bool> seen(n);
  ElementStream stream(group, first_begin, first_end);
  while (stream.next()) {
    auto images = stream.current().images();
    std::fill(seen.begin(), seen.end(), false);
    char next = 0;
    for (std::size_t start = 0; start < n; ++start) {
      if (seen[start])
        continue;
      for (std::size_t x = start; !seen[x]; x = images[x]) {
        seen[x] = true;
        code[x] = next;
      }
      ++next;
    }
    if (!codes.contains(std::string_view(code)))
      codes.insert(code);
  }
}

} // namespace

PiSet pi_set(PermGroup const &group, EnumerationLimits const &limits)
{
  group.checked_order(limits.element_cap, "pi(G) enumeration");

  std::size_t top = group.is_trivial() ? 1 : group.levels()[0].orbit.size();
  unsigned workers = std::max(1u, std::min<unsigned>(limits.workers, static_cast<unsigned>(top)));

  std::vector<CodeSet> shards(workers);
  if (workers == 1) {
    collect_codes(group, 0, top, shards[0]);
  } else {
    // Top-level transversal indices are dealt round-robin to workers.
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        for (std::size_t t = w; t < top; t += workers)
          collect_codes(group, t, t + 1, shards[w]);
      });
    }
    for (auto &t : threads)
      t.join();
  }

  CodeSet &merged = shards[0];
  for (unsigned w = 1; w < workers; ++w) {
    for (auto &code : shards[w])
      merged.insert(code);
    shards[w].clear();
  }

  std::vector<SetPartition> partitions;
  partitions.reserve(merged.size());
  while (!merged.empty()) {
    auto node = merged.extract(merged.begin());
    partitions.push_back(SetPartition::from_code(std::move(node.value())));
  }
  return PiSet(group.degree(), group.order(), std::move(partitions));
}

} // namespace cohere
