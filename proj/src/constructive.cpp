#include "cohere/constructive.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "cohere/coherence.hpp"
#include "cohere/error.hpp"

namespace cohere {

WreathContext::WreathContext(PermGroup g, PermGroup h, std::uint64_t cap)
  : g_(std::move(g)), h_(std::move(h)), g_elems_(elements(g_, cap)),
    g_pi_(pi_set(g_, {cap, 1})), h_pi_(pi_set(h_, {cap, 1}))
{}

SetPartition block_quotient(SetPartition const &p, std::size_t block_size)
{
  std::size_t const b = p.degree() / block_size;
  // Blocks y and z are joined when some part of p meets both.
  std::vector<std::size_t> parent(b);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t y) {
    while (parent[y] != y)
      y = parent[y] = parent[parent[y]];
    return y;
  };
  std::vector<std::size_t> first_block(p.block_count(), b);
  for (std::size_t pt = 0; pt < p.degree(); ++pt) {
    std::size_t &f = first_block[p.block_of(pt)];
    std::size_t y = pt / block_size;
    if (f == b) {
      f = y;
      continue;
    }
    std::size_t r1 = root(f), r2 = root(y);
    if (r1 != r2)
      parent[std::max(r1, r2)] = std::min(r1, r2);
  }
  std::vector<std::size_t> label(b);
  for (std::size_t y = 0; y < b; ++y)
    label[y] = root(y);
  return SetPartition::from_labels(label);
}

SetPartition block_section(SetPartition const &p, std::size_t block_size, std::size_t y)
{
  std::vector<std::size_t> points(block_size);
  std::iota(points.begin(), points.end(), y * block_size);
  return restrict_to(p, points);
}

namespace {

void check_encoding(SetPartition const &p, WreathContext const &ctx)
{
  if (p.degree() != ctx.degree())
    throw Error("wreath criterion: partition of degree " + std::to_string(p.degree()) +
                " does not match |X||Y| = " + std::to_string(ctx.degree()));
}

// Some c in G with (x, y) ~ (xc, z) in p for every x.
std::optional<Permutation> find_translation(SetPartition const &p, WreathContext const &ctx,
                                            std::size_t y, std::size_t z)
{
  std::size_t const a = ctx.base_group().degree();
  for (auto const &c : ctx.base_elements()) {
    bool ok = true;
    for (std::size_t x = 0; x < a && ok; ++x)
      ok = p.block_of(y * a + x) == p.block_of(z * a + c[x]);
    if (ok)
      return c;
  }
  return std::nullopt;
}

} // namespace

WreathConditions wreath_partition_conditions(SetPartition const &p, WreathContext const &ctx)
{
  check_encoding(p, ctx);
  std::size_t const a = ctx.base_group().degree(), b = ctx.top_group().degree();
  WreathConditions out;

  SetPartition quotient = block_quotient(p, a);
  out.c1 = ctx.top_pi().contains(quotient);

  out.c2 = true;
  for (std::size_t y = 0; y < b && out.c2; ++y)
    out.c2 = ctx.base_pi().contains(block_section(p, a, y));

  // Translations compose, so matching the first block of each part to the
  // others suffices.
  out.c4 = true;
  for (auto const &part : quotient.blocks()) {
    for (std::size_t k = 1; k < part.size() && out.c4; ++k)
      out.c4 = find_translation(p, ctx, part.front(), part[k]).has_value();
  }

  out.overall = out.c1 && out.c2 && out.c4;
  if (!out.c1)
    out.failure = "c1: no element of H has the block partition as its orbit partition";
  else if (!out.c2)
    out.failure = "c2: some block section is not an orbit partition of G";
  else if (!out.c4)
    out.failure = "c4: no element of G matches two joined blocks";
  return out;
}

WreathConditions wreath_partition_conditions(SetPartition const &p, PermGroup const &g,
                                             PermGroup const &h)
{
  return wreath_partition_conditions(p, WreathContext(g, h));
}

Permutation build_wreath_element(SetPartition const &p, WreathContext const &ctx)
{
  WreathConditions cond = wreath_partition_conditions(p, ctx);
  if (!cond.overall)
    throw Error("no wreath element with this orbit partition: " + cond.failure);

  std::size_t const a = ctx.base_group().degree(), b = ctx.top_group().degree();
  SetPartition quotient = block_quotient(p, a);
  Permutation h = *find_witness_element(ctx.top_group(), quotient);

  std::vector<Permutation> f(b, Permutation(a));
  std::vector<bool> done(b, false);
  for (std::size_t y0 = 0; y0 < b; ++y0) {
    if (done[y0])
      continue;
    std::vector<std::size_t> orbit;
    for (std::size_t y = y0; !done[y]; y = h[y]) {
      done[y] = true;
      orbit.push_back(y);
    }
    std::size_t const m = orbit.size();

    std::vector<Permutation> c;
    for (std::size_t t = 0; t < m; ++t) {
      auto found = find_translation(p, ctx, orbit[t], orbit[(t + 1) % m]);
      if (!found)
        throw Error("wreath builder: no translation between joined blocks");
      c.push_back(std::move(*found));
    }
    Permutation product(a);
    for (auto const &ct : c)
      product = compose(product, ct);
    SetPartition section = block_section(p, a, y0);
    auto g_i = std::find_if(ctx.base_elements().begin(), ctx.base_elements().end(),
                            [&](Permutation const &e) { return orbit_partition(e) == section; });
    if (g_i == ctx.base_elements().end())
      throw Error("wreath builder: block section has no witness in G");
    // Correct the first translation so the product around the orbit is g_i.
    c[0] = compose(compose(*g_i, inverse(product)), c[0]);
    for (std::size_t t = 0; t < m; ++t)
      f[orbit[t]] = c[t];
  }

  std::vector<std::size_t> images(a * b);
  for (std::size_t y = 0; y < b; ++y)
    for (std::size_t x = 0; x < a; ++x)
      images[y * a + x] = h[y] * a + f[y][x];
  Permutation k = Permutation::from_images(images);
  if (orbit_partition(k) != p)
    throw Error("wreath builder: constructed element has the wrong orbit partition");
  return k;
}

Permutation build_wreath_element(SetPartition const &p, PermGroup const &g, PermGroup const &h)
{
  return build_wreath_element(p, WreathContext(g, h));
}

namespace {

SetPartition cycle_length_partition(Permutation const &g)
{
  std::vector<std::size_t> label(g.degree());
  for (auto const &cycle : cycle_decomposition(g).cycles)
    for (std::size_t x : cycle)
      label[x] = cycle.size();
  return SetPartition::from_labels(label);
}

} // namespace

bool centralizer_partition_conditions(SetPartition const &p, Permutation const &g)
{
  if (p.degree() != g.degree())
    throw Error("centralizer criterion: degree mismatch");
  return refines(p, cycle_length_partition(g)) && apply(p, g) == p;
}

Permutation build_centralizer_element(SetPartition const &p, Permutation const &g)
{
  if (!centralizer_partition_conditions(p, g))
    throw Error("no centralizing element with orbit partition " + to_string(p));

  std::size_t const n = g.degree();
  std::vector<std::size_t> image(n, n);
  SetPartition glued = join(p, orbit_partition(g));
  auto cycles = cycle_decomposition(g).cycles;

  for (auto const &part : glued.blocks()) {
    std::size_t const first = part.front();
    std::size_t const p0 = p.block_of(first);
    // The part is a union of g-orbits, so its minimum starts one of them.
    std::size_t const m = std::find_if(cycles.begin(), cycles.end(), [&](auto const &c) {
      return c.front() == first;
    })->size();

    // Least t > 0 with P0 g^t = P0.
    std::size_t t = 0;
    Permutation gt(n);
    for (std::size_t s = 1; s <= m && !t; ++s) {
      gt = compose(gt, g);
      bool fixed = true;
      for (std::size_t x : part)
        if (p.block_of(x) == p0 && p.block_of(gt[x]) != p0)
          fixed = false;
      if (fixed)
        t = s;
    }
    if (t == 0)
      throw Error("centralizer builder: part is not returned to itself by a power of g");

    // Representatives: least point of P0 on each g-orbit inside the part,
    // orbits ordered by their minimum.
    std::vector<std::size_t> reps;
    for (auto const &c : cycles) {
      if (glued.block_of(c.front()) != glued.block_of(first))
        continue;
      std::size_t best = n;
      for (std::size_t x : c)
        if (p.block_of(x) == p0)
          best = std::min(best, x);
      if (best == n)
        throw Error("centralizer builder: a g-orbit misses the representative part");
      reps.push_back(best);
    }

    std::size_t const J = reps.size();
    for (std::size_t j = 0; j < J; ++j) {
      std::size_t src = reps[j];
      std::size_t dst = j + 1 < J ? reps[j + 1] : power(g, static_cast<long long>(t))[reps[0]];
      for (std::size_t k = 0; k < m; ++k) {
        image[src] = dst;
        src = g[src];
        dst = g[dst];
      }
    }
  }

  Permutation h = Permutation::from_images(image);
  if (compose(h, g) != compose(g, h))
    throw Error("centralizer builder: constructed element does not commute with g");
  if (orbit_partition(h) != p)
    throw Error("centralizer builder: constructed element has the wrong orbit partition");
  return h;
}

} // namespace cohere
