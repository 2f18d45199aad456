#include "cohere/permutation.hpp"

#include <cctype>
#include <numeric>

#include "cohere/error.hpp"

namespace cohere {

namespace {

void check_same_degree(Permutation const &p, Permutation const &q)
{
  if (p.degree() != q.degree())
    throw Error("permutation degree mismatch: " + std::to_string(p.degree()) + " vs " +
                std::to_string(q.degree()));
}

} // namespace

Permutation::Permutation(std::size_t degree)
{
  if (degree == 0 || degree > max_degree)
    throw Error("permutation degree " + std::to_string(degree) + " out of range");
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), std::uint8_t{0});
}

Permutation Permutation::from_images(std::span<std::size_t const> images)
{
  Permutation p(images.size());
  std::vector<bool> hit(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] >= images.size() || hit[images[i]])
      throw Error("image table is not a bijection");
    hit[images[i]] = true;
    p.images_[i] = static_cast<std::uint8_t>(images[i]);
  }
  return p;
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i)
      return false;
  }
  return true;
}

std::size_t Permutation::first_moved_point() const
{
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i)
      return i;
  }
  return images_.size();
}

Permutation compose(Permutation const &p, Permutation const &q)
{
  check_same_degree(p, q);
  Permutation out(p.degree());
  for (std::size_t i = 0; i < p.images_.size(); ++i)
    out.images_[i] = q.images_[p.images_[i]];
  return out;
}

void compose_into(Permutation const &p, Permutation const &q, Permutation &out)
{
  auto const n = p.images_.size();
  std::uint8_t const *pi = p.images_.data();
  std::uint8_t const *qi = q.images_.data();
  std::uint8_t *oi = out.images_.data();
  for (std::size_t i = 0; i < n; ++i)
    oi[i] = qi[pi[i]];
}

Permutation inverse(Permutation const &p)
{
  Permutation out(p.degree());
  for (std::size_t i = 0; i < p.images_.size(); ++i)
    out.images_[p.images_[i]] = static_cast<std::uint8_t>(i);
  return out;
}

Permutation conjugate(Permutation const &p, Permutation const &by)
{
  check_same_degree(p, by);
  return compose(compose(inverse(by), p), by);
}

Permutation power(Permutation const &p, long long k)
{
  Permutation base = k < 0 ? inverse(p) : p;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1
                               : static_cast<unsigned long long>(k);
  Permutation result(p.degree());
  while (e) {
    if (e & 1)
      result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

CycleDecomposition cycle_decomposition(Permutation const &p)
{
  CycleDecomposition out;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (seen[start])
      continue;
    std::vector<std::size_t> cycle;
    for (std::size_t x = start; !seen[x]; x = p[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.order = std::lcm(out.order, static_cast<std::uint64_t>(cycle.size()));
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

Permutation parse_cycles(std::string_view text, std::size_t degree)
{
  auto fail = [&](std::string const &why) {
    throw ParseError("bad cycle notation '" + std::string(text) + "': " + why);
  };
  if (degree == 0 || degree > Permutation::max_degree)
    fail("degree " + std::to_string(degree) + " out of range");

  std::vector<std::size_t> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto at_space = [&] {
    return std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',';
  };

  while (pos < text.size()) {
    if (at_space()) {
      ++pos;
      continue;
    }
    if (text[pos] != '(')
      fail(std::string("expected '(' but found '") + text[pos] + "'");
    ++pos;

    std::vector<std::size_t> cycle;
    bool closed = false;
    while (pos < text.size()) {
      if (at_space()) {
        ++pos;
        continue;
      }
      char c = text[pos];
      if (c == ')') {
        ++pos;
        closed = true;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(c)))
        fail(std::string("unexpected character '") + c + "'");
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > Permutation::max_degree)
          fail("point too large");
        ++pos;
      }
      if (value == 0 || value > degree)
        fail("point " + std::to_string(value) + " out of range 1.." + std::to_string(degree));
      if (used[value - 1])
        fail("point " + std::to_string(value) + " repeated");
      used[value - 1] = true;
      cycle.push_back(value - 1);
    }
    if (!closed)
      fail("unbalanced parentheses");
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  return Permutation::from_images(images);
}

std::string to_cycle_string(Permutation const &p)
{
  std::string out;
  for (auto const &cycle : cycle_decomposition(p).cycles) {
    if (cycle.size() < 2)
      continue;
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k)
        out += ' ';
      out += std::to_string(cycle[k] + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

SetPartition orbit_partition(Permutation const &p)
{
  std::string code(p.degree(), '\xff');
  std::size_t next = 0;
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (code[start] != '\xff')
      continue;
    for (std::size_t x = start; code[x] == '\xff'; x = p[x])
      code[x] = static_cast<char>(next);
    ++next;
  }
  return SetPartition::from_code(std::move(code));
}

SetPartition apply(SetPartition const &partition, Permutation const &g)
{
  if (partition.degree() != g.degree())
    throw Error("partition/permutation degree mismatch");
  // Point x g lies in the image of the block containing x.
  std::vector<std::size_t> labels(g.degree());
  for (std::size_t x = 0; x < g.degree(); ++x)
    labels[g[x]] = partition.block_of(x);
  return SetPartition::from_labels(labels);
}

} // namespace cohere
