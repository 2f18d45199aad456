#include "cohere/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "cohere/error.hpp"

namespace cohere {

namespace {

void check_degree(std::size_t degree)
{
  if (degree == 0 || degree > SetPartition::max_degree)
    throw Error("partition degree " + std::to_string(degree) + " out of range");
}

void check_same_degree(SetPartition const &p, SetPartition const &q)
{
  if (p.degree() != q.degree())
    throw Error("partition degree mismatch: " + std::to_string(p.degree()) +
                " vs " + std::to_string(q.degree()));
}

std::size_t find_root(std::vector<std::size_t> &parent, std::size_t x)
{
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

} // namespace

SetPartition SetPartition::discrete(std::size_t degree)
{
  check_degree(degree);
  std::string code(degree, '\0');
  for (std::size_t i = 0; i < degree; ++i)
    code[i] = static_cast<char>(i);
  return SetPartition(std::move(code), degree);
}

SetPartition SetPartition::trivial(std::size_t degree)
{
  check_degree(degree);
  return SetPartition(std::string(degree, '\0'), 1);
}

SetPartition SetPartition::from_labels(std::span<std::size_t const> labels)
{
  check_degree(labels.size());
  std::string code(labels.size(), '\0');

  std::size_t max_label = *std::max_element(labels.begin(), labels.end());
  if (max_label < 4 * SetPartition::max_degree) {
    std::vector<int> id_of(max_label + 1, -1);
    int next = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      int &id = id_of[labels[i]];
      if (id < 0)
        id = next++;
      code[i] = static_cast<char>(id);
    }
    return SetPartition(std::move(code), static_cast<std::size_t>(next));
  }

  std::vector<std::pair<std::size_t, std::size_t>> seen; // label -> block id
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](auto const &e) { return e.first == labels[i]; });
    std::size_t id;
    if (it == seen.end()) {
      id = seen.size();
      seen.emplace_back(labels[i], id);
    } else {
      id = it->second;
    }
    code[i] = static_cast<char>(id);
  }
  return SetPartition(std::move(code), seen.size());
}

SetPartition SetPartition::from_blocks(std::vector<std::vector<std::size_t>> const &blocks,
                                       std::size_t degree)
{
  check_degree(degree);
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(degree, unset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty())
      throw Error("partition has an empty block");
    for (std::size_t x : blocks[b]) {
      if (x >= degree)
        throw Error("point " + std::to_string(x + 1) + " out of range 1.." +
                    std::to_string(degree));
      if (label[x] != unset)
        throw Error("point " + std::to_string(x + 1) + " lies in two blocks");
      label[x] = b;
    }
  }
  for (std::size_t x = 0; x < degree; ++x) {
    if (label[x] == unset)
      throw Error("point " + std::to_string(x + 1) + " is not covered by any block");
  }
  return from_labels(label);
}

SetPartition SetPartition::from_code(std::string code)
{
  check_degree(code.size());
  std::size_t next = 0;
  for (char c : code) {
    auto v = static_cast<unsigned char>(c);
    if (v > next)
      throw Error("code is not a restricted-growth string");
    if (v == next)
      ++next;
  }
  return SetPartition(std::move(code), next);
}

std::vector<std::vector<std::size_t>> SetPartition::blocks() const
{
  std::vector<std::vector<std::size_t>> out(blocks_);
  for (std::size_t i = 0; i < code_.size(); ++i)
    out[block_of(i)].push_back(i);
  return out;
}

std::vector<std::size_t> SetPartition::block_sizes() const
{
  std::vector<std::size_t> out(blocks_, 0);
  for (std::size_t i = 0; i < code_.size(); ++i)
    ++out[block_of(i)];
  return out;
}

SetPartition join(SetPartition const &p, SetPartition const &q)
{
  check_same_degree(p, q);
  std::size_t const n = p.degree();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);

  // Union every point with the first point of its block in p and in q.
  std::vector<std::size_t> first_p(p.block_count(), n), first_q(q.block_count(), n);
  auto link = [&](std::size_t &first, std::size_t i) {
    if (first == n) {
      first = i;
      return;
    }
    std::size_t a = find_root(parent, first), b = find_root(parent, i);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  };
  for (std::size_t i = 0; i < n; ++i) {
    link(first_p[p.block_of(i)], i);
    link(first_q[q.block_of(i)], i);
  }

  std::vector<std::size_t> label(n);
  for (std::size_t i = 0; i < n; ++i)
    label[i] = find_root(parent, i);
  return SetPartition::from_labels(label);
}

SetPartition meet(SetPartition const &p, SetPartition const &q)
{
  check_same_degree(p, q);
  std::size_t const n = p.degree();
  std::size_t const qb = q.block_count();
  std::vector<int> bucket(p.block_count() * qb, -1);
  std::string code(n, '\0');
  int next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int &slot = bucket[p.block_of(i) * qb + q.block_of(i)];
    if (slot < 0)
      slot = next++;
    code[i] = static_cast<char>(slot);
  }
  return SetPartition::from_code(std::move(code));
}

bool refines(SetPartition const &p, SetPartition const &q)
{
  check_same_degree(p, q);
  // Each p-block must map into a single q-block.
  std::vector<int> target(p.block_count(), -1);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    int &t = target[p.block_of(i)];
    int qb = static_cast<int>(q.block_of(i));
    if (t < 0)
      t = qb;
    else if (t != qb)
      return false;
  }
  return true;
}

bool is_chain(std::span<SetPartition const> partitions)
{
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    for (std::size_t j = i + 1; j < partitions.size(); ++j) {
      if (!refines(partitions[i], partitions[j]) && !refines(partitions[j], partitions[i]))
        return false;
    }
  }
  return true;
}

std::string to_string(SetPartition const &p)
{
  std::string out = "{";
  bool first_block = true;
  for (auto const &block : p.blocks()) {
    if (!first_block)
      out += '|';
    first_block = false;
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k)
        out += ',';
      out += std::to_string(block[k] + 1);
    }
  }
  out += '}';
  return out;
}

SetPartition parse_partition(std::string_view text, std::size_t degree)
{
  auto fail = [&](std::string const &why) {
    throw ParseError("bad partition '" + std::string(text) + "': " + why);
  };

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };

  skip_ws();
  if (pos >= text.size() || text[pos] != '{')
    fail("expected '{'");
  ++pos;

  std::vector<std::vector<std::size_t>> blocks(1);
  bool closed = false;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size())
      break;
    char c = text[pos];
    if (c == '}') {
      ++pos;
      closed = true;
      break;
    }
    if (c == '|') {
      blocks.emplace_back();
      ++pos;
      continue;
    }
    if (c == ',') {
      ++pos;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail(std::string("unexpected character '") + c + "'");
    std::size_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
      if (value > SetPartition::max_degree)
        fail("point too large");
      ++pos;
    }
    if (value == 0 || value > degree)
      fail("point " + std::to_string(value) + " out of range 1.." + std::to_string(degree));
    blocks.back().push_back(value - 1);
  }
  if (!closed)
    fail("missing '}'");
  skip_ws();
  if (pos != text.size())
    fail("trailing characters");

  try {
    return SetPartition::from_blocks(blocks, degree);
  } catch (ParseError const &) {
    throw;
  } catch (Error const &e) {
    fail(e.what());
  }
  return SetPartition::discrete(degree); // unreachable
}

std::vector<SetPartition> all_partitions(std::size_t degree)
{
  check_degree(degree);
  std::vector<SetPartition> out;
  std::string code(degree, '\0');
  // prefix_max[i] = max label among code[0..i]
  std::vector<unsigned char> prefix_max(degree, 0);

  for (;;) {
    out.push_back(SetPartition::from_code(code));
    // Increment the rightmost position that may still grow.
    std::size_t i = degree;
    while (i > 1) {
      --i;
      auto v = static_cast<unsigned char>(code[i]);
      if (v <= prefix_max[i - 1]) {
        code[i] = static_cast<char>(v + 1);
        prefix_max[i] = std::max<unsigned char>(prefix_max[i - 1], v + 1);
        for (std::size_t j = i + 1; j < degree; ++j) {
          code[j] = 0;
          prefix_max[j] = prefix_max[i];
        }
        break;
      }
      if (i == 1) {
        return out;
      }
    }
    if (degree == 1)
      return out;
  }
}

SetPartition restrict_to(SetPartition const &p, std::span<std::size_t const> points)
{
  std::vector<std::size_t> labels;
  labels.reserve(points.size());
  for (std::size_t x : points)
    labels.push_back(p.block_of(x));
  return SetPartition::from_labels(labels);
}

} // namespace cohere
