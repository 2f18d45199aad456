#include "cohere/coherence.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include "json.hpp"

#include "cohere/error.hpp"

namespace cohere {

namespace {

constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

struct Failure
{
  std::size_t row = none;
  std::size_t col = none;
  bool operator<(Failure const &o) const { return std::tie(row, col) < std::tie(o.row, o.col); }
};

} // namespace

ClosureResult check_closure(PiSet const &pi, LatticeOp op, unsigned workers)
{
  auto parts = pi.partitions();
  std::size_t const m = parts.size();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(m, 1))));

  std::atomic<std::size_t> best_row{none};
  std::vector<Failure> found(workers);

  auto scan = [&](unsigned w) {
    for (std::size_t i = w; i < m; i += workers) {
      if (i > best_row.load(std::memory_order_relaxed))
        return;
      for (std::size_t j = i; j < m; ++j) {
        SetPartition r = op == LatticeOp::join ? join(parts[i], parts[j]) : meet(parts[i], parts[j]);
        if (!pi.contains(r)) {
          found[w] = {i, j};
          std::size_t cur = best_row.load();
          while (i < cur && !best_row.compare_exchange_weak(cur, i)) {}
          return;
        }
      }
    }
  };

  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w)
      threads.emplace_back(scan, w);
    for (auto &t : threads)
      t.join();
  }

  Failure least = *std::min_element(found.begin(), found.end());
  ClosureResult out;
  if (least.row != none) {
    out.closed = false;
    out.witness = PartitionPair{parts[least.row], parts[least.col]};
  }
  return out;
}

CoherenceReport check_coherence(PermGroup const &group, std::string const &description,
                                CoherenceOptions const &options)
{
  auto start = std::chrono::steady_clock::now();
  PiSet pi = pi_set(group, options.limits);

  CoherenceReport report;
  report.group = description;
  report.degree = group.degree();
  report.order = group.order();
  report.pi_size = pi.size();
  if (options.join) {
    auto r = check_closure(pi, LatticeOp::join, options.limits.workers);
    report.join_coherent = r.closed;
    report.join_witness = r.witness;
  }
  if (options.meet) {
    auto r = check_closure(pi, LatticeOp::meet, options.limits.workers);
    report.meet_coherent = r.closed;
    report.meet_witness = r.witness;
  }
  if (options.chain)
    report.is_chain = is_chain(pi.partitions());
  report.ms_elapsed = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start).count();
  return report;
}

CoherenceReport check_join_coherent(PermGroup const &group, EnumerationLimits const &limits)
{
  return check_coherence(group, "", {true, false, false, limits});
}

CoherenceReport check_meet_coherent(PermGroup const &group, EnumerationLimits const &limits)
{
  return check_coherence(group, "", {false, true, false, limits});
}

bool is_join_coherent(PermGroup const &group, EnumerationLimits const &limits)
{
  return *check_join_coherent(group, limits).join_coherent;
}

bool is_meet_coherent(PermGroup const &group, EnumerationLimits const &limits)
{
  return *check_meet_coherent(group, limits).meet_coherent;
}

std::string to_json(CoherenceReport const &report, bool timing)
{
  using nlohmann::ordered_json;
  auto verdict = [](std::optional<bool> const &b) -> ordered_json {
    return b ? ordered_json(*b) : ordered_json(nullptr);
  };
  auto witness = [](std::optional<PartitionPair> const &w) -> ordered_json {
    if (!w)
      return nullptr;
    return ordered_json::array({to_string(w->first), to_string(w->second)});
  };

  ordered_json j;
  j["group"] = report.group;
  j["degree"] = report.degree;
  if (report.order <= std::numeric_limits<std::uint64_t>::max())
    j["order"] = report.order.convert_to<std::uint64_t>();
  else
    j["order"] = report.order.str();
  j["pi_size"] = report.pi_size;
  j["join_coherent"] = verdict(report.join_coherent);
  j["meet_coherent"] = verdict(report.meet_coherent);
  j["is_chain"] = verdict(report.is_chain);
  j["join_witness"] = witness(report.join_witness);
  j["meet_witness"] = witness(report.meet_witness);
  if (timing)
    j["ms_elapsed"] = static_cast<std::int64_t>(report.ms_elapsed + 0.5);
  else
    j["ms_elapsed"] = nullptr;
  return j.dump();
}

bool is_prime_power(Order const &n)
{
  if (n < 1)
    return false;
  if (n == 1)
    return true;
  Order m = n;
  for (Order p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0)
        m /= p;
      return m == 1;
    }
  }
  return true;
}

ChainReport classify_chain(PermGroup const &group, EnumerationLimits const &limits)
{
  PiSet pi = pi_set(group, limits);
  ChainReport out;
  out.is_chain = is_chain(pi.partitions());
  out.group_is_cyclic_prime_power =
    is_prime_power(group.order()) && is_cyclic(group, limits.element_cap);
  return out;
}

std::optional<Permutation> find_witness_element(PermGroup const &group, SetPartition const &p,
                                                std::uint64_t cap)
{
  if (p.degree() != group.degree())
    throw Error("witness search: degree mismatch");
  std::optional<Permutation> out;
  for_each_element(group, [&](Permutation const &g) {
    if (orbit_partition(g) == p)
      out = g;
    return !out;
  }, cap);
  return out;
}

bool check_subgroup_characterization(PermGroup const &group, std::uint64_t cap)
{
  std::vector<Permutation> elems = elements(group, cap);
  PiSet pi = pi_set(group, {cap, 1});
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i; j < elems.size(); ++j) {
      Permutation const pair[] = {elems[i], elems[j]};
      if (!pi.contains(orbits_by_closure(group.degree(), pair)))
        return false;
    }
  }
  return true;
}

bool NormalCyclicReport::all_agree() const
{
  return std::all_of(cases.begin(), cases.end(),
                     [](NormalCyclicCase const &c) { return c.verdict == c.prediction; });
}

namespace {

std::vector<std::pair<unsigned, unsigned>> factorize(unsigned n)
{
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned p = 2; p * p <= n; ++p) {
    unsigned a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    if (a)
      out.emplace_back(p, a);
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

unsigned ipow(unsigned b, unsigned e)
{
  unsigned r = 1;
  while (e--)
    r *= b;
  return r;
}

// Prediction from the prime-power decomposition of Z_n x| H: H must split as
// the product of its parts H_i acting on the individual prime-power factors;
// for p^a with a > 1 the part is trivial or generated by p^(a-1)+1; for a
// prime factor any part is allowed; the factor orders p^a |H_i| must be
// pairwise coprime.
bool predict_join_coherent(unsigned n, std::vector<unsigned> const &h)
{
  auto factors = factorize(n);
  std::size_t product = 1;
  std::vector<unsigned> factor_orders;
  for (auto [p, a] : factors) {
    unsigned q = ipow(p, a);
    unsigned rest = n / q;
    std::size_t part = 0;
    for (unsigned x : h) {
      if (x % rest != 1 % rest)
        continue;
      ++part;
      if (a > 1 && x % ipow(p, a - 1) != 1)
        return false;
    }
    product *= part;
    factor_orders.push_back(q * static_cast<unsigned>(part));
  }
  if (product != h.size())
    return false;
  for (std::size_t i = 0; i < factor_orders.size(); ++i)
    for (std::size_t j = i + 1; j < factor_orders.size(); ++j)
      if (std::gcd(factor_orders[i], factor_orders[j]) != 1)
        return false;
  return true;
}

} // namespace

NormalCyclicReport verify_normal_cyclic_classification(unsigned n, EnumerationLimits const &limits)
{
  if (n < 2 || n > PermGroup::max_degree)
    throw Error("normal cyclic classification: n must lie in 2.." +
                std::to_string(PermGroup::max_degree));

  std::vector<unsigned> units;
  for (unsigned u = 1; u < n; ++u)
    if (std::gcd(u, n) == 1)
      units.push_back(u);

  auto close = [&](std::uint64_t mask) {
    for (bool grew = true; grew;) {
      grew = false;
      for (unsigned a = 0; a < n; ++a) {
        if (!(mask >> a & 1))
          continue;
        for (unsigned b = 0; b < n; ++b) {
          if (!(mask >> b & 1))
            continue;
          unsigned c = a * b % n;
          if (!(mask >> c & 1)) {
            mask |= std::uint64_t{1} << c;
            grew = true;
          }
        }
      }
    }
    return mask;
  };

  std::uint64_t const one = std::uint64_t{1} << (1 % n);
  std::vector<std::uint64_t> found{one};
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (unsigned u : units) {
      if (found[k] >> u & 1)
        continue;
      std::uint64_t next = close(found[k] | std::uint64_t{1} << u);
      if (std::find(found.begin(), found.end(), next) == found.end())
        found.push_back(next);
    }
  }
  std::sort(found.begin(), found.end(), [](std::uint64_t a, std::uint64_t b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });

  NormalCyclicReport report;
  report.n = n;
  for (std::uint64_t mask : found) {
    NormalCyclicCase c;
    for (unsigned u = 0; u < n; ++u)
      if (mask >> u & 1)
        c.multipliers.push_back(u);

    std::vector<std::size_t> images(n);
    std::vector<Permutation> gens;
    for (unsigned x = 0; x < n; ++x)
      images[x] = (x + 1) % n;
    gens.push_back(Permutation::from_images(images));
    for (unsigned u : c.multipliers) {
      for (unsigned x = 0; x < n; ++x)
        images[x] = x * u % n;
      gens.push_back(Permutation::from_images(images));
    }
    PermGroup g(n, std::move(gens));
    c.order = g.order();
    c.verdict = is_join_coherent(g, limits);
    c.prediction = predict_join_coherent(n, c.multipliers);
    report.cases.push_back(std::move(c));
  }
  return report;
}

} // namespace cohere
