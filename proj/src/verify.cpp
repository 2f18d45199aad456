#include "cohere/verify.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>

#include <sys/resource.h>

#include "cohere/census.hpp"
#include "cohere/coherence.hpp"
#include "cohere/constructions.hpp"
#include "cohere/constructive.hpp"
#include "cohere/error.hpp"
#include "cohere/group_spec.hpp"
#include "cohere/subgroups.hpp"

namespace cohere {

namespace {

struct ClaimInfo
{
  char const *title;
  double budget;
  bool slow;
};

// Budgets in seconds.
constexpr ClaimInfo claims[claim_count] = {
  {"lattice operations match oracles; lattice axioms", 10, false},
  {"centralizers in S_n (n <= 6) are join- and meet-coherent", 60, false},
  {"small verdict table (S_n, A_n, C2xC2, order 21, degree 12)", 10, false},
  {"direct sums and direct products", 10, false},
  {"imprimitive wreath products", 30, false},
  {"dihedral and cyclic-kernel Frobenius groups", 30, false},
  {"linear groups over small fields", 60, false},
  {"normal cyclic regular subgroup classification", 120, false},
  {"chains of orbit partitions are exactly cyclic p-groups", 60, false},
  {"constructive centralizer and wreath builders", 120, false},
  {"census of join-coherent transitive groups, degrees 4 and 5", 120, false},
  {"large groups: M11, PSL2(11), PSL3(4) and PGL3(4) with Frobenius, M23", 1800, true},
};

class Tally
{
public:
  void expect(bool ok, std::string const &what)
  {
    ++checks_;
    if (!ok)
      failures_.push_back(what);
  }
  void note(std::string s) { notes_.push_back(std::move(s)); }

  bool ok() const { return failures_.empty(); }
  std::size_t checks() const { return checks_; }
  std::vector<std::string> details() const
  {
    if (failures_.empty()) {
      auto out = notes_;
      out.insert(out.begin(), std::to_string(checks_) + " checks");
      return out;
    }
    std::vector<std::string> out(failures_.begin(),
                                 failures_.begin() + std::min<std::size_t>(failures_.size(), 12));
    if (failures_.size() > 12)
      out.push_back("... " + std::to_string(failures_.size() - 12) + " more");
    out.insert(out.end(), notes_.begin(), notes_.end());
    return out;
  }

private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_, notes_;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

PermGroup spec(std::string const &text, VerifyOptions const &o)
{
  return build(parse_group_spec(text), o.data_dir);
}

void expect_verdict(Tally &t, std::string const &text, VerifyOptions const &o,
                    std::optional<bool> join, std::optional<bool> meet)
{
  PermGroup g = spec(text, o);
  CoherenceReport r = check_coherence(g, text, {join.has_value(), meet.has_value(), false, o.limits});
  if (join)
    t.expect(*r.join_coherent == *join,
             text + ": join-coherent " + yes_no(*r.join_coherent) + ", expected " + yes_no(*join));
  if (meet)
    t.expect(*r.meet_coherent == *meet,
             text + ": meet-coherent " + yes_no(*r.meet_coherent) + ", expected " + yes_no(*meet));
}

SetPartition random_partition(std::size_t n, std::mt19937_64 &rng)
{
  std::size_t k = std::uniform_int_distribution<std::size_t>(1, n)(rng);
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  std::vector<std::size_t> labels(n);
  for (auto &l : labels)
    l = pick(rng);
  return SetPartition::from_labels(labels);
}

Permutation random_permutation(std::size_t n, std::mt19937_64 &rng)
{
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(images);
}

// Independent oracles: relation matrices closed by Warshall's algorithm, and
// pointwise intersection of the two equivalence relations.
SetPartition oracle_join(SetPartition const &p, SetPartition const &q)
{
  std::size_t const n = p.degree();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      r[i][j] = p.block_of(i) == p.block_of(j) || q.block_of(i) == q.block_of(j);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j])
            r[i][j] = true;
  std::vector<std::size_t> label(n);
  for (std::size_t i = 0; i < n; ++i)
    label[i] = static_cast<std::size_t>(std::find(r[i].begin(), r[i].end(), true) - r[i].begin());
  return SetPartition::from_labels(label);
}

SetPartition oracle_meet(SetPartition const &p, SetPartition const &q)
{
  std::size_t const n = p.degree();
  std::vector<std::size_t> label(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = 0;
    while (p.block_of(i) != p.block_of(j) || q.block_of(i) != q.block_of(j))
      ++j;
    label[i] = j;
  }
  return SetPartition::from_labels(label);
}

Tally claim_lattice(VerifyOptions const &o)
{
  Tally t;
  JoinFn const join_fn = o.join_under_test ? o.join_under_test : JoinFn(join);
  std::mt19937_64 rng(0x1a771ce);
  std::uniform_int_distribution<std::size_t> degree(1, 12);

  std::size_t join_bad = 0, meet_bad = 0, refine_bad = 0;
  for (int k = 0; k < 10'000; ++k) {
    std::size_t n = degree(rng);
    SetPartition p = random_partition(n, rng), q = random_partition(n, rng);
    if (join_fn(p, q) != oracle_join(p, q) && join_bad++ == 0)
      t.note("first join mismatch: " + to_string(p) + " v " + to_string(q));
    if (meet(p, q) != oracle_meet(p, q) && meet_bad++ == 0)
      t.note("first meet mismatch: " + to_string(p) + " ^ " + to_string(q));
    bool r = refines(p, q);
    refine_bad += r != (join_fn(p, q) == q) || r != (meet(p, q) == p);
  }
  t.expect(join_bad == 0, std::to_string(join_bad) + " of 10000 joins differ from the closure oracle");
  t.expect(meet_bad == 0, std::to_string(meet_bad) + " of 10000 meets differ from the intersection oracle");
  t.expect(refine_bad == 0, std::to_string(refine_bad) + " refinement tests disagree with join/meet");

  std::map<std::string, std::size_t> bad;
  std::optional<std::string> distributive_example;
  char const *axioms[] = {"join commutative", "meet commutative", "join associative",
                          "meet associative", "join idempotent", "meet idempotent",
                          "absorption P v (P ^ Q) = P", "absorption P ^ (P v Q) = P",
                          "distributive P ^ (Q v R) = (P ^ Q) v (P ^ R)"};
  for (int k = 0; k < 2'000; ++k) {
    std::size_t n = degree(rng);
    SetPartition p = random_partition(n, rng), q = random_partition(n, rng),
                 r = random_partition(n, rng);
    bool holds[] = {
      join_fn(p, q) == join_fn(q, p),
      meet(p, q) == meet(q, p),
      join_fn(join_fn(p, q), r) == join_fn(p, join_fn(q, r)),
      meet(meet(p, q), r) == meet(p, meet(q, r)),
      join_fn(p, p) == p,
      meet(p, p) == p,
      join_fn(p, meet(p, q)) == p,
      meet(p, join_fn(p, q)) == p,
      meet(p, join_fn(q, r)) == join_fn(meet(p, q), meet(p, r)),
    };
    for (std::size_t a = 0; a < std::size(holds); ++a)
      bad[axioms[a]] += !holds[a];
  }
  if (bad[axioms[8]] > 0) {
    // Report the smallest failing triple rather than a random one.
    for (std::size_t n = 1; n <= 4 && !distributive_example; ++n) {
      auto all = all_partitions(n);
      for (auto const &p : all)
        for (auto const &q : all)
          for (auto const &r : all)
            if (!distributive_example && meet(p, join_fn(q, r)) != join_fn(meet(p, q), meet(p, r)))
              distributive_example =
                "P = " + to_string(p) + ", Q = " + to_string(q) + ", R = " + to_string(r) +
                ": P ^ (Q v R) = " + to_string(meet(p, join_fn(q, r))) +
                " but (P ^ Q) v (P ^ R) = " + to_string(join_fn(meet(p, q), meet(p, r)));
    }
  }
  for (auto const *a : axioms)
    t.expect(bad[a] == 0, std::string(a) + ": fails on " + std::to_string(bad[a]) +
                            " of 2000 random triples");
  if (distributive_example)
    t.expect(false, "distributive counterexample: " + *distributive_example);
  return t;
}

Tally claim_centralizers(VerifyOptions const &o)
{
  Tally t;
  std::size_t groups = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto const &g : elements(build_named(NamedFamily::sym, n))) {
      PiSet pi = pi_set(centralizer_in_sym(g), o.limits);
      ++groups;
      auto j = check_closure(pi, LatticeOp::join, o.limits.workers);
      auto m = check_closure(pi, LatticeOp::meet, o.limits.workers);
      t.expect(j.closed, "centralizer of " + to_cycle_string(g) + " in S" + std::to_string(n) +
                           " is not join-closed");
      t.expect(m.closed, "centralizer of " + to_cycle_string(g) + " in S" + std::to_string(n) +
                           " is not meet-closed");
    }
  }
  t.note(std::to_string(groups) + " centralizers");
  return t;
}

Tally claim_small_table(VerifyOptions const &o)
{
  Tally t;
  for (int n = 1; n <= 6; ++n)
    expect_verdict(t, "sym:" + std::to_string(n), o, true, true);
  for (int n = 4; n <= 6; ++n)
    expect_verdict(t, "alt:" + std::to_string(n), o, false, false);
  expect_verdict(t, "dprod:(cyclic:2,cyclic:2)", o, false, true);
  expect_verdict(t, "frob:7,3", o, true, false);

  std::vector<Permutation> gens{parse_cycles("(1 7)(4 10)", 12),
                                parse_cycles("(1 2 3 4 5 6 7 8 9 10 11 12)", 12)};
  PermGroup g(12, gens);
  t.expect(g.order() == 48, "degree-12 group has order " + g.order().str() + ", expected 48");
  t.expect(is_join_coherent(g, o.limits), "degree-12 group is not join-coherent");
  return t;
}

Tally claim_sums_products(VerifyOptions const &o)
{
  Tally t;
  std::pair<char const *, char const *> pairs[] = {
    {"cyclic:2", "cyclic:2"}, {"cyclic:2", "cyclic:3"}, {"sym:3", "cyclic:2"}, {"sym:3", "cyclic:4"}};
  for (auto [a, b] : pairs) {
    PermGroup g = spec(a, o), h = spec(b, o);
    bool coprime = boost::multiprecision::gcd(g.order(), h.order()) == 1;
    bool gj = is_join_coherent(g, o.limits), hj = is_join_coherent(h, o.limits);
    bool gm = is_meet_coherent(g, o.limits), hm = is_meet_coherent(h, o.limits);
    std::string pair = std::string("(") + a + "," + b + ")";
    expect_verdict(t, "dprod:" + pair, o, gj && hj && coprime, std::nullopt);
    expect_verdict(t, "dsum:" + pair, o, gj && hj, gm && hm);
  }
  return t;
}

Tally claim_wreaths(VerifyOptions const &o)
{
  Tally t;
  expect_verdict(t, "wr:(cyclic:2,cyclic:3)", o, true, std::nullopt);
  expect_verdict(t, "wr:(cyclic:3,cyclic:2)", o, true, std::nullopt);
  expect_verdict(t, "wr:(sym:3,cyclic:2)", o, true, false);
  expect_verdict(t, "wr:(alt:4,cyclic:2)", o, false, std::nullopt);
  return t;
}

Tally claim_frobenius(VerifyOptions const &o)
{
  Tally t;
  for (int p : {3, 5, 7, 11})
    expect_verdict(t, "dihedral:" + std::to_string(p), o, std::nullopt, true);
  expect_verdict(t, "dihedral:9", o, std::nullopt, false);
  std::pair<int, int> cases[] = {{7, 3}, {11, 5}, {9, 2}, {15, 2}};
  for (auto [n, r] : cases) {
    bool prime = n == 7 || n == 11;
    expect_verdict(t, "frob:" + std::to_string(n) + "," + std::to_string(r), o, prime, std::nullopt);
  }
  return t;
}

Tally claim_linear(VerifyOptions const &o)
{
  Tally t;
  expect_verdict(t, "lin:2,2,GL,points", o, true, std::nullopt);
  expect_verdict(t, "lin:2,3,GL,points", o, false, std::nullopt);
  expect_verdict(t, "lin:2,3,GL,lines", o, true, std::nullopt);
  expect_verdict(t, "lin:3,2,GL,lines", o, false, std::nullopt);
  expect_verdict(t, "lin:3,3,SL,lines", o, false, std::nullopt);
  expect_verdict(t, "lin:3,3,GL,lines", o, false, std::nullopt);
  expect_verdict(t, "lin:2,4,GL·Frob,lines", o, true, std::nullopt);
  t.expect(spec("lin:2,3,GL,lines", o).order() == 24, "PGL2(3) does not have order 24");
  t.expect(spec("lin:2,4,GL·Frob,lines", o).order() == 120, "PGammaL2(4) does not have order 120");
  return t;
}

Tally claim_normal_cyclic(VerifyOptions const &o)
{
  Tally t;
  std::size_t cases = 0;
  for (unsigned n : {4u, 6u, 8u, 9u, 10u, 12u, 15u, 16u, 25u, 27u}) {
    auto report = verify_normal_cyclic_classification(n, o.limits);
    for (auto const &c : report.cases) {
      ++cases;
      std::string h;
      for (unsigned m : c.multipliers)
        h += (h.empty() ? "" : ",") + std::to_string(m);
      t.expect(c.verdict == c.prediction, "n = " + std::to_string(n) + ", H = {" + h +
                                              "}: join-coherent " + yes_no(c.verdict) +
                                              ", predicted " + yes_no(c.prediction));
    }
  }
  t.note(std::to_string(cases) + " subgroups of unit groups");
  return t;
}

Tally claim_chains(VerifyOptions const &o)
{
  Tally t;
  std::size_t groups = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto const &g : subgroups(build_named(NamedFamily::sym, n))) {
      ++groups;
      ChainReport r = classify_chain(g, o.limits);
      t.expect(r.is_chain == r.group_is_cyclic_prime_power,
               "degree " + std::to_string(n) + ", order " + g.order().str() + " group <" +
                 [&] {
                   std::string s;
                   for (auto const &x : g.generators())
                     s += (s.empty() ? "" : ", ") + to_cycle_string(x);
                   return s;
                 }() +
                 ">: chain " + yes_no(r.is_chain) + ", cyclic p-group " +
                 yes_no(r.group_is_cyclic_prime_power));
    }
  }
  t.note(std::to_string(groups) + " subgroups");
  return t;
}

Tally claim_constructive(VerifyOptions const &o)
{
  Tally t;
  std::mt19937_64 rng(0xc0ffee);

  std::size_t built = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int k = 0; k < 500; ++k) {
      Permutation g = random_permutation(n, rng);
      PermGroup cent = centralizer_in_sym(g);
      PiSet pi = pi_set(cent, o.limits);
      SetPartition p = rng() % 2 ? pi.partitions()[rng() % pi.size()] : random_partition(n, rng);
      bool expected = pi.contains(p);
      bool cond = centralizer_partition_conditions(p, g);
      std::string where = "g = " + to_cycle_string(g) + ", P = " + to_string(p);
      t.expect(cond == expected, where + ": criterion " + yes_no(cond) + ", membership " + yes_no(expected));
      try {
        Permutation h = build_centralizer_element(p, g);
        ++built;
        t.expect(cond, where + ": builder succeeded on a failing input");
        t.expect(compose(g, h) == compose(h, g), where + ": h does not commute with g");
        t.expect(orbit_partition(h) == p, where + ": pi(h) != P");
      } catch (Error const &) {
        t.expect(!cond, where + ": builder failed on a passing input");
      }
    }
  }

  std::vector<PermGroup> catalog{
    PermGroup::trivial(1),
    PermGroup::trivial(2),
    build_named(NamedFamily::sym, 2),
    PermGroup::trivial(3),
    PermGroup(3, {parse_cycles("(1 2)", 3)}),
    build_named(NamedFamily::cyclic, 3),
    build_named(NamedFamily::sym, 3),
  };
  std::size_t pairs = 0, partitions = 0;
  for (auto const &g : catalog) {
    for (auto const &h : catalog) {
      Order size = h.order();
      for (std::size_t y = 0; y < h.degree(); ++y)
        size *= g.order();
      if (size > 10'000)
        continue;
      ++pairs;
      PermGroup w = wreath_imprimitive(g, h);
      PiSet pi = pi_set(w, o.limits);
      WreathContext ctx(g, h);
      for (auto const &p : all_partitions(w.degree())) {
        ++partitions;
        bool cond = wreath_partition_conditions(p, ctx).overall;
        std::string where = "G of order " + g.order().str() + " on " + std::to_string(g.degree()) +
                            ", H of order " + h.order().str() + " on " + std::to_string(h.degree()) +
                            ", P = " + to_string(p);
        t.expect(cond == pi.contains(p), where + ": criterion " + yes_no(cond));
        if (!cond)
          continue;
        try {
          Permutation k = build_wreath_element(p, ctx);
          ++built;
          t.expect(w.contains(k), where + ": built element is not in the wreath product");
          t.expect(orbit_partition(k) == p, where + ": pi(k) != P");
        } catch (Error const &e) {
          t.expect(false, where + ": builder failed: " + e.what());
        }
      }
    }
  }
  t.note(std::to_string(pairs) + " wreath pairs, " + std::to_string(partitions) + " partitions, " +
         std::to_string(built) + " elements built");
  return t;
}

Tally claim_census(VerifyOptions const &o)
{
  Tally t;
  std::map<std::size_t, std::map<std::uint64_t, std::size_t>> expected = {
    {4, {{4, 3}, {8, 3}, {24, 1}}},
    {5, {{5, 6}, {10, 6}, {20, 6}, {120, 1}}},
  };
  for (auto const &[degree, orders] : expected) {
    CensusResult census = run_census(degree, o.limits);
    std::map<std::uint64_t, std::size_t> found;
    for (auto const &e : census.entries) {
      if (!e.transitive || !e.join_coherent)
        continue;
      auto order = e.group.order().convert_to<std::uint64_t>();
      ++found[order];
      // Order 4 on 4 points could be C4 or the Klein group; only C4 is expected.
      if (order == 4)
        t.expect(is_cyclic(e.group), "degree 4: a non-cyclic transitive group of order 4 is listed");
    }
    auto render = [](std::map<std::uint64_t, std::size_t> const &m) {
      std::string s;
      for (auto [ord, count] : m)
        s += (s.empty() ? "" : " ") + std::to_string(count) + "x order " + std::to_string(ord);
      return s;
    };
    t.expect(found == orders, "degree " + std::to_string(degree) + ": found " + render(found) +
                                ", expected " + render(orders));
  }
  return t;
}

Tally claim_large(VerifyOptions const &o)
{
  Tally t;
  EnumerationLimits limits = o.limits;
  limits.element_cap = std::max<std::uint64_t>(limits.element_cap, 10'200'960);

  PermGroup m11 = spec("file:m11.gens", o);
  t.expect(m11.order() == 7920, "M11 has order " + m11.order().str());
  t.expect(!is_join_coherent(m11, limits), "M11 is join-coherent");

  PermGroup psl = spec("file:psl2_11.gens", o);
  t.expect(psl.order() == 660 && psl.degree() == 11, "PSL2(11) has order " + psl.order().str());
  t.expect(!is_join_coherent(psl, limits), "PSL2(11) on 11 points is join-coherent");

  for (char const *s : {"lin:3,4,SL·Frob,lines", "lin:3,4,GL·Frob,lines"}) {
    PermGroup g = spec(s, o);
    t.expect(g.degree() == 21, std::string(s) + " does not act on 21 points");
    t.expect(!is_join_coherent(g, limits), std::string(s) + " is join-coherent");
  }

  PermGroup m23 = spec("file:m23.gens", o);
  t.expect(m23.order() == 10'200'960, "M23 has order " + m23.order().str());
  CoherenceReport r = check_coherence(m23, "M23", {true, false, false, limits});
  t.expect(!*r.join_coherent, "M23 is join-coherent");
  t.note("M23: " + std::to_string(r.pi_size) + " orbit partitions from 10200960 elements");
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  double peak_mb = usage.ru_maxrss / 1024.0;
  t.expect(peak_mb <= 2048, "peak memory " + std::to_string(peak_mb) + " MB exceeds 2048 MB");
  t.note("peak memory " + std::to_string(static_cast<long>(peak_mb)) + " MB of 2048 MB");
  return t;
}

} // namespace

std::string claim_title(int id) { return claims[id - 1].title; }
double claim_budget_seconds(int id) { return claims[id - 1].budget; }
bool claim_is_slow(int id) { return claims[id - 1].slow; }

ClaimResult run_claim(int id, VerifyOptions const &options)
{
  if (id < 1 || id > claim_count)
    throw Error("no claim " + std::to_string(id));
  ClaimResult out;
  out.id = id;
  out.title = claim_title(id);
  out.slow = claim_is_slow(id);
  out.budget_seconds = claim_budget_seconds(id);

  using Fn = Tally (*)(VerifyOptions const &);
  Fn const fns[claim_count] = {claim_lattice,     claim_centralizers, claim_small_table,
                               claim_sums_products, claim_wreaths,    claim_frobenius,
                               claim_linear,      claim_normal_cyclic, claim_chains,
                               claim_constructive, claim_census,      claim_large};
  auto start = std::chrono::steady_clock::now();
  try {
    Tally t = fns[id - 1](options);
    out.passed = t.ok();
    out.details = t.details();
  } catch (std::exception const &e) {
    out.passed = false;
    out.details = {std::string("error: ") + e.what()};
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.seconds > out.budget_seconds) {
    out.passed = false;
    out.details.push_back("over budget");
  }
  return out;
}

std::vector<ClaimResult> run_verify(VerifyOptions const &options,
                                    std::function<void(ClaimResult const &)> const &on_result)
{
  std::vector<ClaimResult> out;
  for (int id = 1; id <= claim_count; ++id) {
    ClaimResult r;
    if (claim_is_slow(id) && !options.slow) {
      r.id = id;
      r.title = claim_title(id);
      r.slow = true;
      r.skipped = true;
      r.budget_seconds = claim_budget_seconds(id);
    } else {
      r = run_claim(id, options);
    }
    if (on_result)
      on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_claim(ClaimResult const &r)
{
  char head[160];
  std::snprintf(head, sizeof head, "%s  claim %2d  (%.2f s / %.0f s)  ",
                r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL", r.id, r.seconds, r.budget_seconds);
  std::string out = head + r.title;
  if (r.skipped)
    out += "  [slow; enable with --slow]";
  for (auto const &d : r.details)
    out += "\n      " + d;
  return out;
}

} // namespace cohere
