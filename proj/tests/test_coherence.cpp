#include <map>

#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

#include "cohere/coherence.hpp"
#include "cohere/constructions.hpp"
#include "cohere/subgroups.hpp"

using namespace testing;

namespace {

PermGroup named(NamedFamily f, std::size_t n) { return build_named(f, n); }
PermGroup degree12() { return group(12, {"(1 7)(4 10)", "(1 2 3 4 5 6 7 8 9 10 11 12)"}); }
PermGroup klein() { return group(4, {"(1 2)(3 4)", "(1 3)(2 4)"}); }

/// Least pair (by code, first <= second) whose join/meet leaves pi, by brute force.
std::optional<PartitionPair> least_bad_pair(PiSet const &pi, LatticeOp op)
{
  auto ps = pi.partitions();
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i; j < ps.size(); ++j) {
      auto r = op == LatticeOp::join ? join(ps[i], ps[j]) : meet(ps[i], ps[j]);
      if (!pi.contains(r))
        return PartitionPair{ps[i], ps[j]};
    }
  return std::nullopt;
}

std::vector<unsigned> units_generated(unsigned n, unsigned m)
{
  std::vector<unsigned> out;
  unsigned x = 1;
  do {
    out.push_back(x);
    x = x * m % n;
  } while (x != 1);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST_SUITE("coherence")
{
  TEST_CASE("join verdicts")
  {
    for (std::size_t n = 1; n <= 6; ++n)
      CHECK(is_join_coherent(named(NamedFamily::sym, n)));
    CHECK_FALSE(is_join_coherent(klein()));
    CHECK_FALSE(is_join_coherent(named(NamedFamily::alt, 4)));
    CHECK(is_join_coherent(frobenius_cyclic(7, 3)));
    CHECK(is_join_coherent(degree12()));
  }

  TEST_CASE("meet verdicts")
  {
    CHECK(is_meet_coherent(klein()));
    CHECK_FALSE(is_meet_coherent(frobenius_cyclic(7, 3)));
    CHECK(is_meet_coherent(named(NamedFamily::dihedral, 7)));
    for (std::size_t n = 1; n <= 6; ++n)
      CHECK(is_meet_coherent(named(NamedFamily::sym, n)));
    for (std::size_t n = 4; n <= 6; ++n)
      CHECK_FALSE(is_meet_coherent(named(NamedFamily::alt, n)));
  }

  TEST_CASE("witnesses are least and lie outside pi")
  {
    std::vector<PermGroup> gs{klein(), named(NamedFamily::alt, 4), named(NamedFamily::alt, 6),
                              frobenius_cyclic(7, 3), frobenius_cyclic(9, 2),
                              wreath_imprimitive(named(NamedFamily::sym, 3),
                                                 named(NamedFamily::cyclic, 2))};
    for (auto const &g : gs) {
      auto pi = pi_set(g);
      for (auto op : {LatticeOp::join, LatticeOp::meet}) {
        auto expect = least_bad_pair(pi, op);
        for (unsigned w : {1u, 2u, 5u}) {
          auto r = check_closure(pi, op, w);
          CHECK(r.closed == !expect.has_value());
          CHECK(r.witness == expect);
        }
      }
    }
  }

  TEST_CASE("report and JSON")
  {
    auto r = check_coherence(klein(), "klein", {true, true, true, {}});
    CHECK(r.degree == 4);
    CHECK(r.order == 4);
    CHECK(r.pi_size == 4);
    CHECK(r.join_coherent == false);
    CHECK(r.meet_coherent == true);
    CHECK(r.is_chain == false);
    REQUIRE(r.join_witness);
    CHECK_FALSE(r.meet_witness);

    auto j = nlohmann::ordered_json::parse(to_json(r, false));
    std::vector<std::string> keys;
    for (auto const &[k, v] : j.items())
      keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"group", "degree", "order", "pi_size", "join_coherent",
                                           "meet_coherent", "is_chain", "join_witness",
                                           "meet_witness", "ms_elapsed"});
    CHECK(j["join_witness"] == nlohmann::ordered_json::array({"{1,2|3,4}", "{1,3|2,4}"}));
    CHECK(j["meet_witness"].is_null());
    CHECK(j["ms_elapsed"].is_null());
    CHECK(to_json(r, false) == to_json(check_coherence(klein(), "klein", {true, true, true, {}}), false));
    CHECK(nlohmann::json::parse(to_json(r, true))["ms_elapsed"].is_number());

    auto only_join = check_coherence(klein(), "klein", {true, false, false, {}});
    CHECK_FALSE(only_join.meet_coherent.has_value());
    CHECK_FALSE(only_join.is_chain.has_value());
  }

  TEST_CASE("is_chain implies both coherences")
  {
    for (auto const &h : subgroups(named(NamedFamily::sym, 5))) {
      auto r = check_coherence(h, "", {true, true, true, {}});
      if (*r.is_chain) {
        CHECK(*r.join_coherent);
        CHECK(*r.meet_coherent);
      }
    }
  }

  TEST_CASE("classify_chain")
  {
    auto c4 = classify_chain(group(4, {"(1 2 3 4)"}));
    CHECK(c4.is_chain);
    CHECK(c4.group_is_cyclic_prime_power);
    auto s3 = classify_chain(named(NamedFamily::sym, 3));
    CHECK_FALSE(s3.is_chain);
    CHECK_FALSE(s3.group_is_cyclic_prime_power);
    auto c6 = classify_chain(group(6, {"(1 2 3 4 5 6)"}));
    CHECK_FALSE(c6.is_chain);
    CHECK_FALSE(c6.group_is_cyclic_prime_power);
    for (std::size_t n = 1; n <= 4; ++n)
      for (auto const &h : subgroups(named(NamedFamily::sym, n))) {
        auto r = classify_chain(h);
        CHECK(r.is_chain == r.group_is_cyclic_prime_power);
      }
  }

  TEST_CASE("is_prime_power")
  {
    CHECK(is_prime_power(1));
    CHECK(is_prime_power(2));
    CHECK(is_prime_power(27));
    CHECK(is_prime_power(Order(1) << 70));
    CHECK_FALSE(is_prime_power(6));
    CHECK_FALSE(is_prime_power(7920));
  }

  TEST_CASE("find_witness_element")
  {
    auto s4 = named(NamedFamily::sym, 4);
    auto id = find_witness_element(s4, SetPartition::discrete(4));
    REQUIRE(id);
    CHECK(id->is_identity());
    auto p = blocks({{0, 1}, {2, 3}}, 4);
    auto w = find_witness_element(s4, p);
    REQUIRE(w);
    CHECK(orbit_partition(*w) == p);
    CHECK_FALSE(find_witness_element(named(NamedFamily::alt, 4), blocks({{0, 1}, {2}, {3}}, 4)));
    auto g = degree12();
    auto pi = pi_set(g);
    for (auto const &q : pi.partitions()) {
      auto e = find_witness_element(g, q);
      REQUIRE(e);
      CHECK(orbit_partition(*e) == q);
    }
  }

  TEST_CASE("subgroup characterization agrees with the pair check")
  {
    CHECK(check_subgroup_characterization(named(NamedFamily::sym, 4)));
    CHECK_FALSE(check_subgroup_characterization(named(NamedFamily::alt, 4)));
    CHECK(check_subgroup_characterization(named(NamedFamily::cyclic, 6)));
    for (auto const &h : subgroups(named(NamedFamily::sym, 4)))
      CHECK(check_subgroup_characterization(h) == is_join_coherent(h));
    for (auto const &h : subgroups(named(NamedFamily::sym, 5)))
      if (h.order() <= 20)
        CHECK(check_subgroup_characterization(h) == is_join_coherent(h));
  }

  TEST_CASE("normal cyclic classification")
  {
    auto verdicts = [](unsigned n) {
      std::map<std::vector<unsigned>, bool> out;
      auto r = verify_normal_cyclic_classification(n);
      CHECK(r.all_agree());
      for (auto const &c : r.cases)
        out[c.multipliers] = c.verdict;
      return out;
    };
    auto v8 = verdicts(8);
    CHECK(v8.size() == 5);
    CHECK(v8.at({1}));
    CHECK(v8.at(units_generated(8, 5)));
    CHECK_FALSE(v8.at(units_generated(8, 7)));
    CHECK_FALSE(v8.at(units_generated(8, 3)));
    CHECK_FALSE(v8.at({1, 3, 5, 7}));

    auto v9 = verdicts(9);
    for (auto const &[h, ok] : v9)
      CHECK(ok == (h == std::vector<unsigned>{1} || h == std::vector<unsigned>{1, 4, 7}));

    auto v4 = verdicts(4);
    CHECK(v4.at({1, 3}));

    for (unsigned n : {2u, 3u, 5u, 6u, 7u, 10u, 12u, 14u, 18u, 20u})
      CHECK(verify_normal_cyclic_classification(n).all_agree());
  }

  TEST_CASE("semiregular subgroups are meet-coherent")
  {
    for (std::size_t n = 1; n <= 6; ++n) {
      std::size_t semi = 0, bad = 0;
      for (auto const &h : subgroups(named(NamedFamily::sym, n), 1000))
        if (is_semiregular(h)) {
          ++semi;
          bad += !is_meet_coherent(h);
        }
      CHECK(semi > 0);
      CHECK(bad == 0);
    }
  }

  TEST_CASE("regular groups are join-coherent iff cyclic")
  {
    std::vector<PermGroup> sources;
    for (auto const &h : subgroups(named(NamedFamily::sym, 4)))
      sources.push_back(h);
    for (std::size_t n = 1; n <= 24; ++n)
      sources.push_back(named(NamedFamily::cyclic, n));
    for (std::size_t n = 3; n <= 12; ++n)
      sources.push_back(named(NamedFamily::dihedral, n));
    sources.push_back(group(8, {"(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"}));
    auto c = [](std::size_t n) { return named(NamedFamily::cyclic, n); };
    sources.push_back(direct_sum_action(c(2), c(4)));
    sources.push_back(direct_sum_action(c(2), direct_sum_action(c(2), c(2))));
    sources.push_back(direct_sum_action(c(3), c(3)));
    sources.push_back(direct_sum_action(c(2), c(6)));
    sources.push_back(direct_sum_action(c(2), c(8)));
    sources.push_back(direct_sum_action(c(4), c(4)));
    sources.push_back(direct_sum_action(c(2), named(NamedFamily::sym, 3)));
    sources.push_back(direct_sum_action(c(3), named(NamedFamily::sym, 3)));
    sources.push_back(direct_sum_action(c(2), named(NamedFamily::alt, 4)));
    sources.push_back(direct_sum_action(c(3), klein()));
    sources.push_back(frobenius_cyclic(7, 3));
    sources.push_back(frobenius_cyclic(5, 4));
    std::size_t cyclic = 0, noncyclic = 0;
    for (auto const &s : sources) {
      if (s.order() > 24)
        continue;
      auto r = regular_action(s);
      REQUIRE(is_transitive(r));
      REQUIRE(is_semiregular(r));
      bool cyc = is_cyclic(r);
      (cyc ? cyclic : noncyclic) += 1;
      CHECK(is_join_coherent(r) == cyc);
    }
    CHECK(cyclic >= 24);
    CHECK(noncyclic >= 15);
  }

  TEST_CASE("point stabilizers inherit coherence")
  {
    std::vector<PermGroup> gs{klein(), frobenius_cyclic(7, 3), degree12(),
                              named(NamedFamily::dihedral, 7), named(NamedFamily::alt, 5)};
    for (std::size_t n = 1; n <= 6; ++n)
      gs.push_back(named(NamedFamily::sym, n));
    for (auto const &g : gs) {
      bool j = is_join_coherent(g), m = is_meet_coherent(g);
      for (std::size_t x = 0; x < g.degree(); ++x) {
        auto st = point_stabilizer(g, x);
        if (j)
          CHECK(is_join_coherent(st));
        if (m)
          CHECK(is_meet_coherent(st));
      }
    }
  }

  TEST_CASE("block actions of join-coherent wreath products are join-coherent")
  {
    auto c = [](std::size_t n) { return named(NamedFamily::cyclic, n); };
    auto s = [](std::size_t n) { return named(NamedFamily::sym, n); };
    std::vector<std::pair<PermGroup, PermGroup>> pairs{
      {c(2), c(3)}, {c(3), c(2)}, {s(3), c(2)}, {c(2), c(2)}, {c(2), s(3)},
      {c(3), c(3)}, {s(2), c(4)}, {c(4), c(2)}};
    std::size_t coherent = 0;
    for (auto const &[g, h] : pairs) {
      auto w = wreath_imprimitive(g, h);
      if (!is_join_coherent(w))
        continue;
      ++coherent;
      std::vector<std::size_t> labels(w.degree());
      for (std::size_t p = 0; p < labels.size(); ++p)
        labels[p] = p / g.degree();
      auto b = block_action(w, SetPartition::from_labels(labels));
      CHECK(b.order() == h.order());
      CHECK(is_join_coherent(b));
    }
    CHECK(coherent >= 4);
  }

  TEST_CASE("transitive join-coherent groups contain a full cycle")
  {
    for (std::size_t n = 1; n <= 5; ++n)
      for (auto const &h : subgroups(named(NamedFamily::sym, n)))
        if (is_transitive(h) && is_join_coherent(h))
          CHECK(pi_set(h).contains(SetPartition::trivial(n)));
  }
}
