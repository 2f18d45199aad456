#include <numeric>

#include "doctest.h"
#include "support.hpp"

#include "cohere/coherence.hpp"
#include "cohere/constructions.hpp"
#include "cohere/error.hpp"
#include "cohere/group_spec.hpp"

using namespace testing;

namespace {

PermGroup named(NamedFamily f, std::size_t n) { return build_named(f, n); }
PermGroup spec(std::string_view text) { return build(parse_group_spec(text), COHERE_DATA_DIR); }

Order factorial(unsigned n)
{
  Order out = 1;
  for (unsigned k = 2; k <= n; ++k)
    out *= k;
  return out;
}

/// Every permutation of degree n, in lexicographic order of images.
std::vector<Permutation> all_permutations(std::size_t n)
{
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do
    out.push_back(Permutation::from_images(images));
  while (std::next_permutation(images.begin(), images.end()));
  return out;
}

} // namespace

TEST_SUITE("constructions")
{
  TEST_CASE("named families")
  {
    auto c5 = named(NamedFamily::cyclic, 5);
    CHECK(c5.order() == 5);
    CHECK(is_transitive(c5));
    CHECK(is_semiregular(c5));
    CHECK(named(NamedFamily::dihedral, 7).order() == 14);
    CHECK(named(NamedFamily::alt, 4).order() == 12);
    for (unsigned n = 1; n <= 8; ++n) {
      CHECK(named(NamedFamily::sym, n).order() == factorial(n));
      CHECK(named(NamedFamily::alt, n).order() == (n < 2 ? Order(1) : factorial(n) / 2));
    }
    CHECK(named(NamedFamily::dihedral, 2).order() == 2);
    CHECK_THROWS_AS(named(NamedFamily::sym, 0), Error);
    CHECK_THROWS_AS(named(NamedFamily::sym, 65), CapExceeded);
  }

  TEST_CASE("direct sum")
  {
    auto g = direct_sum_action(named(NamedFamily::cyclic, 2), named(NamedFamily::cyclic, 3));
    CHECK(g.order() == 6);
    CHECK(g.degree() == 5);
    CHECK(orbit_partition_of_group(g) == blocks({{0, 1}, {2, 3, 4}}, 5));
    auto h = named(NamedFamily::sym, 3);
    auto shifted = direct_sum_action(PermGroup::trivial(2), h);
    CHECK(shifted.order() == 6);
    CHECK(orbit_partition_of_group(shifted) == blocks({{0}, {1}, {2, 3, 4}}, 5));
  }

  TEST_CASE("product action")
  {
    auto c2 = named(NamedFamily::cyclic, 2), c3 = named(NamedFamily::cyclic, 3);
    auto g = product_action(c2, c3);
    CHECK(g.degree() == 6);
    CHECK(g.order() == 6);
    CHECK(is_join_coherent(g));
    auto v = product_action(c2, c2);
    CHECK(v.degree() == 4);
    CHECK_FALSE(is_join_coherent(v));
    auto h = named(NamedFamily::alt, 4);
    CHECK(element_set(product_action(PermGroup::trivial(1), h)) == element_set(h));
    CHECK(product_action(named(NamedFamily::sym, 3), named(NamedFamily::sym, 4)).order() == 144);
  }

  TEST_CASE("coprime orders give product orbit partitions")
  {
    std::mt19937_64 rng(31);
    std::size_t tested = 0;
    for (int k = 0; k < 2000 && tested < 200; ++k) {
      std::size_t m = 1 + rng() % 6, l = 1 + rng() % 6;
      auto g = random_permutation(m, rng), h = random_permutation(l, rng);
      if (std::gcd(cycle_decomposition(g).order, cycle_decomposition(h).order) != 1)
        continue;
      ++tested;
      std::vector<std::size_t> images(m * l), labels(m * l);
      auto pg = orbit_partition(g), ph = orbit_partition(h);
      for (std::size_t y = 0; y < l; ++y)
        for (std::size_t x = 0; x < m; ++x) {
          images[y * m + x] = h[y] * m + g[x];
          labels[y * m + x] = ph.block_of(y) * m + pg.block_of(x);
        }
      CHECK(orbit_partition(Permutation::from_images(images)) ==
            SetPartition::from_labels(labels));
    }
    CHECK(tested == 200);
  }

  TEST_CASE("wreath products")
  {
    auto c2 = named(NamedFamily::cyclic, 2);
    auto w = wreath_imprimitive(c2, c2);
    CHECK(w.order() == 8);
    CHECK(w.degree() == 4);
    CHECK(element_set(w) == element_set(group(4, {"(1 2)", "(1 3)(2 4)"})));
    auto big = wreath_imprimitive(named(NamedFamily::cyclic, 4), named(NamedFamily::cyclic, 3));
    CHECK(big.order() == 192);
    CHECK(big.degree() == 12);
    auto deg12 = group(12, {"(1 7)(4 10)", "(1 2 3 4 5 6 7 8 9 10 11 12)"});
    // Its blocks are the residues mod 3; move them to the contiguous encoding.
    std::vector<std::size_t> relabel(12);
    for (std::size_t p = 0; p < 12; ++p)
      relabel[p] = (p % 3) * 4 + p / 3;
    auto sigma = Permutation::from_images(relabel);
    for (auto const &s : deg12.generators())
      CHECK(big.contains(conjugate(s, sigma)));
    auto s3c2 = wreath_imprimitive(named(NamedFamily::sym, 3), c2);
    CHECK(is_join_coherent(s3c2));
    CHECK_FALSE(is_meet_coherent(s3c2));
    // Intransitive top groups.
    auto top = group(3, {"(1 2)"});
    CHECK(wreath_imprimitive(named(NamedFamily::cyclic, 3), top).order() == 27 * 2);
    CHECK(wreath_imprimitive(named(NamedFamily::sym, 3), PermGroup::trivial(2)).order() == 36);
  }

  TEST_CASE("centralizers")
  {
    CHECK(centralizer_in_sym(cyc("(1 2)(3 4)", 4)).order() == 8);
    CHECK(centralizer_in_sym(Permutation(3)).order() == 6);
    CHECK(centralizer_in_sym(cyc("(1 2 3)", 5)).order() == 6);
    CHECK(centralizer_in_sym(cyc("(1 2 3)(4 5 6)(7 8)", 9)).order() == 3 * 3 * 2 * 2 * 1);
  }

  TEST_CASE("centralizers match brute force")
  {
    for (std::size_t n = 1; n <= 7; ++n) {
      auto all = all_permutations(n);
      // One representative per cycle type for n = 7, every element below.
      std::set<std::vector<std::size_t>> types;
      for (auto const &g : all) {
        auto d = cycle_decomposition(g);
        std::vector<std::size_t> type;
        for (auto const &c : d.cycles)
          type.push_back(c.size());
        std::sort(type.begin(), type.end());
        if (n == 7 && !types.insert(type).second)
          continue;
        std::vector<std::string> brute;
        for (auto const &x : all)
          if (compose(x, g) == compose(g, x))
            brute.emplace_back(x.key());
        std::sort(brute.begin(), brute.end());
        CHECK(element_set(centralizer_in_sym(g)) == brute);
      }
    }
  }

  TEST_CASE("frobenius groups")
  {
    auto f21 = frobenius_cyclic(7, 3);
    CHECK(f21.order() == 21);
    CHECK(f21.degree() == 7);
    CHECK(frobenius_cyclic(5, 4).order() == 20);
    auto f18 = frobenius_cyclic(9, 2);
    CHECK(f18.order() == 18);
    CHECK_FALSE(is_join_coherent(f18));
    CHECK(frobenius_cyclic(15, 2).order() == 30);
    CHECK(frobenius_cyclic(11, 5).order() == 55);
    CHECK_THROWS_WITH_AS(frobenius_cyclic(15, 4), doctest::Contains("prime 3"), Error);
    CHECK_THROWS_AS(frobenius_cyclic(7, 0), Error);
    for (auto const &[n, r] : std::vector<std::pair<unsigned, unsigned>>{{7, 3}, {13, 4}, {21, 2}})
      CHECK(frobenius_cyclic(n, r).order() == Order(n) * r);
  }

  TEST_CASE("gamma groups")
  {
    auto g8 = gamma_group(2, 3);
    CHECK(g8.order() == 16);
    CHECK(is_join_coherent(g8));
    auto g9 = gamma_group(3, 2);
    CHECK(g9.order() == 27);
    CHECK(is_join_coherent(g9));
    CHECK(element_set(gamma_group(2, 2)) == element_set(named(NamedFamily::dihedral, 4)));
    for (auto [p, a] : std::vector<std::pair<unsigned, unsigned>>{{2, 4}, {2, 5}, {5, 2}, {3, 3}, {7, 2}})
      CHECK(gamma_group(p, a).order() == boost::multiprecision::pow(Order(p), a + 1));
    CHECK_THROWS_AS(gamma_group(4, 2), Error);
    CHECK_THROWS_AS(gamma_group(2, 1), Error);
    CHECK_THROWS_AS(gamma_group(3, 4), CapExceeded);
  }

  TEST_CASE("gamma orbit structure")
  {
    CHECK(gamma_orbit_structure(3, 2, 0, 1) == SetPartition::trivial(9));
    auto b = gamma_orbit_structure(3, 2, 1, 3);
    CHECK(b == blocks({{0, 3, 6}, {1, 4, 7}, {2}, {5}, {8}}, 9));
    CHECK(gamma_orbit_structure(2, 3, 0, 4) == blocks({{0, 4}, {1, 5}, {2, 6}, {3, 7}}, 8));

    for (auto [p, a] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {5, 2}}) {
      unsigned q = 1;
      for (unsigned k = 0; k < a; ++k)
        q *= p;
      std::size_t bad = 0;
      for (unsigned j = 0; j < p; ++j)
        for (unsigned i = 0; i < q; ++i) {
          auto e = gamma_element(p, a, j, i);
          bad += !gamma_group(p, a).contains(e);
          bad += gamma_orbit_structure(p, a, j, i) != orbits_by_iteration(e);
        }
      CHECK(bad == 0);
    }
  }

  TEST_CASE("affine groups")
  {
    CHECK(affine_group(5, {}).order() == 20);
    CHECK(affine_group(8, {5}).order() == 16);
    CHECK(element_set(affine_group(8, {5})) == element_set(gamma_group(2, 3)));
    CHECK(affine_group(12, {5, 7}).order() == 48);
    CHECK_THROWS_AS(affine_group(8, {2}), Error);
  }

  TEST_CASE("linear groups")
  {
    auto s3 = linear_group_action(2, 2, LinearVariant::GL, LinearAction::points);
    CHECK(s3.degree() == 3);
    CHECK(s3.order() == 6);
    CHECK(is_join_coherent(s3));
    auto s4 = linear_group_action(2, 3, LinearVariant::GL, LinearAction::lines);
    CHECK(s4.degree() == 4);
    CHECK(s4.order() == 24);
    auto l7 = linear_group_action(3, 2, LinearVariant::GL, LinearAction::lines);
    CHECK(l7.degree() == 7);
    CHECK(l7.order() == 168);
    CHECK_FALSE(is_join_coherent(l7));
    auto s5 = linear_group_action(2, 4, LinearVariant::GL_frob, LinearAction::lines);
    CHECK(s5.degree() == 5);
    CHECK(s5.order() == 120);
    CHECK(linear_group_action(3, 4, LinearVariant::SL_frob, LinearAction::lines).order() == 40320);
    CHECK(linear_group_action(3, 4, LinearVariant::GL_frob, LinearAction::lines).order() == 120960);
    CHECK_THROWS_AS(linear_group_action(4, 2, LinearVariant::GL, LinearAction::points), Error);
    CHECK_THROWS_AS(linear_group_action(2, 6, LinearVariant::GL, LinearAction::points), Error);
    CHECK_THROWS_AS(linear_group_action(2, 9, LinearVariant::GL, LinearAction::points),
                    CapExceeded);
  }

  TEST_CASE("linear group orders match the formula")
  {
    std::size_t built = 0;
    for (unsigned d : {2u, 3u})
      for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
        for (auto v : {LinearVariant::GL, LinearVariant::SL, LinearVariant::GL_frob,
                       LinearVariant::SL_frob})
          for (auto a : {LinearAction::points, LinearAction::lines, LinearAction::hyperplanes}) {
            std::size_t pts = 1;
            for (unsigned k = 0; k < d; ++k)
              pts *= q;
            std::size_t degree = a == LinearAction::points ? pts - 1 : (pts - 1) / (q - 1);
            if (degree > PermGroup::max_degree) {
              CHECK_THROWS_AS(linear_group_action(d, q, v, a), CapExceeded);
              continue;
            }
            auto g = linear_group_action(d, q, v, a);
            CHECK(g.degree() == degree);
            CHECK(g.order() == linear_group_order(d, q, v, a));
            ++built;
          }
    CHECK(built > 50);
    // GL_2(3) on nonzero vectors is the full group.
    CHECK(linear_group_order(2, 3, LinearVariant::GL, LinearAction::points) == 48);
    CHECK(linear_group_order(3, 2, LinearVariant::GL, LinearAction::points) == 168);
    CHECK(linear_group_order(2, 5, LinearVariant::SL, LinearAction::lines) == 60);
  }

  TEST_CASE("lines and hyperplanes give equivalent degrees")
  {
    auto l = linear_group_action(3, 3, LinearVariant::GL, LinearAction::lines);
    auto h = linear_group_action(3, 3, LinearVariant::GL, LinearAction::hyperplanes);
    CHECK(l.degree() == h.degree());
    CHECK(l.order() == h.order());
    CHECK(pi_set(l).size() == pi_set(h).size());
  }

  TEST_CASE("group specs")
  {
    CHECK(spec("sym:5").order() == 120);
    CHECK(spec("dsum:(cyclic:2,cyclic:3)").degree() == 5);
    CHECK(spec("dprod:(cyclic:2,cyclic:3)").degree() == 6);
    CHECK(spec("wr:(cyclic:4,cyclic:3)").order() == 192);
    CHECK(spec("wreath:(cyclic:2,cyclic:2)").order() == 8);
    CHECK(spec("cent:(1 2)(3 4)@6").order() == 16);
    CHECK(spec("frob:7,3").order() == 21);
    CHECK(spec("gamma:2,3").order() == 16);
    CHECK(spec("affine:8;5").order() == 16);
    CHECK(spec("lin:2,4,GL·Frob,lines").order() == 120);
    CHECK(spec("lin:2,4,GL.Frob,lines").order() == 120);
    CHECK(spec("file:m11.gens").order() == 7920);
    CHECK(spec("wr:(dsum:(cyclic:2,cyclic:2),sym:2)").degree() == 8);

    for (std::string_view text :
         {"sym:5", "dsum:(cyclic:2,wr:(cyclic:2,sym:3))", "cent:(1 2)(3 4)@6", "frob:7,3",
          "gamma:3,2", "affine:12;5;7", "lin:3,4,SL·Frob,lines", "file:m11.gens", "affine:9"}) {
      auto s = parse_group_spec(text);
      CHECK(to_string(s) == text);
      CHECK(to_string(parse_group_spec(to_string(s))) == to_string(s));
    }
    CHECK(to_string(parse_group_spec("wreath:(cyclic:2,cyclic:2)")) == "wr:(cyclic:2,cyclic:2)");
    CHECK(to_string(parse_group_spec("lin:2,4,GL+Frob,points")) == "lin:2,4,GL·Frob,points");

    for (std::string_view bad : {"", "bogus", "sym", "sym:", "sym:x", "sym:5,6", "dsum:(sym:2)",
                                 "dsum:(sym:2,sym:3", "wr:sym:2,sym:3", "lin:2,4,GX,lines",
                                 "lin:2,4,GL,planes", "cent:(1 2)", "frob:7", "gamma:2",
                                 "sym:-1", "file:"})
      CHECK_THROWS_AS(parse_group_spec(bad), ParseError);
    CHECK_THROWS_AS(spec("file:does-not-exist.gens"), Error);
    CHECK_THROWS_AS(spec("cent:(1 9)@6"), ParseError);
  }

  TEST_CASE("transitive join-coherent constructions contain a full cycle")
  {
    std::size_t checked = 0;
    for (std::string_view text :
         {"sym:5", "alt:5", "cyclic:9", "dihedral:5", "dihedral:8", "frob:7,3", "frob:11,5",
          "frob:13,4", "frob:9,2", "gamma:2,3", "gamma:3,2", "gamma:2,4", "gamma:5,2",
          "affine:5", "affine:7", "affine:8;5", "affine:8;3", "affine:12;5;7", "affine:15;2",
          "dprod:(cyclic:2,cyclic:3)", "dprod:(sym:3,cyclic:5)", "dprod:(cyclic:2,cyclic:2)",
          "wr:(cyclic:2,cyclic:3)", "wr:(cyclic:3,cyclic:2)", "wr:(sym:3,cyclic:2)",
          "wr:(cyclic:2,cyclic:2)", "wr:(alt:4,cyclic:2)", "cent:(1 2 3 4)(5 6 7 8)@8",
          "lin:2,2,GL,points", "lin:2,3,GL,lines", "lin:2,4,GL·Frob,lines", "lin:2,5,GL,lines",
          "file:psl2_11.gens", "dsum:(cyclic:3,cyclic:3)"}) {
      auto g = spec(text);
      if (!is_transitive(g) || !is_join_coherent(g))
        continue;
      ++checked;
      CHECK_MESSAGE(pi_set(g).contains(SetPartition::trivial(g.degree())), text);
    }
    CHECK(checked >= 15);
  }
}
