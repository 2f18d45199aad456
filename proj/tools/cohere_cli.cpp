#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cohere/census.hpp"
#include "cohere/coherence.hpp"
#include "cohere/constructive.hpp"
#include "cohere/error.hpp"
#include "cohere/group_spec.hpp"
#include "cohere/verify.hpp"

namespace {

using namespace cohere;
using nlohmann::ordered_json;

struct Globals
{
  std::uint64_t cap = EnumerationLimits{}.element_cap;
  unsigned workers = 1;
  bool no_timing = false;
  std::string data_dir = COHERE_DATA_DIR;

  EnumerationLimits limits() const { return {cap, workers}; }
};

PermGroup build_spec(std::string const &text, Globals const &g)
{
  return build(parse_group_spec(text), g.data_dir);
}

std::string canonical(std::string const &text) { return to_string(parse_group_spec(text)); }

ordered_json order_json(Order const &o)
{
  if (o <= std::numeric_limits<std::uint64_t>::max())
    return o.convert_to<std::uint64_t>();
  return o.str();
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Orbit partitions and coherence of finite permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--cap", g.cap, "Largest group order that may be enumerated")
    ->capture_default_str();
  app.add_option("--workers", g.workers, "Worker threads for enumeration and pair checks")
    ->check(CLI::Range(1u, 256u))
    ->capture_default_str();
  app.add_flag("--no-timing", g.no_timing, "Write ms_elapsed as null for reproducible output");
  app.add_option("--data-dir", g.data_dir, "Directory searched for relative file: specs")
    ->capture_default_str();

  std::string spec_text;
  bool want_join = false, want_meet = false, want_chain = false;
  auto *check = app.add_subcommand("check", "Decide join/meet coherence and the chain property");
  check->add_option("spec", spec_text, "Group spec")->required();
  check->add_flag("--join", want_join, "Check join-coherence");
  check->add_flag("--meet", want_meet, "Check meet-coherence");
  check->add_flag("--chain", want_chain, "Check whether pi(G) is a chain");

  auto *pi = app.add_subcommand("pi", "List the orbit partitions of all elements");
  pi->add_option("spec", spec_text, "Group spec")->required();

  auto *orbits = app.add_subcommand("orbits", "Order, orbits and transitivity of a group");
  orbits->add_option("spec", spec_text, "Group spec")->required();

  std::size_t census_degree = 0;
  auto *census = app.add_subcommand("census", "Verdicts for every subgroup of S_n, n <= 6");
  census->add_option("n", census_degree, "Degree")->required()->check(CLI::Range(1, 6));

  std::string cycles, partition_text;
  std::size_t degree = 0;
  auto *wcent = app.add_subcommand("witness-cent",
                                   "Element of the centralizer of g with a given orbit partition");
  wcent->add_option("g", cycles, "Permutation in cycle notation")->required();
  wcent->add_option("partition", partition_text, "Target partition, e.g. {1,3|2,4}")->required();
  wcent->add_option("-n,--degree", degree, "Degree")->required();

  std::string base_spec, top_spec;
  auto *wwr = app.add_subcommand("witness-wreath",
                                 "Element of G wr H with a given orbit partition on X x Y");
  wwr->add_option("G", base_spec, "Spec of G acting on X")->required();
  wwr->add_option("H", top_spec, "Spec of H acting on Y")->required();
  wwr->add_option("partition", partition_text, "Target partition; (x,y) is point y|X|+x+1")
    ->required();

  auto *construct = app.add_subcommand("construct", "Write a generator file for a group spec");
  construct->add_option("spec", spec_text, "Group spec")->required();

  bool slow = false;
  std::vector<int> only;
  auto *verify = app.add_subcommand("verify-paper", "Run the reproduction claims");
  verify->add_flag("--slow", slow, "Include the slow claims (large groups)");
  verify->add_option("--claim", only, "Run only these claims")->check(CLI::Range(1, claim_count));

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (check->parsed()) {
      if (!want_join && !want_meet && !want_chain)
        want_join = want_meet = true;
      PermGroup group = build_spec(spec_text, g);
      CoherenceReport r = check_coherence(group, canonical(spec_text),
                                          {want_join, want_meet, want_chain, g.limits()});
      std::cout << to_json(r, !g.no_timing) << "\n";
    } else if (pi->parsed()) {
      PermGroup group = build_spec(spec_text, g);
      PiSet set = pi_set(group, g.limits());
      ordered_json parts = ordered_json::array();
      for (auto const &p : set.partitions())
        parts.push_back(to_string(p));
      ordered_json j;
      j["group"] = canonical(spec_text);
      j["degree"] = group.degree();
      j["order"] = order_json(group.order());
      j["pi_size"] = set.size();
      j["partitions"] = parts;
      std::cout << j.dump() << "\n";
    } else if (orbits->parsed()) {
      PermGroup group = build_spec(spec_text, g);
      ordered_json j;
      j["group"] = canonical(spec_text);
      j["degree"] = group.degree();
      j["order"] = order_json(group.order());
      j["orbits"] = to_string(orbit_partition_of_group(group));
      j["transitive"] = is_transitive(group);
      std::cout << j.dump() << "\n";
    } else if (census->parsed()) {
      for (auto const &line : census_json_lines(run_census(census_degree, g.limits())))
        std::cout << line << "\n";
    } else if (wcent->parsed()) {
      Permutation perm = parse_cycles(cycles, degree);
      SetPartition target = parse_partition(partition_text, degree);
      std::cout << to_cycle_string(build_centralizer_element(target, perm)) << "\n";
    } else if (wwr->parsed()) {
      WreathContext ctx(build_spec(base_spec, g), build_spec(top_spec, g), g.cap);
      SetPartition target = parse_partition(partition_text, ctx.degree());
      std::cout << to_cycle_string(build_wreath_element(target, ctx)) << "\n";
    } else if (construct->parsed()) {
      std::cout << "# " << canonical(spec_text) << "\n" << format_generators(build_spec(spec_text, g));
    } else if (verify->parsed()) {
      VerifyOptions opts;
      opts.slow = slow;
      opts.limits = g.limits();
      opts.data_dir = g.data_dir;
      bool all = true;
      auto report = [&](ClaimResult const &r) {
        all = all && (r.passed || r.skipped);
        std::cout << format_claim(r) << std::endl;
      };
      if (only.empty()) {
        run_verify(opts, report);
      } else {
        for (int id : only)
          report(run_claim(id, opts));
      }
      return all ? 0 : 1;
    }
  } catch (CapExceeded const &e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
