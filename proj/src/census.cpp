#include "cohere/census.hpp"

#include "json.hpp"

#include "cohere/coherence.hpp"
#include "cohere/constructions.hpp"
#include "cohere/error.hpp"
#include "cohere/subgroups.hpp"

namespace cohere {

CensusResult run_census(std::size_t degree, EnumerationLimits const &limits)
{
  if (degree < 1 || degree > 6)
    throw Error("census degree must lie in 1..6");
  CensusResult out;
  out.degree = degree;
  std::size_t index = 0;
  for (auto &g : subgroups(build_named(NamedFamily::sym, degree))) {
    PiSet pi = pi_set(g, limits);
    CensusEntry e{index++, std::move(g)};
    e.transitive = is_transitive(e.group);
    e.join_coherent = check_closure(pi, LatticeOp::join, limits.workers).closed;
    e.meet_coherent = check_closure(pi, LatticeOp::meet, limits.workers).closed;
    e.is_chain = is_chain(pi.partitions());
    out.entries.push_back(std::move(e));
  }
  return out;
}

std::vector<std::string> census_json_lines(CensusResult const &census)
{
  using nlohmann::ordered_json;
  std::vector<std::string> lines;
  std::size_t joins = 0, meets = 0, chains = 0, transitive = 0;
  ordered_json transitive_join = ordered_json::array();
  for (auto const &e : census.entries) {
    ordered_json gens = ordered_json::array();
    for (auto const &g : e.group.generators())
      gens.push_back(to_cycle_string(g));
    ordered_json j;
    j["index"] = e.index;
    j["order"] = e.group.order().convert_to<std::uint64_t>();
    j["degree"] = e.group.degree();
    j["transitive"] = e.transitive;
    j["generators"] = gens;
    j["join_coherent"] = e.join_coherent;
    j["meet_coherent"] = e.meet_coherent;
    j["is_chain"] = e.is_chain;
    lines.push_back(j.dump());

    joins += e.join_coherent;
    meets += e.meet_coherent;
    chains += e.is_chain;
    transitive += e.transitive;
    if (e.transitive && e.join_coherent)
      transitive_join.push_back({{"index", e.index},
                                 {"order", e.group.order().convert_to<std::uint64_t>()}});
  }
  ordered_json summary;
  summary["degree"] = census.degree;
  summary["subgroups"] = census.entries.size();
  summary["transitive"] = transitive;
  summary["join_coherent"] = joins;
  summary["meet_coherent"] = meets;
  summary["chains"] = chains;
  summary["transitive_join_coherent"] = transitive_join;
  lines.push_back(ordered_json{{"summary", summary}}.dump());
  return lines;
}

} // namespace cohere
