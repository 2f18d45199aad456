#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cohere/constructions.hpp"

namespace cohere {

/// Textual recipe for a group:
///   sym:N  alt:N  cyclic:N  dihedral:N
///   dsum:(S1,S2)  dprod:(S1,S2)  wr:(S1,S2)
///   cent:<cycles>@N     e.g. cent:(1 2)(3 4)@6
///   frob:N,R  gamma:P,A  affine:N  affine:N;M1;M2...
///   lin:D,Q,VARIANT,ACTION   VARIANT in GL SL GL·Frob SL·Frob (also GL.Frob,
///                            GL+Frob), ACTION in points lines hyperplanes
///   file:PATH
struct GroupSpec
{
  std::string family;
  std::vector<unsigned> numbers;
  std::vector<GroupSpec> children;
  /// Cycle text for cent, path for file.
  std::string text;
  LinearVariant variant = LinearVariant::GL;
  LinearAction action = LinearAction::points;
};

GroupSpec parse_group_spec(std::string_view text);

/// Canonical text; parse_group_spec(to_string(s)) gives s back.
std::string to_string(GroupSpec const &spec);

/// Relative file: paths that do not exist are looked up under data_dir.
PermGroup build(GroupSpec const &spec, std::filesystem::path const &data_dir = {});

} // namespace cohere
