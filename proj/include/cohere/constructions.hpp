#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cohere/perm_group.hpp"

namespace cohere {

enum class NamedFamily { sym, alt, cyclic, dihedral };

/// sym: S_n natural; alt: A_n; cyclic: C_n by translation on Z_n;
/// dihedral: <n-cycle, x -> -x> on Z_n.
PermGroup build_named(NamedFamily family, std::size_t n);

/// G on {0..|X|-1} and H shifted onto {|X|..|X|+|Y|-1}.
PermGroup direct_sum_action(PermGroup const &g, PermGroup const &h);

/// (x, y)(g, h) = (xg, yh) with (x, y) encoded as y|X| + x.
PermGroup product_action(PermGroup const &g, PermGroup const &h);

/// Imprimitive wreath product G wr H on X x Y, (x, y) encoded as y|X| + x so
/// block B_y is {y|X|, .., y|X| + |X| - 1}. H permutes the blocks.
PermGroup wreath_imprimitive(PermGroup const &g, PermGroup const &h);

/// Centralizer of g in Sym(n): for each cycle length k, C_k wr S_(n_k).
PermGroup centralizer_in_sym(Permutation const &g);

/// <x -> x+1, x -> dx> on Z_n with d the least residue of multiplicative
/// order r modulo every prime power dividing n.
PermGroup frobenius_cyclic(unsigned n, unsigned r);
unsigned frobenius_multiplier(unsigned n, unsigned r);

/// <x -> x+1, x -> (p^(a-1)+1)x> on Z/p^a.
PermGroup gamma_group(unsigned p, unsigned a);

/// Orbit partition of x -> r^j x + i on Z/p^a (r = p^(a-1)+1), predicted
/// from the valuation of i rather than by iterating the map.
SetPartition gamma_orbit_structure(unsigned p, unsigned a, unsigned j, unsigned i);

/// The affine map x -> r^j x + i on Z/p^a.
Permutation gamma_element(unsigned p, unsigned a, unsigned j, unsigned i);

/// Z_n x| <multipliers> on Z_n; with no multipliers, the full affine group.
PermGroup affine_group(unsigned n, std::vector<unsigned> const &multipliers);

enum class LinearVariant { GL, SL, GL_frob, SL_frob };
enum class LinearAction { points, lines, hyperplanes };

/// A group between SL_d(q) and GL_d(q), optionally extended by the Frobenius
/// map, on nonzero vectors, projective points or hyperplanes. Vectors are
/// rows acted on by v -> vA; hyperplanes are indexed by the projective point
/// of their normal vector.
PermGroup linear_group_action(unsigned d, unsigned q, LinearVariant variant, LinearAction action);

/// Expected order of the permutation group built above.
Order linear_group_order(unsigned d, unsigned q, LinearVariant variant, LinearAction action);

/// Generator file: `degree n` then one permutation per line in cycle
/// notation; `#` starts a comment.
PermGroup parse_generators(std::string_view text, std::string const &source = "<input>");
PermGroup load_generators(std::filesystem::path const &path);
std::string format_generators(PermGroup const &group);

} // namespace cohere
