#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permcm/perm_group.hpp"
#include "permcm/permutation.hpp"

namespace permcm {

/// Identity, transposition, double transposition, or 3-cycle: the
/// permutations whose fixed subspace on k^n has codimension at most 2.
bool is_two_reflection(const Permutation& g);

/// The subgroup N generated by the nontrivial 2-reflections in G. Its
/// generators are 2-reflections chosen greedily in canonical order; the
/// identity is never listed. N is always normal in G.
PermutationGroup two_reflection_subgroup(const PermutationGroup& group);

struct ReflectionReport {
  PermutationGroup n_subgroup;
  std::uint64_t group_order = 0;
  std::uint64_t index = 0;                      ///< [G:N]
  bool cm_all_fields = false;                   ///< N = G
  std::vector<std::uint64_t> candidate_primes;  ///< prime divisors of [G:N]
};

/// Decides whether k[x]^G is Cohen-Macaulay over every field: exactly when
/// G is generated by its 2-reflections.
ReflectionReport analyze(const PermutationGroup& group);

enum class HuffmanTag {
  FullSymmetric,
  WreathS2Sm,
  Alternating,
  Dihedral5,
  A5onSix,
  GL32onSeven,
  AGL32onEight,
  AlternatingWreath,
};

struct HuffmanClass {
  HuffmanTag tag;
  /// m for the two wreath-product families, n otherwise.
  unsigned parameter;

  friend bool operator==(const HuffmanClass&, const HuffmanClass&) = default;
};

std::string to_string(HuffmanTag tag);

/// Identifies a transitive group generated by 2-reflections:
///  - transpositions present and generating a transitive group: S_n;
///  - transpositions present but intransitive: S_2 wr S_m, n = 2m;
///  - 3-cycle present, no transposition: A_n;
///  - generated by double transpositions: looked up by (n, |G|) among
///    D_5 (5,10), A_5 (6,60), GL(3,2) (7,168), AGL(3,2) (8,1344), else the
///    even part of S_2 wr S_m with n = 2m and |G| = 2^(m-1) m!.
/// The trivial group on one point counts as S_1.
/// Throws InputError for intransitive groups or groups not generated by
/// 2-reflections, ConsistencyError if no case matches.
HuffmanClass classify_transitive_reflection_group(const PermutationGroup& group);

}  // namespace permcm
