#pragma once

#include <cstdint>
#include <vector>

#include "permcm/perm_group.hpp"
#include "permcm/set_partition.hpp"

namespace permcm {

struct MinimalPartition {
  OrbitPartition partition;
  Permutation witness;  ///< canonically least g in G \ N with orbits = partition
};

/// Minimal elements, under refinement, of { orbit_partition(g) : g in G \ N }.
/// Sorted by partition. Requires N a proper normal subgroup of G
/// (InputError otherwise).
std::vector<MinimalPartition> minimal_outside_partitions(const PermutationGroup& group,
                                                         const PermutationGroup& normal);

/// Elements of G mapping every block of `pi` into itself.
PermutationGroup blockwise_stabilizer(const PermutationGroup& group,
                                      const OrbitPartition& pi);

/// |G_pi^B| / |G_pi^B ∩ N|: the order of the image of the blockwise
/// stabilizer in G/N, which is the inertia group of the partition prime
/// (ideal generated by x_i - x_j for i, j in a common block) of k[x]^N.
std::uint64_t inertia_image_order(const PermutationGroup& group,
                                  const PermutationGroup& normal,
                                  const OrbitPartition& pi);

/// A prime p for which k[x]^G fails to be Cohen-Macaulay in characteristic p,
/// with the element that proves it.
struct BadPrimeCertificate {
  std::uint64_t prime = 0;
  Permutation witness;
  OrbitPartition partition;
  std::uint64_t inertia_order = 0;
};

/// One certificate per prime, from the minimal partitions of G \ N where N is
/// the 2-reflection subgroup. Empty when N = G. Each certificate is checked on
/// construction (witness order a power of p, inertia order exactly p);
/// a failed check throws ConsistencyError.
std::vector<BadPrimeCertificate> certified_bad_primes(const PermutationGroup& group);

/// Same, with N supplied by the caller.
std::vector<BadPrimeCertificate> certified_bad_primes(const PermutationGroup& group,
                                                      const PermutationGroup& normal);

}  // namespace permcm
