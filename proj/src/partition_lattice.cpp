#include "permcm/partition_lattice.hpp"

#include <algorithm>
#include <map>

#include "permcm/errors.hpp"
#include "permcm/numtheory.hpp"
#include "permcm/reflections.hpp"

namespace permcm {

std::vector<MinimalPartition> minimal_outside_partitions(const PermutationGroup& group,
                                                         const PermutationGroup& normal) {
  if (!normal.is_subgroup_of(group))
    throw InputError("N is not a subgroup of G");
  if (normal.order() == group.order())
    throw InputError("N = G: no elements outside N");
  if (!is_normalized_by(normal, group)) throw InputError("N is not normal in G");

  // Elements arrive in canonical order, so the first witness seen for a
  // partition is the least one.
  std::map<OrbitPartition, Permutation> first_witness;
  for (const auto& g : group.elements()) {
    if (normal.contains(g)) continue;
    first_witness.try_emplace(orbit_partition(g), g);
  }

  std::vector<MinimalPartition> out;
  for (const auto& [pi, g] : first_witness) {
    bool minimal = true;
    for (const auto& [tau, h] : first_witness) {
      if (tau != pi && refines(tau, pi)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back({pi, g});
  }
  return out;
}

PermutationGroup blockwise_stabilizer(const PermutationGroup& group,
                                      const OrbitPartition& pi) {
  if (pi.degree() != group.degree())
    throw InputError("partition degree does not match group degree");
  return PermutationGroup::subgroup_where(group, [&](const Permutation& g) {
    for (std::size_t i = 0; i < g.degree(); ++i)
      if (pi.block_of(g(static_cast<Point>(i))) != pi.block_of(static_cast<Point>(i)))
        return false;
    return true;
  });
}

std::uint64_t inertia_image_order(const PermutationGroup& group,
                                  const PermutationGroup& normal,
                                  const OrbitPartition& pi) {
  PermutationGroup stab = blockwise_stabilizer(group, pi);
  std::uint64_t in_normal = 0;
  for (const auto& g : stab.elements())
    if (normal.contains(g)) ++in_normal;
  if (in_normal == 0 || stab.order() % in_normal != 0)
    throw ConsistencyError("stabilizer ∩ N does not divide the stabilizer");
  return stab.order() / in_normal;
}

std::vector<BadPrimeCertificate> certified_bad_primes(const PermutationGroup& group,
                                                      const PermutationGroup& normal) {
  if (normal.order() == group.order()) return {};

  std::map<std::uint64_t, BadPrimeCertificate> by_prime;
  for (auto& [pi, g] : minimal_outside_partitions(group, normal)) {
    std::uint64_t order = element_order(g);
    std::uint64_t p = prime_of_prime_power(order);
    if (p == 0)
      throw ConsistencyError("minimal witness " + to_cycle_string(g) + " has order " +
                             std::to_string(order) + ", not a prime power");
    std::uint64_t inertia = inertia_image_order(group, normal, pi);
    if (inertia != p)
      throw ConsistencyError("inertia image for " + to_string(pi) + " has order " +
                             std::to_string(inertia) + ", expected " +
                             std::to_string(p));
    BadPrimeCertificate cert{p, g, pi, inertia};
    auto it = by_prime.find(p);
    if (it == by_prime.end())
      by_prime.emplace(p, std::move(cert));
    else if (cert.witness < it->second.witness)
      it->second = std::move(cert);
  }

  std::vector<BadPrimeCertificate> out;
  for (auto& [p, cert] : by_prime) out.push_back(std::move(cert));
  return out;
}

std::vector<BadPrimeCertificate> certified_bad_primes(const PermutationGroup& group) {
  return certified_bad_primes(group, two_reflection_subgroup(group));
}

}  // namespace permcm
