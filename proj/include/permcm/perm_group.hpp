#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "permcm/permutation.hpp"

namespace permcm {

inline constexpr std::size_t kDefaultGenerationCap = 200'000;

/// Closure of `generators` under composition, identity included, sorted
/// lexicographically by image sequence. Throws CapExceeded when more than
/// `cap` elements appear. An empty list yields the trivial group.
std::vector<Permutation> generate(std::size_t degree,
                                  std::span<const Permutation> generators,
                                  std::size_t cap = kDefaultGenerationCap);

/// A finite permutation group with its elements materialized.
class PermutationGroup {
 public:
  PermutationGroup() = default;

  /// Generates the group; generators must all have the given degree.
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                   std::size_t cap = kDefaultGenerationCap);

  /// The subgroup of `elements` (already closed, containing the identity),
  /// with a small generating set picked greedily in canonical order.
  static PermutationGroup from_closed_set(std::size_t degree,
                                          std::vector<Permutation> elements);

  /// Elements of `group` satisfying `keep`; the predicate must cut out a
  /// subgroup.
  static PermutationGroup subgroup_where(
      const PermutationGroup& group,
      const std::function<bool(const Permutation&)>& keep);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  /// Sorted in canonical (lexicographic) order.
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  std::uint64_t order() const noexcept { return elements_.size(); }

  bool contains(const Permutation& g) const;
  bool is_subgroup_of(const PermutationGroup& other) const;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

/// Orbit of point 1 under G is all of [n].
bool is_transitive(const PermutationGroup& group);

/// True iff g N g^-1 = N for every generator g of `group`.
bool is_normalized_by(const PermutationGroup& subgroup, const PermutationGroup& group);

}  // namespace permcm
