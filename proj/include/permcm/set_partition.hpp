#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "permcm/permutation.hpp"

namespace permcm {

/// A set partition of [n] in canonical form: elements sorted within each
/// block, blocks sorted by their least element.
class OrbitPartition {
 public:
  OrbitPartition() = default;

  /// Canonicalizes `blocks`; throws InputError unless they partition [degree].
  OrbitPartition(std::size_t degree, std::vector<std::vector<Point>> blocks);

  static OrbitPartition singletons(std::size_t degree);
  static OrbitPartition single_block(std::size_t degree);

  std::size_t degree() const noexcept { return block_of_.size(); }
  const std::vector<std::vector<Point>>& blocks() const noexcept { return blocks_; }
  std::size_t block_of(Point i) const noexcept { return block_of_[i]; }

  friend bool operator==(const OrbitPartition& a, const OrbitPartition& b) {
    return a.blocks_ == b.blocks_;
  }
  friend std::strong_ordering operator<=>(const OrbitPartition& a,
                                          const OrbitPartition& b) {
    return a.blocks_ <=> b.blocks_;
  }

 private:
  std::vector<std::vector<Point>> blocks_;
  std::vector<std::size_t> block_of_;
};

/// True iff every block of `pi` lies inside a block of `tau`.
bool refines(const OrbitPartition& pi, const OrbitPartition& tau);

/// The partition of [n] into the cycles of g, fixed points as singletons.
OrbitPartition orbit_partition(const Permutation& g);

/// "{1,2,4}{3,5,6}{7}" (1-based).
std::string to_string(const OrbitPartition& pi);

}  // namespace permcm
