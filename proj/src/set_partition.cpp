#include "permcm/set_partition.hpp"

#include <algorithm>
#include <sstream>

#include "permcm/errors.hpp"

namespace permcm {

OrbitPartition::OrbitPartition(std::size_t degree,
                               std::vector<std::vector<Point>> blocks)
    : blocks_(std::move(blocks)), block_of_(degree, degree) {
  for (auto& b : blocks_) {
    if (b.empty()) throw InputError("partition has an empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end());
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    for (Point p : blocks_[k]) {
      if (p >= degree) throw InputError("partition block point out of range");
      if (block_of_[p] != degree) throw InputError("partition blocks overlap");
      block_of_[p] = k;
    }
  }
  if (std::find(block_of_.begin(), block_of_.end(), degree) != block_of_.end())
    throw InputError("partition blocks do not cover [n]");
}

OrbitPartition OrbitPartition::singletons(std::size_t degree) {
  std::vector<std::vector<Point>> blocks(degree);
  for (std::size_t i = 0; i < degree; ++i) blocks[i] = {static_cast<Point>(i)};
  return OrbitPartition(degree, std::move(blocks));
}

OrbitPartition OrbitPartition::single_block(std::size_t degree) {
  std::vector<Point> all(degree);
  for (std::size_t i = 0; i < degree; ++i) all[i] = static_cast<Point>(i);
  return OrbitPartition(degree, {std::move(all)});
}

bool refines(const OrbitPartition& pi, const OrbitPartition& tau) {
  if (pi.degree() != tau.degree())
    throw InputError("cannot compare partitions of different degrees");
  for (const auto& block : pi.blocks()) {
    std::size_t target = tau.block_of(block.front());
    for (Point p : block)
      if (tau.block_of(p) != target) return false;
  }
  return true;
}

OrbitPartition orbit_partition(const Permutation& g) {
  std::vector<std::vector<Point>> blocks;
  std::vector<bool> done(g.degree(), false);
  for (std::size_t start = 0; start < g.degree(); ++start) {
    if (done[start]) continue;
    std::vector<Point> block;
    for (Point p = static_cast<Point>(start); !done[p]; p = g(p)) {
      done[p] = true;
      block.push_back(p);
    }
    blocks.push_back(std::move(block));
  }
  return OrbitPartition(g.degree(), std::move(blocks));
}

std::string to_string(const OrbitPartition& pi) {
  std::ostringstream os;
  for (const auto& block : pi.blocks()) {
    os << '{';
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k) os << ',';
      os << static_cast<unsigned>(block[k]) + 1;
    }
    os << '}';
  }
  return os.str();
}

}  // namespace permcm
