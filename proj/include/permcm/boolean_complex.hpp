#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "permcm/linalg_ff.hpp"
#include "permcm/simplicial.hpp"

namespace permcm {

/// A regular cell complex whose closed cells are simplices, with the
/// vertices of every cell carrying distinct labels (balanced). A d-cell is
/// described by its d+1 codimension-1 faces listed by label position:
/// entry j is the face opposite the j-th vertex. Two cells may share all
/// of their vertices.
class BooleanComplex {
 public:
  using FaceLists = std::vector<std::vector<std::vector<std::uint32_t>>>;

  BooleanComplex() = default;

  /// faces[d][c] is the face list of d-cell c (empty for vertices).
  /// Throws InputError if a list has the wrong length, an index is out of
  /// range, or the face identities ∂_i ∂_j = ∂_{j-1} ∂_i (i < j) fail.
  explicit BooleanComplex(FaceLists faces);

  int dimension() const noexcept { return static_cast<int>(faces_.size()) - 1; }
  std::size_t cell_count(int d) const;
  std::vector<std::size_t> cell_counts() const;
  std::span<const std::uint32_t> faces(int d, std::size_t cell) const {
    return faces_.at(static_cast<std::size_t>(d)).at(cell);
  }

  /// Cells numbered globally by (dimension, index within dimension).
  std::size_t global_id(int d, std::size_t cell) const { return offset_.at(static_cast<std::size_t>(d)) + cell; }
  std::pair<int, std::size_t> cell_of(std::size_t global_id) const;
  std::size_t total_cells() const noexcept { return offset_.empty() ? 0 : offset_.back(); }

  /// Cells that are not a face of any other cell.
  std::vector<std::pair<int, std::size_t>> maximal_cells() const;

 private:
  FaceLists faces_;
  std::vector<std::size_t> offset_;  // offset_[d] = first global id of dim d; back() = total
};

/// The order complex of the face poset (empty face excluded): one vertex
/// per cell, numbered by global id, one simplex per chain of cells under
/// the face relation. Homeomorphic to the complex.
SimplicialComplex barycentric_subdivision(const BooleanComplex& complex);

/// Cellular ∂_d with signs (-1)^j on the face opposite vertex j; ∂_0 is the
/// augmentation.
PrimeFieldMatrix cellular_boundary(const BooleanComplex& complex, int d, std::uint64_t p);

/// Reduced Betti numbers from the cellular chain complex, indexed as in
/// reduced_betti (entry k is β̃_{k-1}).
std::vector<std::size_t> cellular_reduced_betti(const BooleanComplex& complex, std::uint64_t p);

}  // namespace permcm
