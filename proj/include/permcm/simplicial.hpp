#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "permcm/linalg_ff.hpp"

namespace permcm {

using Vertex = std::uint32_t;
/// Strictly increasing vertex list. The empty simplex is the (-1)-face.
using Simplex = std::vector<Vertex>;

/// A finite abstract simplicial complex, always containing the empty face.
/// Faces of each dimension are kept in lexicographic order; simplices are
/// oriented by increasing vertex id.
class SimplicialComplex {
 public:
  /// The complex {∅}.
  SimplicialComplex();

  /// Downward closure of `generators`. Each generator is sorted and
  /// deduplicated first.
  static SimplicialComplex from_facets(std::vector<Simplex> generators);

  /// -1 when the only face is ∅.
  int dimension() const noexcept { return static_cast<int>(faces_.size()) - 2; }

  /// Number of d-faces, d >= -1.
  std::size_t face_count(int d) const;
  const Simplex& face(int d, std::size_t i) const { return faces_.at(d + 1).at(i); }
  std::optional<std::size_t> index_of(std::span<const Vertex> simplex) const;
  bool contains(std::span<const Vertex> simplex) const { return index_of(simplex).has_value(); }

  /// Maximal faces, in (dimension, lexicographic) order.
  const std::vector<Simplex>& facets() const noexcept { return facets_; }
  std::size_t total_faces() const noexcept;

  /// { tau : tau ∩ sigma = ∅, tau ∪ sigma in K }. Throws InputError when
  /// sigma is not a face.
  SimplicialComplex link(std::span<const Vertex> sigma) const;

  /// ∂_d : C_d -> C_{d-1} over F_p; rows are (d-1)-faces, columns d-faces.
  /// ∂_0 is the augmentation onto the single (-1)-face. Signs (-1)^position.
  PrimeFieldMatrix boundary_matrix(int d, std::uint64_t p) const;

 private:
  std::vector<std::vector<Simplex>> faces_;  // faces_[d + 1]
  std::vector<Simplex> facets_;
  std::vector<std::vector<std::uint32_t>> vertex_facets_;  // facet ids per vertex
};

/// Reduced Betti numbers over F_p; entry k is β̃_{k-1}, for k-1 in
/// [-1, dim]. The complex {∅} has β̃_{-1} = 1. Throws InputError if p is
/// not prime.
std::vector<std::size_t> reduced_betti(const SimplicialComplex& complex, std::uint64_t p);

/// -1 + Σ_d (-1)^d f_d.
long long reduced_euler_characteristic(const SimplicialComplex& complex);

struct LinkFailure {
  Simplex face;
  int degree = 0;             ///< i with β̃_i(link) != 0
  std::size_t betti = 0;
  int link_dimension = 0;
};

/// Outcome of checking β̃_i(lk σ; F_p) = 0 for every face σ (∅ included) and
/// every i < dim lk σ.
struct LinkVanishingResult {
  bool pass = true;
  std::optional<LinkFailure> failure;  ///< first failing face in face order
  std::size_t faces_checked = 0;
};

LinkVanishingResult link_vanishing_test(const SimplicialComplex& complex, std::uint64_t p);

}  // namespace permcm
