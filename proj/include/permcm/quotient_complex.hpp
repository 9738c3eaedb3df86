#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permcm/boolean_complex.hpp"
#include "permcm/perm_group.hpp"
#include "permcm/simplicial.hpp"

namespace permcm {

/// Hard ceiling: chains are packed one byte per subset.
inline constexpr std::size_t kMaxComplexDegree = 8;

/// A strictly increasing chain S_0 ⊂ S_1 ⊂ ... of nonempty subsets of [n],
/// each stored as a bitmask (bit i = point i+1). Length k is a (k-1)-cell.
struct SubsetChain {
  std::vector<std::uint8_t> subsets;
  friend bool operator==(const SubsetChain&, const SubsetChain&) = default;
};

/// "{1}<{1,2}<{1,2,3}".
std::string to_string(const SubsetChain& chain);

/// The order complex Δ of the nonempty subsets of [n] modulo a permutation
/// group G: one cell per G-orbit of chains, represented by the least chain
/// in the orbit (bytewise lexicographic). Face j of a cell deletes the j-th
/// subset of its representative and canonicalizes; the subset sizes act as
/// vertex labels, so the quotient is a balanced boolean complex.
class QuotientComplex {
 public:
  std::size_t degree() const noexcept { return degree_; }
  const PermutationGroup& group() const noexcept { return group_; }
  int dimension() const noexcept { return cells_.dimension(); }

  std::size_t cell_count(int d) const { return cells_.cell_count(d); }
  std::vector<std::size_t> cell_counts() const { return cells_.cell_counts(); }
  SubsetChain representative(int d, std::size_t cell) const;
  const BooleanComplex& cells() const noexcept { return cells_; }

  friend QuotientComplex build_delta(std::size_t n, std::size_t max_degree);
  friend QuotientComplex quotient_by_group(const QuotientComplex& delta,
                                           const PermutationGroup& group);

 private:
  std::size_t degree_ = 0;
  PermutationGroup group_;
  std::vector<std::vector<std::uint64_t>> keys_;  // packed representatives per dimension
  BooleanComplex cells_;
};

inline constexpr std::size_t kDefaultComplexDegreeLimit = 8;

/// Δ itself (trivial group). Cells of dimension d are the chains of length
/// d+1; there are n! facets. Throws InputError when n exceeds `max_degree`
/// (itself capped at kMaxComplexDegree).
QuotientComplex build_delta(std::size_t n,
                            std::size_t max_degree = kDefaultComplexDegreeLimit);

/// Δ/G from Δ (which must carry the trivial group). Facet count is n!/|G|.
QuotientComplex quotient_by_group(const QuotientComplex& delta, const PermutationGroup& group);

/// Barycentric subdivision of the quotient's cell structure.
SimplicialComplex barycentric_subdivision(const QuotientComplex& qc);

struct ReisnerReport {
  bool pass = true;
  std::uint64_t prime = 0;
  std::size_t faces_checked = 0;
  /// Present when pass is false. `face` lists the cells of Δ/G forming the
  /// failing flag (lowest dimension first); empty means the whole complex.
  struct Failure {
    std::vector<std::pair<int, SubsetChain>> face;
    int degree = 0;
    std::size_t betti = 0;
    int link_dimension = 0;
  };
  std::optional<Failure> failure;
};

/// Checks β̃_i(lk σ; F_p) = 0 for i < dim lk σ over every face σ of the
/// barycentric subdivision (∅ included). Since the condition only depends
/// on the underlying space, the verdict is whether the Stanley-Reisner ring
/// of Δ/G, i.e. k[B_n \ {∅}]^G, is Cohen-Macaulay in characteristic p.
ReisnerReport reisner_cm_test(const QuotientComplex& qc, std::uint64_t p);

}  // namespace permcm
