#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permcm/perm_group.hpp"

namespace permcm {

/// Degree-d monomials in up to 8 variables, as exponent vectors.
inline constexpr std::size_t kMaxOracleDegree = 8;
using Exponents = std::array<std::uint8_t, kMaxOracleDegree>;

/// Orbit-sum basis of k[x]^G in each degree up to `max_degree`. The
/// permutation action permutes monomials, so orbit sums are a basis in every
/// characteristic. basis[d] lists the orbits of degree d by largest monomial
/// (lexicographic on exponents), descending; each orbit lists its monomials
/// in ascending order.
using GradedInvariantBasis = std::vector<std::vector<std::vector<Exponents>>>;

GradedInvariantBasis graded_invariant_basis(const PermutationGroup& group,
                                            unsigned max_degree);

/// Number of G-orbits on degree-d monomials: dim_k (k[x]^G)_d for any k.
std::uint64_t invariant_dimension(const PermutationGroup& group, unsigned d);

enum class Verdict { CM, NotCM, Inconclusive };
std::string to_string(Verdict v);

struct OracleVerdict {
  std::uint64_t prime = 0;
  std::uint64_t rank = 0;  ///< n!/|G|
  /// dim (k[x]^G / (e_1..e_n))_d for d = 0.. (stops early on NotCM).
  std::vector<std::uint64_t> coinvariant_dims;
  Verdict verdict = Verdict::Inconclusive;
  unsigned truncation = 0;
  /// p does not divide |G|; answered without computation.
  bool nonmodular = false;
  double runtime_ms = 0;

  std::uint64_t total() const;
};

struct OracleOptions {
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// max(n, n(n-1)/2). Orbit sums of monomials up to this degree generate
/// k[x]^G over the symmetric polynomials (Goebel), so the coinvariant
/// dimensions vanish beyond it.
unsigned generation_degree_bound(std::size_t n);

/// n(n-1)/2 + n.
unsigned default_truncation(std::size_t n);

/// Graded dimensions of k[x]^G modulo the ideal of k[x]^G generated by the
/// elementary symmetric polynomials, over F_p, degree by degree up to D.
///  - NotCM as soon as the running total exceeds n!/|G| (graded Nakayama:
///    a free module of rank n!/|G| needs exactly that many generators);
///  - CM when the total equals n!/|G|, the last n degrees are all zero and
///    D reaches generation_degree_bound(n);
///  - Inconclusive otherwise.
/// A total below n!/|G| once D reaches the bound throws ConsistencyError.
/// Throws InputError if p is not prime or D < 1, Timeout past the deadline.
OracleVerdict coinvariant_dimensions(const PermutationGroup& group, std::uint64_t p,
                                     unsigned truncation, const OracleOptions& options = {});

/// CM immediately when p does not divide |G| (nonmodular case); otherwise
/// coinvariant_dimensions with the default truncation.
OracleVerdict cm_verdict(const PermutationGroup& group, std::uint64_t p,
                         const OracleOptions& options = {});

}  // namespace permcm
