#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permcm {

/// A point of [n], stored 0-based. External formats are 1-based.
using Point = std::uint8_t;

inline constexpr std::size_t kMaxDegree = 255;

/// A bijection of {0, ..., n-1}. Ordering is lexicographic on the image
/// sequence, which is the canonical order used for all tie-breaking.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& g) const noexcept;
};

/// (a * b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) {
  return compose(a, b);
}

Permutation inverse(const Permutation& g);

Permutation power(const Permutation& g, std::uint64_t k);

/// Disjoint cycles of length >= 2, each starting at its least point,
/// sorted by that point. Points are 0-based.
std::vector<std::vector<Point>> cycles(const Permutation& g);

/// Lengths of the nontrivial cycles, ascending. Identity gives {}.
std::vector<std::size_t> cycle_type(const Permutation& g);

/// Least m >= 1 with g^m = id (lcm of the cycle lengths).
std::uint64_t element_order(const Permutation& g);

/// Parses a product of disjoint cycles over the 1-based points 1..degree,
/// e.g. "(1 2 4)(3 6 5)" or "(1,2)". For degree <= 9 a multi-digit token
/// such as "124" is read digit by digit. "()" or blank text is the identity.
/// Throws InputError on out-of-range or repeated points, unbalanced
/// parentheses, or an empty cycle inside a longer expression.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Splits a generator list on commas and newlines that occur outside
/// parentheses: "(1234567),(124)(365)" -> {"(1234567)", "(124)(365)"}.
std::vector<std::string> split_generators(std::string_view text);

/// 1-based cycle notation, "(1 2 4)(3 6 5)"; the identity prints as "()".
std::string to_cycle_string(const Permutation& g);

}  // namespace permcm
