#pragma once

#include <cstdint>
#include <vector>

namespace permcm {

bool is_prime(std::uint64_t n);

/// Distinct prime divisors in increasing order (trial division).
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Returns p if n = p^k for a prime p and k >= 1, otherwise 0.
std::uint64_t prime_of_prime_power(std::uint64_t n);

std::uint64_t factorial(unsigned n);

std::uint64_t binomial(unsigned n, unsigned k);

}  // namespace permcm
