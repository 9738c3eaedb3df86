#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "permcm/errors.hpp"
#include "permcm/numtheory.hpp"
#include "permcm/permutation.hpp"
#include "permcm/set_partition.hpp"

using namespace permcm;

namespace {

Permutation random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(i);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

// A random set partition as a restricted growth string.
OrbitPartition random_partition(std::size_t n, std::mt19937& rng) {
  std::vector<std::vector<Point>> blocks;
  for (std::size_t i = 0; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, blocks.size());
    std::size_t b = pick(rng);
    if (b == blocks.size()) blocks.emplace_back();
    blocks[b].push_back(static_cast<Point>(i));
  }
  return OrbitPartition(n, blocks);
}

}  // namespace

TEST(NumTheory, Primes) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(4294967291ULL));
  EXPECT_FALSE(is_prime(4294967297ULL));  // 641 * 6700417
  EXPECT_EQ(prime_divisors(1), std::vector<std::uint64_t>{});
  EXPECT_EQ(prime_divisors(21), (std::vector<std::uint64_t>{3, 7}));
  EXPECT_EQ(prime_divisors(1344), (std::vector<std::uint64_t>{2, 3, 7}));
  EXPECT_EQ(prime_of_prime_power(8), 2u);
  EXPECT_EQ(prime_of_prime_power(49), 7u);
  EXPECT_EQ(prime_of_prime_power(12), 0u);
  EXPECT_EQ(prime_of_prime_power(1), 0u);
  EXPECT_EQ(factorial(7), 5040u);
  EXPECT_EQ(binomial(8, 3), 56u);
}

TEST(Permutation, ComposeIsRightToLeft) {
  Permutation a = parse_cycles("(1 2)", 3);
  Permutation b = parse_cycles("(2 3)", 3);
  // (1 2)(2 3) applies (2 3) first: 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1.
  EXPECT_EQ(to_cycle_string(a * b), "(1 2 3)");
  EXPECT_EQ(to_cycle_string(b * a), "(1 3 2)");
}

TEST(Permutation, CubeOfThreeCycle) {
  Permutation g = parse_cycles("(1 2 3)", 3);
  EXPECT_EQ(to_cycle_string(g * g), "(1 3 2)");
  EXPECT_TRUE(power(g, 3).is_identity());
  EXPECT_EQ(element_order(g), 3u);
}

TEST(Permutation, ParseCompactDigits) {
  Permutation g = parse_cycles("(124)(365)", 7);
  EXPECT_EQ(to_cycle_string(g), "(1 2 4)(3 6 5)");
  EXPECT_EQ(cycle_type(g), (std::vector<std::size_t>{3, 3}));
  EXPECT_EQ(element_order(g), 3u);
  EXPECT_EQ(to_cycle_string(parse_cycles("(1,2) (3, 4)", 4)), "(1 2)(3 4)");
}

TEST(Permutation, ParseIdentity) {
  EXPECT_TRUE(parse_cycles("()", 4).is_identity());
  EXPECT_TRUE(parse_cycles("  ", 4).is_identity());
  EXPECT_EQ(to_cycle_string(Permutation::identity(5)), "()");
}

TEST(Permutation, ParseMultiDigitPoints) {
  Permutation g = parse_cycles("(1 10 12)", 12);
  EXPECT_EQ(g(0), 9);
  EXPECT_EQ(g(9), 11);
  EXPECT_EQ(g(11), 0);
}

TEST(Permutation, ParseErrors) {
  EXPECT_THROW(parse_cycles("(1 2", 3), InputError);
  EXPECT_THROW(parse_cycles("1 2)", 3), InputError);
  EXPECT_THROW(parse_cycles("(1 4)", 3), InputError);
  EXPECT_THROW(parse_cycles("(0 1)", 3), InputError);
  EXPECT_THROW(parse_cycles("(1 2 1)", 3), InputError);
  EXPECT_THROW(parse_cycles("(1 2)(2 3)", 3), InputError);
  EXPECT_THROW(parse_cycles("(1 (2) 3)", 3), InputError);
  EXPECT_THROW(parse_cycles("(1 2)()", 3), InputError);
  EXPECT_THROW(parse_cycles("(1 x)", 3), InputError);
  EXPECT_THROW(Permutation(std::vector<Point>{0, 0}), InputError);
}

TEST(Permutation, SplitGenerators) {
  EXPECT_EQ(split_generators("(1234567),(124)(365)"),
            (std::vector<std::string>{"(1234567)", "(124)(365)"}));
  EXPECT_EQ(split_generators("(1,2),(3 4)\n(1 3)"),
            (std::vector<std::string>{"(1,2)", "(3 4)", "(1 3)"}));
}

TEST(Permutation, RoundTripAndInverseLaws) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = 1 + trial % 12;
    Permutation g = random_permutation(n, rng);
    Permutation h = random_permutation(n, rng);
    EXPECT_EQ(parse_cycles(to_cycle_string(g), n), g);
    EXPECT_TRUE((g * inverse(g)).is_identity());
    EXPECT_EQ(inverse(g * h), inverse(h) * inverse(g));
    EXPECT_TRUE(power(g, element_order(g)).is_identity());
  }
}

TEST(SetPartition, OrbitPartitionOfFrobeniusElement) {
  Permutation g = parse_cycles("(124)(365)", 7);
  EXPECT_EQ(to_string(orbit_partition(g)), "{1,2,4}{3,5,6}{7}");
}

TEST(SetPartition, Canonicalization) {
  OrbitPartition p(4, {{3, 1}, {2}, {0}});
  EXPECT_EQ(to_string(p), "{1}{2,4}{3}");
  EXPECT_THROW(OrbitPartition(3, {{0, 1}}), InputError);
  EXPECT_THROW(OrbitPartition(3, {{0, 1}, {1, 2}}), InputError);
}

TEST(SetPartition, RefinesExtremes) {
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_TRUE(refines(OrbitPartition::singletons(n), OrbitPartition::single_block(n)));
    EXPECT_EQ(refines(OrbitPartition::single_block(n), OrbitPartition::singletons(n)), n == 1);
  }
  EXPECT_THROW(refines(OrbitPartition::singletons(3), OrbitPartition::singletons(4)),
               InputError);
}

TEST(SetPartition, RefinementIsPartialOrder) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t n = 1 + trial % 8;
    OrbitPartition a = random_partition(n, rng);
    OrbitPartition b = random_partition(n, rng);
    OrbitPartition c = random_partition(n, rng);
    EXPECT_TRUE(refines(a, a));
    if (refines(a, b) && refines(b, a)) EXPECT_EQ(a, b);
    if (refines(a, b) && refines(b, c)) EXPECT_TRUE(refines(a, c));
    // Independent check on pairs of points.
    bool same_block_everywhere = true;
    for (Point i = 0; i < n; ++i)
      for (Point j = 0; j < n; ++j)
        if (a.block_of(i) == a.block_of(j) && b.block_of(i) != b.block_of(j))
          same_block_everywhere = false;
    EXPECT_EQ(refines(a, b), same_block_everywhere);

    // Merging two blocks gives a strictly coarser partition.
    auto blocks = a.blocks();
    if (blocks.size() >= 2) {
      std::uniform_int_distribution<std::size_t> pick(1, blocks.size() - 1);
      std::size_t k = pick(rng);
      blocks[0].insert(blocks[0].end(), blocks[k].begin(), blocks[k].end());
      blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(k));
      OrbitPartition coarse(n, blocks);
      EXPECT_TRUE(refines(a, coarse));
      EXPECT_FALSE(refines(coarse, a));
      if (refines(coarse, b)) EXPECT_TRUE(refines(a, b));
    }
  }
}
