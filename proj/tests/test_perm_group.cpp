#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "permcm/catalog.hpp"
#include "permcm/errors.hpp"
#include "permcm/numtheory.hpp"
#include "permcm/perm_group.hpp"
#include "permcm/reflections.hpp"

using namespace permcm;

namespace {

// Naive closure: multiply every pair until nothing new appears.
std::set<Permutation> brute_closure(std::size_t n, const std::vector<Permutation>& gens) {
  std::set<Permutation> all{Permutation::identity(n)};
  all.insert(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Permutation> current(all.begin(), all.end());
    for (const auto& a : current)
      for (const auto& b : current)
        if (all.insert(a * b).second) grew = true;
  }
  return all;
}

PermutationGroup group_of(const std::string& name) {
  const CatalogEntry* e = find_catalog_entry(name);
  if (e == nullptr) throw std::runtime_error("missing fixture " + name);
  return make_group(*e);
}

}  // namespace

TEST(PermGroup, GenerationMatchesBruteForce) {
  for (const auto& entry : catalog()) {
    if (entry.degree > 5) continue;
    PermutationGroup g = make_group(entry);
    auto brute = brute_closure(entry.degree, g.generators());
    std::vector<Permutation> expected(brute.begin(), brute.end());
    EXPECT_EQ(g.elements(), expected) << entry.name;
  }
}

TEST(PermGroup, CatalogueOrders) {
  std::map<std::string, std::uint64_t> orders{
      {"S2", 2},      {"S5", 120},    {"S7", 5040},  {"A3", 3},     {"A7", 2520},
      {"S2wrS1", 2},  {"S2wrS2", 8},  {"S2wrS3", 48}, {"DiagS1", 1}, {"DiagS2", 2},
      {"DiagS3", 6},  {"D5", 10},     {"D7", 14},    {"Frob21", 21}, {"C4", 4},
      {"C2", 2},      {"C3", 3},      {"C5", 5},     {"C6", 6},     {"C2xC2", 4}};
  for (const auto& [name, order] : orders) EXPECT_EQ(group_of(name).order(), order) << name;
}

TEST(PermGroup, TrivialGroupFromEmptyGenerators) {
  PermutationGroup g(4, {});
  EXPECT_EQ(g.order(), 1u);
  EXPECT_TRUE(g.contains(Permutation::identity(4)));
}

TEST(PermGroup, CapExceeded) {
  std::vector<Permutation> gens{parse_cycles("(1 2)", 7), parse_cycles("(1 2 3 4 5 6 7)", 7)};
  EXPECT_THROW(PermutationGroup(7, gens, 1000), CapExceeded);
  EXPECT_THROW(PermutationGroup(7, gens, 1000), InputError);
}

TEST(PermGroup, DegreeMismatch) {
  EXPECT_THROW(PermutationGroup(4, {parse_cycles("(1 2)", 3)}), InputError);
}

TEST(PermGroup, SubgroupWhere) {
  PermutationGroup s4 = group_of("S4");
  PermutationGroup even = PermutationGroup::subgroup_where(s4, [](const Permutation& g) {
    std::size_t transpositions = 0;
    for (auto len : cycle_type(g)) transpositions += len - 1;
    return transpositions % 2 == 0;
  });
  EXPECT_EQ(even.order(), 12u);
  EXPECT_EQ(even.elements(), group_of("A4").elements());
  EXPECT_TRUE(even.is_subgroup_of(s4));
  EXPECT_TRUE(is_normalized_by(even, s4));
  EXPECT_FALSE(is_normalized_by(PermutationGroup(4, {parse_cycles("(1 2)", 4)}), s4));
}

TEST(PermGroup, Transitivity) {
  EXPECT_TRUE(is_transitive(group_of("Frob21")));
  EXPECT_TRUE(is_transitive(group_of("C2xC2")));
  EXPECT_FALSE(is_transitive(group_of("DiagS3")));
  EXPECT_FALSE(is_transitive(PermutationGroup(3, {parse_cycles("(1 2)", 3)})));
}

TEST(Reflections, TwoReflectionsByCycleType) {
  EXPECT_TRUE(is_two_reflection(Permutation::identity(5)));
  EXPECT_TRUE(is_two_reflection(parse_cycles("(1 2)", 5)));
  EXPECT_TRUE(is_two_reflection(parse_cycles("(1 2)(3 4)", 5)));
  EXPECT_TRUE(is_two_reflection(parse_cycles("(1 2 3)", 5)));
  EXPECT_FALSE(is_two_reflection(parse_cycles("(1 2 3 4)", 5)));
  EXPECT_FALSE(is_two_reflection(parse_cycles("(1 2)(3 4 5)", 5)));
  EXPECT_FALSE(is_two_reflection(parse_cycles("(1 2)(3 4)(5 6)", 6)));
  // Codimension of the fixed space is n minus the number of cycles.
  PermutationGroup s6 = group_of("S6");
  for (const auto& g : s6.elements()) {
    std::size_t cycles_with_fixed = g.degree();
    for (auto len : cycle_type(g)) cycles_with_fixed -= len - 1;
    EXPECT_EQ(is_two_reflection(g), g.degree() - cycles_with_fixed <= 2);
  }
}

TEST(Reflections, SubgroupMatchesBruteForce) {
  for (const auto& entry : catalog()) {
    if (entry.degree > 6) continue;
    PermutationGroup g = make_group(entry);
    std::vector<Permutation> refl;
    for (const auto& x : g.elements())
      if (is_two_reflection(x)) refl.push_back(x);
    auto brute = brute_closure(entry.degree, refl);
    PermutationGroup n = two_reflection_subgroup(g);
    EXPECT_EQ(n.elements(), std::vector<Permutation>(brute.begin(), brute.end())) << entry.name;
    for (const auto& gen : n.generators()) {
      EXPECT_TRUE(is_two_reflection(gen));
      EXPECT_FALSE(gen.is_identity());
    }
  }
}

TEST(Reflections, NormalInEveryFixture) {
  for (const auto& entry : catalog()) {
    PermutationGroup g = make_group(entry);
    PermutationGroup n = two_reflection_subgroup(g);
    EXPECT_TRUE(n.is_subgroup_of(g)) << entry.name;
    EXPECT_TRUE(is_normalized_by(n, g)) << entry.name;
  }
}

TEST(Reflections, AnalyzeMatchesCatalogue) {
  for (const auto& entry : catalog()) {
    ReflectionReport r = analyze(make_group(entry));
    EXPECT_EQ(r.index * r.n_subgroup.order(), r.group_order) << entry.name;
    EXPECT_EQ(r.candidate_primes, prime_divisors(r.index)) << entry.name;
    if (entry.expected.cm_all_fields)
      EXPECT_EQ(r.cm_all_fields, *entry.expected.cm_all_fields) << entry.name;
    if (entry.expected.candidate_primes)
      EXPECT_EQ(r.candidate_primes, *entry.expected.candidate_primes) << entry.name;
  }
}

TEST(Reflections, FrobeniusHasNoReflections) {
  ReflectionReport r = analyze(group_of("Frob21"));
  EXPECT_EQ(r.n_subgroup.order(), 1u);
  EXPECT_EQ(r.index, 21u);
  EXPECT_FALSE(r.cm_all_fields);
  EXPECT_EQ(r.candidate_primes, (std::vector<std::uint64_t>{3, 7}));
}

TEST(Huffman, ClassifiesTransitiveFixtures) {
  auto cls = [](const std::string& name) {
    return classify_transitive_reflection_group(group_of(name));
  };
  EXPECT_EQ(cls("S5"), (HuffmanClass{HuffmanTag::FullSymmetric, 5}));
  EXPECT_EQ(cls("S2"), (HuffmanClass{HuffmanTag::FullSymmetric, 2}));
  EXPECT_EQ(cls("A6"), (HuffmanClass{HuffmanTag::Alternating, 6}));
  EXPECT_EQ(cls("A3"), (HuffmanClass{HuffmanTag::Alternating, 3}));
  EXPECT_EQ(cls("S2wrS2"), (HuffmanClass{HuffmanTag::WreathS2Sm, 2}));
  EXPECT_EQ(cls("S2wrS3"), (HuffmanClass{HuffmanTag::WreathS2Sm, 3}));
  EXPECT_EQ(cls("D5"), (HuffmanClass{HuffmanTag::Dihedral5, 5}));
  // Klein four-group: even part of S2 wr S2.
  EXPECT_EQ(cls("C2xC2"), (HuffmanClass{HuffmanTag::AlternatingWreath, 2}));
}

// Elements of S_n preserving a family of point sets.
static PermutationGroup stabilizer_of_blocks(std::size_t n, const std::vector<std::set<Point>>& family) {
  PermutationGroup sym = make_group(n, std::vector<std::string>{"(1 2)", [n] {
    std::string s = "(";
    for (std::size_t i = 1; i <= n; ++i) s += std::to_string(i) + (i < n ? " " : ")");
    return s;
  }()});
  std::set<std::set<Point>> lookup(family.begin(), family.end());
  return PermutationGroup::subgroup_where(sym, [&](const Permutation& g) {
    for (const auto& block : family) {
      std::set<Point> image;
      for (Point x : block) image.insert(g(x));
      if (!lookup.count(image)) return false;
    }
    return true;
  });
}

TEST(Huffman, SporadicDoubleTranspositionGroups) {
  // PSL(2,5) on the projective line over F5: x -> x+1 and x -> -1/x,
  // with x in F5 as point x+1 and infinity as point 6.
  PermutationGroup psl(6, {parse_cycles("(1 2 3 4 5)", 6), parse_cycles("(1 6)(2 5)", 6)});
  ASSERT_EQ(psl.order(), 60u);
  EXPECT_EQ(classify_transitive_reflection_group(psl), (HuffmanClass{HuffmanTag::A5onSix, 6}));

  // Automorphisms of the Fano plane with lines {i, i+1, i+3} mod 7.
  std::vector<std::set<Point>> lines;
  for (int i = 0; i < 7; ++i)
    lines.push_back({static_cast<Point>(i), static_cast<Point>((i + 1) % 7),
                     static_cast<Point>((i + 3) % 7)});
  PermutationGroup gl32 = stabilizer_of_blocks(7, lines);
  ASSERT_EQ(gl32.order(), 168u);
  EXPECT_EQ(two_reflection_subgroup(gl32).order(), 168u);
  EXPECT_EQ(classify_transitive_reflection_group(gl32),
            (HuffmanClass{HuffmanTag::GL32onSeven, 7}));

  // Affine automorphisms of F2^3: permutations preserving the 14 planes
  // {a, b, c, d} with a + b + c + d = 0.
  std::vector<std::set<Point>> planes;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      for (int c = b + 1; c < 8; ++c) {
        int d = a ^ b ^ c;
        if (d > c)
          planes.push_back({static_cast<Point>(a), static_cast<Point>(b),
                            static_cast<Point>(c), static_cast<Point>(d)});
      }
  ASSERT_EQ(planes.size(), 14u);
  PermutationGroup agl = stabilizer_of_blocks(8, planes);
  ASSERT_EQ(agl.order(), 1344u);
  EXPECT_EQ(classify_transitive_reflection_group(agl),
            (HuffmanClass{HuffmanTag::AGL32onEight, 8}));
}

TEST(Huffman, EvenPartOfWreath) {
  PermutationGroup w = group_of("S2wrS3");
  PermutationGroup even = PermutationGroup::subgroup_where(w, [](const Permutation& g) {
    std::size_t transpositions = 0;
    for (auto len : cycle_type(g)) transpositions += len - 1;
    return transpositions % 2 == 0;
  });
  ASSERT_EQ(even.order(), 24u);
  EXPECT_EQ(classify_transitive_reflection_group(even),
            (HuffmanClass{HuffmanTag::AlternatingWreath, 3}));
}

TEST(Huffman, RejectsNonReflectionAndIntransitive) {
  EXPECT_THROW(classify_transitive_reflection_group(group_of("Frob21")), InputError);
  EXPECT_THROW(classify_transitive_reflection_group(group_of("DiagS3")), InputError);
}
