#include "permcm/reflections.hpp"

#include <algorithm>

#include "permcm/errors.hpp"
#include "permcm/numtheory.hpp"

namespace permcm {

bool is_two_reflection(const Permutation& g) {
  auto type = cycle_type(g);
  using T = std::vector<std::size_t>;
  return type == T{} || type == T{2} || type == T{2, 2} || type == T{3};
}

PermutationGroup two_reflection_subgroup(const PermutationGroup& group) {
  std::vector<Permutation> gens;
  std::vector<Permutation> span = {Permutation::identity(group.degree())};
  for (const auto& g : group.elements()) {
    if (g.is_identity() || !is_two_reflection(g)) continue;
    if (std::binary_search(span.begin(), span.end(), g)) continue;
    gens.push_back(g);
    span = generate(group.degree(), gens, group.order() + 1);
  }
  return PermutationGroup(group.degree(), std::move(gens), group.order() + 1);
}

ReflectionReport analyze(const PermutationGroup& group) {
  ReflectionReport r;
  r.n_subgroup = two_reflection_subgroup(group);
  r.group_order = group.order();
  if (r.group_order % r.n_subgroup.order() != 0)
    throw ConsistencyError("|N| does not divide |G|");
  r.index = r.group_order / r.n_subgroup.order();
  r.cm_all_fields = r.index == 1;
  r.candidate_primes = prime_divisors(r.index);
  return r;
}

std::string to_string(HuffmanTag tag) {
  switch (tag) {
    case HuffmanTag::FullSymmetric: return "FullSymmetric";
    case HuffmanTag::WreathS2Sm: return "WreathS2Sm";
    case HuffmanTag::Alternating: return "Alternating";
    case HuffmanTag::Dihedral5: return "Dihedral5";
    case HuffmanTag::A5onSix: return "A5onSix";
    case HuffmanTag::GL32onSeven: return "GL32onSeven";
    case HuffmanTag::AGL32onEight: return "AGL32onEight";
    case HuffmanTag::AlternatingWreath: return "AlternatingWreath";
  }
  return "?";
}

namespace {

void expect_order(const PermutationGroup& group, std::uint64_t expected,
                  const char* what) {
  if (group.order() != expected)
    throw ConsistencyError(std::string("group classified as ") + what +
                           " has order " + std::to_string(group.order()) +
                           ", expected " + std::to_string(expected));
}

}  // namespace

HuffmanClass classify_transitive_reflection_group(const PermutationGroup& group) {
  const auto n = static_cast<unsigned>(group.degree());
  if (!is_transitive(group)) throw InputError("group is not transitive");
  if (!analyze(group).cm_all_fields)
    throw InputError("group is not generated by 2-reflections");
  if (n == 1) return {HuffmanTag::FullSymmetric, 1};

  std::vector<Permutation> transpositions;
  bool has_three_cycle = false;
  for (const auto& g : group.elements()) {
    auto type = cycle_type(g);
    if (type == std::vector<std::size_t>{2}) transpositions.push_back(g);
    if (type == std::vector<std::size_t>{3}) has_three_cycle = true;
  }

  if (!transpositions.empty()) {
    PermutationGroup t(n, transpositions, group.order() + 1);
    if (is_transitive(t)) {
      expect_order(group, factorial(n), "S_n");
      return {HuffmanTag::FullSymmetric, n};
    }
    if (n % 2 != 0) throw ConsistencyError("intransitive transpositions in odd degree");
    unsigned m = n / 2;
    expect_order(group, (std::uint64_t{1} << m) * factorial(m), "S_2 wr S_m");
    return {HuffmanTag::WreathS2Sm, m};
  }
  if (has_three_cycle) {
    expect_order(group, factorial(n) / 2, "A_n");
    return {HuffmanTag::Alternating, n};
  }

  struct Sporadic {
    unsigned degree;
    std::uint64_t order;
    HuffmanTag tag;
  };
  static constexpr Sporadic kSporadic[] = {
      {5, 10, HuffmanTag::Dihedral5},
      {6, 60, HuffmanTag::A5onSix},
      {7, 168, HuffmanTag::GL32onSeven},
      {8, 1344, HuffmanTag::AGL32onEight},
  };
  for (const auto& s : kSporadic)
    if (s.degree == n && s.order == group.order()) return {s.tag, n};

  if (n % 2 == 0 && n / 2 <= 20) {
    unsigned m = n / 2;
    if (group.order() == (std::uint64_t{1} << (m - 1)) * factorial(m))
      return {HuffmanTag::AlternatingWreath, m};
  }
  throw ConsistencyError("transitive 2-reflection group of degree " +
                         std::to_string(n) + " and order " +
                         std::to_string(group.order()) + " matches no known case");
}

}  // namespace permcm
