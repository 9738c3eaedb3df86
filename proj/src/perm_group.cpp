#include "permcm/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "permcm/errors.hpp"

namespace permcm {

std::vector<Permutation> generate(std::size_t degree,
                                  std::span<const Permutation> generators,
                                  std::size_t cap) {
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw InputError("generator degree " + std::to_string(g.degree()) +
                       " does not match group degree " + std::to_string(degree));

  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> elements;
  std::deque<std::size_t> frontier;
  auto admit = [&](Permutation g) {
    if (seen.contains(g)) return;
    if (elements.size() >= cap) throw CapExceeded(cap, elements.size());
    seen.insert(g);
    elements.push_back(std::move(g));
    frontier.push_back(elements.size() - 1);
  };

  admit(Permutation::identity(degree));
  while (!frontier.empty()) {
    std::size_t k = frontier.front();
    frontier.pop_front();
    for (const auto& s : generators) admit(elements[k] * s);
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

PermutationGroup::PermutationGroup(std::size_t degree,
                                   std::vector<Permutation> generators,
                                   std::size_t cap)
    : degree_(degree),
      generators_(std::move(generators)),
      elements_(generate(degree, generators_, cap)) {}

PermutationGroup PermutationGroup::from_closed_set(std::size_t degree,
                                                   std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  PermutationGroup h;
  h.degree_ = degree;
  std::vector<Permutation> span = {Permutation::identity(degree)};
  for (const auto& g : elements) {
    if (std::binary_search(span.begin(), span.end(), g)) continue;
    h.generators_.push_back(g);
    span = generate(degree, h.generators_, elements.size() + 1);
  }
  if (span != elements)
    throw ConsistencyError("element set handed to from_closed_set is not a group");
  h.elements_ = std::move(elements);
  return h;
}

PermutationGroup PermutationGroup::subgroup_where(
    const PermutationGroup& group,
    const std::function<bool(const Permutation&)>& keep) {
  std::vector<Permutation> kept;
  for (const auto& g : group.elements())
    if (keep(g)) kept.push_back(g);
  return from_closed_set(group.degree(), std::move(kept));
}

bool PermutationGroup::contains(const Permutation& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

bool PermutationGroup::is_subgroup_of(const PermutationGroup& other) const {
  if (degree_ != other.degree_) return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const Permutation& g) { return other.contains(g); });
}

bool is_transitive(const PermutationGroup& group) {
  std::size_t n = group.degree();
  if (n == 0) return true;
  std::vector<bool> reached(n, false);
  std::vector<Point> stack = {0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Point p = stack.back();
    stack.pop_back();
    for (const auto& s : group.generators()) {
      Point q = s(p);
      if (!reached[q]) {
        reached[q] = true;
        ++count;
        stack.push_back(q);
      }
    }
  }
  return count == n;
}

bool is_normalized_by(const PermutationGroup& subgroup, const PermutationGroup& group) {
  for (const auto& g : group.generators()) {
    Permutation g_inv = inverse(g);
    for (const auto& h : subgroup.generators())
      if (!subgroup.contains(g * h * g_inv)) return false;
  }
  return true;
}

}  // namespace permcm
