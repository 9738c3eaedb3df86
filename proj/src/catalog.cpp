#include "permcm/catalog.hpp"

#include <sstream>

#include "permcm/errors.hpp"

namespace permcm {

namespace {

std::string cycle(std::initializer_list<unsigned> points) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (unsigned p : points) {
    if (!first) os << ' ';
    os << p;
    first = false;
  }
  os << ')';
  return os.str();
}

std::string long_cycle(unsigned n) {
  std::ostringstream os;
  os << '(';
  for (unsigned i = 1; i <= n; ++i) os << (i > 1 ? " " : "") << i;
  os << ')';
  return os.str();
}

Expectation cm_everywhere() {
  Expectation e;
  e.cm_all_fields = true;
  e.candidate_primes = std::vector<std::uint64_t>{};
  e.certified_primes = std::vector<std::uint64_t>{};
  e.bad_primes = std::vector<std::uint64_t>{};
  return e;
}

Expectation bad(std::vector<std::uint64_t> candidates, std::vector<std::uint64_t> certified,
                std::vector<std::uint64_t> bad_primes) {
  Expectation e;
  e.cm_all_fields = false;
  e.candidate_primes = std::move(candidates);
  e.certified_primes = std::move(certified);
  e.bad_primes = std::move(bad_primes);
  return e;
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  for (unsigned n = 2; n <= 7; ++n) {
    std::vector<std::string> gens{cycle({1, 2})};
    if (n > 2) gens.push_back(long_cycle(n));
    out.push_back({"S" + std::to_string(n), n, gens,
                   "symmetric group, generated by transpositions", cm_everywhere()});
  }
  for (unsigned n = 3; n <= 7; ++n) {
    std::vector<std::string> gens;
    for (unsigned k = 3; k <= n; ++k) gens.push_back(cycle({1, 2, k}));
    out.push_back({"A" + std::to_string(n), n, gens,
                   "alternating group, generated by 3-cycles", cm_everywhere()});
  }
  for (unsigned m = 1; m <= 3; ++m) {
    std::vector<std::string> gens;
    for (unsigned i = 1; i <= m; ++i) gens.push_back(cycle({2 * i - 1, 2 * i}));
    for (unsigned i = 1; i < m; ++i)
      gens.push_back(cycle({2 * i - 1, 2 * i + 1}) + cycle({2 * i, 2 * i + 2}));
    out.push_back({"S2wrS" + std::to_string(m), 2 * m, gens,
                   "wreath product S2 wr S" + std::to_string(m) + " in S" + std::to_string(2 * m),
                   cm_everywhere()});
  }
  for (unsigned n = 1; n <= 3; ++n) {
    std::vector<std::string> gens;
    for (unsigned i = 1; i < n; ++i)
      gens.push_back(cycle({i, i + 1}) + cycle({i + n, i + n + 1}));
    out.push_back({"DiagS" + std::to_string(n), 2 * n, gens,
                   "S" + std::to_string(n) + " embedded diagonally in S" + std::to_string(2 * n),
                   cm_everywhere()});
  }
  out.push_back({"D5", 5, {"(1 2 3 4 5)", "(2 5)(3 4)"},
                 "dihedral group of the pentagon, generated by double transpositions",
                 cm_everywhere()});
  out.push_back({"D7", 7, {"(1 2 3 4 5 6 7)", "(2 7)(3 6)(4 5)"},
                 "dihedral group of the heptagon", bad({2, 7}, {2}, {2, 7})});
  out.push_back({"Frob21", 7, {"(1 2 3 4 5 6 7)", "(1 2 4)(3 6 5)"},
                 "Frobenius group of order 21", bad({3, 7}, {3}, {3})});
  out.push_back({"C4", 4, {"(1 2 3 4)"}, "cyclic group of order 4, regular", bad({2}, {2}, {2})});
  out.push_back({"C2", 2, {"(1 2)"}, "regular C2", cm_everywhere()});
  out.push_back({"C3", 3, {"(1 2 3)"}, "regular C3", cm_everywhere()});
  out.push_back({"C5", 5, {"(1 2 3 4 5)"}, "regular C5", bad({5}, {5}, {5})});
  out.push_back({"C6", 6, {"(1 2 3 4 5 6)"}, "regular C6", bad({2, 3}, {2, 3}, {2, 3})});
  out.push_back({"C2xC2", 4, {"(1 2)(3 4)", "(1 3)(2 4)"},
                 "regular Klein four-group, generated by double transpositions",
                 cm_everywhere()});
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry* find_catalog_entry(std::string_view name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

PermutationGroup make_group(std::size_t degree, std::span<const std::string> generators,
                            std::size_t cap) {
  std::vector<Permutation> perms;
  for (const auto& text : generators) perms.push_back(parse_cycles(text, degree));
  return PermutationGroup(degree, std::move(perms), cap);
}

PermutationGroup make_group(const CatalogEntry& entry, std::size_t cap) {
  return make_group(entry.degree, entry.generators, cap);
}

}  // namespace permcm
