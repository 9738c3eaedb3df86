#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permcm/perm_group.hpp"

namespace permcm {

/// Verdicts known in advance for a fixture; unset fields are not claimed.
struct Expectation {
  std::optional<bool> cm_all_fields;
  std::optional<std::vector<std::uint64_t>> candidate_primes;
  std::optional<std::vector<std::uint64_t>> certified_primes;
  std::optional<std::vector<std::uint64_t>> bad_primes;
};

struct CatalogEntry {
  std::string name;
  std::size_t degree;
  std::vector<std::string> generators;  // cycle notation
  std::string description;
  Expectation expected;
};

/// Named groups: S2..S7, A3..A7, S2wrS1..S2wrS3, DiagS1..DiagS3, D5, D7,
/// Frob21, C4, and the regular C2, C3, C5, C6, C2xC2.
const std::vector<CatalogEntry>& catalog();

/// nullptr when no entry has this name.
const CatalogEntry* find_catalog_entry(std::string_view name);

PermutationGroup make_group(std::size_t degree, std::span<const std::string> generators,
                            std::size_t cap = kDefaultGenerationCap);
PermutationGroup make_group(const CatalogEntry& entry,
                            std::size_t cap = kDefaultGenerationCap);

}  // namespace permcm
