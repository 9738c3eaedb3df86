#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <json.hpp>

#include "permcm/catalog.hpp"
#include "permcm/coinvariants.hpp"
#include "permcm/partition_lattice.hpp"
#include "permcm/quotient_complex.hpp"
#include "permcm/reflections.hpp"

namespace permcm {

using Json = nlohmann::json;

Json to_json(const PermutationGroup& group);  // array of cycle strings
Json to_json(const OrbitPartition& partition);  // 1-based blocks
Json to_json(const ReflectionReport& report);
Json to_json(const BadPrimeCertificate& certificate);
Json to_json(const HuffmanClass& huffman);
Json to_json(const OracleVerdict& verdict);
Json to_json(const ReisnerReport& report);
Json to_json(const Expectation& expectation);
Json to_json(const CatalogEntry& entry);

/// {dims, betti:{p:[...]}, reisner:{p:{pass, failing_face?}}}.
Json homology_json(const QuotientComplex& qc,
                   const std::map<std::uint64_t, std::vector<std::size_t>>& betti,
                   const std::map<std::uint64_t, ReisnerReport>& reisner);

}  // namespace permcm
