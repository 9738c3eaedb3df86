#include "permcm/json_io.hpp"

#include <cmath>
#include <string>

namespace permcm {

Json to_json(const PermutationGroup& group) {
  Json out = Json::array();
  for (const auto& g : group.generators()) out.push_back(to_cycle_string(g));
  return out;
}

Json to_json(const OrbitPartition& partition) {
  Json out = Json::array();
  for (const auto& block : partition.blocks()) {
    Json b = Json::array();
    for (Point x : block) b.push_back(static_cast<unsigned>(x) + 1);
    out.push_back(std::move(b));
  }
  return out;
}

Json to_json(const ReflectionReport& report) {
  return Json{{"order", report.group_order},
              {"n_order", report.n_subgroup.order()},
              {"index", report.index},
              {"cm_all_fields", report.cm_all_fields},
              {"candidate_primes", report.candidate_primes}};
}

Json to_json(const BadPrimeCertificate& certificate) {
  return Json{{"prime", certificate.prime},
              {"witness", to_cycle_string(certificate.witness)},
              {"partition", to_json(certificate.partition)},
              {"inertia_order", certificate.inertia_order}};
}

Json to_json(const HuffmanClass& huffman) {
  return Json{{"tag", to_string(huffman.tag)}, {"parameter", huffman.parameter}};
}

Json to_json(const OracleVerdict& verdict) {
  // Millisecond resolution keeps the printed value short and stable.
  const double ms = std::round(verdict.runtime_ms * 1000.0) / 1000.0;
  return Json{{"p", verdict.prime},
              {"rank", verdict.rank},
              {"dims", verdict.coinvariant_dims},
              {"total", verdict.total()},
              {"verdict", to_string(verdict.verdict)},
              {"truncation", verdict.truncation},
              {"nonmodular", verdict.nonmodular},
              {"runtime_ms", ms}};
}

Json to_json(const ReisnerReport& report) {
  Json out{{"pass", report.pass}, {"faces_checked", report.faces_checked}};
  if (report.failure) {
    Json face = Json::array();
    for (const auto& [dim, chain] : report.failure->face)
      face.push_back(Json{{"dim", dim}, {"chain", to_string(chain)}});
    out["failing_face"] = Json{{"cells", std::move(face)},
                               {"degree", report.failure->degree},
                               {"betti", report.failure->betti},
                               {"link_dimension", report.failure->link_dimension}};
  }
  return out;
}

Json to_json(const Expectation& expectation) {
  Json out = Json::object();
  if (expectation.cm_all_fields) out["cm_all_fields"] = *expectation.cm_all_fields;
  if (expectation.candidate_primes) out["candidate_primes"] = *expectation.candidate_primes;
  if (expectation.certified_primes) out["certified_primes"] = *expectation.certified_primes;
  if (expectation.bad_primes) out["bad_primes"] = *expectation.bad_primes;
  return out;
}

Json to_json(const CatalogEntry& entry) {
  return Json{{"name", entry.name},
              {"degree", entry.degree},
              {"generators", entry.generators},
              {"order", make_group(entry).order()},
              {"description", entry.description},
              {"expected", to_json(entry.expected)}};
}

Json homology_json(const QuotientComplex& qc,
                   const std::map<std::uint64_t, std::vector<std::size_t>>& betti,
                   const std::map<std::uint64_t, ReisnerReport>& reisner) {
  Json b = Json::object();
  for (const auto& [p, values] : betti) b[std::to_string(p)] = values;
  Json r = Json::object();
  for (const auto& [p, report] : reisner) r[std::to_string(p)] = to_json(report);
  return Json{{"dims", qc.cell_counts()}, {"betti", std::move(b)}, {"reisner", std::move(r)}};
}

}  // namespace permcm
