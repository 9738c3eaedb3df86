#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "permcm/catalog.hpp"
#include "permcm/coinvariants.hpp"
#include "permcm/errors.hpp"
#include "permcm/json_io.hpp"
#include "permcm/numtheory.hpp"
#include "permcm/partition_lattice.hpp"
#include "permcm/quotient_complex.hpp"
#include "permcm/reflections.hpp"

using namespace permcm;

namespace {

constexpr std::size_t kOracleDegreeLimit = 7;
constexpr std::size_t kHomologyDegreeLimit = 6;

struct GroupOptions {
  std::optional<std::size_t> degree;
  std::vector<std::string> generators;
  std::string name;
  bool json = false;
};

void add_group_options(CLI::App* cmd, GroupOptions& opts) {
  cmd->add_option("-n,--degree", opts.degree, "number of points");
  cmd->add_option("-g,--generators", opts.generators,
                  "generators in cycle notation, separated by commas or newlines");
  cmd->add_option("--name", opts.name, "catalogue fixture name (see the catalog command)");
  cmd->add_flag("--json", opts.json, "emit JSON instead of text");
}

struct ResolvedGroup {
  std::string label;
  PermutationGroup group;
};

ResolvedGroup resolve_group(const GroupOptions& opts) {
  if (!opts.name.empty()) {
    if (!opts.generators.empty())
      throw InputError("--name and --generators are mutually exclusive");
    const CatalogEntry* entry = find_catalog_entry(opts.name);
    if (entry == nullptr) throw InputError("unknown catalogue name '" + opts.name + "'");
    if (opts.degree && *opts.degree != entry->degree)
      throw InputError(opts.name + " has degree " + std::to_string(entry->degree));
    return {entry->name, make_group(*entry)};
  }
  if (!opts.degree) throw InputError("the degree -n is required unless --name is given");
  if (opts.generators.empty()) throw InputError("give generators with -g or a fixture with --name");
  std::vector<std::string> gens;
  for (const auto& text : opts.generators)
    for (auto& g : split_generators(text)) gens.push_back(std::move(g));
  return {"", make_group(*opts.degree, gens)};
}

Json group_json(const ResolvedGroup& rg) {
  Json out{{"degree", rg.group.degree()},
           {"order", rg.group.order()},
           {"generators", to_json(rg.group)}};
  if (!rg.label.empty()) out["name"] = rg.label;
  return out;
}

std::string join(const std::vector<std::uint64_t>& values) {
  if (values.empty()) return "none";
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? " " : "") << values[i];
  return os.str();
}

void print_group(std::ostream& os, const ResolvedGroup& rg) {
  os << "group";
  if (!rg.label.empty()) os << " " << rg.label;
  os << ": degree " << rg.group.degree() << ", order " << rg.group.order() << "\n";
}

int cmd_analyze(const GroupOptions& opts) {
  const ResolvedGroup rg = resolve_group(opts);
  const ReflectionReport report = analyze(rg.group);
  const auto certificates = certified_bad_primes(rg.group, report.n_subgroup);
  std::vector<std::uint64_t> certified;
  for (const auto& c : certificates) certified.push_back(c.prime);
  std::optional<HuffmanClass> huffman;
  if (report.cm_all_fields && is_transitive(rg.group))
    huffman = classify_transitive_reflection_group(rg.group);

  if (opts.json) {
    Json certs = Json::array();
    for (const auto& c : certificates) certs.push_back(to_json(c));
    Json out{{"group", group_json(rg)},
             {"reflection", to_json(report)},
             {"certificates", std::move(certs)},
             {"certified_primes", certified}};
    if (huffman) out["huffman"] = to_json(*huffman);
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  print_group(std::cout, rg);
  std::cout << "2-reflection subgroup N: order " << report.n_subgroup.order() << ", index "
            << report.index << "\n"
            << "Cohen-Macaulay over every field: " << (report.cm_all_fields ? "yes" : "no")
            << "\n"
            << "candidate bad primes: " << join(report.candidate_primes) << "\n"
            << "certified bad primes: " << join(certified) << "\n";
  for (const auto& c : certificates)
    std::cout << "  p = " << c.prime << ": witness " << to_cycle_string(c.witness)
              << ", orbit partition " << to_string(c.partition) << ", inertia order "
              << c.inertia_order << "\n";
  if (huffman)
    std::cout << "transitive reflection type: " << to_string(huffman->tag) << " ("
              << huffman->parameter << ")\n";
  return 0;
}

void write_poset_edges(const QuotientComplex& qc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open " + path + " for writing");
  const auto& cells = qc.cells();
  for (int d = 1; d <= qc.dimension(); ++d) {
    for (std::size_t c = 0; c < qc.cell_count(d); ++c) {
      std::set<std::uint32_t> seen;
      for (std::uint32_t f : cells.faces(d, c)) {
        if (!seen.insert(f).second) continue;
        out << to_string(qc.representative(d - 1, f)) << "\t"
            << to_string(qc.representative(d, c)) << "\n";
      }
    }
  }
}

int cmd_homology(const GroupOptions& opts, std::vector<std::uint64_t> primes, bool force,
                 const std::string& poset_path) {
  const ResolvedGroup rg = resolve_group(opts);
  const std::size_t n = rg.group.degree();
  if (n > kHomologyDegreeLimit && !force)
    throw InputError("homology above degree " + std::to_string(kHomologyDegreeLimit) +
                     " is slow; pass --force to run it");
  if (n == kHomologyDegreeLimit && !opts.json)
    std::cerr << "note: degree " << n << " may take a while\n";
  if (primes.empty()) primes = {2, 3, 5};
  for (auto p : primes)
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");

  const QuotientComplex qc = quotient_by_group(build_delta(n), rg.group);
  std::map<std::uint64_t, std::vector<std::size_t>> betti;
  std::map<std::uint64_t, ReisnerReport> reisner;
  for (auto p : primes) {
    betti[p] = cellular_reduced_betti(qc.cells(), p);
    reisner[p] = reisner_cm_test(qc, p);
  }
  if (!poset_path.empty()) write_poset_edges(qc, poset_path);

  if (opts.json) {
    Json out = homology_json(qc, betti, reisner);
    out["group"] = group_json(rg);
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  print_group(std::cout, rg);
  std::cout << "cells by dimension:";
  for (auto c : qc.cell_counts()) std::cout << " " << c;
  std::cout << "\n";
  for (auto p : primes) {
    std::cout << "p = " << p << "\n  reduced Betti numbers (degree -1 up):";
    for (auto b : betti[p]) std::cout << " " << b;
    const ReisnerReport& r = reisner[p];
    std::cout << "\n  link condition: " << (r.pass ? "pass" : "FAIL") << " (" << r.faces_checked
              << " faces checked)\n";
    if (r.failure) {
      std::cout << "  failing face:";
      if (r.failure->face.empty()) std::cout << " (empty face)";
      for (const auto& [dim, chain] : r.failure->face) std::cout << " " << to_string(chain);
      std::cout << "\n  link of dimension " << r.failure->link_dimension
                << " has reduced Betti number " << r.failure->betti << " in degree "
                << r.failure->degree << "\n";
    }
  }
  return 0;
}

int cmd_oracle(const GroupOptions& opts, const std::vector<std::uint64_t>& primes,
               std::optional<unsigned> dmax, bool force, double timeout_secs) {
  const ResolvedGroup rg = resolve_group(opts);
  if (primes.size() != 1) throw InputError("oracle takes exactly one prime -p");
  const std::uint64_t p = primes.front();
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  const std::size_t n = rg.group.degree();
  if (n > kOracleDegreeLimit && !force)
    throw InputError("the oracle above degree " + std::to_string(kOracleDegreeLimit) +
                     " needs --force");
  if (n > 5 && !force && !opts.json)
    std::cerr << "note: degree " << n << " can take several seconds\n";

  OracleOptions oo;
  if (timeout_secs > 0)
    oo.deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(timeout_secs));
  const OracleVerdict v = dmax ? coinvariant_dimensions(rg.group, p, *dmax, oo)
                               : cm_verdict(rg.group, p, oo);
  if (opts.json) {
    Json out = to_json(v);
    out["group"] = group_json(rg);
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  print_group(std::cout, rg);
  std::cout << "p = " << p << ", n!/|G| = " << v.rank << "\n";
  if (v.nonmodular) {
    std::cout << "p does not divide |G|: Cohen-Macaulay\n";
  } else {
    std::cout << "coinvariant dimensions:";
    for (auto d : v.coinvariant_dims) std::cout << " " << d;
    std::cout << "\ntotal " << v.total() << " in degrees 0.." << v.coinvariant_dims.size() - 1
              << " (window up to " << v.truncation << ")\n";
  }
  std::cout << "verdict: " << to_string(v.verdict) << "\n";
  return 0;
}

int cmd_catalog(bool json) {
  if (json) {
    Json out = Json::array();
    for (const auto& e : catalog()) out.push_back(to_json(e));
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  for (const auto& e : catalog()) {
    std::cout << e.name << "\tdegree " << e.degree << "\torder " << make_group(e).order() << "\t";
    for (std::size_t i = 0; i < e.generators.size(); ++i)
      std::cout << (i ? "," : "") << e.generators[i];
    std::cout << "\t" << e.description << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohen-Macaulay tests for permutation invariants"};
  app.require_subcommand(1);

  GroupOptions analyze_opts, homology_opts, oracle_opts;
  std::vector<std::uint64_t> homology_primes, oracle_primes;
  bool homology_force = false, oracle_force = false, catalog_json = false;
  std::string poset_path;
  std::optional<unsigned> dmax;
  double timeout_secs = 600;

  auto* analyze_cmd = app.add_subcommand("analyze", "2-reflection decision and bad primes");
  add_group_options(analyze_cmd, analyze_opts);

  auto* homology_cmd =
      app.add_subcommand("homology", "homology and link condition of the quotient complex");
  add_group_options(homology_cmd, homology_opts);
  homology_cmd->add_option("-p,--prime", homology_primes, "coefficient prime (repeatable)");
  homology_cmd->add_flag("--slow,--force", homology_force, "allow large degrees");
  homology_cmd->add_option("--poset-edges", poset_path,
                           "write the face poset as a tab-separated edge list to this file");

  auto* oracle_cmd = app.add_subcommand("oracle", "coinvariant dimensions over F_p");
  add_group_options(oracle_cmd, oracle_opts);
  oracle_cmd->add_option("-p,--prime", oracle_primes, "field characteristic");
  oracle_cmd->add_option("--dmax", dmax, "highest degree to compute");
  oracle_cmd->add_flag("--slow,--force", oracle_force, "allow large degrees");
  oracle_cmd->add_option("--timeout-secs", timeout_secs, "give up after this many seconds (0: never)");

  auto* catalog_cmd = app.add_subcommand("catalog", "list the built-in fixtures");
  catalog_cmd->add_flag("--json", catalog_json, "emit JSON instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(analyze_opts);
    if (*homology_cmd) return cmd_homology(homology_opts, homology_primes, homology_force, poset_path);
    if (*oracle_cmd) return cmd_oracle(oracle_opts, oracle_primes, dmax, oracle_force, timeout_secs);
    if (*catalog_cmd) return cmd_catalog(catalog_json);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
