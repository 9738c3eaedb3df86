#include "permcm/quotient_complex.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "permcm/errors.hpp"
#include "permcm/numtheory.hpp"

namespace permcm {

namespace {

using Key = std::uint64_t;

Key pack(const std::vector<std::uint8_t>& masks) {
  Key key = 0;
  for (std::uint8_t m : masks) key = (key << 8) | m;
  return key;
}

std::vector<std::uint8_t> unpack(Key key, std::size_t length) {
  std::vector<std::uint8_t> masks(length);
  for (std::size_t j = length; j-- > 0;) {
    masks[j] = static_cast<std::uint8_t>(key & 0xff);
    key >>= 8;
  }
  return masks;
}

// Drops the j-th subset (0 = smallest) of a chain with `length` subsets.
Key drop(Key key, std::size_t length, std::size_t j) {
  unsigned shift = static_cast<unsigned>(8 * (length - 1 - j));
  Key low = shift == 0 ? 0 : key & ((Key{1} << shift) - 1);
  Key high = shift + 8 >= 64 ? 0 : key >> (shift + 8);
  return (high << shift) | low;
}

std::size_t index_in(const std::vector<Key>& keys, Key key) {
  auto it = std::lower_bound(keys.begin(), keys.end(), key);
  if (it == keys.end() || *it != key) throw ConsistencyError("chain missing from complex");
  return static_cast<std::size_t>(it - keys.begin());
}

void extend_chains(std::uint8_t last, std::uint8_t full, std::vector<std::uint8_t>& chain,
                   std::vector<std::vector<Key>>& keys) {
  keys[chain.size() - 1].push_back(pack(chain));
  std::uint8_t rest = static_cast<std::uint8_t>(full & ~last);
  for (std::uint8_t sub = rest; sub != 0; sub = static_cast<std::uint8_t>((sub - 1) & rest)) {
    chain.push_back(static_cast<std::uint8_t>(last | sub));
    extend_chains(chain.back(), full, chain, keys);
    chain.pop_back();
  }
}

BooleanComplex::FaceLists face_lists(const std::vector<std::vector<Key>>& keys,
                                     const std::vector<std::vector<std::uint32_t>>* orbit_of,
                                     const std::vector<std::vector<Key>>& lower_keys) {
  BooleanComplex::FaceLists faces(keys.size());
  faces[0].assign(keys[0].size(), {});
  for (std::size_t d = 1; d < keys.size(); ++d) {
    faces[d].reserve(keys[d].size());
    for (Key key : keys[d]) {
      std::vector<std::uint32_t> list(d + 1);
      for (std::size_t j = 0; j <= d; ++j) {
        std::size_t idx = index_in(lower_keys[d - 1], drop(key, d + 1, j));
        list[j] = orbit_of ? (*orbit_of)[d - 1][idx] : static_cast<std::uint32_t>(idx);
      }
      faces[d].push_back(std::move(list));
    }
  }
  return faces;
}

}  // namespace

std::string to_string(const SubsetChain& chain) {
  std::ostringstream os;
  for (std::size_t j = 0; j < chain.subsets.size(); ++j) {
    if (j) os << '<';
    os << '{';
    bool first = true;
    for (unsigned i = 0; i < 8; ++i) {
      if (!(chain.subsets[j] & (1u << i))) continue;
      if (!first) os << ',';
      os << i + 1;
      first = false;
    }
    os << '}';
  }
  return os.str();
}

SubsetChain QuotientComplex::representative(int d, std::size_t cell) const {
  return {unpack(keys_.at(static_cast<std::size_t>(d)).at(cell), static_cast<std::size_t>(d) + 1)};
}

QuotientComplex build_delta(std::size_t n, std::size_t max_degree) {
  const std::size_t limit = std::min(max_degree, kMaxComplexDegree);
  if (n < 1 || n > limit)
    throw InputError("complex degree " + std::to_string(n) + " outside [1, " +
                     std::to_string(limit) + "]");
  QuotientComplex qc;
  qc.degree_ = n;
  qc.group_ = PermutationGroup(n, {});
  qc.keys_.assign(n, {});
  const auto full = static_cast<std::uint8_t>((1u << n) - 1);
  std::vector<std::uint8_t> chain;
  for (unsigned first = 1; first <= full; ++first) {
    chain.assign(1, static_cast<std::uint8_t>(first));
    extend_chains(chain.back(), full, chain, qc.keys_);
  }
  for (auto& layer : qc.keys_) std::sort(layer.begin(), layer.end());
  qc.cells_ = BooleanComplex(face_lists(qc.keys_, nullptr, qc.keys_));
  if (qc.cell_count(static_cast<int>(n) - 1) != factorial(static_cast<unsigned>(n)))
    throw ConsistencyError("Δ does not have n! facets");
  return qc;
}

QuotientComplex quotient_by_group(const QuotientComplex& delta, const PermutationGroup& group) {
  if (delta.group().order() != 1)
    throw InputError("quotient_by_group expects the unquotiented complex Δ");
  if (group.degree() != delta.degree())
    throw InputError("group degree " + std::to_string(group.degree()) +
                     " does not match complex degree " + std::to_string(delta.degree()));
  const std::size_t n = delta.degree();

  std::vector<std::array<std::uint8_t, 256>> tables;
  tables.reserve(group.elements().size());
  for (const auto& g : group.elements()) {
    std::array<std::uint8_t, 256> t{};
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      unsigned image = 0;
      for (unsigned i = 0; i < n; ++i)
        if (mask & (1u << i)) image |= 1u << g(static_cast<Point>(i));
      t[mask] = static_cast<std::uint8_t>(image);
    }
    tables.push_back(t);
  }

  QuotientComplex qc;
  qc.degree_ = n;
  qc.group_ = group;
  qc.keys_.assign(n, {});
  std::vector<std::vector<std::uint32_t>> orbit_of(n);
  for (std::size_t d = 0; d < n; ++d) {
    const auto& all = delta.keys_[d];
    auto& orbit = orbit_of[d];
    orbit.assign(all.size(), UINT32_MAX);
    // Scanning in increasing order meets each orbit first at its least chain.
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (orbit[i] != UINT32_MAX) continue;
      auto id = static_cast<std::uint32_t>(qc.keys_[d].size());
      qc.keys_[d].push_back(all[i]);
      for (const auto& t : tables) {
        Key image = 0;
        for (std::size_t j = 0; j <= d; ++j) {
          unsigned shift = static_cast<unsigned>(8 * (d - j));
          image |= Key{t[(all[i] >> shift) & 0xff]} << shift;
        }
        orbit[index_in(all, image)] = id;
      }
    }
  }
  qc.cells_ = BooleanComplex(face_lists(qc.keys_, &orbit_of, delta.keys_));

  std::uint64_t facets = qc.cell_count(static_cast<int>(n) - 1);
  if (facets * group.order() != factorial(static_cast<unsigned>(n)))
    throw ConsistencyError("Δ/G has " + std::to_string(facets) + " facets, expected n!/|G|");
  return qc;
}

SimplicialComplex barycentric_subdivision(const QuotientComplex& qc) {
  return barycentric_subdivision(qc.cells());
}

ReisnerReport reisner_cm_test(const QuotientComplex& qc, std::uint64_t p) {
  ReisnerReport report;
  report.prime = p;
  auto result = link_vanishing_test(barycentric_subdivision(qc), p);
  report.pass = result.pass;
  report.faces_checked = result.faces_checked;
  if (result.failure) {
    ReisnerReport::Failure f;
    for (Vertex v : result.failure->face) {
      auto [d, cell] = qc.cells().cell_of(v);
      f.face.emplace_back(d, qc.representative(d, cell));
    }
    f.degree = result.failure->degree;
    f.betti = result.failure->betti;
    f.link_dimension = result.failure->link_dimension;
    report.failure = std::move(f);
  }
  return report;
}

}  // namespace permcm
