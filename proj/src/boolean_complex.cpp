#include "permcm/boolean_complex.hpp"

#include <algorithm>

#include "permcm/errors.hpp"
#include "permcm/numtheory.hpp"

namespace permcm {

BooleanComplex::BooleanComplex(FaceLists faces) : faces_(std::move(faces)) {
  while (!faces_.empty() && faces_.back().empty()) faces_.pop_back();
  for (std::size_t d = 0; d < faces_.size(); ++d) {
    for (const auto& list : faces_[d]) {
      if (list.size() != (d == 0 ? 0 : d + 1))
        throw InputError("a " + std::to_string(d) + "-cell must list " +
                         std::to_string(d == 0 ? 0 : d + 1) + " faces");
      for (std::uint32_t f : list)
        if (f >= faces_[d - 1].size()) throw InputError("face index out of range");
    }
  }
  for (std::size_t d = 2; d < faces_.size(); ++d) {
    for (const auto& list : faces_[d])
      for (std::size_t j = 0; j < list.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
          if (faces_[d - 1][list[j]][i] != faces_[d - 1][list[i]][j - 1])
            throw InputError("face lists violate the simplicial identities");
  }
  offset_.assign(faces_.size() + 1, 0);
  for (std::size_t d = 0; d < faces_.size(); ++d)
    offset_[d + 1] = offset_[d] + faces_[d].size();
}

std::size_t BooleanComplex::cell_count(int d) const {
  if (d < 0 || d > dimension()) return 0;
  return faces_[static_cast<std::size_t>(d)].size();
}

std::vector<std::size_t> BooleanComplex::cell_counts() const {
  std::vector<std::size_t> counts;
  for (const auto& layer : faces_) counts.push_back(layer.size());
  return counts;
}

std::pair<int, std::size_t> BooleanComplex::cell_of(std::size_t global_id) const {
  auto it = std::upper_bound(offset_.begin(), offset_.end(), global_id);
  if (it == offset_.begin() || it == offset_.end())
    throw InputError("cell id out of range");
  auto d = static_cast<std::size_t>(it - offset_.begin()) - 1;
  return {static_cast<int>(d), global_id - offset_[d]};
}

std::vector<std::pair<int, std::size_t>> BooleanComplex::maximal_cells() const {
  std::vector<std::vector<bool>> covered(faces_.size());
  for (std::size_t d = 0; d < faces_.size(); ++d) covered[d].assign(faces_[d].size(), false);
  for (std::size_t d = 1; d < faces_.size(); ++d)
    for (const auto& list : faces_[d])
      for (std::uint32_t f : list) covered[d - 1][f] = true;
  std::vector<std::pair<int, std::size_t>> out;
  for (std::size_t d = 0; d < faces_.size(); ++d)
    for (std::size_t c = 0; c < faces_[d].size(); ++c)
      if (!covered[d][c]) out.emplace_back(static_cast<int>(d), c);
  return out;
}

namespace {

void collect_flags(const BooleanComplex& k, int d, std::size_t cell, Simplex& path,
                   std::vector<Simplex>& out) {
  path.push_back(static_cast<Vertex>(k.global_id(d, cell)));
  if (d == 0) {
    out.emplace_back(path.rbegin(), path.rend());
  } else {
    for (std::uint32_t f : k.faces(d, cell)) collect_flags(k, d - 1, f, path, out);
  }
  path.pop_back();
}

}  // namespace

SimplicialComplex barycentric_subdivision(const BooleanComplex& complex) {
  std::vector<Simplex> flags;
  Simplex path;
  for (auto [d, cell] : complex.maximal_cells()) collect_flags(complex, d, cell, path, flags);
  return SimplicialComplex::from_facets(std::move(flags));
}

PrimeFieldMatrix cellular_boundary(const BooleanComplex& complex, int d, std::uint64_t p) {
  std::size_t rows = d == 0 ? 1 : complex.cell_count(d - 1);
  PrimeFieldMatrix m(p, rows, complex.cell_count(d));
  if (d < 0 || d > complex.dimension()) return m;
  for (std::size_t c = 0; c < complex.cell_count(d); ++c) {
    if (d == 0) {
      m.add(0, c, 1);
      continue;
    }
    auto list = complex.faces(d, c);
    for (std::size_t j = 0; j < list.size(); ++j) m.add(list[j], c, j % 2 == 0 ? 1 : -1);
  }
  return m;
}

std::vector<std::size_t> cellular_reduced_betti(const BooleanComplex& complex, std::uint64_t p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  const int dim = complex.dimension();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(dim + 2), 0);
  for (int d = 0; d <= dim; ++d)
    ranks[static_cast<std::size_t>(d)] = rank(cellular_boundary(complex, d, p));
  std::vector<std::size_t> betti;
  betti.push_back(1 - (dim >= 0 ? ranks[0] : 0));
  for (int d = 0; d <= dim; ++d) {
    auto ud = static_cast<std::size_t>(d);
    betti.push_back(complex.cell_count(d) - ranks[ud] - ranks[ud + 1]);
  }
  return betti;
}

}  // namespace permcm
