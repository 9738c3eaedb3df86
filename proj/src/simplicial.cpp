#include "permcm/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <numeric>

#include "permcm/errors.hpp"
#include "permcm/numtheory.hpp"

namespace permcm {

namespace {

constexpr std::size_t kMaxGeneratorSize = 24;

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
}

bool is_subset(std::span<const Vertex> small, std::span<const Vertex> big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

SimplicialComplex::SimplicialComplex() : faces_{{Simplex{}}}, facets_{Simplex{}} {}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Simplex> generators) {
  SimplicialComplex k;
  std::size_t top = 0;
  for (auto& g : generators) {
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    if (g.size() > kMaxGeneratorSize)
      throw InputError("simplex with more than " + std::to_string(kMaxGeneratorSize) +
                       " vertices");
    top = std::max(top, g.size());
  }
  k.faces_.assign(top + 1, {});
  k.faces_[0].push_back({});
  for (const auto& g : generators) {
    const std::size_t size = g.size();
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << size); ++mask) {
      Simplex s;
      s.reserve(static_cast<std::size_t>(std::popcount(mask)));
      for (std::size_t i = 0; i < size; ++i)
        if (mask & (std::uint32_t{1} << i)) s.push_back(g[i]);
      k.faces_[s.size()].push_back(std::move(s));
    }
  }
  for (auto& layer : k.faces_) {
    std::sort(layer.begin(), layer.end());
    layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
  }

  // A face is maximal iff it is not a codimension-1 face of anything.
  std::vector<std::vector<bool>> covered(k.faces_.size());
  for (std::size_t s = 0; s < k.faces_.size(); ++s)
    covered[s].assign(k.faces_[s].size(), false);
  for (std::size_t s = 1; s < k.faces_.size(); ++s) {
    Simplex sub;
    for (const auto& f : k.faces_[s]) {
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        sub.assign(f.begin(), f.end());
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
        auto& lower = k.faces_[s - 1];
        auto it = std::lower_bound(lower.begin(), lower.end(), sub);
        covered[s - 1][static_cast<std::size_t>(it - lower.begin())] = true;
      }
    }
  }
  k.facets_.clear();
  for (std::size_t s = 0; s < k.faces_.size(); ++s)
    for (std::size_t i = 0; i < k.faces_[s].size(); ++i)
      if (!covered[s][i]) k.facets_.push_back(k.faces_[s][i]);

  const std::size_t vertices = k.faces_.size() > 1 ? k.faces_[1].size() : 0;
  k.vertex_facets_.assign(vertices, {});
  for (std::uint32_t f = 0; f < k.facets_.size(); ++f)
    for (Vertex v : k.facets_[f]) {
      auto& layer = k.faces_[1];
      auto it = std::lower_bound(layer.begin(), layer.end(), Simplex{v});
      k.vertex_facets_[static_cast<std::size_t>(it - layer.begin())].push_back(f);
    }
  return k;
}

std::size_t SimplicialComplex::face_count(int d) const {
  if (d < -1 || d > dimension()) return 0;
  return faces_[static_cast<std::size_t>(d + 1)].size();
}

std::optional<std::size_t> SimplicialComplex::index_of(std::span<const Vertex> simplex) const {
  if (simplex.size() >= faces_.size()) return std::nullopt;
  const auto& layer = faces_[simplex.size()];
  auto it = std::lower_bound(layer.begin(), layer.end(), simplex,
                             [](const Simplex& a, std::span<const Vertex> b) {
                               return std::lexicographical_compare(a.begin(), a.end(),
                                                                   b.begin(), b.end());
                             });
  if (it == layer.end() || !std::equal(it->begin(), it->end(), simplex.begin(), simplex.end()))
    return std::nullopt;
  return static_cast<std::size_t>(it - layer.begin());
}

std::size_t SimplicialComplex::total_faces() const noexcept {
  std::size_t total = 0;
  for (const auto& layer : faces_) total += layer.size();
  return total;
}

SimplicialComplex SimplicialComplex::link(std::span<const Vertex> sigma) const {
  if (!contains(sigma)) throw InputError("link requested for a non-face");
  if (sigma.empty()) return *this;
  auto first = *index_of(sigma.first(1));
  std::vector<Simplex> generators;
  for (std::uint32_t f : vertex_facets_[first]) {
    const Simplex& facet = facets_[f];
    if (!is_subset(sigma, facet)) continue;
    Simplex rest;
    std::set_difference(facet.begin(), facet.end(), sigma.begin(), sigma.end(),
                        std::back_inserter(rest));
    generators.push_back(std::move(rest));
  }
  return from_facets(std::move(generators));
}

PrimeFieldMatrix SimplicialComplex::boundary_matrix(int d, std::uint64_t p) const {
  PrimeFieldMatrix m(p, face_count(d - 1), face_count(d));
  if (d < 0 || d > dimension()) return m;
  const auto& layer = faces_[static_cast<std::size_t>(d + 1)];
  Simplex sub;
  for (std::size_t col = 0; col < layer.size(); ++col) {
    const Simplex& s = layer[col];
    for (std::size_t pos = 0; pos < s.size(); ++pos) {
      sub.assign(s.begin(), s.end());
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(pos));
      auto row = index_of(sub);
      if (!row) throw ConsistencyError("simplicial complex is not closed under faces");
      m.add(*row, col, pos % 2 == 0 ? 1 : -1);
    }
  }
  return m;
}

std::vector<std::size_t> reduced_betti(const SimplicialComplex& complex, std::uint64_t p) {
  require_prime(p);
  const int dim = complex.dimension();
  // ranks[d] = rank ∂_d for d = 0..dim+1 (∂_{dim+1} = 0).
  std::vector<std::size_t> ranks(static_cast<std::size_t>(dim + 2), 0);
  for (int d = 0; d <= dim; ++d) ranks[static_cast<std::size_t>(d)] = rank(complex.boundary_matrix(d, p));
  std::vector<std::size_t> betti;
  betti.push_back(1 - (dim >= 0 ? ranks[0] : 0));
  for (int d = 0; d <= dim; ++d) {
    auto ud = static_cast<std::size_t>(d);
    betti.push_back(complex.face_count(d) - ranks[ud] - ranks[ud + 1]);
  }
  return betti;
}

long long reduced_euler_characteristic(const SimplicialComplex& complex) {
  long long chi = -1;
  for (int d = 0; d <= complex.dimension(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(complex.face_count(d));
  return chi;
}

namespace {

// Components of the 1-skeleton.
std::size_t component_count(const SimplicialComplex& k) {
  const std::size_t v = k.face_count(0);
  std::vector<std::size_t> parent(v);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = v;
  for (std::size_t e = 0; e < k.face_count(1); ++e) {
    const Simplex& edge = k.face(1, e);
    std::size_t a = find(*k.index_of(std::span(edge).first(1)));
    std::size_t b = find(*k.index_of(std::span(edge).last(1)));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

}  // namespace

LinkVanishingResult link_vanishing_test(const SimplicialComplex& complex, std::uint64_t p) {
  require_prime(p);
  LinkVanishingResult result;
  for (int d = -1; d <= complex.dimension(); ++d) {
    for (std::size_t i = 0; i < complex.face_count(d); ++i) {
      const Simplex& sigma = complex.face(d, i);
      ++result.faces_checked;
      SimplicialComplex lk = complex.link(sigma);
      const int link_dim = lk.dimension();
      // dim 0: β̃_{-1} = 0 holds because the link has a vertex.
      if (link_dim <= 0) continue;
      if (link_dim == 1) {
        std::size_t c = component_count(lk);
        if (c != 1) {
          result.pass = false;
          result.failure = LinkFailure{sigma, 0, c - 1, link_dim};
          return result;
        }
        continue;
      }
      auto betti = reduced_betti(lk, p);
      for (int deg = -1; deg < link_dim; ++deg) {
        std::size_t b = betti[static_cast<std::size_t>(deg + 1)];
        if (b != 0) {
          result.pass = false;
          result.failure = LinkFailure{sigma, deg, b, link_dim};
          return result;
        }
      }
    }
  }
  return result;
}

}  // namespace permcm
