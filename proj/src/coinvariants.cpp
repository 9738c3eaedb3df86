#include "permcm/coinvariants.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "permcm/errors.hpp"
#include "permcm/linalg_ff.hpp"
#include "permcm/numtheory.hpp"

namespace permcm {

namespace {

// Ranks degree-d exponent vectors in n variables by lexicographic order.
class MonomialIndex {
 public:
  MonomialIndex(std::size_t n, unsigned d) : n_(n), d_(d) {
    // comp[k][s]: compositions of s into k nonnegative parts.
    std::vector<std::vector<std::uint64_t>> comp(n + 1, std::vector<std::uint64_t>(d + 1, 0));
    comp[0][0] = 1;
    for (std::size_t k = 1; k <= n; ++k)
      for (unsigned s = 0; s <= d; ++s)
        comp[k][s] = binomial(static_cast<unsigned>(s + k - 1), static_cast<unsigned>(k - 1));
    count_ = comp[n][d];
    below_.assign(n + 1, std::vector<std::vector<std::uint64_t>>(
                             d + 1, std::vector<std::uint64_t>(d + 2, 0)));
    for (std::size_t k = 0; k <= n; ++k)
      for (unsigned s = 0; s <= d; ++s)
        for (unsigned e = 1; e <= s + 1; ++e)
          below_[k][s][e] = below_[k][s][e - 1] + comp[k][s - (e - 1)];
  }

  std::uint64_t count() const { return count_; }

  std::uint64_t rank(const Exponents& e) const {
    std::uint64_t r = 0;
    unsigned rem = d_;
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      r += below_[n_ - i - 1][rem][e[i]];
      rem -= e[i];
    }
    return r;
  }

 private:
  std::size_t n_;
  unsigned d_;
  std::uint64_t count_ = 0;
  std::vector<std::vector<std::vector<std::uint64_t>>> below_;
};

void enumerate(std::size_t n, std::size_t i, unsigned rem, Exponents& e,
               std::vector<Exponents>& out) {
  if (i + 1 == n) {
    e[i] = static_cast<std::uint8_t>(rem);
    out.push_back(e);
    return;
  }
  for (unsigned v = 0; v <= rem; ++v) {
    e[i] = static_cast<std::uint8_t>(v);
    enumerate(n, i + 1, rem - v, e, out);
  }
  e[i] = 0;
}

// G-orbits on the degree-d monomials. Orbits are numbered by their largest
// monomial, descending, and reps[k] is that largest monomial.
struct DegreeOrbits {
  DegreeOrbits(const PermutationGroup& group, unsigned d)
      : degree(d), index(group.degree(), d) {
    const std::size_t n = group.degree();
    Exponents e{};
    monomials.reserve(index.count());
    enumerate(n, 0, d, e, monomials);
    orbit_of.assign(monomials.size(), UINT32_MAX);
    Exponents image{};
    for (std::size_t i = monomials.size(); i-- > 0;) {
      if (orbit_of[i] != UINT32_MAX) continue;
      auto id = static_cast<std::uint32_t>(reps.size());
      reps.push_back(monomials[i]);
      for (const auto& g : group.elements()) {
        for (std::size_t k = 0; k < n; ++k) image[g(static_cast<Point>(k))] = monomials[i][k];
        orbit_of[index.rank(image)] = id;
      }
    }
  }

  std::size_t orbit_count() const { return reps.size(); }
  std::uint32_t orbit(const Exponents& e) const {
    return orbit_of[static_cast<std::size_t>(index.rank(e))];
  }

  unsigned degree;
  MonomialIndex index;
  std::vector<Exponents> monomials;
  std::vector<std::uint32_t> orbit_of;
  std::vector<Exponents> reps;
};

void require_oracle_degree(const PermutationGroup& group) {
  if (group.degree() < 1 || group.degree() > kMaxOracleDegree)
    throw InputError("oracle supports degrees 1.." + std::to_string(kMaxOracleDegree));
}

void check_deadline(const OracleOptions& options) {
  if (options.deadline && std::chrono::steady_clock::now() > *options.deadline)
    throw Timeout("coinvariant computation exceeded its time limit");
}

struct Entry {
  std::uint32_t col;
  std::uint32_t count;
};
using SparseRow = std::vector<Entry>;

// One finished degree. standard[j] lists the orbits whose sums span A_d
// modulo (e_1, ..., e_{j+1})_d; slot[j] inverts it (-1 when absent).
struct Layer {
  DegreeOrbits orbits;
  std::vector<std::vector<std::uint32_t>> standard;
  std::vector<std::vector<std::int32_t>> slot;
};

void set_standard(Layer& layer, std::size_t j, std::vector<std::uint32_t> orbits) {
  layer.slot[j].assign(layer.orbits.orbit_count(), -1);
  for (std::size_t k = 0; k < orbits.size(); ++k)
    layer.slot[j][orbits[k]] = static_cast<std::int32_t>(k);
  layer.standard[j] = std::move(orbits);
}

}  // namespace

GradedInvariantBasis graded_invariant_basis(const PermutationGroup& group,
                                            unsigned max_degree) {
  require_oracle_degree(group);
  GradedInvariantBasis basis;
  for (unsigned d = 0; d <= max_degree; ++d) {
    DegreeOrbits orbits(group, d);
    std::vector<std::vector<Exponents>> layer(orbits.orbit_count());
    for (std::size_t i = 0; i < orbits.monomials.size(); ++i)
      layer[orbits.orbit_of[i]].push_back(orbits.monomials[i]);
    basis.push_back(std::move(layer));
  }
  return basis;
}

std::uint64_t invariant_dimension(const PermutationGroup& group, unsigned d) {
  require_oracle_degree(group);
  return DegreeOrbits(group, d).orbit_count();
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::CM: return "CM";
    case Verdict::NotCM: return "NotCM";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::uint64_t OracleVerdict::total() const {
  std::uint64_t t = 0;
  for (auto c : coinvariant_dims) t += c;
  return t;
}

unsigned generation_degree_bound(std::size_t n) {
  return static_cast<unsigned>(std::max(n, n * (n - 1) / 2));
}

unsigned default_truncation(std::size_t n) {
  return static_cast<unsigned>(n * (n - 1) / 2 + n);
}

// A = k[x]^G in degree d is spanned by orbit sums. For d > 0 the ideal
// (e_1, ..., e_i)_d equals e_1 A_{d-1} plus e_j S_j for j = 2..i, where S_j
// spans A_{d-j} modulo (e_1, ..., e_{j-1}). In lex order with x_1 largest
// the leading monomial of e_1 * orbitsum(b) is x_1 * max(b) with coefficient
// one, so the e_1 rows are already echelon and only the remaining blocks are
// reduced, in the coordinates left free by e_1.
OracleVerdict coinvariant_dimensions(const PermutationGroup& group, std::uint64_t p,
                                     unsigned truncation, const OracleOptions& options) {
  auto start = std::chrono::steady_clock::now();
  require_oracle_degree(group);
  if (!is_prime(p) || p >= (std::uint64_t{1} << 32))
    throw InputError(std::to_string(p) + " is not a prime below 2^32");
  if (truncation < 1) throw InputError("truncation degree must be at least 1");
  const std::size_t n = group.degree();
  const std::uint64_t n_factorial = factorial(static_cast<unsigned>(n));
  if (n_factorial % group.order() != 0) throw ConsistencyError("|G| does not divide n!");
  const auto prime = static_cast<std::uint32_t>(p);

  OracleVerdict v;
  v.prime = p;
  v.rank = n_factorial / group.order();
  v.truncation = truncation;

  // window[k] is the layer of degree d - 1 - k.
  std::deque<Layer> window;
  std::uint64_t cumulative = 0;
  std::size_t work = 0;
  auto tick = [&] {
    if (++work % 256 == 0) check_deadline(options);
  };

  for (unsigned d = 0; d <= truncation; ++d) {
    check_deadline(options);
    Layer layer{DegreeOrbits(group, d), std::vector<std::vector<std::uint32_t>>(n),
                std::vector<std::vector<std::int32_t>>(n)};
    const DegreeOrbits& cur = layer.orbits;
    const std::size_t cols = cur.orbit_count();
    const std::size_t blocks = std::min<std::size_t>(n, d);

    // rows[i][s]: e_i times the s-th spanning orbit of degree d - i. The
    // coefficient at orbit O counts the i-subsets T of the support of
    // max(O) with max(O) - x_T in the row's orbit.
    std::vector<std::vector<SparseRow>> rows(blocks + 1);
    for (std::size_t i = 1; i <= blocks; ++i) {
      const Layer& below = window[i - 1];
      rows[i].resize(i == 1 ? below.orbits.orbit_count() : below.standard[i - 2].size());
    }
    std::array<std::size_t, kMaxOracleDegree> support{};
    for (std::uint32_t col = 0; col < cols; ++col) {
      tick();
      const Exponents& r = cur.reps[col];
      std::size_t s = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (r[k] > 0) support[s++] = k;
      for (std::uint32_t subset = 1; subset < (1u << s); ++subset) {
        const auto i = static_cast<std::size_t>(std::popcount(subset));
        if (i > blocks) continue;
        Exponents m = r;
        for (std::size_t b = 0; b < s; ++b)
          if (subset & (1u << b)) --m[support[b]];
        const Layer& below = window[i - 1];
        std::uint32_t b = below.orbits.orbit(m);
        std::int32_t slot = i == 1 ? static_cast<std::int32_t>(b) : below.slot[i - 2][b];
        if (slot < 0) continue;
        SparseRow& row = rows[i][static_cast<std::size_t>(slot)];
        if (!row.empty() && row.back().col == col)
          ++row.back().count;
        else
          row.push_back({col, 1});
      }
    }

    // e_1 block: check the triangular shape and record its pivots.
    std::vector<std::int64_t> e1_row(cols, -1);
    if (blocks >= 1) {
      const DegreeOrbits& prev = window[0].orbits;
      for (std::size_t b = 0; b < rows[1].size(); ++b) {
        Exponents lead = prev.reps[b];
        ++lead[0];
        const SparseRow& row = rows[1][b];
        std::uint32_t pivot = cur.orbit(lead);
        if (row.empty() || row.front().col != pivot || row.front().count != 1 ||
            e1_row[pivot] >= 0)
          throw ConsistencyError("e_1 rows are not triangular in degree " + std::to_string(d));
        e1_row[pivot] = static_cast<std::int64_t>(b);
      }
    }
    std::vector<std::uint32_t> free_cols;
    std::vector<std::int64_t> free_index(cols, -1);
    for (std::uint32_t c = 0; c < cols; ++c)
      if (e1_row[c] < 0) {
        free_index[c] = static_cast<std::int64_t>(free_cols.size());
        free_cols.push_back(c);
      }
    set_standard(layer, 0, free_cols);

    DenseEchelon echelon(p, free_cols.size());
    std::vector<std::uint32_t> acc(cols, 0);
    std::vector<std::uint32_t> reduced(free_cols.size(), 0);
    for (std::size_t i = 2; i <= blocks; ++i) {
      for (const SparseRow& row : rows[i]) {
        if (echelon.full()) break;
        tick();
        std::uint32_t first = static_cast<std::uint32_t>(cols);
        for (const Entry& e : row) {
          acc[e.col] = e.count % prime;
          first = std::min(first, e.col);
        }
        std::fill(reduced.begin(), reduced.end(), 0);
        bool nonzero = false;
        for (std::size_t c = first; c < cols; ++c) {
          const std::uint32_t x = acc[c];
          if (x == 0) continue;
          acc[c] = 0;
          if (e1_row[c] < 0) {
            reduced[static_cast<std::size_t>(free_index[c])] = x;
            nonzero = true;
            continue;
          }
          const std::uint64_t f = prime - x;
          for (const Entry& e : rows[1][static_cast<std::size_t>(e1_row[c])])
            if (e.col != c)
              acc[e.col] = static_cast<std::uint32_t>((acc[e.col] + f * e.count) % prime);
        }
        if (nonzero) echelon.insert(reduced);
      }
      std::vector<std::uint32_t> standard;
      for (std::size_t k = 0; k < free_cols.size(); ++k)
        if (!echelon.is_pivot(k)) standard.push_back(free_cols[k]);
      set_standard(layer, i - 1, std::move(standard));
    }
    for (std::size_t j = std::max<std::size_t>(blocks, 1); j < n; ++j)
      set_standard(layer, j, layer.standard[j - 1]);

    std::uint64_t dim = free_cols.size() - echelon.rank();
    v.coinvariant_dims.push_back(dim);
    cumulative += dim;
    if (cumulative > v.rank) {
      v.verdict = Verdict::NotCM;
      break;
    }

    layer.orbits.monomials.clear();
    layer.orbits.monomials.shrink_to_fit();
    window.push_front(std::move(layer));
    if (window.size() > n) window.pop_back();
  }

  if (v.verdict != Verdict::NotCM && truncation >= generation_degree_bound(n)) {
    if (cumulative < v.rank)
      throw ConsistencyError("coinvariant total " + std::to_string(cumulative) +
                             " below the rank " + std::to_string(v.rank));
    bool tail_zero = v.coinvariant_dims.size() >= n;
    for (std::size_t k = 0; k < n && k < v.coinvariant_dims.size(); ++k)
      if (v.coinvariant_dims[v.coinvariant_dims.size() - 1 - k] != 0) tail_zero = false;
    if (tail_zero) v.verdict = Verdict::CM;
  }
  v.runtime_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start).count();
  return v;
}

OracleVerdict cm_verdict(const PermutationGroup& group, std::uint64_t p,
                         const OracleOptions& options) {
  require_oracle_degree(group);
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (group.order() % p != 0) {
    OracleVerdict v;
    v.prime = p;
    v.rank = factorial(static_cast<unsigned>(group.degree())) / group.order();
    v.verdict = Verdict::CM;
    v.nonmodular = true;
    return v;
  }
  return coinvariant_dimensions(group, p, default_truncation(group.degree()), options);
}

}  // namespace permcm
