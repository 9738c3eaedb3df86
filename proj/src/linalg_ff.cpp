#include "permcm/linalg_ff.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <utility>

#include "permcm/errors.hpp"
#include "permcm/numtheory.hpp"

namespace permcm {

namespace {

using Entry = PrimeFieldMatrix::Entry;
using SparseRow = std::vector<Entry>;

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}

// out = a - factor * b, both sorted by column.
void axpy_into(const SparseRow& a, std::uint32_t factor, const SparseRow& b,
               std::uint32_t p, SparseRow& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::uint32_t neg = factor == 0 ? 0 : p - factor;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].col < a[i].col) {
      out.push_back({b[j].col, mul(neg, b[j].value, p)});
      ++j;
    } else {
      std::uint32_t v = static_cast<std::uint32_t>(
          (a[i].value + std::uint64_t{mul(neg, b[j].value, p)}) % p);
      if (v != 0) out.push_back({a[i].col, v});
      ++i;
      ++j;
    }
  }
}

}  // namespace

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  if (new_r == 0) throw ConsistencyError("inverse of zero mod p");
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  return reduce(t, p);
}

PrimeFieldMatrix::PrimeFieldMatrix(std::uint64_t modulus, std::size_t rows,
                                   std::size_t cols)
    : p_(0), cols_(cols), rows_(rows) {
  if (modulus >= (std::uint64_t{1} << 32) || !is_prime(modulus))
    throw InputError("modulus " + std::to_string(modulus) +
                     " is not a prime below 2^32");
  p_ = static_cast<std::uint32_t>(modulus);
}

PrimeFieldMatrix PrimeFieldMatrix::identity(std::uint64_t modulus, std::size_t n) {
  PrimeFieldMatrix m(modulus, n, n);
  for (std::size_t i = 0; i < n; ++i) m.add(i, i, 1);
  return m;
}

std::size_t PrimeFieldMatrix::nonzeros() const noexcept {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.size();
  return total;
}

void PrimeFieldMatrix::add(std::size_t row, std::size_t col, std::int64_t value) {
  if (row >= rows_.size() || col >= cols_)
    throw InputError("matrix index out of range");
  std::uint32_t v = reduce(value, p_);
  if (v == 0) return;
  auto& r = rows_[row];
  auto c = static_cast<std::uint32_t>(col);
  if (r.empty() || r.back().col < c) {
    r.push_back({c, v});
    return;
  }
  auto it = std::lower_bound(r.begin(), r.end(), c,
                             [](const Entry& e, std::uint32_t key) { return e.col < key; });
  if (it != r.end() && it->col == c) {
    it->value = static_cast<std::uint32_t>((it->value + std::uint64_t{v}) % p_);
    if (it->value == 0) r.erase(it);
  } else {
    r.insert(it, {c, v});
  }
}

std::uint32_t PrimeFieldMatrix::at(std::size_t row, std::size_t col) const {
  const auto& r = rows_.at(row);
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const Entry& e, std::size_t key) { return e.col < key; });
  return (it != r.end() && it->col == col) ? it->value : 0;
}

std::size_t PrimeFieldMatrix::append_row() {
  rows_.emplace_back();
  return rows_.size() - 1;
}

PrimeFieldMatrix transpose(const PrimeFieldMatrix& m) {
  PrimeFieldMatrix t(m.modulus(), m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& e : m.row(r)) t.add(e.col, r, e.value);
  return t;
}

PrimeFieldMatrix multiply(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix dimensions do not compose");
  if (a.modulus() != b.modulus()) throw InputError("matrix moduli differ");
  const std::uint32_t p = a.modulus();
  PrimeFieldMatrix c(p, a.rows(), b.cols());
  std::vector<std::uint64_t> acc(b.cols(), 0);
  std::vector<bool> marked(b.cols(), false);
  std::vector<std::uint32_t> touched;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    touched.clear();
    for (const auto& ea : a.row(i))
      for (const auto& eb : b.row(ea.col)) {
        if (!marked[eb.col]) {
          marked[eb.col] = true;
          touched.push_back(eb.col);
        }
        acc[eb.col] = (acc[eb.col] + std::uint64_t{ea.value} * eb.value) % p;
      }
    std::sort(touched.begin(), touched.end());
    for (std::uint32_t col : touched) {
      c.add(i, col, static_cast<std::int64_t>(acc[col]));
      acc[col] = 0;
      marked[col] = false;
    }
  }
  return c;
}

DenseEchelon::DenseEchelon(std::uint64_t modulus, std::size_t width)
    : p_(0), width_(width), row_of_col_(width, -1), work_(width) {
  if (modulus >= (std::uint64_t{1} << 32) || !is_prime(modulus))
    throw InputError("modulus " + std::to_string(modulus) + " is not a prime below 2^32");
  p_ = static_cast<std::uint32_t>(modulus);
  const std::uint64_t top = std::uint64_t{p_ - 1} * (p_ - 1);
  safe_adds_ = top == 0 ? UINT64_MAX : (UINT64_MAX - p_) / top;
}

std::optional<std::size_t> DenseEchelon::insert(std::span<const std::uint32_t> row) {
  if (row.size() != width_) throw InputError("row length does not match the echelon width");
  std::copy(row.begin(), row.end(), work_.begin());
  std::uint64_t adds = 0;
  for (std::size_t c = 0; c < width_; ++c) {
    const auto x = static_cast<std::uint32_t>(work_[c] % p_);
    work_[c] = 0;
    if (x == 0) continue;
    const std::int64_t k = row_of_col_[c];
    if (k < 0) {
      const std::uint32_t inv = inverse_mod(x, p_);
      const std::size_t base = rows_.size();
      rows_.resize(base + width_, 0);
      rows_[base + c] = 1;
      for (std::size_t j = c + 1; j < width_; ++j)
        rows_[base + j] = mul(static_cast<std::uint32_t>(work_[j] % p_), inv, p_);
      row_of_col_[c] = static_cast<std::int64_t>(pivot_cols_.size());
      pivot_cols_.push_back(c);
      return c;
    }
    if (++adds > safe_adds_) {
      for (std::size_t j = c + 1; j < width_; ++j) work_[j] %= p_;
      adds = 1;
    }
    const std::uint64_t f = p_ - x;
    const std::uint32_t* pivot = rows_.data() + static_cast<std::size_t>(k) * width_;
    for (std::size_t j = c + 1; j < width_; ++j) work_[j] += f * pivot[j];
  }
  return std::nullopt;
}

std::size_t rank_dense(const PrimeFieldMatrix& m) {
  const std::size_t limit = std::min(m.rows(), m.cols());
  DenseEchelon echelon(m.modulus(), m.cols());
  std::vector<std::uint32_t> row(m.cols());
  for (std::size_t r = 0; r < m.rows() && echelon.rank() < limit; ++r) {
    if (m.row(r).empty()) continue;
    std::fill(row.begin(), row.end(), 0);
    for (const auto& e : m.row(r)) row[e.col] = e.value;
    echelon.insert(row);
  }
  return echelon.rank();
}

std::size_t rank_sparse(const PrimeFieldMatrix& m) {
  const std::uint32_t p = m.modulus();
  const std::size_t limit = std::min(m.rows(), m.cols());
  std::vector<std::size_t> order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return m.row(a).size() < m.row(b).size();
  });

  std::vector<std::int64_t> pivot_of_col(m.cols(), -1);
  std::vector<SparseRow> pivots;
  SparseRow work, scratch;
  for (std::size_t r : order) {
    if (pivots.size() == limit) break;
    work.assign(m.row(r).begin(), m.row(r).end());
    while (!work.empty()) {
      std::int64_t k = pivot_of_col[work.front().col];
      if (k < 0) {
        std::uint32_t inv = inverse_mod(work.front().value, p);
        for (auto& e : work) e.value = mul(e.value, inv, p);
        pivot_of_col[work.front().col] = static_cast<std::int64_t>(pivots.size());
        pivots.push_back(work);
        break;
      }
      axpy_into(work, work.front().value, pivots[static_cast<std::size_t>(k)], p, scratch);
      std::swap(work, scratch);
    }
  }
  return pivots.size();
}

std::size_t rank(const PrimeFieldMatrix& m) {
  return m.cols() < kDenseColumnLimit ? rank_dense(m) : rank_sparse(m);
}

std::size_t kernel_dimension(const PrimeFieldMatrix& m) { return m.cols() - rank(m); }

}  // namespace permcm
