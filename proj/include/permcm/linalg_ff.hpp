#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace permcm {

/// Sparse matrix over F_p, stored by rows. Entries are kept reduced into
/// [1, p); explicit zeros are dropped and each (row, col) appears once.
class PrimeFieldMatrix {
 public:
  struct Entry {
    std::uint32_t col;
    std::uint32_t value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  /// Throws InputError unless `modulus` is a prime below 2^32.
  PrimeFieldMatrix(std::uint64_t modulus, std::size_t rows, std::size_t cols);

  static PrimeFieldMatrix identity(std::uint64_t modulus, std::size_t n);

  std::uint32_t modulus() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nonzeros() const noexcept;

  /// Adds `value` (any integer, reduced mod p) to entry (row, col).
  void add(std::size_t row, std::size_t col, std::int64_t value);
  std::uint32_t at(std::size_t row, std::size_t col) const;
  std::span<const Entry> row(std::size_t r) const noexcept { return rows_[r]; }

  /// Appends an empty row and returns its index.
  std::size_t append_row();

 private:
  std::uint32_t p_;
  std::size_t cols_;
  std::vector<std::vector<Entry>> rows_;
};

PrimeFieldMatrix transpose(const PrimeFieldMatrix& m);
PrimeFieldMatrix multiply(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b);

inline constexpr std::size_t kDenseColumnLimit = 2000;

/// Rank over F_p. Dispatches to dense elimination below kDenseColumnLimit
/// columns and to sparse elimination otherwise.
std::size_t rank(const PrimeFieldMatrix& m);

/// cols - rank.
std::size_t kernel_dimension(const PrimeFieldMatrix& m);

/// Row-by-row insertion into a dense echelon basis.
std::size_t rank_dense(const PrimeFieldMatrix& m);

/// Rows are inserted shortest first into a sparse echelon basis keyed by
/// leading column (Markowitz-style fill control). Stops early at full rank.
std::size_t rank_sparse(const PrimeFieldMatrix& m);

/// Row echelon basis of a subspace of F_p^width, grown one vector at a time.
/// Stored rows are monic at their leading column and zero before it.
class DenseEchelon {
 public:
  /// Throws InputError unless `modulus` is a prime below 2^32.
  DenseEchelon(std::uint64_t modulus, std::size_t width);

  /// Reduces `row` (entries already in [0, p)) against the basis. A nonzero
  /// remainder joins the basis; its leading column is returned.
  std::optional<std::size_t> insert(std::span<const std::uint32_t> row);

  std::size_t rank() const noexcept { return pivot_cols_.size(); }
  std::size_t width() const noexcept { return width_; }
  bool full() const noexcept { return rank() == width_; }
  bool is_pivot(std::size_t col) const { return row_of_col_.at(col) >= 0; }

 private:
  std::uint32_t p_;
  std::size_t width_;
  std::uint64_t safe_adds_;  // products summable before a reduction is due
  std::vector<std::int64_t> row_of_col_;
  std::vector<std::size_t> pivot_cols_;
  std::vector<std::uint32_t> rows_;  // rank() rows of length width_
  std::vector<std::uint64_t> work_;
};

/// Multiplicative inverse of a nonzero a mod p.
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

}  // namespace permcm
