#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "cy3/linalg/prime_field.hpp"

namespace cy3::linalg {

struct Entry {
  std::uint32_t col;
  std::uint32_t val;  // in [1, p)
};

using SparseRow = std::vector<Entry>;

// Row-major sparse matrix over F_p. Rows are kept sorted by column with no
// stored zeros.
class SparseMatrixFp {
 public:
  SparseMatrixFp(std::size_t nrows, std::size_t ncols, std::uint32_t prime);

  std::size_t nrows() const noexcept { return rows_.size(); }
  std::size_t ncols() const noexcept { return ncols_; }
  std::uint32_t prime() const noexcept { return field_.prime(); }
  const PrimeField& field() const noexcept { return field_; }

  // Accepts unsorted entries with repeated columns and arbitrary signed
  // values; they are reduced, merged and zero-filtered.
  void set_row(std::size_t r, std::span<const std::pair<std::uint32_t, std::int64_t>> entries);
  std::size_t append_row(std::span<const std::pair<std::uint32_t, std::int64_t>> entries);
  // Pre-normalized row (sorted, nonzero, reduced); checked.
  std::size_t append_normalized(SparseRow row);

  std::span<const Entry> row(std::size_t r) const { return rows_[r]; }
  std::size_t nnz() const noexcept;

  Vector multiply(std::span<const std::uint32_t> x) const;
  SparseMatrixFp transpose() const;

  static SparseMatrixFp from_dense(const std::vector<Vector>& rows, std::size_t ncols, std::uint32_t prime);
  std::vector<Vector> to_dense() const;

  // Triplet text: "nrows ncols prime nnz" then one "row col value" line per
  // entry, 0-based.
  void dump(std::ostream& out) const;
  static SparseMatrixFp load(std::istream& in);

 private:
  std::size_t ncols_;
  PrimeField field_;
  std::vector<SparseRow> rows_;
};

SparseRow normalize_row(const PrimeField& f, std::size_t ncols,
                        std::span<const std::pair<std::uint32_t, std::int64_t>> entries);

}  // namespace cy3::linalg
