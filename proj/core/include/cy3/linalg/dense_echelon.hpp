#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cy3/linalg/prime_field.hpp"

namespace cy3::linalg {

// Incremental reduced row echelon form over F_p, stored as doubles so that
// the block update  W -= W[:, pivots] * Basis  can run through BLAS dgemm.
// With entries in [0, p) every partial sum is an integer below rank * p^2,
// far under 2^53 for p < 2^16 and any rank that fits in memory, so the
// floating-point products are exact; results are reduced back mod p.
//
// Only the first `pivot_cols` columns may hold pivots; the remaining columns
// are carried along (right-hand sides). A row that reduces to zero on the
// pivot columns but not on the carried ones marks those carried columns as
// inconsistent.
class DenseEchelon {
 public:
  DenseEchelon(const PrimeField& field, std::size_t ncols, std::size_t pivot_cols,
               std::optional<std::size_t> rank_cap = std::nullopt);

  // k rows of length ncols, row-major, entries in [0, p). Rows past the rank
  // cap are ignored.
  void insert(std::span<const double> rows, std::size_t k);
  void insert_row(std::span<const std::uint32_t> row);

  std::size_t ncols() const noexcept { return ncols_; }
  std::size_t pivot_cols() const noexcept { return pivot_cols_; }
  std::size_t rank() const noexcept { return pivots_.size(); }
  bool saturated() const noexcept { return rank_cap_ && rank() >= *rank_cap_; }

  // Pivot column of basis row t (discovery order, not sorted).
  const std::vector<std::uint32_t>& pivots() const noexcept { return pivots_; }
  const double* basis_row(std::size_t t) const { return basis_.data() + t * ncols_; }
  std::uint32_t at(std::size_t t, std::size_t col) const {
    return static_cast<std::uint32_t>(basis_[t * ncols_ + col]);
  }

  // Carried columns hit by a dependent row with nonzero right-hand side.
  const std::vector<bool>& inconsistent() const noexcept { return inconsistent_; }

  // Non-pivot columns among the first pivot_cols, ascending.
  std::vector<std::uint32_t> free_columns() const;
  // One vector per free column f: x_f = 1, x_{pivot t} = -B[t][f].
  std::vector<Vector> kernel_basis() const;
  // Solution with free variables zero for carried column j (if consistent).
  std::optional<Vector> particular_solution(std::size_t carried) const;

 private:
  void reduce_mod(double* data, std::size_t count) const;
  void eliminate_batch(double* w, std::size_t k);

  PrimeField field_;
  double p_, inv_p_;
  std::size_t ncols_, pivot_cols_;
  std::optional<std::size_t> rank_cap_;
  std::vector<double> basis_;
  std::vector<std::uint32_t> pivots_;
  std::vector<std::int64_t> pivot_row_of_col_;
  std::vector<bool> inconsistent_;
};

}  // namespace cy3::linalg
