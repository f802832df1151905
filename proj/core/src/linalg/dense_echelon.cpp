#include "cy3/linalg/dense_echelon.hpp"

#include <cblas.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cy3::linalg {

namespace {
constexpr std::size_t kBatchRows = 128;
}

DenseEchelon::DenseEchelon(const PrimeField& field, std::size_t ncols, std::size_t pivot_cols,
                           std::optional<std::size_t> rank_cap)
    : field_(field),
      p_(field.prime()),
      inv_p_(1.0 / field.prime()),
      ncols_(ncols),
      pivot_cols_(pivot_cols),
      rank_cap_(rank_cap),
      pivot_row_of_col_(ncols, -1),
      inconsistent_(ncols - std::min(pivot_cols, ncols), false) {
  if (pivot_cols > ncols) throw std::invalid_argument("DenseEchelon: pivot_cols > ncols");
  // A cap stops reading rows early, which would skip consistency checks.
  if (rank_cap && pivot_cols != ncols) {
    throw std::invalid_argument("DenseEchelon: a rank cap requires a system without carried columns");
  }
}

void DenseEchelon::reduce_mod(double* data, std::size_t count) const {
  for (std::size_t i = 0; i < count; ++i) {
    double x = data[i];
    x -= p_ * std::floor(x * inv_p_);
    if (x < 0) x += p_;
    if (x >= p_) x -= p_;
    data[i] = x;
  }
}

void DenseEchelon::insert_row(std::span<const std::uint32_t> row) {
  if (row.size() != ncols_) throw std::invalid_argument("DenseEchelon::insert_row: length mismatch");
  std::vector<double> tmp(row.begin(), row.end());
  insert(tmp, 1);
}

void DenseEchelon::insert(std::span<const double> rows, std::size_t k) {
  if (rows.size() != k * ncols_) throw std::invalid_argument("DenseEchelon::insert: size mismatch");
  std::vector<double> w;
  for (std::size_t start = 0; start < k && !saturated(); start += kBatchRows) {
    const std::size_t kb = std::min(kBatchRows, k - start);
    w.assign(rows.begin() + start * ncols_, rows.begin() + (start + kb) * ncols_);
    const std::size_t r = rank();
    if (r > 0) {
      std::vector<double> wp(kb * r);
      for (std::size_t i = 0; i < kb; ++i) {
        for (std::size_t t = 0; t < r; ++t) wp[i * r + t] = w[i * ncols_ + pivots_[t]];
      }
      cblas_dgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans, static_cast<int>(kb), static_cast<int>(ncols_),
                  static_cast<int>(r), -1.0, wp.data(), static_cast<int>(r), basis_.data(),
                  static_cast<int>(ncols_), 1.0, w.data(), static_cast<int>(ncols_));
      reduce_mod(w.data(), w.size());
    }
    eliminate_batch(w.data(), kb);
  }
}

// Gauss-Jordan on a batch already reduced against the basis, then folds the
// new pivot rows into the basis.
void DenseEchelon::eliminate_batch(double* w, std::size_t k) {
  const std::uint64_t p = field_.prime();
  std::vector<std::uint32_t> a(k * ncols_);
  for (std::size_t i = 0; i < k * ncols_; ++i) a[i] = static_cast<std::uint32_t>(w[i]);

  std::vector<std::size_t> new_rows;
  std::vector<std::uint32_t> new_piv;
  for (std::size_t i = 0; i < k; ++i) {
    if (rank_cap_ && rank() + new_rows.size() >= *rank_cap_) break;
    std::uint32_t* row = a.data() + i * ncols_;
    std::size_t c = 0;
    while (c < pivot_cols_ && row[c] == 0) ++c;
    if (c == pivot_cols_) {
      for (std::size_t j = pivot_cols_; j < ncols_; ++j) {
        if (row[j] != 0) inconsistent_[j - pivot_cols_] = true;
      }
      continue;
    }
    const std::uint64_t s = field_.inv(row[c]);
    for (std::size_t j = c; j < ncols_; ++j) row[j] = static_cast<std::uint32_t>(row[j] * s % p);
    for (std::size_t i2 = 0; i2 < k; ++i2) {
      if (i2 == i) continue;
      std::uint32_t* other = a.data() + i2 * ncols_;
      const std::uint64_t f = other[c];
      if (f == 0) continue;
      const std::uint64_t nf = p - f;
      for (std::size_t j = c; j < ncols_; ++j) {
        if (row[j] != 0) other[j] = static_cast<std::uint32_t>((other[j] + nf * row[j]) % p);
      }
    }
    new_rows.push_back(i);
    new_piv.push_back(static_cast<std::uint32_t>(c));
  }
  if (new_rows.empty()) return;

  const std::size_t r = rank();
  const std::size_t kn = new_rows.size();
  std::vector<double> rnew(kn * ncols_);
  for (std::size_t t = 0; t < kn; ++t) {
    const std::uint32_t* src = a.data() + new_rows[t] * ncols_;
    std::copy(src, src + ncols_, rnew.begin() + t * ncols_);
  }
  if (r > 0) {
    std::vector<double> bp(r * kn);
    for (std::size_t s = 0; s < r; ++s) {
      for (std::size_t t = 0; t < kn; ++t) bp[s * kn + t] = basis_[s * ncols_ + new_piv[t]];
    }
    cblas_dgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans, static_cast<int>(r), static_cast<int>(ncols_),
                static_cast<int>(kn), -1.0, bp.data(), static_cast<int>(kn), rnew.data(),
                static_cast<int>(ncols_), 1.0, basis_.data(), static_cast<int>(ncols_));
    reduce_mod(basis_.data(), basis_.size());
  }
  basis_.insert(basis_.end(), rnew.begin(), rnew.end());
  for (auto c : new_piv) {
    pivot_row_of_col_[c] = static_cast<std::int64_t>(pivots_.size());
    pivots_.push_back(c);
  }
}

std::vector<std::uint32_t> DenseEchelon::free_columns() const {
  std::vector<std::uint32_t> out;
  for (std::size_t c = 0; c < pivot_cols_; ++c) {
    if (pivot_row_of_col_[c] < 0) out.push_back(static_cast<std::uint32_t>(c));
  }
  return out;
}

std::vector<Vector> DenseEchelon::kernel_basis() const {
  std::vector<Vector> out;
  for (auto f : free_columns()) {
    Vector v(pivot_cols_, 0);
    v[f] = 1;
    for (std::size_t t = 0; t < pivots_.size(); ++t) v[pivots_[t]] = field_.neg(at(t, f));
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vector> DenseEchelon::particular_solution(std::size_t carried) const {
  if (carried >= inconsistent_.size()) throw std::out_of_range("particular_solution: no such column");
  if (inconsistent_[carried]) return std::nullopt;
  Vector x(pivot_cols_, 0);
  for (std::size_t t = 0; t < pivots_.size(); ++t) x[pivots_[t]] = at(t, pivot_cols_ + carried);
  return x;
}

}  // namespace cy3::linalg
