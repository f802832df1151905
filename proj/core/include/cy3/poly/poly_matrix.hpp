#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cy3/poly/sparse_poly.hpp"

namespace cy3::poly {

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(const RingDescriptor& ring, std::size_t rows, std::size_t cols);

  static PolyMatrix identity(const RingDescriptor& ring, std::size_t n);
  static PolyMatrix scalar(const SparsePoly& s, std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const RingDescriptor& ring() const noexcept { return ring_; }

  const SparsePoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  SparsePoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  // Bounds-checked; throws std::out_of_range.
  const SparsePoly& at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, SparsePoly value);

  PolyMatrix transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;
  // Every nonzero entry homogeneous of degree d.
  bool entries_homogeneous_of(unsigned d) const;

  PolyMatrix map(const std::function<SparsePoly(const SparsePoly&)>& fn) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  RingDescriptor ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<SparsePoly> data_;
};

// Block diagonal matrix diag(a, b).
PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b);

PolyMatrix substitute(const PolyMatrix& m, std::span<const SparsePoly> images);
PolyMatrix reduce_mod(const PolyMatrix& m, std::uint32_t prime);

}  // namespace cy3::poly
