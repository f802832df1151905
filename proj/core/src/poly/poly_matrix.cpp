#include "cy3/poly/poly_matrix.hpp"

#include <stdexcept>

namespace cy3::poly {

PolyMatrix::PolyMatrix(const RingDescriptor& ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, SparsePoly(ring)) {}

PolyMatrix PolyMatrix::identity(const RingDescriptor& ring, std::size_t n) {
  return scalar(SparsePoly::constant(ring, 1), n);
}

PolyMatrix PolyMatrix::scalar(const SparsePoly& s, std::size_t n) {
  PolyMatrix m(s.ring(), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

const SparsePoly& PolyMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("PolyMatrix index out of range");
  return data_[r * cols_ + c];
}

void PolyMatrix::set(std::size_t r, std::size_t c, SparsePoly value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("PolyMatrix index out of range");
  require_same_ring(ring_, value.ring(), "PolyMatrix::set");
  data_[r * cols_ + c] = std::move(value);
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool PolyMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if (!((*this)(r, c) == (*this)(c, r))) return false;
    }
  }
  return true;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : data_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool PolyMatrix::entries_homogeneous_of(unsigned d) const {
  for (const auto& e : data_) {
    if (!e.is_homogeneous_of(d)) return false;
  }
  return true;
}

PolyMatrix PolyMatrix::map(const std::function<SparsePoly(const SparsePoly&)>& fn) const {
  if (data_.empty()) return *this;
  std::vector<SparsePoly> out;
  out.reserve(data_.size());
  for (const auto& e : data_) out.push_back(fn(e));
  PolyMatrix m;
  m.ring_ = out.front().ring();
  m.rows_ = rows_;
  m.cols_ = cols_;
  for (const auto& e : out) require_same_ring(m.ring_, e.ring(), "PolyMatrix::map");
  m.data_ = std::move(out);
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a.ring_, b.ring_, "matrix product");
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  PolyMatrix out(a.ring_, a.rows_, b.cols_);
  PolyAccumulator acc(a.ring_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const SparsePoly& x = a(i, k);
        const SparsePoly& y = b(k, j);
        if (!x.is_zero() && !y.is_zero()) acc.add_product(x, y);
      }
      out(i, j) = acc.take();
    }
  }
  return out;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a.ring_, b.ring_, "matrix sum");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  PolyMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a.ring_, b.ring_, "matrix difference");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("matrix difference: shape mismatch");
  }
  PolyMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a.ring(), b.ring(), "direct_sum");
  PolyMatrix out(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  }
  return out;
}

PolyMatrix substitute(const PolyMatrix& m, std::span<const SparsePoly> images) {
  if (images.empty()) throw std::invalid_argument("substitute: no images");
  PolyMatrix out(images.front().ring(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = poly_substitute(m(r, c), images);
  }
  return out;
}

PolyMatrix reduce_mod(const PolyMatrix& m, std::uint32_t prime) {
  RingDescriptor r = m.ring();
  r.characteristic = prime;
  PolyMatrix out(r, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = reduce_mod(m(i, j), prime);
  }
  return out;
}

}  // namespace cy3::poly
