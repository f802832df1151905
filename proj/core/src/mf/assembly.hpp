#pragma once

// Turning polynomial matrix identities into linear systems over F_p.
// An unknown matrix X with homogeneous entries is flattened slot by slot:
// slot (i, j) of degree e owns C(m+e-1, e) consecutive coordinates, one per
// monomial in MonomialBasis order. Negative-degree slots are absent.

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "cy3/linalg/sparse_matrix.hpp"
#include "cy3/poly/basis.hpp"
#include "cy3/poly/poly_matrix.hpp"

namespace cy3::mf::detail {

class BasisCache {
 public:
  explicit BasisCache(std::size_t num_vars) : num_vars_(num_vars) {}
  const poly::MonomialBasis& get(int degree);
  std::size_t num_vars() const { return num_vars_; }

 private:
  std::size_t num_vars_;
  std::map<int, std::unique_ptr<poly::MonomialBasis>> cache_;
};

class Layout {
 public:
  Layout(BasisCache& bases, std::size_t rows, std::size_t cols, const std::vector<int>& degrees);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return size_; }
  int degree(std::size_t i, std::size_t j) const { return deg_[i * cols_ + j]; }
  bool present(std::size_t i, std::size_t j) const { return degree(i, j) >= 0; }
  std::size_t offset(std::size_t i, std::size_t j) const { return off_[i * cols_ + j]; }
  const poly::MonomialBasis& basis(std::size_t i, std::size_t j) const { return *basis_[i * cols_ + j]; }

  // Coordinates of a polynomial matrix in this layout.
  std::vector<std::uint32_t> flatten(const poly::PolyMatrix& m) const;
  poly::PolyMatrix unflatten(const poly::RingDescriptor& ring, const std::vector<std::uint32_t>& v,
                             std::size_t base = 0) const;

 private:
  std::size_t rows_, cols_, size_ = 0;
  std::vector<int> deg_;
  std::vector<std::size_t> off_;
  std::vector<const poly::MonomialBasis*> basis_;
};

// Rows keyed by output coordinate, columns by unknown coordinate.
class SystemBuilder {
 public:
  SystemBuilder(std::size_t nrows, std::size_t ncols, std::uint32_t prime);

  // out += sign * X * Y, X unknown (coordinates start at col_base), Y known.
  void unknown_times_known(const Layout& X, std::size_t col_base, const poly::PolyMatrix& Y, const Layout& out,
                           std::size_t row_base, int sign);
  // out += sign * Y * X.
  void known_times_unknown(const poly::PolyMatrix& Y, const Layout& X, std::size_t col_base, const Layout& out,
                           std::size_t row_base, int sign);

  linalg::SparseMatrixFp build() const;

 private:
  std::size_t ncols_;
  std::uint32_t prime_;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> rows_;
};

}  // namespace cy3::mf::detail
