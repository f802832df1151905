#include "assembly.hpp"

#include <stdexcept>

namespace cy3::mf::detail {

const poly::MonomialBasis& BasisCache::get(int degree) {
  if (degree < 0) throw std::invalid_argument("BasisCache: negative degree");
  auto& slot = cache_[degree];
  if (!slot) slot = std::make_unique<poly::MonomialBasis>(num_vars_, static_cast<unsigned>(degree));
  return *slot;
}

Layout::Layout(BasisCache& bases, std::size_t rows, std::size_t cols, const std::vector<int>& degrees)
    : rows_(rows), cols_(cols), deg_(degrees), off_(rows * cols, 0), basis_(rows * cols, nullptr) {
  if (degrees.size() != rows * cols) throw std::invalid_argument("Layout: degree table size mismatch");
  for (std::size_t s = 0; s < deg_.size(); ++s) {
    off_[s] = size_;
    if (deg_[s] < 0) continue;
    basis_[s] = &bases.get(deg_[s]);
    size_ += basis_[s]->size();
  }
}

std::vector<std::uint32_t> Layout::flatten(const poly::PolyMatrix& m) const {
  if (m.rows() != rows_ || m.cols() != cols_) throw std::invalid_argument("Layout::flatten: shape mismatch");
  std::vector<std::uint32_t> v(size_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& e = m(i, j);
      if (e.is_zero()) continue;
      if (!present(i, j)) throw std::invalid_argument("Layout::flatten: nonzero entry in an absent slot");
      for (const auto& t : e.terms()) {
        if (static_cast<int>(t.monomial.degree()) != degree(i, j)) {
          throw std::invalid_argument("Layout::flatten: entry of the wrong degree");
        }
        v[offset(i, j) + basis(i, j).index_of(t.monomial)] = static_cast<std::uint32_t>(t.coeff.get_ui());
      }
    }
  }
  return v;
}

poly::PolyMatrix Layout::unflatten(const poly::RingDescriptor& ring, const std::vector<std::uint32_t>& v,
                                   std::size_t base) const {
  poly::PolyMatrix m(ring, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!present(i, j)) continue;
      std::vector<poly::SparsePoly::Term> terms;
      const auto& b = basis(i, j);
      for (std::size_t k = 0; k < b.size(); ++k) {
        const std::uint32_t c = v[base + offset(i, j) + k];
        if (c != 0) terms.push_back({b[k], static_cast<unsigned long>(c)});
      }
      m(i, j) = poly::SparsePoly::from_terms(ring, std::move(terms));
    }
  }
  return m;
}

SystemBuilder::SystemBuilder(std::size_t nrows, std::size_t ncols, std::uint32_t prime)
    : ncols_(ncols), prime_(prime), rows_(nrows) {}

void SystemBuilder::unknown_times_known(const Layout& X, std::size_t col_base, const poly::PolyMatrix& Y,
                                        const Layout& out, std::size_t row_base, int sign) {
  if (X.cols() != Y.rows() || out.rows() != X.rows() || out.cols() != Y.cols()) {
    throw std::invalid_argument("unknown_times_known: shape mismatch");
  }
  for (std::size_t i = 0; i < X.rows(); ++i) {
    for (std::size_t k = 0; k < X.cols(); ++k) {
      if (!X.present(i, k)) continue;
      const auto& bx = X.basis(i, k);
      for (std::size_t j = 0; j < Y.cols(); ++j) {
        const auto& y = Y(k, j);
        if (y.is_zero()) continue;
        if (!out.present(i, j)) throw std::logic_error("assembly: product lands in an absent slot");
        const auto& bo = out.basis(i, j);
        for (std::size_t nu = 0; nu < bx.size(); ++nu) {
          const std::uint32_t col = static_cast<std::uint32_t>(col_base + X.offset(i, k) + nu);
          for (const auto& t : y.terms()) {
            const std::size_t row = row_base + out.offset(i, j) + bo.index_of(bx[nu] * t.monomial);
            rows_[row].emplace_back(col, sign * static_cast<std::int64_t>(t.coeff.get_si()));
          }
        }
      }
    }
  }
}

void SystemBuilder::known_times_unknown(const poly::PolyMatrix& Y, const Layout& X, std::size_t col_base,
                                        const Layout& out, std::size_t row_base, int sign) {
  if (Y.cols() != X.rows() || out.rows() != Y.rows() || out.cols() != X.cols()) {
    throw std::invalid_argument("known_times_unknown: shape mismatch");
  }
  for (std::size_t i = 0; i < Y.rows(); ++i) {
    for (std::size_t k = 0; k < Y.cols(); ++k) {
      const auto& y = Y(i, k);
      if (y.is_zero()) continue;
      for (std::size_t j = 0; j < X.cols(); ++j) {
        if (!X.present(k, j)) continue;
        if (!out.present(i, j)) throw std::logic_error("assembly: product lands in an absent slot");
        const auto& bx = X.basis(k, j);
        const auto& bo = out.basis(i, j);
        for (std::size_t nu = 0; nu < bx.size(); ++nu) {
          const std::uint32_t col = static_cast<std::uint32_t>(col_base + X.offset(k, j) + nu);
          for (const auto& t : y.terms()) {
            const std::size_t row = row_base + out.offset(i, j) + bo.index_of(t.monomial * bx[nu]);
            rows_[row].emplace_back(col, sign * static_cast<std::int64_t>(t.coeff.get_si()));
          }
        }
      }
    }
  }
}

linalg::SparseMatrixFp SystemBuilder::build() const {
  linalg::SparseMatrixFp m(0, ncols_, prime_);
  for (const auto& r : rows_) m.append_row(r);
  return m;
}

}  // namespace cy3::mf::detail
