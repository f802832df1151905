#pragma once

#include <cstddef>
#include <vector>

#include "cy3/poly/sparse_poly.hpp"

namespace cy3::algebra {

using poly::RingDescriptor;
using poly::SparsePoly;

// Doubling rule used to build dimension 2k from dimension k. kStandard is
//   (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)),
// kOpposite multiplies in the opposite algebra (the table with every
// product reversed). With kStandard the basis 1, i, j, k, l, m, n, o is
// l = (0, 1), m = il, n = jl, o = kl and ij = k.
enum class Doubling { kStandard, kOpposite };

// Element of a Cayley-Dickson algebra of dimension 1, 2, 4 or 8 (reals,
// complex numbers, quaternions, octonions) with polynomial coordinates.
class CompositionElement {
 public:
  CompositionElement(const RingDescriptor& ring, std::size_t dim);
  CompositionElement(std::vector<SparsePoly> coords);

  static CompositionElement real(const SparsePoly& value, std::size_t dim);
  // Basis unit e_index (e_0 = 1).
  static CompositionElement unit(const RingDescriptor& ring, std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return coords_.size(); }
  const RingDescriptor& ring() const noexcept { return coords_.front().ring(); }
  const SparsePoly& operator[](std::size_t i) const { return coords_[i]; }
  SparsePoly& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<SparsePoly>& coords() const noexcept { return coords_; }

  CompositionElement conj() const;
  // Sum of squared coordinates.
  SparsePoly norm() const;
  const SparsePoly& real_part() const { return coords_.front(); }

  CompositionElement operator+(const CompositionElement& o) const;
  CompositionElement operator-(const CompositionElement& o) const;
  CompositionElement operator-() const;

  friend bool operator==(const CompositionElement& a, const CompositionElement& b) {
    return a.coords_ == b.coords_;
  }

 private:
  std::vector<SparsePoly> coords_;
};

CompositionElement multiply(const CompositionElement& a, const CompositionElement& b,
                            Doubling rule = Doubling::kStandard);

// Printed names of the octonion basis, "1 i j k l m n o".
const char* octonion_basis_name(std::size_t index);

}  // namespace cy3::algebra
