#pragma once

#include <array>
#include <cstddef>

#include "cy3/algebra/composition.hpp"
#include "cy3/poly/poly_matrix.hpp"

namespace cy3::algebra {

// Hermitian 3x3 matrix over a composition algebra
//
//   [ l1        s1        conj(s2) ]
//   [ conj(s1)  l2        s3       ]
//   [ s2        conj(s3)  l3       ]
//
// with real diagonal.
struct JordanElement {
  std::array<SparsePoly, 3> diag;
  std::array<CompositionElement, 3> off;

  std::size_t algebra_dim() const { return off[0].dim(); }
  // Entry (r, c) of the matrix above.
  CompositionElement entry(std::size_t r, std::size_t c) const;
};

// Generic element in 3*dim + 3 variables "y": s1 = y1..y_dim, s2 and s3 the
// next two blocks, then l1, l2, l3. For dim = 8 this is the 27-dimensional
// assignment s1 = y1 1 + y2 i + ... + y8 o, l1 = y25.
JordanElement generic_jordan_element(std::size_t dim);

// Cubic norm from the Jordan product A*B = (AB + BA)/2 through
//   6 det X = tr(X)^3 - 3 tr(X) tr(X^2) + 2 tr(X*X^2)
// over the integers (the division by 6 is checked to be exact).
SparsePoly jordan_det(const JordanElement& x, Doubling rule = Doubling::kStandard);

// l1 l2 l3 - l1 N(s3) - l2 N(s2) - l3 N(s1) + 2 Re(s1 s3 s2).
SparsePoly jordan_det_closed_form(const JordanElement& x, Doubling rule = Doubling::kStandard);

// Det of the generic 27-dimensional element.
SparsePoly e6_cubic(Doubling rule = Doubling::kStandard);

// M[k][i] = d^2 f / dy_k dy_i; throws std::invalid_argument unless f is a
// nonzero homogeneous cubic.
poly::PolyMatrix hessian(const SparsePoly& f);

// Gradient vector (df/dy_1, ..., df/dy_n).
std::vector<SparsePoly> gradient(const SparsePoly& f);

}  // namespace cy3::algebra
