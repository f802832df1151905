#include "cy3/algebra/jordan.hpp"

#include <stdexcept>

#include "cy3/error.hpp"

namespace cy3::algebra {

namespace {

using Mat3 = std::array<std::array<CompositionElement, 3>, 3>;

Mat3 to_matrix(const JordanElement& x) {
  auto e = [&](std::size_t r, std::size_t c) { return x.entry(r, c); };
  return {{{e(0, 0), e(0, 1), e(0, 2)}, {e(1, 0), e(1, 1), e(1, 2)}, {e(2, 0), e(2, 1), e(2, 2)}}};
}

Mat3 mat_mul(const Mat3& a, const Mat3& b, Doubling rule) {
  Mat3 out = a;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CompositionElement s = multiply(a[i][0], b[0][j], rule);
      s = s + multiply(a[i][1], b[1][j], rule);
      s = s + multiply(a[i][2], b[2][j], rule);
      out[i][j] = std::move(s);
    }
  }
  return out;
}

// Real part of the diagonal sum.
SparsePoly real_trace(const Mat3& m) {
  return m[0][0].real_part() + m[1][1].real_part() + m[2][2].real_part();
}

}  // namespace

CompositionElement JordanElement::entry(std::size_t r, std::size_t c) const {
  const std::size_t dim = algebra_dim();
  if (r > 2 || c > 2) throw std::out_of_range("Jordan entry index");
  if (r == c) return CompositionElement::real(diag[r], dim);
  switch (r * 3 + c) {
    case 1: return off[0];         // (0,1) s1
    case 2: return off[1].conj();  // (0,2) conj(s2)
    case 3: return off[0].conj();  // (1,0) conj(s1)
    case 5: return off[2];         // (1,2) s3
    case 6: return off[1];         // (2,0) s2
    default: return off[2].conj(); // (2,1) conj(s3)
  }
}

JordanElement generic_jordan_element(std::size_t dim) {
  const RingDescriptor ring{3 * dim + 3, 0, "y"};
  auto block = [&](std::size_t first) {
    std::vector<SparsePoly> coords;
    for (std::size_t i = 0; i < dim; ++i) coords.push_back(SparsePoly::variable(ring, first + i));
    return CompositionElement(std::move(coords));
  };
  return JordanElement{
      {SparsePoly::variable(ring, 3 * dim), SparsePoly::variable(ring, 3 * dim + 1),
       SparsePoly::variable(ring, 3 * dim + 2)},
      {block(0), block(dim), block(2 * dim)}};
}

SparsePoly jordan_det(const JordanElement& x, Doubling rule) {
  if (!x.diag[0].ring().is_integral()) throw RingMismatch("jordan_det: expects integer coordinates");
  const Mat3 m = to_matrix(x);
  const Mat3 m2 = mat_mul(m, m, rule);
  // 2 tr(X*X^2) = tr(X X^2 + X^2 X).
  const SparsePoly t3 = real_trace(mat_mul(m, m2, rule)) + real_trace(mat_mul(m2, m, rule));
  const SparsePoly t1 = real_trace(m);
  const SparsePoly t2 = real_trace(m2);
  const SparsePoly six_det = t1 * t1 * t1 - (t1 * t2).scaled(3) + t3;

  std::vector<SparsePoly::Term> terms;
  for (const auto& t : six_det.terms()) {
    if (!mpz_divisible_ui_p(t.coeff.get_mpz_t(), 6)) {
      throw std::logic_error("jordan_det: trace identity produced a coefficient not divisible by 6");
    }
    terms.push_back({t.monomial, t.coeff / 6});
  }
  return SparsePoly::from_terms(six_det.ring(), std::move(terms));
}

SparsePoly jordan_det_closed_form(const JordanElement& x, Doubling rule) {
  const auto& [l1, l2, l3] = x.diag;
  const auto& [s1, s2, s3] = x.off;
  const CompositionElement triple = multiply(multiply(s1, s3, rule), s2, rule);
  return l1 * l2 * l3 - l1 * s3.norm() - l2 * s2.norm() - l3 * s1.norm() + triple.real_part().scaled(2);
}

SparsePoly e6_cubic(Doubling rule) { return jordan_det(generic_jordan_element(8), rule); }

std::vector<SparsePoly> gradient(const SparsePoly& f) {
  std::vector<SparsePoly> g;
  g.reserve(f.ring().num_vars);
  for (std::size_t i = 0; i < f.ring().num_vars; ++i) g.push_back(poly::poly_diff(f, i));
  return g;
}

poly::PolyMatrix hessian(const SparsePoly& f) {
  if (f.is_zero() || !f.is_homogeneous_of(3)) {
    throw std::invalid_argument("hessian: expected a nonzero homogeneous cubic");
  }
  const std::size_t n = f.ring().num_vars;
  const auto g = gradient(f);
  poly::PolyMatrix m(f.ring(), n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = k; i < n; ++i) {
      m(k, i) = poly::poly_diff(g[k], i);
      m(i, k) = m(k, i);
    }
  }
  return m;
}

}  // namespace cy3::algebra
