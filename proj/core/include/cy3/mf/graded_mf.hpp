#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cy3/linalg/eliminate.hpp"
#include "cy3/poly/poly_matrix.hpp"

namespace cy3::mf {

using poly::PolyMatrix;
using poly::RingDescriptor;
using poly::SparsePoly;

struct VerifyReport {
  bool ok = true;
  std::string product;  // "d0*d1" or "d1*d0" for the first failure
  std::size_t row = 0, col = 0;
  std::optional<SparsePoly> residual;  // (product - f I) at (row, col)

  std::string describe() const;
};

// Checks d0*d1 = f I and d1*d0 = f I entry by entry.
// Throws std::invalid_argument on a shape or ring mismatch.
VerifyReport mf_verify(const SparsePoly& f, const PolyMatrix& d1, const PolyMatrix& d0);

class MFError : public std::runtime_error {
 public:
  explicit MFError(const std::string& what, VerifyReport report = {})
      : std::runtime_error(what), report_(std::move(report)) {}
  const VerifyReport& report() const noexcept { return report_; }

 private:
  VerifyReport report_;
};

// Graded factorization P1 --d1--> P0 --d0--> P1(d) of a homogeneous f of
// degree d, with P1 = sum O(-alpha_c) and P0 = sum O(-beta_r). Entry (r, c)
// of d1 has degree alpha_c - beta_r, entry (c, r) of d0 has degree
// d - alpha_c + beta_r. Only constructible in a verified state.
class GradedMF {
 public:
  static GradedMF create(SparsePoly f, PolyMatrix d1, PolyMatrix d0, std::vector<int> alpha, std::vector<int> beta);
  // Twists alpha = deg(d1 entries), beta = 0, read off the nonzero entries.
  static GradedMF uniform(SparsePoly f, PolyMatrix d1, PolyMatrix d0);

  const SparsePoly& f() const noexcept { return f_; }
  const PolyMatrix& d1() const noexcept { return d1_; }
  const PolyMatrix& d0() const noexcept { return d0_; }
  const std::vector<int>& alpha() const noexcept { return alpha_; }
  const std::vector<int>& beta() const noexcept { return beta_; }
  const RingDescriptor& ring() const noexcept { return f_.ring(); }
  std::size_t size() const noexcept { return alpha_.size(); }
  int degree() const noexcept { return degree_; }
  bool uniform_twists() const;

  int d1_degree(std::size_t r, std::size_t c) const { return alpha_[c] - beta_[r]; }
  int d0_degree(std::size_t c, std::size_t r) const { return degree_ - alpha_[c] + beta_[r]; }

 private:
  GradedMF() = default;
  SparsePoly f_;
  PolyMatrix d1_, d0_;
  std::vector<int> alpha_, beta_;
  int degree_ = 0;
};

GradedMF direct_sum(const GradedMF& a, const GradedMF& b);

struct AdjugateResult {
  std::optional<PolyMatrix> partner;  // N with M N = N M = f I
  std::size_t kernel_dim = 0;         // dimension of the homogeneous solution space
  bool used_coupled_system = false;
  std::string diagnosis;
  linalg::SolveReport report;
};

// Quadratic (in general: degree deg f - deg M) partner of a square matrix M
// with homogeneous entries over F_p. Each column N e_j solves M x = f e_j;
// the columns share one coefficient matrix. If that matrix has a kernel the
// column-wise solutions need not satisfy N M = f I, and the coupled system
// (both identities, all columns at once) is solved instead.
AdjugateResult adjugate_partner(const PolyMatrix& M, const SparsePoly& f);

}  // namespace cy3::mf
