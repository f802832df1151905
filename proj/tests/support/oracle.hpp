#pragma once

// Test-side reference implementations. Nothing here goes through the
// library's linear systems or eliminators: ranks come from a plain dense
// Gaussian elimination and morphism spaces from the folded mapping complex.

#include <cstdint>
#include <string>
#include <vector>

#include "cy3/mf/graded_mf.hpp"
#include "cy3/poly/sparse_poly.hpp"

namespace oracle {

using Dense = std::vector<std::vector<std::int64_t>>;

// Rank over F_p by schoolbook elimination.
std::size_t dense_rank(Dense m, std::uint32_t p);

// Does x solve m x = 0 over F_p?
bool in_kernel(const Dense& m, const std::vector<std::int64_t>& x, std::uint32_t p);

struct Cohomology {
  std::size_t cocycles = 0;
  std::size_t coboundaries = 0;
  std::size_t dim() const { return cocycles - coboundaries; }
};

// H^k of End(E) for E = (P1 -d1-> P0 -d0-> P1(d)), unfolded as the periodic
// sequence P1, P0, P1(d), P0(d), ... A degree-k map sends the summand at
// position s to position s + k; D(phi) = delta phi - (-1)^k phi delta.
// Unknowns are the coefficients of every entry, assembled by multiplying
// out unit matrices and reading off coefficients.
Cohomology mapping_cohomology(const cy3::mf::GradedMF& mf, int k);

struct SuiteCase {
  std::string name;
  cy3::poly::SparsePoly f;
  cy3::poly::PolyMatrix d1, d0;
  std::vector<int> alpha, beta;
};

// The exhaustive small suite over F_p:
//   1 variable:   (x^a | x^b), a + b <= 5;
//   2 variables:  (u | v) for monomials u, v of positive degree, deg uv <= 4;
//                 ((x + c y) | (x + c' y)) for all c, c' when p <= 7;
//   2x2 Koszul:   [a c; -e b] | [b -c; e a] for all monomials a, b, c, e
//                 with deg ab = deg ce = d, d in {2, 3};
//   2x2 sums:     (u1 | v1) + (u2 | v2) with u1 v1 = u2 v2 of degree <= 3.
std::vector<SuiteCase> small_suite(std::uint32_t p);

// Parses the LaTeX transcription of the printed Det expansion
// ("2y_1y_9y_{17} - 2y_2y_{10}y_{17}..."), over the integers in y1..y27.
// `printed_terms` gets the number of terms as written (before merging).
cy3::poly::SparsePoly parse_printed_det(const std::string& latex, std::size_t* printed_terms = nullptr);

std::string read_file(const std::string& path);

}  // namespace oracle
