#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cy3/linalg/sparse_matrix.hpp"

namespace cy3::linalg {

enum class Strategy {
  kAuto,        // Markowitz, switching to dense once the active part is dense
  kSparseOnly,  // Markowitz to the end
  kDenseOnly,   // stream every row through DenseEchelon
};

struct EliminationOptions {
  Strategy strategy = Strategy::kAuto;
  double dense_threshold = 0.20;       // active density that triggers the dense switch
  std::size_t min_dense_cells = 4096;  // never switch for tinier active blocks
  std::size_t markowitz_candidates = 4;
  // Known upper bound on the rank; elimination stops when it is reached.
  // Results are still re-verified, so a wrong cap cannot go unnoticed.
  std::optional<std::size_t> rank_cap;
};

struct SolveReport {
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  std::optional<Vector> particular_solution;
  std::chrono::duration<double> elapsed{0};
  std::string pivot_strategy;
};

// Row echelon form with unit pivots. Columns at index >= main_cols are
// carried right-hand sides and never pivots.
struct EchelonForm {
  std::size_t ncols = 0;
  std::size_t main_cols = 0;
  std::uint32_t prime = 0;
  std::vector<std::uint32_t> pivot_cols;  // elimination order
  std::vector<SparseRow> pivot_rows;      // pivot entry normalized to 1
  std::vector<bool> inconsistent;         // per carried column
  std::string strategy;

  std::size_t rank() const { return pivot_cols.size(); }
  std::vector<std::uint32_t> free_columns() const;
  std::vector<Vector> kernel_basis() const;
  std::optional<Vector> particular_solution(std::size_t carried) const;
};

// Eliminates A, treating its last `carried` columns as right-hand sides.
EchelonForm eliminate(const SparseMatrixFp& A, std::size_t carried = 0, const EliminationOptions& opts = {});

struct KernelResult {
  std::vector<Vector> basis;
  SolveReport report;
};

// Every returned vector is re-checked against A; std::logic_error on failure.
KernelResult kernel_basis(const SparseMatrixFp& A, const EliminationOptions& opts = {});
std::size_t rank(const SparseMatrixFp& A, const EliminationOptions& opts = {});

struct AffineResult {
  bool consistent = false;
  std::optional<Vector> x0;
  std::vector<Vector> kernel;
  SolveReport report;
};

// A x = b. An inconsistent system is a result, not an exception.
AffineResult solve_affine(const SparseMatrixFp& A, std::span<const std::uint32_t> b,
                          const EliminationOptions& opts = {}, bool want_kernel = true);

struct MultiAffineResult {
  std::vector<std::optional<Vector>> solutions;  // one per right-hand side
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  SolveReport report;
};

// A x_j = b_j for several right-hand sides sharing one elimination.
MultiAffineResult solve_affine_multi(const SparseMatrixFp& A, const std::vector<Vector>& rhs,
                                     const EliminationOptions& opts = {});

}  // namespace cy3::linalg
