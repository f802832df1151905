#include "cy3/linalg/eliminate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "cy3/linalg/dense_echelon.hpp"

namespace cy3::linalg {

namespace {

using Clock = std::chrono::steady_clock;

const Entry* find_col(const SparseRow& row, std::uint32_t c) {
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::uint32_t key) { return e.col < key; });
  return (it != row.end() && it->col == c) ? &*it : nullptr;
}

// Right-looking sparse elimination. Pivot choice: among the few active
// columns of smallest count, take the entry of least Markowitz cost
// (row_len - 1) * (col_count - 1); ties go to shorter rows, then lower
// row index, then lower column, so the order depends only on the matrix.
class Markowitz {
 public:
  Markowitz(const SparseMatrixFp& A, std::size_t carried, const EliminationOptions& opts)
      : field_(A.field()),
        ncols_(A.ncols()),
        main_(A.ncols() - carried),
        opts_(opts),
        rows_(A.nrows()),
        active_(A.nrows(), 0),
        count_(A.ncols(), 0),
        col_rows_(A.ncols()),
        is_pivot_(A.ncols(), 0) {
    out_.ncols = ncols_;
    out_.main_cols = main_;
    out_.prime = field_.prime();
    out_.inconsistent.assign(carried, false);
    for (std::size_t r = 0; r < A.nrows(); ++r) {
      auto src = A.row(r);
      rows_[r].assign(src.begin(), src.end());
      std::size_t main_nnz = 0;
      for (const auto& e : rows_[r]) {
        if (e.col < main_) {
          ++count_[e.col];
          col_rows_[e.col].push_back(static_cast<std::uint32_t>(r));
          ++main_nnz;
        }
      }
      if (main_nnz > 0) {
        active_[r] = 1;
        ++active_rows_;
        nnz_main_ += main_nnz;
      } else {
        mark_inconsistent(rows_[r]);
      }
    }
    for (std::size_t c = 0; c < main_; ++c) {
      if (count_[c] > 0) cand_.emplace(count_[c], static_cast<std::uint32_t>(c));
    }
  }

  EchelonForm run() {
    out_.strategy = "markowitz";
    if (opts_.strategy == Strategy::kDenseOnly) {
      out_.strategy = "dense";
      dense_phase();
      return std::move(out_);
    }
    while (!cand_.empty()) {
      if (capped()) break;
      if (opts_.strategy == Strategy::kAuto) {
        const double cells = static_cast<double>(active_rows_) * static_cast<double>(cand_.size());
        if (cells >= static_cast<double>(opts_.min_dense_cells) &&
            static_cast<double>(nnz_main_) > opts_.dense_threshold * cells) {
          out_.strategy = "markowitz+dense";
          dense_phase();
          break;
        }
      }
      pivot_step();
    }
    return std::move(out_);
  }

 private:
  bool capped() const { return opts_.rank_cap && out_.rank() >= *opts_.rank_cap; }

  void mark_inconsistent(const SparseRow& row) {
    for (const auto& e : row) {
      if (e.col >= main_) out_.inconsistent[e.col - main_] = true;
    }
  }

  void set_count(std::uint32_t c, std::uint32_t value) {
    if (c >= main_) return;
    if (!is_pivot_[c]) {
      if (count_[c] > 0) cand_.erase({count_[c], c});
      if (value > 0) cand_.emplace(value, c);
    }
    count_[c] = value;
  }

  void deactivate(std::uint32_t r) {
    for (const auto& e : rows_[r]) {
      if (e.col < main_) {
        set_count(e.col, count_[e.col] - 1);
        --nnz_main_;
      }
    }
    active_[r] = 0;
    --active_rows_;
  }

  void push_col_row(std::uint32_t c, std::uint32_t r) {
    auto& list = col_rows_[c];
    list.push_back(r);
    if (list.size() > 4 * std::size_t{count_[c]} + 16) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      std::erase_if(list, [&](std::uint32_t s) { return !active_[s] || !find_col(rows_[s], c); });
    }
  }

  void pivot_step() {
    std::tuple<std::uint64_t, std::size_t, std::uint32_t, std::uint32_t> best{UINT64_MAX, 0, 0, 0};
    bool found = false;
    std::size_t examined = 0;
    for (auto it = cand_.begin(); it != cand_.end() && examined < opts_.markowitz_candidates; ++it, ++examined) {
      const auto [cc, c] = *it;
      for (auto r : col_rows_[c]) {
        if (!active_[r] || !find_col(rows_[r], c)) continue;
        const std::size_t len = rows_[r].size();
        std::tuple<std::uint64_t, std::size_t, std::uint32_t, std::uint32_t> key{
            std::uint64_t{len - 1} * (cc - 1), len, r, c};
        if (!found || key < best) {
          best = key;
          found = true;
        }
      }
    }
    if (!found) throw std::logic_error("markowitz: candidate column without an active row");
    const std::uint32_t r = std::get<2>(best);
    const std::uint32_t c = std::get<3>(best);

    SparseRow pr = rows_[r];
    const std::uint32_t s_inv = field_.inv(find_col(pr, c)->val);
    for (auto& e : pr) e.val = field_.mul(e.val, s_inv);
    deactivate(r);
    cand_.erase({count_[c], c});
    is_pivot_[c] = 1;

    std::vector<std::uint32_t> targets;
    targets.swap(col_rows_[c]);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (auto s : targets) {
      if (!active_[s]) continue;
      const Entry* hit = find_col(rows_[s], c);
      if (!hit) continue;
      axpy_row(s, field_.neg(hit->val), pr);
    }
    out_.pivot_cols.push_back(c);
    out_.pivot_rows.push_back(std::move(pr));
  }

  // rows_[s] += f * pr, maintaining counts and column lists.
  void axpy_row(std::uint32_t s, std::uint32_t f, const SparseRow& pr) {
    const SparseRow& old = rows_[s];
    SparseRow merged;
    merged.reserve(old.size() + pr.size());
    std::vector<std::uint32_t> filled;
    std::size_t i = 0, j = 0;
    while (i < old.size() || j < pr.size()) {
      if (j == pr.size() || (i < old.size() && old[i].col < pr[j].col)) {
        merged.push_back(old[i++]);
      } else if (i == old.size() || pr[j].col < old[i].col) {
        const std::uint32_t c = pr[j].col;
        merged.push_back({c, field_.mul(f, pr[j].val)});
        if (c < main_) {
          set_count(c, count_[c] + 1);
          ++nnz_main_;
          filled.push_back(c);
        }
        ++j;
      } else {
        const std::uint32_t c = old[i].col;
        const std::uint32_t v = field_.add(old[i].val, field_.mul(f, pr[j].val));
        if (v != 0) {
          merged.push_back({c, v});
        } else if (c < main_) {
          set_count(c, count_[c] - 1);
          --nnz_main_;
        }
        ++i;
        ++j;
      }
    }
    rows_[s] = std::move(merged);
    // Column lists are touched only now: compaction inspects rows_[s].
    for (auto c : filled) push_col_row(c, s);
    if (rows_[s].empty() || rows_[s].front().col >= main_) {
      mark_inconsistent(rows_[s]);
      active_[s] = 0;
      --active_rows_;
    }
  }

  void dense_phase() {
    std::vector<std::uint32_t> cols;
    for (const auto& [cc, c] : cand_) cols.push_back(c);
    std::sort(cols.begin(), cols.end());
    const std::size_t k = cols.size();
    const std::size_t carried = ncols_ - main_;
    std::vector<std::int64_t> local(ncols_, -1);
    for (std::size_t i = 0; i < k; ++i) local[cols[i]] = static_cast<std::int64_t>(i);
    for (std::size_t j = 0; j < carried; ++j) local[main_ + j] = static_cast<std::int64_t>(k + j);
    const std::size_t width = k + carried;

    std::optional<std::size_t> cap;
    if (opts_.rank_cap && carried == 0) cap = *opts_.rank_cap - std::min(*opts_.rank_cap, out_.rank());
    if (cap && *cap == 0) return;
    DenseEchelon de(field_, width, k, cap);

    constexpr std::size_t kStream = 256;
    std::vector<double> buf;
    std::size_t in_buf = 0;
    auto flush = [&] {
      if (in_buf > 0) de.insert(buf, in_buf);
      buf.clear();
      in_buf = 0;
    };
    for (std::size_t r = 0; r < rows_.size() && !de.saturated(); ++r) {
      if (!active_[r]) continue;
      buf.resize((in_buf + 1) * width, 0.0);
      double* dst = buf.data() + in_buf * width;
      for (const auto& e : rows_[r]) {
        const auto l = local[e.col];
        if (l < 0) throw std::logic_error("dense phase: active row touches a retired column");
        dst[l] = e.val;
      }
      if (++in_buf == kStream) flush();
    }
    flush();

    for (std::size_t t = 0; t < de.rank(); ++t) {
      SparseRow row;
      const double* b = de.basis_row(t);
      // Map back to original columns (ascending because cols is sorted and
      // carried columns come last in both numberings).
      for (std::size_t l = 0; l < width; ++l) {
        if (b[l] != 0.0) {
          const std::uint32_t c = l < k ? cols[l] : static_cast<std::uint32_t>(main_ + (l - k));
          row.push_back({c, static_cast<std::uint32_t>(b[l])});
        }
      }
      out_.pivot_cols.push_back(cols[de.pivots()[t]]);
      out_.pivot_rows.push_back(std::move(row));
    }
    for (std::size_t j = 0; j < carried; ++j) {
      if (de.inconsistent()[j]) out_.inconsistent[j] = true;
    }
  }

  const PrimeField& field_;
  std::size_t ncols_, main_;
  EliminationOptions opts_;
  std::vector<SparseRow> rows_;
  std::vector<char> active_;
  std::vector<std::uint32_t> count_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<char> is_pivot_;
  std::set<std::pair<std::uint32_t, std::uint32_t>> cand_;
  std::size_t active_rows_ = 0;
  std::size_t nnz_main_ = 0;
  EchelonForm out_;
};

void verify_kernel(const SparseMatrixFp& A, const std::vector<Vector>& basis) {
  for (const auto& v : basis) {
    const Vector y = A.multiply(v);
    if (std::any_of(y.begin(), y.end(), [](std::uint32_t x) { return x != 0; })) {
      throw std::logic_error("kernel_basis: returned vector fails A v = 0");
    }
  }
}

SparseMatrixFp augment(const SparseMatrixFp& A, const std::vector<Vector>& rhs) {
  for (const auto& b : rhs) {
    if (b.size() != A.nrows()) throw std::invalid_argument("solve_affine: right-hand side length mismatch");
  }
  SparseMatrixFp aug(0, A.ncols() + rhs.size(), A.prime());
  for (std::size_t r = 0; r < A.nrows(); ++r) {
    auto src = A.row(r);
    SparseRow row(src.begin(), src.end());
    for (std::size_t j = 0; j < rhs.size(); ++j) {
      const std::uint32_t v = rhs[j][r] % A.prime();
      if (v != 0) row.push_back({static_cast<std::uint32_t>(A.ncols() + j), v});
    }
    aug.append_normalized(std::move(row));
  }
  return aug;
}

bool check_solution(const SparseMatrixFp& A, const Vector& x, const Vector& b) {
  const Vector y = A.multiply(x);
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] != b[i] % A.prime()) return false;
  }
  return true;
}

}  // namespace

std::vector<std::uint32_t> EchelonForm::free_columns() const {
  std::vector<char> piv(main_cols, 0);
  for (auto c : pivot_cols) piv[c] = 1;
  std::vector<std::uint32_t> out;
  for (std::size_t c = 0; c < main_cols; ++c) {
    if (!piv[c]) out.push_back(static_cast<std::uint32_t>(c));
  }
  return out;
}

std::vector<Vector> EchelonForm::kernel_basis() const {
  const PrimeField f(prime);
  std::vector<Vector> out;
  for (auto fc : free_columns()) {
    Vector x(main_cols, 0);
    x[fc] = 1;
    for (std::size_t t = pivot_cols.size(); t-- > 0;) {
      std::uint64_t acc = 0;
      for (const auto& e : pivot_rows[t]) {
        if (e.col < main_cols && e.col != pivot_cols[t]) acc += std::uint64_t{e.val} * x[e.col];
      }
      x[pivot_cols[t]] = f.neg(static_cast<std::uint32_t>(acc % prime));
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<Vector> EchelonForm::particular_solution(std::size_t carried) const {
  if (carried >= inconsistent.size()) throw std::out_of_range("particular_solution: no such column");
  if (inconsistent[carried]) return std::nullopt;
  const PrimeField f(prime);
  const std::uint32_t rhs_col = static_cast<std::uint32_t>(main_cols + carried);
  Vector x(main_cols, 0);
  for (std::size_t t = pivot_cols.size(); t-- > 0;) {
    std::uint64_t acc = 0;
    std::uint32_t rhs = 0;
    for (const auto& e : pivot_rows[t]) {
      if (e.col == rhs_col) rhs = e.val;
      else if (e.col < main_cols && e.col != pivot_cols[t]) acc += std::uint64_t{e.val} * x[e.col];
    }
    x[pivot_cols[t]] = f.sub(rhs, static_cast<std::uint32_t>(acc % prime));
  }
  return x;
}

EchelonForm eliminate(const SparseMatrixFp& A, std::size_t carried, const EliminationOptions& opts) {
  if (carried > A.ncols()) throw std::invalid_argument("eliminate: more carried columns than columns");
  return Markowitz(A, carried, opts).run();
}

KernelResult kernel_basis(const SparseMatrixFp& A, const EliminationOptions& opts) {
  const auto t0 = Clock::now();
  const EchelonForm ech = eliminate(A, 0, opts);
  KernelResult res;
  res.basis = ech.kernel_basis();
  verify_kernel(A, res.basis);
  res.report.rank = ech.rank();
  res.report.kernel_dim = res.basis.size();
  res.report.pivot_strategy = ech.strategy;
  if (res.report.rank + res.report.kernel_dim != A.ncols()) throw std::logic_error("kernel_basis: rank + kernel != ncols");
  res.report.elapsed = Clock::now() - t0;
  return res;
}

std::size_t rank(const SparseMatrixFp& A, const EliminationOptions& opts) { return eliminate(A, 0, opts).rank(); }

AffineResult solve_affine(const SparseMatrixFp& A, std::span<const std::uint32_t> b, const EliminationOptions& opts,
                          bool want_kernel) {
  const auto t0 = Clock::now();
  const Vector bv(b.begin(), b.end());
  EliminationOptions o = opts;
  o.rank_cap.reset();
  const EchelonForm ech = eliminate(augment(A, {bv}), 1, o);
  AffineResult res;
  res.x0 = ech.particular_solution(0);
  res.consistent = res.x0.has_value();
  if (res.x0 && !check_solution(A, *res.x0, bv)) throw std::logic_error("solve_affine: particular solution fails A x = b");
  if (want_kernel) {
    res.kernel = ech.kernel_basis();
    verify_kernel(A, res.kernel);
  }
  res.report.rank = ech.rank();
  res.report.kernel_dim = A.ncols() - ech.rank();
  res.report.particular_solution = res.x0;
  res.report.pivot_strategy = ech.strategy;
  res.report.elapsed = Clock::now() - t0;
  return res;
}

MultiAffineResult solve_affine_multi(const SparseMatrixFp& A, const std::vector<Vector>& rhs,
                                     const EliminationOptions& opts) {
  const auto t0 = Clock::now();
  EliminationOptions o = opts;
  o.rank_cap.reset();
  const EchelonForm ech = eliminate(augment(A, rhs), rhs.size(), o);
  MultiAffineResult res;
  for (std::size_t j = 0; j < rhs.size(); ++j) {
    auto x = ech.particular_solution(j);
    if (x && !check_solution(A, *x, rhs[j])) throw std::logic_error("solve_affine_multi: solution fails A x = b");
    res.solutions.push_back(std::move(x));
  }
  res.rank = ech.rank();
  res.kernel_dim = A.ncols() - ech.rank();
  res.report.rank = res.rank;
  res.report.kernel_dim = res.kernel_dim;
  res.report.pivot_strategy = ech.strategy;
  res.report.elapsed = Clock::now() - t0;
  return res;
}

}  // namespace cy3::linalg
