#include "cy3/linalg/sparse_matrix.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cy3/error.hpp"

namespace cy3::linalg {

SparseRow normalize_row(const PrimeField& f, std::size_t ncols,
                        std::span<const std::pair<std::uint32_t, std::int64_t>> entries) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> tmp;
  tmp.reserve(entries.size());
  for (const auto& [c, v] : entries) {
    if (c >= ncols) throw std::out_of_range("sparse row: column " + std::to_string(c) + " out of range");
    tmp.emplace_back(c, f.from_int(v));
  }
  std::sort(tmp.begin(), tmp.end());
  SparseRow row;
  row.reserve(tmp.size());
  for (const auto& [c, v] : tmp) {
    if (!row.empty() && row.back().col == c) {
      row.back().val = f.add(row.back().val, v);
    } else {
      row.push_back({c, v});
    }
  }
  std::erase_if(row, [](const Entry& e) { return e.val == 0; });
  return row;
}

SparseMatrixFp::SparseMatrixFp(std::size_t nrows, std::size_t ncols, std::uint32_t prime)
    : ncols_(ncols), field_(prime), rows_(nrows) {
  if (ncols > UINT32_MAX) throw std::invalid_argument("SparseMatrixFp: too many columns");
}

void SparseMatrixFp::set_row(std::size_t r, std::span<const std::pair<std::uint32_t, std::int64_t>> entries) {
  if (r >= rows_.size()) throw std::out_of_range("SparseMatrixFp::set_row");
  rows_[r] = normalize_row(field_, ncols_, entries);
}

std::size_t SparseMatrixFp::append_row(std::span<const std::pair<std::uint32_t, std::int64_t>> entries) {
  rows_.push_back(normalize_row(field_, ncols_, entries));
  return rows_.size() - 1;
}

std::size_t SparseMatrixFp::append_normalized(SparseRow row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i].col >= ncols_ || row[i].val == 0 || row[i].val >= prime() ||
        (i > 0 && row[i - 1].col >= row[i].col)) {
      throw std::invalid_argument("append_normalized: row is not normalized");
    }
  }
  rows_.push_back(std::move(row));
  return rows_.size() - 1;
}

std::size_t SparseMatrixFp::nnz() const noexcept {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

Vector SparseMatrixFp::multiply(std::span<const std::uint32_t> x) const {
  if (x.size() != ncols_) throw std::invalid_argument("SparseMatrixFp::multiply: length mismatch");
  const std::uint64_t p = prime();
  Vector y(rows_.size(), 0);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::uint64_t acc = 0;
    for (const auto& e : rows_[r]) {
      acc += std::uint64_t{e.val} * x[e.col];
      if (acc >= (1ULL << 62)) acc %= p;
    }
    y[r] = static_cast<std::uint32_t>(acc % p);
  }
  return y;
}

SparseMatrixFp SparseMatrixFp::transpose() const {
  SparseMatrixFp t(ncols_, rows_.size(), prime());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& e : rows_[r]) t.rows_[e.col].push_back({static_cast<std::uint32_t>(r), e.val});
  }
  return t;
}

SparseMatrixFp SparseMatrixFp::from_dense(const std::vector<Vector>& rows, std::size_t ncols, std::uint32_t prime) {
  SparseMatrixFp m(0, ncols, prime);
  for (const auto& r : rows) {
    if (r.size() != ncols) throw std::invalid_argument("from_dense: ragged rows");
    SparseRow row;
    for (std::size_t c = 0; c < ncols; ++c) {
      const std::uint32_t v = r[c] % prime;
      if (v != 0) row.push_back({static_cast<std::uint32_t>(c), v});
    }
    m.rows_.push_back(std::move(row));
  }
  return m;
}

std::vector<Vector> SparseMatrixFp::to_dense() const {
  std::vector<Vector> out(rows_.size(), Vector(ncols_, 0));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& e : rows_[r]) out[r][e.col] = e.val;
  }
  return out;
}

void SparseMatrixFp::dump(std::ostream& out) const {
  out << rows_.size() << ' ' << ncols_ << ' ' << prime() << ' ' << nnz() << '\n';
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& e : rows_[r]) out << r << ' ' << e.col << ' ' << e.val << '\n';
  }
}

SparseMatrixFp SparseMatrixFp::load(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError(lineno + 1, "header", "missing 'nrows ncols prime nnz' header");
  std::istringstream hs(line);
  long long nrows = -1, ncols = -1, prime = -1, nnz = -1;
  if (!(hs >> nrows >> ncols >> prime >> nnz) || nrows < 0 || ncols < 0 || nnz < 0) {
    throw ParseError(lineno, "header", "expected 'nrows ncols prime nnz'");
  }
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> rows(static_cast<std::size_t>(nrows));
  for (long long k = 0; k < nnz; ++k) {
    if (!next_line()) throw ParseError(lineno + 1, "entry", "expected " + std::to_string(nnz) + " entries");
    std::istringstream es(line);
    long long r, c, v;
    if (!(es >> r >> c >> v)) throw ParseError(lineno, "entry", "expected 'row col value'");
    if (r < 0 || r >= nrows) throw ParseError(lineno, "row", "row index out of range");
    if (c < 0 || c >= ncols) throw ParseError(lineno, "col", "column index out of range");
    rows[static_cast<std::size_t>(r)].emplace_back(static_cast<std::uint32_t>(c), v);
  }
  SparseMatrixFp m(0, static_cast<std::size_t>(ncols), static_cast<std::uint32_t>(prime));
  for (const auto& r : rows) m.append_row(r);
  return m;
}

}  // namespace cy3::linalg
