#include "cy3/linalg/rational.hpp"

#include <stdexcept>
#include <utility>

namespace cy3::linalg {

std::size_t rational_rank(IntegerMatrix a) {
  if (a.empty()) return 0;
  const std::size_t m = a.size();
  const std::size_t n = a.front().size();
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("rational_rank: ragged matrix");
  }
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < m; ++r) {
      for (std::size_t c = col + 1; c < n; ++c) {
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace cy3::linalg
