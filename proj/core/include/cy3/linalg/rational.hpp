#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace cy3::linalg {

using IntegerMatrix = std::vector<std::vector<mpz_class>>;

// Rank over Q by fraction-free (Bareiss) elimination. Rows may be ragged
// only if empty; otherwise all rows must share one length.
std::size_t rational_rank(IntegerMatrix rows);

}  // namespace cy3::linalg
