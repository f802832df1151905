#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace cy3::linalg {

// F_p for an odd prime p < 2^16. Elements are plain words in [0, p); all
// inverses are tabulated up front, so inv() is a lookup.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t prime() const noexcept { return p_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return a * b % p_; }
  // Throws std::domain_error for 0.
  std::uint32_t inv(std::uint32_t a) const;

  std::uint32_t from_int(std::int64_t v) const noexcept {
    const std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t from_mpz(const mpz_class& v) const;

  static constexpr std::uint32_t kMaxPrime = 1u << 16;

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> inv_;
};

using Vector = std::vector<std::uint32_t>;

}  // namespace cy3::linalg
