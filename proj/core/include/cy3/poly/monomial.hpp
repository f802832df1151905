#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace cy3::poly {

inline constexpr std::size_t kMaxVars = 64;

// Exponent vector of fixed length with 8-bit exponents. Ordered by graded
// lexicographic order with variable 0 the largest: higher total degree wins,
// ties are broken by the first differing exponent.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars);

  static Monomial from_exponents(std::span<const unsigned> exponents);
  static Monomial variable(std::size_t num_vars, std::size_t index, unsigned power = 1);

  std::size_t num_vars() const noexcept { return num_vars_; }
  unsigned degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
  void set(std::size_t i, unsigned exponent);

  // Throws std::overflow_error if an exponent leaves the 8-bit range.
  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const noexcept;
  // Requires divides(other) from the divisor side: (*this) / d.
  Monomial operator/(const Monomial& d) const;

  std::vector<unsigned> exponents() const;
  std::size_t hash() const noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;

 private:
  std::array<std::uint8_t, kMaxVars> exps_{};
  std::uint8_t num_vars_ = 0;
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

// Binomial coefficient with overflow check.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Number of monomials of degree `degree` in `num_vars` variables.
std::size_t monomial_count(std::size_t num_vars, unsigned degree);

}  // namespace cy3::poly
