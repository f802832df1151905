#include "cy3/linalg/prime_field.hpp"

#include <stdexcept>
#include <string>

#include "cy3/poly/sparse_poly.hpp"

namespace cy3::linalg {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || p >= kMaxPrime || !poly::is_prime(p)) {
    throw std::invalid_argument("PrimeField: need an odd prime below 65536, got " + std::to_string(p));
  }
  // inv(a) = -(p / a) * inv(p mod a), the usual linear-time table.
  inv_.assign(p, 0);
  inv_[1] = 1;
  for (std::uint32_t a = 2; a < p; ++a) inv_[a] = (p - (p / a) * inv_[p % a] % p) % p;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a == 0 || a >= p_) throw std::domain_error("PrimeField: zero has no inverse");
  return inv_[a];
}

std::uint32_t PrimeField::from_mpz(const mpz_class& v) const {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), p_));
}

}  // namespace cy3::linalg
