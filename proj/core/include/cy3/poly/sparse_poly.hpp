#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "cy3/poly/monomial.hpp"

namespace cy3::poly {

using Integer = mpz_class;

struct RingDescriptor {
  std::size_t num_vars = 0;
  std::uint32_t characteristic = 0;  // 0 means the integers, otherwise an odd prime
  std::string var_prefix = "x";

  bool is_integral() const noexcept { return characteristic == 0; }
  // Throws std::invalid_argument for an even/composite characteristic or too many variables.
  void validate() const;

  // Variable naming does not take part in equality.
  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b) noexcept {
    return a.num_vars == b.num_vars && a.characteristic == b.characteristic;
  }
};

bool is_prime(std::uint64_t n) noexcept;

// Polynomial with terms sorted by descending monomial order and no zero
// coefficients. Over F_p coefficients are stored in [1, p).
class SparsePoly {
 public:
  struct Term {
    Monomial monomial;
    Integer coeff;
  };

  SparsePoly() = default;
  explicit SparsePoly(RingDescriptor ring);

  static SparsePoly constant(const RingDescriptor& ring, const Integer& c);
  static SparsePoly variable(const RingDescriptor& ring, std::size_t index);
  static SparsePoly monomial(const RingDescriptor& ring, const Monomial& m, const Integer& c = 1);
  // Normalizes: reduces coefficients, merges repeated monomials, drops zeros.
  static SparsePoly from_terms(const RingDescriptor& ring, std::vector<Term> terms);

  const RingDescriptor& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Highest total degree. Throws std::domain_error on the zero polynomial.
  unsigned degree() const;
  // The zero polynomial is homogeneous of every degree.
  bool is_homogeneous() const noexcept;
  bool is_homogeneous_of(unsigned d) const noexcept;
  Integer coeff(const Monomial& m) const;
  // Indices of the variables that occur.
  std::vector<std::size_t> support() const;

  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  SparsePoly& operator*=(const SparsePoly& other);
  SparsePoly scaled(const Integer& c) const;

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend bool operator==(const SparsePoly& a, const SparsePoly& b);

  // Normalized representative of c in this ring's coefficient domain.
  Integer normalize(const Integer& c) const;

 private:
  friend class PolyAccumulator;
  RingDescriptor ring_;
  std::vector<Term> terms_;
};

// Throws RingMismatch unless a and b share a ring.
void require_same_ring(const RingDescriptor& a, const RingDescriptor& b, const char* where);

SparsePoly poly_add(const SparsePoly& a, const SparsePoly& b);
SparsePoly poly_mul(const SparsePoly& a, const SparsePoly& b);
SparsePoly poly_pow(const SparsePoly& a, unsigned e);
SparsePoly poly_diff(const SparsePoly& p, std::size_t var_index);

// Replace variable j by images[j]. The images share one target ring; an
// integral source may map into F_p (coefficients are reduced).
SparsePoly poly_substitute(const SparsePoly& p, std::span<const SparsePoly> images);

// Integer polynomial reduced into F_prime.
SparsePoly reduce_mod(const SparsePoly& p, std::uint32_t prime);

// Evaluate at integer point (result normalized into the ring's coefficients).
Integer evaluate(const SparsePoly& p, std::span<const Integer> point);

// Accumulates sums of products without sorting after every step; used by
// matrix products and substitution.
class PolyAccumulator {
 public:
  explicit PolyAccumulator(const RingDescriptor& ring);
  void add(const SparsePoly& p, const Integer& scale = 1);
  void add_product(const SparsePoly& a, const SparsePoly& b);
  SparsePoly take();

 private:
  RingDescriptor ring_;
  std::unordered_map<Monomial, Integer, MonomialHash> zz_;
  std::unordered_map<Monomial, std::uint64_t, MonomialHash> fp_;
};

}  // namespace cy3::poly
