#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cy3/poly/sparse_poly.hpp"

namespace cy3::poly {

// All monomials of one degree, in descending grlex order (x1^d first).
// Column indexing of every linear system in the library goes through this.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t num_vars, unsigned degree);

  std::size_t size() const noexcept { return monomials_.size(); }
  std::size_t num_vars() const noexcept { return num_vars_; }
  unsigned degree() const noexcept { return degree_; }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }

  // Throws std::out_of_range for a monomial of another degree or length.
  std::size_t index_of(const Monomial& m) const;
  std::optional<std::size_t> find(const Monomial& m) const;

 private:
  std::size_t num_vars_;
  unsigned degree_;
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

// Dense coefficients of a homogeneous polynomial in `basis` order.
// Throws std::invalid_argument if p has a term of another degree.
std::vector<Integer> coeff_vector(const SparsePoly& p, const MonomialBasis& basis);
std::vector<Integer> coeff_vector(const SparsePoly& p, unsigned degree);

SparsePoly from_coeff_vector(const RingDescriptor& ring, const MonomialBasis& basis,
                             const std::vector<Integer>& coeffs);

}  // namespace cy3::poly
