#include "cy3/poly/basis.hpp"

#include <stdexcept>
#include <string>

namespace cy3::poly {

namespace {

// Lexicographic enumeration with the first exponent running downwards gives
// descending grlex within a fixed degree.
void enumerate(std::size_t n, std::size_t pos, unsigned remaining, Monomial& cur,
               std::vector<Monomial>& out) {
  if (pos + 1 == n) {
    cur.set(pos, remaining);
    out.push_back(cur);
    cur.set(pos, 0);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur.set(pos, e);
    enumerate(n, pos + 1, remaining - e, cur, out);
  }
  cur.set(pos, 0);
}

}  // namespace

MonomialBasis::MonomialBasis(std::size_t num_vars, unsigned degree)
    : num_vars_(num_vars), degree_(degree) {
  monomials_.reserve(monomial_count(num_vars, degree));
  if (num_vars == 0) {
    if (degree == 0) monomials_.emplace_back(0);
  } else {
    Monomial cur(num_vars);
    enumerate(num_vars, 0, degree, cur, monomials_);
  }
  index_.reserve(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::optional<std::size_t> MonomialBasis::find(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t MonomialBasis::index_of(const Monomial& m) const {
  if (auto i = find(m)) return *i;
  throw std::out_of_range("monomial not in basis of degree " + std::to_string(degree_));
}

std::vector<Integer> coeff_vector(const SparsePoly& p, const MonomialBasis& basis) {
  if (p.ring().num_vars != basis.num_vars()) throw std::invalid_argument("coeff_vector: arity mismatch");
  std::vector<Integer> out(basis.size(), 0);
  for (const auto& t : p.terms()) {
    if (t.monomial.degree() != basis.degree()) {
      throw std::invalid_argument("coeff_vector: polynomial is not homogeneous of degree " +
                                  std::to_string(basis.degree()));
    }
    out[basis.index_of(t.monomial)] = t.coeff;
  }
  return out;
}

std::vector<Integer> coeff_vector(const SparsePoly& p, unsigned degree) {
  return coeff_vector(p, MonomialBasis(p.ring().num_vars, degree));
}

SparsePoly from_coeff_vector(const RingDescriptor& ring, const MonomialBasis& basis,
                             const std::vector<Integer>& coeffs) {
  if (coeffs.size() != basis.size() || ring.num_vars != basis.num_vars()) {
    throw std::invalid_argument("from_coeff_vector: size mismatch");
  }
  std::vector<SparsePoly::Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) terms.push_back({basis[i], coeffs[i]});
  }
  return SparsePoly::from_terms(ring, std::move(terms));
}

}  // namespace cy3::poly
