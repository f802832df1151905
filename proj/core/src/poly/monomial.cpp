#include "cy3/poly/monomial.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace cy3::poly {

Monomial::Monomial(std::size_t num_vars) {
  if (num_vars > kMaxVars) {
    throw std::invalid_argument("monomial: at most " + std::to_string(kMaxVars) + " variables");
  }
  num_vars_ = static_cast<std::uint8_t>(num_vars);
}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  Monomial m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) m.set(i, exponents[i]);
  return m;
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, unsigned power) {
  Monomial m(num_vars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned exponent) {
  if (i >= num_vars_) throw std::out_of_range("monomial: variable index out of range");
  if (exponent > std::numeric_limits<std::uint8_t>::max()) {
    throw std::overflow_error("monomial: exponent exceeds 255");
  }
  degree_ = static_cast<std::uint16_t>(degree_ - exps_[i] + exponent);
  exps_[i] = static_cast<std::uint8_t>(exponent);
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (num_vars_ != other.num_vars_) throw std::invalid_argument("monomial: length mismatch");
  Monomial out(num_vars_);
  for (std::size_t i = 0; i < num_vars_; ++i) {
    const unsigned e = unsigned{exps_[i]} + other.exps_[i];
    if (e > std::numeric_limits<std::uint8_t>::max()) {
      throw std::overflow_error("monomial: exponent exceeds 255");
    }
    out.exps_[i] = static_cast<std::uint8_t>(e);
  }
  out.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return out;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (num_vars_ != other.num_vars_) return false;
  for (std::size_t i = 0; i < num_vars_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& d) const {
  if (!d.divides(*this)) throw std::invalid_argument("monomial: not divisible");
  Monomial out(num_vars_);
  for (std::size_t i = 0; i < num_vars_; ++i) {
    out.exps_[i] = static_cast<std::uint8_t>(exps_[i] - d.exps_[i]);
  }
  out.degree_ = static_cast<std::uint16_t>(degree_ - d.degree_);
  return out;
}

std::vector<unsigned> Monomial::exponents() const {
  return {exps_.begin(), exps_.begin() + num_vars_};
}

std::size_t Monomial::hash() const noexcept {
  // FNV-1a over the live exponents.
  std::uint64_t h = 1469598103934665603ULL ^ num_vars_;
  for (std::size_t i = 0; i < num_vars_; ++i) {
    h ^= exps_[i];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

bool operator==(const Monomial& a, const Monomial& b) noexcept {
  if (a.num_vars_ != b.num_vars_ || a.degree_ != b.degree_) return false;
  for (std::size_t i = 0; i < a.num_vars_; ++i) {
    if (a.exps_[i] != b.exps_[i]) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  const std::size_t n = a.num_vars_ < b.num_vars_ ? a.num_vars_ : b.num_vars_;
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.exps_[i] <=> b.exps_[i]; c != 0) return c;
  }
  return a.num_vars_ <=> b.num_vars_;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    if (r > std::numeric_limits<std::uint64_t>::max() / num) {
      throw std::overflow_error("binomial overflow");
    }
    r = r * num / i;
  }
  return r;
}

std::size_t monomial_count(std::size_t num_vars, unsigned degree) {
  if (num_vars == 0) return degree == 0 ? 1 : 0;
  return static_cast<std::size_t>(binomial(num_vars + degree - 1, degree));
}

}  // namespace cy3::poly
