#include "cy3/poly/sparse_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cy3/error.hpp"

namespace cy3::poly {

namespace {

bool term_order(const SparsePoly::Term& a, const SparsePoly::Term& b) {
  return a.monomial > b.monomial;
}

std::uint64_t to_residue(const Integer& c, std::uint32_t p) {
  Integer r = c % p;
  if (r < 0) r += p;
  return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

void RingDescriptor::validate() const {
  if (num_vars > kMaxVars) throw std::invalid_argument("ring: too many variables");
  if (characteristic != 0 && (characteristic == 2 || !is_prime(characteristic))) {
    throw std::invalid_argument("ring: characteristic must be 0 or an odd prime, got " +
                                std::to_string(characteristic));
  }
}

void require_same_ring(const RingDescriptor& a, const RingDescriptor& b, const char* where) {
  if (!(a == b)) {
    throw RingMismatch(std::string(where) + ": ring mismatch (" + std::to_string(a.num_vars) +
                       " vars, char " + std::to_string(a.characteristic) + " vs " +
                       std::to_string(b.num_vars) + " vars, char " +
                       std::to_string(b.characteristic) + ")");
  }
}

SparsePoly::SparsePoly(RingDescriptor ring) : ring_(std::move(ring)) { ring_.validate(); }

Integer SparsePoly::normalize(const Integer& c) const {
  if (ring_.is_integral()) return c;
  return Integer(static_cast<unsigned long>(to_residue(c, ring_.characteristic)));
}

SparsePoly SparsePoly::constant(const RingDescriptor& ring, const Integer& c) {
  return monomial(ring, Monomial(ring.num_vars), c);
}

SparsePoly SparsePoly::variable(const RingDescriptor& ring, std::size_t index) {
  if (index >= ring.num_vars) throw std::out_of_range("variable index out of range");
  return monomial(ring, Monomial::variable(ring.num_vars, index), 1);
}

SparsePoly SparsePoly::monomial(const RingDescriptor& ring, const Monomial& m, const Integer& c) {
  SparsePoly p(ring);
  if (m.num_vars() != ring.num_vars) throw std::invalid_argument("monomial length mismatch");
  Integer n = p.normalize(c);
  if (n != 0) p.terms_.push_back({m, std::move(n)});
  return p;
}

SparsePoly SparsePoly::from_terms(const RingDescriptor& ring, std::vector<Term> terms) {
  SparsePoly p(ring);
  for (auto& t : terms) {
    if (t.monomial.num_vars() != ring.num_vars) throw std::invalid_argument("monomial length mismatch");
    t.coeff = p.normalize(t.coeff);
  }
  std::sort(terms.begin(), terms.end(), term_order);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff = p.normalize(p.terms_.back().coeff + t.coeff);
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.coeff == 0; });
  return p;
}

unsigned SparsePoly::degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial is undefined");
  // Descending grlex puts the highest degree first.
  return terms_.front().monomial.degree();
}

bool SparsePoly::is_homogeneous() const noexcept {
  return terms_.empty() || is_homogeneous_of(terms_.front().monomial.degree());
}

bool SparsePoly::is_homogeneous_of(unsigned d) const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.monomial.degree() == d; });
}

Integer SparsePoly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.monomial > key; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

std::vector<std::size_t> SparsePoly::support() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < ring_.num_vars; ++v) {
    for (const auto& t : terms_) {
      if (t.monomial[v] != 0) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

SparsePoly SparsePoly::operator-() const { return scaled(-1); }

SparsePoly SparsePoly::scaled(const Integer& c) const {
  SparsePoly out(ring_);
  const Integer s = normalize(c);
  if (s == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Integer v = normalize(t.coeff * s);
    if (v != 0) out.terms_.push_back({t.monomial, std::move(v)});
  }
  return out;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  require_same_ring(ring_, other.ring_, "poly_add");
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j == other.terms_.size() ||
        (i < terms_.size() && terms_[i].monomial > other.terms_[j].monomial)) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || other.terms_[j].monomial > terms_[i].monomial) {
      merged.push_back(other.terms_[j++]);
    } else {
      Integer c = normalize(terms_[i].coeff + other.terms_[j].coeff);
      if (c != 0) merged.push_back({terms_[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) { return *this += -other; }

SparsePoly& SparsePoly::operator*=(const SparsePoly& other) {
  *this = *this * other;
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  require_same_ring(a.ring_, b.ring_, "poly_mul");
  PolyAccumulator acc(a.ring_);
  acc.add_product(a, b);
  return acc.take();
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
  if (!(a.ring_ == b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

SparsePoly poly_add(const SparsePoly& a, const SparsePoly& b) { return a + b; }
SparsePoly poly_mul(const SparsePoly& a, const SparsePoly& b) { return a * b; }

SparsePoly poly_pow(const SparsePoly& a, unsigned e) {
  SparsePoly result = SparsePoly::constant(a.ring(), 1);
  SparsePoly base = a;
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

SparsePoly poly_diff(const SparsePoly& p, std::size_t var_index) {
  if (var_index >= p.ring().num_vars) throw std::out_of_range("poly_diff: variable index out of range");
  std::vector<SparsePoly::Term> out;
  for (const auto& t : p.terms()) {
    const unsigned e = t.monomial[var_index];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var_index, e - 1);
    out.push_back({m, t.coeff * e});
  }
  // Differentiation keeps distinct monomials distinct, but from_terms also
  // reduces mod p and drops the e ≡ 0 terms.
  return SparsePoly::from_terms(p.ring(), std::move(out));
}

SparsePoly poly_substitute(const SparsePoly& p, std::span<const SparsePoly> images) {
  const RingDescriptor& src = p.ring();
  if (images.size() != src.num_vars) {
    throw std::invalid_argument("poly_substitute: expected " + std::to_string(src.num_vars) +
                                " images, got " + std::to_string(images.size()));
  }
  RingDescriptor target;
  if (images.empty()) {
    target = src;
  } else {
    target = images.front().ring();
    for (const auto& img : images) require_same_ring(target, img.ring(), "poly_substitute");
  }
  if (!src.is_integral() && src.characteristic != target.characteristic) {
    throw RingMismatch("poly_substitute: cannot map F_p coefficients into another characteristic");
  }

  // powers[v][k] = images[v]^k for every k occurring in p.
  std::vector<std::vector<SparsePoly>> powers(src.num_vars);
  for (const auto& t : p.terms()) {
    for (std::size_t v = 0; v < src.num_vars; ++v) {
      auto& pw = powers[v];
      if (pw.empty()) pw.push_back(SparsePoly::constant(target, 1));
      while (pw.size() <= t.monomial[v]) pw.push_back(pw.back() * images[v]);
    }
  }

  PolyAccumulator acc(target);
  for (const auto& t : p.terms()) {
    SparsePoly term = SparsePoly::constant(target, t.coeff);
    for (std::size_t v = 0; v < src.num_vars && !term.is_zero(); ++v) {
      if (t.monomial[v] != 0) term = term * powers[v][t.monomial[v]];
    }
    acc.add(term);
  }
  return acc.take();
}

SparsePoly reduce_mod(const SparsePoly& p, std::uint32_t prime) {
  if (!p.ring().is_integral()) {
    if (p.ring().characteristic == prime) return p;
    throw RingMismatch("reduce_mod: source is not an integer polynomial");
  }
  RingDescriptor r = p.ring();
  r.characteristic = prime;
  return SparsePoly::from_terms(r, {p.terms().begin(), p.terms().end()});
}

Integer evaluate(const SparsePoly& p, std::span<const Integer> point) {
  if (point.size() != p.ring().num_vars) throw std::invalid_argument("evaluate: arity mismatch");
  Integer total = 0;
  for (const auto& t : p.terms()) {
    Integer v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (unsigned e = 0; e < t.monomial[i]; ++e) v *= point[i];
    }
    total += v;
  }
  return p.normalize(total);
}

PolyAccumulator::PolyAccumulator(const RingDescriptor& ring) : ring_(ring) { ring_.validate(); }

void PolyAccumulator::add(const SparsePoly& p, const Integer& scale) {
  require_same_ring(ring_, p.ring(), "accumulate");
  if (ring_.is_integral()) {
    for (const auto& t : p.terms()) zz_[t.monomial] += t.coeff * scale;
  } else {
    const std::uint32_t q = ring_.characteristic;
    const std::uint64_t s = to_residue(scale, q);
    for (const auto& t : p.terms()) {
      auto& slot = fp_[t.monomial];
      slot = (slot + (t.coeff.get_ui() * s) % q) % q;
    }
  }
}

void PolyAccumulator::add_product(const SparsePoly& a, const SparsePoly& b) {
  require_same_ring(ring_, a.ring(), "accumulate");
  require_same_ring(ring_, b.ring(), "accumulate");
  if (ring_.is_integral()) {
    for (const auto& ta : a.terms()) {
      for (const auto& tb : b.terms()) zz_[ta.monomial * tb.monomial] += ta.coeff * tb.coeff;
    }
    return;
  }
  // Fast path: coefficients are below 2^32, so products fit in 64 bits.
  const std::uint64_t q = ring_.characteristic;
  std::vector<std::uint64_t> bc(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) bc[j] = b.terms()[j].coeff.get_ui();
  for (const auto& ta : a.terms()) {
    const std::uint64_t ac = ta.coeff.get_ui();
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto& slot = fp_[ta.monomial * b.terms()[j].monomial];
      slot = (slot + (ac * bc[j]) % q) % q;
    }
  }
}

SparsePoly PolyAccumulator::take() {
  std::vector<SparsePoly::Term> terms;
  if (ring_.is_integral()) {
    terms.reserve(zz_.size());
    for (auto& [m, c] : zz_) {
      if (c != 0) terms.push_back({m, std::move(c)});
    }
  } else {
    terms.reserve(fp_.size());
    for (const auto& [m, c] : fp_) {
      if (c != 0) terms.push_back({m, Integer(static_cast<unsigned long>(c))});
    }
  }
  zz_.clear();
  fp_.clear();
  return SparsePoly::from_terms(ring_, std::move(terms));
}

}  // namespace cy3::poly
