#include "cy3/algebra/restriction.hpp"

#include <json.hpp>
#include <stdexcept>

#include "cy3/error.hpp"
#include "cy3/linalg/rational.hpp"

namespace cy3::algebra {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

std::size_t k_rank(const std::vector<std::vector<std::int64_t>>& K) {
  linalg::IntegerMatrix m;
  for (const auto& row : K) {
    std::vector<mpz_class> r;
    for (auto v : row) r.emplace_back(static_cast<long>(v));
    m.push_back(std::move(r));
  }
  return linalg::rational_rank(std::move(m));
}

}  // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed) {
  for (auto& s : s_) s = splitmix64(seed);
}

std::uint64_t Xoshiro256::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

std::int64_t Xoshiro256::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t r;
  do r = next();
  while (r >= limit);
  return lo + static_cast<std::int64_t>(r % span);
}

void RestrictionSpec::validate() const {
  if (prime == 2 || !poly::is_prime(prime)) throw std::invalid_argument("restriction: prime must be an odd prime");
  if (height <= 0) throw std::invalid_argument("restriction: height must be positive");
  if (K.empty() || K.front().empty()) throw std::invalid_argument("restriction: empty K");
  for (const auto& row : K) {
    if (row.size() != section_dim()) throw std::invalid_argument("restriction: ragged K");
    for (auto v : row) {
      if (v < -height || v > height) throw std::invalid_argument("restriction: K entry outside [-height, height]");
    }
  }
  if (k_rank(K) != section_dim()) throw std::invalid_argument("restriction: K is rank deficient over Q");
}

poly::RingDescriptor RestrictionSpec::target_ring() const { return {section_dim(), prime, "x"}; }

std::vector<poly::SparsePoly> RestrictionSpec::images() const {
  const auto ring = target_ring();
  std::vector<poly::SparsePoly> out;
  out.reserve(ambient_dim());
  for (const auto& row : K) {
    std::vector<poly::SparsePoly::Term> terms;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] != 0) terms.push_back({poly::Monomial::variable(ring.num_vars, i), static_cast<long>(row[i])});
    }
    out.push_back(poly::SparsePoly::from_terms(ring, std::move(terms)));
  }
  return out;
}

std::string RestrictionSpec::to_json() const {
  nlohmann::ordered_json j;
  j["prime"] = prime;
  j["seed"] = seed;
  j["height"] = height;
  j["K"] = K;
  return j.dump();
}

RestrictionSpec RestrictionSpec::from_json(const std::string& text) {
  RestrictionSpec s;
  try {
    const auto j = nlohmann::json::parse(text);
    s.prime = j.at("prime").get<std::uint32_t>();
    s.seed = j.at("seed").get<std::uint64_t>();
    s.height = j.at("height").get<std::int64_t>();
    s.K = j.at("K").get<std::vector<std::vector<std::int64_t>>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, "restriction", e.what());
  }
  s.validate();
  return s;
}

RestrictionSpec random_restriction(std::uint32_t prime, std::uint64_t seed, std::int64_t height,
                                   std::size_t ambient_dim, std::size_t section_dim, std::size_t* redraws) {
  if (section_dim > ambient_dim) throw std::invalid_argument("restriction: section larger than ambient space");
  RestrictionSpec s;
  s.prime = prime;
  s.seed = seed;
  s.height = height;
  Xoshiro256 rng(seed);
  std::size_t discarded = 0;
  for (;;) {
    s.K.assign(ambient_dim, std::vector<std::int64_t>(section_dim));
    for (auto& row : s.K) {
      for (auto& v : row) v = rng.uniform(-height, height);
    }
    if (k_rank(s.K) == section_dim) break;
    ++discarded;
  }
  if (redraws) *redraws = discarded;
  s.validate();
  return s;
}

poly::SparsePoly restrict(const poly::SparsePoly& p, const RestrictionSpec& spec) {
  if (p.ring().num_vars != spec.ambient_dim()) throw std::invalid_argument("restrict: arity mismatch");
  const auto imgs = spec.images();
  return poly::poly_substitute(p, imgs);
}

poly::PolyMatrix restrict(const poly::PolyMatrix& m, const RestrictionSpec& spec) {
  if (m.ring().num_vars != spec.ambient_dim()) throw std::invalid_argument("restrict: arity mismatch");
  const auto imgs = spec.images();
  return poly::substitute(m, imgs);
}

}  // namespace cy3::algebra
