#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cy3/poly/poly_matrix.hpp"

namespace cy3::algebra {

// xoshiro256** seeded through splitmix64. Small, fast and with a fixed
// published output sequence, so seeds reproduce across platforms.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed);
  std::uint64_t next();
  // Uniform integer in [lo, hi] by rejection (no modulo bias).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t s_[4];
};

// Linear section y = K x of the ambient space, coefficients reduced mod prime.
struct RestrictionSpec {
  std::uint32_t prime = 313;
  std::uint64_t seed = 0;
  std::int64_t height = 30;
  std::vector<std::vector<std::int64_t>> K;  // ambient_dim rows, section_dim columns

  std::size_t ambient_dim() const { return K.size(); }
  std::size_t section_dim() const { return K.empty() ? 0 : K.front().size(); }

  // Throws std::invalid_argument on an entry outside [-height, height], a
  // non-prime modulus, a ragged K or rank(K) < section_dim over Q.
  void validate() const;

  // Images of y_1..y_ambient as linear forms in x_1..x_section over F_prime.
  std::vector<poly::SparsePoly> images() const;
  poly::RingDescriptor target_ring() const;

  std::string to_json() const;
  static RestrictionSpec from_json(const std::string& text);
};

// Draw K with entries uniform in [-height, height], redrawing (continuing the
// same stream) until K has full column rank over Q. `redraws` reports how
// many rank-deficient draws were discarded.
RestrictionSpec random_restriction(std::uint32_t prime, std::uint64_t seed, std::int64_t height,
                                   std::size_t ambient_dim = 27, std::size_t section_dim = 9,
                                   std::size_t* redraws = nullptr);

poly::SparsePoly restrict(const poly::SparsePoly& p, const RestrictionSpec& spec);
poly::PolyMatrix restrict(const poly::PolyMatrix& m, const RestrictionSpec& spec);

}  // namespace cy3::algebra
