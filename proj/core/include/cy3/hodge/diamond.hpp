#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cy3::hodge {

using Count = std::int64_t;  // signed: h^{2,1} of a category may come out negative

// Raised when a Hodge-theoretic clause fails; clause() names it.
class HodgeValidationError : public std::runtime_error {
 public:
  HodgeValidationError(std::string clause, const std::string& message)
      : std::runtime_error(clause + ": " + message), clause_(std::move(clause)) {}
  const std::string& clause() const noexcept { return clause_; }

 private:
  std::string clause_;
};

// h[p][q], 0 <= p, q <= n, with h[p][q] = h[q][p].
class HodgeDiamond {
 public:
  HodgeDiamond() : HodgeDiamond(0) {}
  explicit HodgeDiamond(int n);
  // Throws std::invalid_argument unless the grid is (n+1)x(n+1) and symmetric.
  static HodgeDiamond from_grid(std::vector<std::vector<Count>> h);

  int n() const noexcept { return n_; }
  Count operator()(int p, int q) const { return h_.at(p).at(q); }
  // Sets h[p][q] and h[q][p].
  void set(int p, int q, Count v);
  const std::vector<std::vector<Count>>& grid() const noexcept { return h_; }
  Count total() const;
  bool serre_symmetric() const;  // h[p][q] = h[n-p][n-q]

  friend bool operator==(const HodgeDiamond&, const HodgeDiamond&) = default;

 private:
  int n_;
  std::vector<std::vector<Count>> h_;
};

// dims[k] = dim HH_k for k in [-n, n]; absent degrees read as 0.
class HochschildProfile {
 public:
  HochschildProfile() = default;
  explicit HochschildProfile(int n) : n_(n) {}
  HochschildProfile(int n, const std::map<int, Count>& dims);

  int n() const noexcept { return n_; }
  Count operator[](int k) const;
  void set(int k, Count v);
  Count total() const;
  const std::map<int, Count>& dims() const noexcept { return dims_; }

  friend bool operator==(const HochschildProfile& a, const HochschildProfile& b);

 private:
  int n_ = 0;
  std::map<int, Count> dims_;
};

// Graded dimensions of the homological unit; C + C[3] is {0: 1, 3: 1}.
struct UnitProfile {
  enum class Ring { kTrivial, kUnknown };
  std::map<int, Count> graded_dims{{0, 1}, {3, 1}};
  Ring ring = Ring::kTrivial;

  Count operator[](int j) const;
  void validate() const;  // graded_dims[0] >= 1
  static UnitProfile c_plus_c3() { return {}; }
};

// dims[k] = sum over p - q = k of h[p][q].
HochschildProfile hkr_profile(const HodgeDiamond& d);

// Removes one C in HH_0 per exceptional object.
HochschildProfile sod_strip(const HochschildProfile& hh, Count num_exceptional);

// Quarter turn of the displayed diamond: h'[a][b] = h[n-b][a].
HodgeDiamond rotate_diamond(const HodgeDiamond& d);

// Triangular layout, h^{n,n} on top, h^{n,0} ... h^{0,n} across the middle.
std::string render(const HodgeDiamond& d);

// {"n": 3, "h": [[...], ...]} and {"n": 3, "dims": {"-3": 1, ...}}.
std::string to_json(const HodgeDiamond& d);
std::string to_json(const HochschildProfile& hh);
HodgeDiamond diamond_from_json(const std::string& text);
HochschildProfile profile_from_json(const std::string& text);

}  // namespace cy3::hodge
