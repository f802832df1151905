#include "cy3/hodge/diamond.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace cy3::hodge {

using nlohmann::json;

HodgeDiamond::HodgeDiamond(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("HodgeDiamond: negative dimension");
  h_.assign(n + 1, std::vector<Count>(n + 1, 0));
}

HodgeDiamond HodgeDiamond::from_grid(std::vector<std::vector<Count>> h) {
  if (h.empty()) throw std::invalid_argument("HodgeDiamond: empty grid");
  const int n = static_cast<int>(h.size()) - 1;
  for (const auto& row : h) {
    if (static_cast<int>(row.size()) != n + 1) throw std::invalid_argument("HodgeDiamond: grid is not square");
  }
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q < p; ++q) {
      if (h[p][q] != h[q][p]) {
        throw std::invalid_argument("HodgeDiamond: h[" + std::to_string(p) + "][" + std::to_string(q) +
                                    "] != h[" + std::to_string(q) + "][" + std::to_string(p) + "]");
      }
    }
  }
  HodgeDiamond d(n);
  d.h_ = std::move(h);
  return d;
}

void HodgeDiamond::set(int p, int q, Count v) {
  h_.at(p).at(q) = v;
  h_.at(q).at(p) = v;
}

Count HodgeDiamond::total() const {
  Count s = 0;
  for (const auto& row : h_) {
    for (auto v : row) s += v;
  }
  return s;
}

bool HodgeDiamond::serre_symmetric() const {
  for (int p = 0; p <= n_; ++p) {
    for (int q = 0; q <= n_; ++q) {
      if (h_[p][q] != h_[n_ - p][n_ - q]) return false;
    }
  }
  return true;
}

HochschildProfile::HochschildProfile(int n, const std::map<int, Count>& dims) : n_(n) {
  for (const auto& [k, v] : dims) set(k, v);
}

Count HochschildProfile::operator[](int k) const {
  const auto it = dims_.find(k);
  return it == dims_.end() ? 0 : it->second;
}

void HochschildProfile::set(int k, Count v) {
  if (k < -n_ || k > n_) throw std::out_of_range("HochschildProfile: degree " + std::to_string(k) + " outside [-n, n]");
  if (v < 0) throw std::invalid_argument("HochschildProfile: negative dimension at degree " + std::to_string(k));
  if (v == 0) dims_.erase(k);
  else dims_[k] = v;
}

Count HochschildProfile::total() const {
  Count s = 0;
  for (const auto& [k, v] : dims_) s += v;
  return s;
}

bool operator==(const HochschildProfile& a, const HochschildProfile& b) { return a.dims_ == b.dims_; }

Count UnitProfile::operator[](int j) const {
  const auto it = graded_dims.find(j);
  return it == graded_dims.end() ? 0 : it->second;
}

void UnitProfile::validate() const {
  if ((*this)[0] < 1) throw HodgeValidationError("unit", "the unit must contain C in degree 0");
  for (const auto& [j, v] : graded_dims) {
    if (v < 0) throw HodgeValidationError("unit", "negative dimension in degree " + std::to_string(j));
  }
}

HochschildProfile hkr_profile(const HodgeDiamond& d) {
  HochschildProfile hh(d.n());
  for (int k = -d.n(); k <= d.n(); ++k) {
    Count s = 0;
    for (int p = 0; p <= d.n(); ++p) {
      const int q = p - k;
      if (q >= 0 && q <= d.n()) s += d(p, q);
    }
    if (s < 0) throw HodgeValidationError("hkr", "negative Hodge numbers on the line p - q = " + std::to_string(k));
    hh.set(k, s);
  }
  return hh;
}

HochschildProfile sod_strip(const HochschildProfile& hh, Count num_exceptional) {
  if (num_exceptional < 0) throw std::invalid_argument("sod_strip: negative count");
  if (hh[0] < num_exceptional) {
    throw HodgeValidationError("sod_strip", "dim HH_0 = " + std::to_string(hh[0]) + " is smaller than " +
                                                std::to_string(num_exceptional));
  }
  HochschildProfile out = hh;
  out.set(0, hh[0] - num_exceptional);
  return out;
}

HodgeDiamond rotate_diamond(const HodgeDiamond& d) {
  const int n = d.n();
  std::vector<std::vector<Count>> g(n + 1, std::vector<Count>(n + 1));
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= n; ++b) g[a][b] = d(n - b, a);
  }
  // A quarter turn of a Hodge-symmetric diamond is again symmetric.
  return HodgeDiamond::from_grid(std::move(g));
}

std::string render(const HodgeDiamond& d) {
  const int n = d.n();
  std::size_t w = 1;
  for (const auto& row : d.grid()) {
    for (auto v : row) w = std::max(w, std::to_string(v).size());
  }
  // 2n+1 columns of width w+1; row i starts at column |n - i| and uses every
  // other column, as in a tabular diamond.
  std::ostringstream os;
  for (int i = 0; i <= 2 * n; ++i) {
    const int s = 2 * n - i;
    std::string line(static_cast<std::size_t>(std::abs(n - i)) * (w + 1), ' ');
    for (int p = std::min(n, s); p >= std::max(0, s - n); --p) {
      const std::string v = std::to_string(d(p, s - p));
      line += std::string(w - v.size(), ' ') + v + std::string(w + 2, ' ');
    }
    line.erase(line.find_last_not_of(' ') + 1);
    os << line << '\n';
  }
  return os.str();
}

std::string to_json(const HodgeDiamond& d) {
  json j;
  j["n"] = d.n();
  j["h"] = d.grid();
  return j.dump();
}

std::string to_json(const HochschildProfile& hh) {
  json dims = json::object();
  for (int k = -hh.n(); k <= hh.n(); ++k) dims[std::to_string(k)] = hh[k];
  json j;
  j["n"] = hh.n();
  j["dims"] = dims;
  return j.dump();
}

HodgeDiamond diamond_from_json(const std::string& text) {
  const json j = json::parse(text);
  auto d = HodgeDiamond::from_grid(j.at("h").get<std::vector<std::vector<Count>>>());
  if (j.contains("n") && j.at("n").get<int>() != d.n()) throw std::invalid_argument("diamond JSON: n disagrees with the grid");
  return d;
}

HochschildProfile profile_from_json(const std::string& text) {
  const json j = json::parse(text);
  HochschildProfile hh(j.at("n").get<int>());
  for (const auto& [k, v] : j.at("dims").items()) hh.set(std::stoi(k), v.get<Count>());
  return hh;
}

}  // namespace cy3::hodge
