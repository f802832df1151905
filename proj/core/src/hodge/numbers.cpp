#include "cy3/hodge/numbers.hpp"

#include <numeric>
#include <sstream>

#include "cy3/linalg/rational.hpp"

namespace cy3::hodge {

namespace {

void require_nonneg(Count v, const char* clause, const char* name) {
  if (v < 0) throw HodgeValidationError(clause, std::string(name) + " = " + std::to_string(v) + " is negative");
}

}  // namespace

HodgeDiamond cy3_hodge_numbers(const HochschildProfile& hh, const UnitProfile& unit) {
  unit.validate();
  if (hh.n() < 3) throw HodgeValidationError("profile", "needs degrees -3..3");
  for (const auto& [k, v] : hh.dims()) {
    if ((k < -3 || k > 3) && v != 0) {
      throw HodgeValidationError("profile", "HH_" + std::to_string(k) + " is nonzero outside -3..3");
    }
  }
  HodgeDiamond d(3);
  for (int i = 0; i <= 3; ++i) d.set(i, 0, unit[3 - i]);

  const Count h31 = hh[-2] - d(2, 0);
  require_nonneg(h31, "h^{3,1} = HH_{-2} - h^{2,0}", "h^{3,1}");
  d.set(3, 1, h31);

  d.set(3, 2, d(1, 0));
  d.set(2, 1, hh[-1] - d(1, 0) - d(3, 2));  // may be negative; see validate_cy3

  d.set(3, 3, d(0, 0));
  const Count rest = hh[0] - d(0, 0) - d(3, 3);
  const char* c4 = "h^{1,1} = h^{2,2} = (HH_0 - h^{0,0} - h^{3,3}) / 2";
  require_nonneg(rest, c4, "HH_0 - h^{0,0} - h^{3,3}");
  if (rest % 2 != 0) throw HodgeValidationError(c4, "HH_0 - h^{0,0} - h^{3,3} = " + std::to_string(rest) + " is odd");
  d.set(1, 1, rest / 2);
  d.set(2, 2, rest / 2);
  return d;
}

bool ValidationReport::ok() const {
  for (const auto& i : issues) {
    if (i.guaranteed) return false;
  }
  return true;
}

std::string ValidationReport::describe() const {
  if (issues.empty()) return "all checks pass";
  std::ostringstream os;
  for (const auto& i : issues) os << (i.guaranteed ? "FAIL " : "note ") << i.clause << ": " << i.message << '\n';
  return os.str();
}

ValidationReport validate_cy3(const HodgeDiamond& d, const HochschildProfile& hh) {
  ValidationReport rep;
  if (d.n() != 3) {
    rep.issues.push_back({"shape", "diamond has dimension " + std::to_string(d.n()) + ", expected 3"});
    return rep;
  }
  for (int p = 0; p <= 3; ++p) {
    for (int q = p; q <= 3; ++q) {
      if (d(p, q) >= 0) continue;
      const bool middle = (p == 1 && q == 2);
      rep.issues.push_back({"non-negativity",
                            "h^{" + std::to_string(q) + "," + std::to_string(p) + "} = " + std::to_string(d(p, q)) +
                                (middle ? " (not guaranteed non-negative)" : ""),
                            !middle});
    }
  }
  if (hh[0] % 2 != 0) rep.issues.push_back({"evenness", "dim HH_0 = " + std::to_string(hh[0]) + " is odd"});
  if (hh[-3] != 1) rep.issues.push_back({"connectedness", "dim HH_{-3} = " + std::to_string(hh[-3]) + ", expected 1"});
  for (int k = -3; k <= 3; ++k) {
    Count s = 0;
    for (int p = 0; p <= 3; ++p) {
      const int q = p - k;
      if (q >= 0 && q <= 3) s += d(p, q);
    }
    if (s != hh[-k]) {
      rep.issues.push_back({"consistency", "HH_" + std::to_string(-k) + " = " + std::to_string(hh[-k]) +
                                               " but the diamond gives " + std::to_string(s)});
    }
  }
  for (const auto& [k, v] : hh.dims()) {
    if (k < -3 || k > 3) rep.issues.push_back({"consistency", "HH_" + std::to_string(k) + " nonzero outside -3..3"});
  }
  return rep;
}

std::vector<Count> jacobian_hilbert_series(const std::vector<int>& weights, int degree, int max_degree) {
  std::vector<Count> s(static_cast<std::size_t>(std::max(max_degree, 0)) + 1, 0);
  if (max_degree < 0) return {};
  s[0] = 1;
  for (int w : weights) {
    // multiply by (1 - t^{d-w}), then by 1/(1 - t^w) = sum t^{kw}
    const int e = degree - w;
    for (int i = max_degree; i >= e; --i) s[i] -= s[i - e];
    for (int i = w; i <= max_degree; ++i) s[i] += s[i - w];
  }
  return s;
}

HodgeDiamond griffiths_hypersurface(const std::vector<int>& weights, int degree) {
  if (weights.size() < 2) throw std::invalid_argument("griffiths: need at least two weights");
  for (int w : weights) {
    if (w <= 0) throw std::invalid_argument("griffiths: weights must be positive");
    if (w >= degree) throw std::invalid_argument("griffiths: degree must exceed every weight");
  }
  const int n = static_cast<int>(weights.size()) - 2;
  const int sw = std::accumulate(weights.begin(), weights.end(), 0);
  const auto series = jacobian_hilbert_series(weights, degree, (n + 1) * degree - sw);
  HodgeDiamond d(n);
  for (int p = 0; p <= n; ++p) d.set(p, p, 1);
  for (int q = 0; q <= n; ++q) {
    const int t = (q + 1) * degree - sw;
    const Count prim = (t >= 0 && t < static_cast<int>(series.size())) ? series[t] : 0;
    const int p = n - q;
    if (p < q) break;  // the other half follows by symmetry
    d.set(p, q, d(p, q) + prim);
  }
  return d;
}

GenerationResult klattice_generates(const KLattice& lat) {
  linalg::IntegerMatrix rows;
  for (const auto& v : lat.class_vectors) {
    if (v.size() != lat.rank) throw std::invalid_argument("klattice: class vector of length " + std::to_string(v.size()));
    std::vector<mpz_class> r;
    for (auto x : v) r.emplace_back(static_cast<long>(x));
    rows.push_back(std::move(r));
  }
  GenerationResult res;
  res.rational_rank = rows.empty() ? 0 : linalg::rational_rank(std::move(rows));
  res.generates = res.rational_rank == lat.rank;
  return res;
}

}  // namespace cy3::hodge
