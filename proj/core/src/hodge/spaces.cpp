#include "cy3/hodge/spaces.hpp"

#include "cy3/linalg/rational.hpp"

namespace cy3::hodge {

namespace {

struct Model {
  std::size_t total = 0;
  std::map<int, std::size_t> offset;
};

Model make_model(const HochschildProfile& hh) {
  Model m;
  for (int k = -hh.n(); k <= hh.n(); ++k) {
    m.offset[k] = m.total;
    m.total += static_cast<std::size_t>(hh[k]);
  }
  return m;
}

IntVector unit_vector(std::size_t total, std::size_t i) {
  IntVector v(total, 0);
  v[i] = 1;
  return v;
}

// Standard basis vectors [from, to) of block k.
std::vector<IntVector> block(const Model& m, int k, std::size_t from, std::size_t to) {
  std::vector<IntVector> out;
  for (std::size_t i = from; i < to; ++i) out.push_back(unit_vector(m.total, m.offset.at(k) + i));
  return out;
}

IntMatrix swap_involution(const Model& m, const HochschildProfile& hh) {
  IntMatrix c(m.total, IntVector(m.total, 0));
  for (int k = -hh.n(); k <= hh.n(); ++k) {
    for (std::size_t i = 0; i < static_cast<std::size_t>(hh[k]); ++i) c[m.offset.at(-k) + i][m.offset.at(k) + i] = 1;
  }
  return c;
}

void require_symmetric_profile(const HochschildProfile& hh) {
  for (int k = 1; k <= hh.n(); ++k) {
    if (hh[k] != hh[-k]) {
      throw HodgeValidationError("symmetry", "dim HH_" + std::to_string(k) + " != dim HH_" + std::to_string(-k) +
                                                 "; no involution HH_k -> HH_{-k}");
    }
  }
}

std::size_t rank(const std::vector<IntVector>& rows) {
  if (rows.empty()) return 0;
  linalg::IntegerMatrix m;
  for (const auto& r : rows) {
    std::vector<mpz_class> row;
    for (auto x : r) row.emplace_back(static_cast<long>(x));
    m.push_back(std::move(row));
  }
  return linalg::rational_rank(std::move(m));
}

IntVector act(const IntMatrix& c, const IntVector& v) {
  IntVector out(c.size(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += c[i][j] * v[j];
  }
  return out;
}

std::string pq(int p, int q) { return "H^{" + std::to_string(p) + "," + std::to_string(q) + "}"; }

}  // namespace

const HodgeSpace* HodgeSpaceAssignment::find(int p, int q) const {
  for (const auto& s : spaces) {
    if (s.p == p && s.q == q) return &s;
  }
  return nullptr;
}

std::size_t HodgeSpaceAssignment::dim(int p, int q) const {
  const auto* s = find(p, q);
  return s ? s->basis.size() : 0;
}

HodgeSpaceAssignment weight2_assignment(const HochschildProfile& hh) {
  for (const auto& [k, v] : hh.dims()) {
    if (k != 0 && k != 2 && k != -2) {
      throw HodgeValidationError("shape", "HH_" + std::to_string(k) + " = " + std::to_string(v) + " must vanish");
    }
  }
  if (hh[-2] != 1 || hh[2] != 1) throw HodgeValidationError("shape", "HH_{-2} and HH_2 must be lines");
  const Model m = make_model(hh);
  HodgeSpaceAssignment a;
  a.weight = 2;
  a.total_dim = m.total;
  a.offset = m.offset;
  a.spaces.push_back({2, 0, -2, block(m, -2, 0, 1)});
  a.spaces.push_back({1, 1, 0, block(m, 0, 0, static_cast<std::size_t>(hh[0]))});
  a.spaces.push_back({0, 2, 2, block(m, 2, 0, 1)});
  a.involution = swap_involution(m, hh);
  return a;
}

HodgeSpaceAssignment weight3_assignment(const HochschildProfile& hh, const UnitProfile& unit) {
  unit.validate();
  for (const auto& [j, v] : unit.graded_dims) {
    if (v != ((j == 0 || j == 3) ? 1 : 0)) throw HodgeValidationError("unit", "weight-3 spaces need the unit C + C[3]");
  }
  if (unit[3] != 1) throw HodgeValidationError("unit", "weight-3 spaces need the unit C + C[3]");
  if (hh[-3] != 1) throw HodgeValidationError("connectedness", "dim HH_{-3} = " + std::to_string(hh[-3]) + ", expected 1");
  if (hh[0] % 2 != 0 || hh[0] == 0) {
    throw HodgeValidationError("evenness", "dim HH_0 = " + std::to_string(hh[0]) + " must be even and positive");
  }
  for (const auto& [k, v] : hh.dims()) {
    if (k < -3 || k > 3) throw HodgeValidationError("shape", "HH_" + std::to_string(k) + " nonzero outside -3..3");
  }
  require_symmetric_profile(hh);

  const Model m = make_model(hh);
  const std::size_t g = static_cast<std::size_t>(hh[0]) / 2;
  HodgeSpaceAssignment a;
  a.weight = 3;
  a.total_dim = m.total;
  a.offset = m.offset;
  a.involution = swap_involution(m, hh);

  // HH_0 = span(e_1..e_2g); V1 = e_1..e_g, V2 = e_{g+1}..e_2g.
  a.symplectic.assign(2 * g, IntVector(2 * g, 0));
  for (std::size_t i = 0; i < g; ++i) {
    a.symplectic[i][g + i] = 1;
    a.symplectic[g + i][i] = -1;
  }
  a.V1 = block(m, 0, 0, g);
  a.V2 = block(m, 0, g, 2 * g);
  a.form_note = "standard block form w(e_i, e_{g+i}) = 1 on HH_0 (model stand-in)";

  auto add = [&](int p, int q, std::vector<IntVector> basis) { a.spaces.push_back({p, q, q - p, std::move(basis)}); };
  const auto full = [&](int k) { return block(m, k, 0, static_cast<std::size_t>(hh[k])); };
  add(3, 0, full(-3));
  add(2, 0, {});
  add(1, 0, {});
  add(0, 0, block(m, 0, 0, 1));
  add(3, 1, full(-2));
  add(3, 2, {});
  add(2, 1, full(-1));
  add(1, 1, block(m, 0, 1, g));
  add(3, 3, block(m, 0, g, g + 1));
  add(2, 2, block(m, 0, g + 1, 2 * g));
  // p < q by conjugation.
  const std::size_t defined = a.spaces.size();
  for (std::size_t s = 0; s < defined; ++s) {
    const HodgeSpace src = a.spaces[s];
    if (src.p == src.q) continue;
    std::vector<IntVector> img;
    for (const auto& v : src.basis) img.push_back(act(a.involution, v));
    add(src.q, src.p, std::move(img));
  }
  return a;
}

std::vector<std::string> check_assignment(const HodgeSpaceAssignment& a, const HochschildProfile& hh) {
  std::vector<std::string> bad;
  const auto in_block = [&](const IntVector& v, int k) {
    const std::size_t lo = a.offset.at(k), hi = lo + static_cast<std::size_t>(hh[k]);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0 && (i < lo || i >= hi)) return false;
    }
    return true;
  };

  std::map<int, std::size_t> per_degree;
  std::vector<IntVector> all;
  for (const auto& s : a.spaces) {
    per_degree[s.hh_degree] += s.basis.size();
    for (const auto& v : s.basis) {
      if (v.size() != a.total_dim) bad.push_back(pq(s.p, s.q) + ": basis vector of the wrong length");
      else if (!in_block(v, s.hh_degree)) bad.push_back(pq(s.p, s.q) + ": not inside HH_" + std::to_string(s.hh_degree));
      all.push_back(v);
    }
  }
  if (!bad.empty()) return bad;
  for (int k = -hh.n(); k <= hh.n(); ++k) {
    if (static_cast<Count>(per_degree[k]) != hh[k]) {
      bad.push_back("HH_" + std::to_string(k) + ": spaces add up to " + std::to_string(per_degree[k]) + ", expected " +
                    std::to_string(hh[k]));
    }
  }
  if (rank(all) != all.size()) bad.push_back("the Hodge spaces are not independent");

  for (std::size_t i = 0; i < a.total_dim; ++i) {
    if (act(a.involution, act(a.involution, unit_vector(a.total_dim, i))) != unit_vector(a.total_dim, i)) {
      bad.push_back("involution does not square to the identity");
      break;
    }
  }
  for (const auto& s : a.spaces) {
    const HodgeSpace* t = a.find(s.q, s.p);
    if (!t) {
      if (!s.basis.empty()) bad.push_back(pq(s.q, s.p) + " missing");
      continue;
    }
    if (t->basis.size() != s.basis.size()) {
      bad.push_back(pq(s.p, s.q) + " and " + pq(s.q, s.p) + " differ in dimension");
      continue;
    }
    // c(H^{p,q}) lies in H^{q,p} iff appending its image keeps the rank.
    auto rows = t->basis;
    for (const auto& v : s.basis) rows.push_back(act(a.involution, v));
    if (rank(rows) != rank(t->basis)) {
      bad.push_back("involution does not send " + pq(s.p, s.q) + " into " + pq(s.q, s.p));
    }
  }

  if (a.weight == 3) {
    const std::size_t off = a.offset.at(0), dim0 = static_cast<std::size_t>(hh[0]);
    const auto omega = [&](const IntVector& u, const IntVector& v) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < dim0; ++i) {
        for (std::size_t j = 0; j < dim0; ++j) s += u[off + i] * a.symplectic[i][j] * v[off + j];
      }
      return s;
    };
    const auto isotropic = [&](const std::vector<IntVector>& V) {
      for (const auto& u : V) {
        for (const auto& v : V) {
          if (omega(u, v) != 0) return false;
        }
      }
      return true;
    };
    for (const auto* V : {&a.V1, &a.V2}) {
      if (V->size() * 2 != dim0) bad.push_back("Lagrangian of dimension " + std::to_string(V->size()));
      for (const auto& u : *V) {
        if (!in_block(u, 0)) bad.push_back("Lagrangian vector outside HH_0");
      }
      if (!isotropic(*V)) bad.push_back("V1 or V2 is not isotropic");
    }
    auto both = a.V1;
    both.insert(both.end(), a.V2.begin(), a.V2.end());
    if (rank(both) != dim0) bad.push_back("V1 + V2 is not all of HH_0");
    const auto contained = [&](const HodgeSpace* s, const std::vector<IntVector>& V) {
      if (!s) return true;
      for (const auto& v : s->basis) {
        auto rows = V;
        rows.push_back(v);
        if (rank(rows) != rank(V)) return false;
      }
      return true;
    };
    if (!contained(a.find(0, 0), a.V1) || !contained(a.find(1, 1), a.V1)) bad.push_back("H^{0,0} + H^{1,1} not in V1");
    if (!contained(a.find(3, 3), a.V2) || !contained(a.find(2, 2), a.V2)) bad.push_back("H^{3,3} + H^{2,2} not in V2");
  }
  return bad;
}

}  // namespace cy3::hodge
