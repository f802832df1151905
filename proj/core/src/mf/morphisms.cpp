#include "cy3/mf/morphisms.hpp"

#include <algorithm>
#include <cblas.h>
#include <chrono>
#include <cmath>
#include <functional>

#include "assembly.hpp"
#include "cy3/algebra/restriction.hpp"
#include "cy3/error.hpp"
#include "cy3/linalg/dense_echelon.hpp"

namespace cy3::mf {

namespace {

using Clock = std::chrono::steady_clock;
using detail::BasisCache;
using detail::Layout;
using detail::SystemBuilder;
using linalg::DenseEchelon;
using linalg::PrimeField;
using linalg::SparseMatrixFp;
using linalg::Vector;

// Small systems go straight to the dense echelon; the column count bounds the
// basis size, so this stays cheap however many rows there are.
constexpr std::size_t kDenseColumnLimit = 6000;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void require_fp(const GradedMF& mf, const char* where) {
  if (mf.ring().is_integral()) throw RingMismatch(std::string(where) + ": morphism spaces are computed over F_p");
}

std::vector<int> degree_table(std::size_t n, const std::function<int(std::size_t, std::size_t)>& deg) {
  std::vector<int> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = deg(i, j);
  }
  return out;
}

linalg::EliminationOptions strategy_for(std::size_t ncols) {
  linalg::EliminationOptions o;
  o.strategy = ncols <= kDenseColumnLimit ? linalg::Strategy::kDenseOnly : linalg::Strategy::kAuto;
  return o;
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

Vector concat(const Vector& a, const Vector& b) {
  Vector out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Vector random_vector(algebra::Xoshiro256& rng, std::size_t len, std::uint32_t p) {
  Vector v(len);
  for (auto& x : v) x = static_cast<std::uint32_t>(rng.uniform(0, p - 1));
  return v;
}

void reduce_doubles(double* data, std::size_t count, double p) {
  const double inv = 1.0 / p;
  for (std::size_t i = 0; i < count; ++i) {
    double v = data[i] - std::floor(data[i] * inv) * p;
    if (v >= p) v -= p;
    if (v < 0) v += p;
    data[i] = v;
  }
}

// Rank of A with an optional certified cap; zero-sized systems are rank 0.
std::size_t capped_rank(const SparseMatrixFp& A, std::optional<std::size_t> cap) {
  if (A.ncols() == 0 || A.nrows() == 0) return 0;
  auto o = strategy_for(A.ncols());
  o.rank_cap = cap;
  return linalg::rank(A, o);
}

// Picks cocycles independent modulo the span of the coboundary columns of H.
std::vector<Vector> representatives(const SparseMatrixFp& H, const std::vector<Vector>& cocycles, std::size_t width,
                                    std::size_t want) {
  std::vector<Vector> reps;
  if (want == 0) return reps;
  DenseEchelon de(PrimeField(H.prime()), width, width);
  if (H.ncols() > 0) {
    const SparseMatrixFp Ht = H.transpose();
    for (std::size_t r = 0; r < Ht.nrows(); ++r) {
      Vector row(width, 0);
      for (const auto& e : Ht.row(r)) row[e.col] = e.val;
      de.insert_row(row);
    }
  }
  for (const auto& z : cocycles) {
    const std::size_t before = de.rank();
    de.insert_row(z);
    if (de.rank() > before) reps.push_back(z);
    if (reps.size() == want) break;
  }
  if (reps.size() != want) throw std::logic_error("morphisms: cocycles do not span the expected quotient");
  return reps;
}

void log_line(const MorphismOptions& opts, const std::string& s) {
  if (opts.log) opts.log(s);
}

}  // namespace

MorphismSpace hom_degree0(const GradedMF& mf, const MorphismOptions& opts) {
  require_fp(mf, "hom_degree0");
  const auto t0 = Clock::now();
  const std::size_t n = mf.size();
  const auto& al = mf.alpha();
  const auto& be = mf.beta();
  const int d = mf.degree();
  const RingDescriptor& ring = mf.ring();
  const std::uint32_t p = ring.characteristic;
  BasisCache bases(ring.num_vars);

  const Layout LA(bases, n, n, degree_table(n, [&](auto r, auto c) { return al[c] - al[r]; }));
  const Layout LB(bases, n, n, degree_table(n, [&](auto r, auto c) { return be[c] - be[r]; }));
  const Layout E1(bases, n, n, degree_table(n, [&](auto r, auto c) { return mf.d1_degree(r, c); }));
  const Layout E2(bases, n, n, degree_table(n, [&](auto c, auto r) { return mf.d0_degree(c, r); }));
  const std::size_t nA = LA.size();

  SystemBuilder zb(E1.size() + E2.size(), nA + LB.size(), p);
  zb.unknown_times_known(LB, nA, mf.d1(), E1, 0, +1);
  zb.known_times_unknown(mf.d1(), LA, 0, E1, 0, -1);
  zb.unknown_times_known(LA, 0, mf.d0(), E2, E1.size(), +1);
  zb.known_times_unknown(mf.d0(), LB, nA, E2, E1.size(), -1);
  const SparseMatrixFp Z = zb.build();

  const Layout H0(bases, n, n, degree_table(n, [&](auto c, auto r) { return be[r] - al[c]; }));
  const Layout H1(bases, n, n, degree_table(n, [&](auto r, auto c) { return al[c] - be[r] - d; }));
  SystemBuilder hb(nA + LB.size(), H0.size() + H1.size(), p);
  hb.unknown_times_known(H0, 0, mf.d1(), LA, 0, +1);
  hb.known_times_unknown(mf.d0(), H1, H0.size(), LA, 0, +1);
  hb.known_times_unknown(mf.d1(), H0, 0, LB, nA, +1);
  hb.unknown_times_known(H1, H0.size(), mf.d0(), LB, nA, +1);
  const SparseMatrixFp H = hb.build();

  MorphismSpace out;
  out.degree = 0;
  out.method = "full";
  out.unknowns = Z.ncols();
  out.equations = Z.nrows();
  out.timings["assemble"] = seconds_since(t0);

  // The identity morphism is a cocycle, so rank Z <= ncols - 1.
  const auto id = PolyMatrix::identity(ring, n);
  const Vector id_vec = concat(LA.flatten(id), LB.flatten(id));
  if (!is_zero_vector(Z.multiply(id_vec))) throw std::logic_error("hom_degree0: identity fails the cocycle system");

  // Homotopy images, computed both as polynomials and through H, must be
  // cocycles and must agree.
  algebra::Xoshiro256 rng(opts.check_seed);
  {
    const Vector hv = random_vector(rng, H.ncols(), p);
    const PolyMatrix h0 = H0.unflatten(ring, hv), h1 = H1.unflatten(ring, hv, H0.size());
    const PolyMatrix A = h0 * mf.d1() + mf.d0() * h1;
    const PolyMatrix B = mf.d1() * h0 + h1 * mf.d0();
    if (!(B * mf.d1() == mf.d1() * A) || !(A * mf.d0() == mf.d0() * B)) {
      throw std::logic_error("hom_degree0: homotopy image is not a cocycle");
    }
    const Vector ab = concat(LA.flatten(A), LB.flatten(B));
    if (H.ncols() > 0 && H.multiply(hv) != ab) throw std::logic_error("hom_degree0: homotopy assembly mismatch");
    if (!is_zero_vector(Z.multiply(ab))) throw std::logic_error("hom_degree0: cocycle assembly mismatch");
  }

  auto t1 = Clock::now();
  std::vector<Vector> cocycles;
  std::size_t rank_z;
  if (opts.emit_basis) {
    auto kb = linalg::kernel_basis(Z, strategy_for(Z.ncols()));
    rank_z = kb.report.rank;
    cocycles = std::move(kb.basis);
  } else {
    rank_z = capped_rank(Z, Z.ncols() - 1);
  }
  out.cocycle_dim = Z.ncols() - rank_z;
  out.timings["cocycles"] = seconds_since(t1);

  t1 = Clock::now();
  out.coboundary_dim = capped_rank(H, std::nullopt);
  out.timings["coboundaries"] = seconds_since(t1);
  if (out.coboundary_dim > out.cocycle_dim) throw std::logic_error("hom_degree0: more coboundaries than cocycles");
  out.hom_dim = out.cocycle_dim - out.coboundary_dim;
  log_line(opts, "hom0: " + std::to_string(Z.nrows()) + "x" + std::to_string(Z.ncols()) + " cocycles " +
                     std::to_string(out.cocycle_dim) + ", coboundaries " + std::to_string(out.coboundary_dim));

  if (opts.emit_basis) {
    for (const auto& v : representatives(H, cocycles, Z.ncols(), out.hom_dim)) {
      out.basis.emplace_back(LA.unflatten(ring, v), LB.unflatten(ring, v, nA));
    }
  }
  out.timings["total"] = seconds_since(t0);
  return out;
}

namespace {

struct ExtLayouts {
  Layout LA, LB, S, T;
};

ExtLayouts ext_layouts(BasisCache& bases, const GradedMF& mf) {
  const std::size_t n = mf.size();
  const auto& al = mf.alpha();
  const auto& be = mf.beta();
  return {Layout(bases, n, n, degree_table(n, [&](auto r, auto c) { return mf.d1_degree(r, c); })),
          Layout(bases, n, n, degree_table(n, [&](auto c, auto r) { return mf.d0_degree(c, r); })),
          Layout(bases, n, n, degree_table(n, [&](auto r, auto s) { return be[s] - be[r]; })),
          Layout(bases, n, n, degree_table(n, [&](auto c, auto s) { return al[s] - al[c]; }))};
}

// Coboundary map (S, T) -> (d1 T + S d1, T d0 + d0 S).
SparseMatrixFp ext_coboundary_map(const GradedMF& mf, const ExtLayouts& L) {
  const std::size_t nA = L.LA.size(), nS = L.S.size();
  SystemBuilder hb(nA + L.LB.size(), nS + L.T.size(), mf.ring().characteristic);
  hb.known_times_unknown(mf.d1(), L.T, nS, L.LA, 0, +1);
  hb.unknown_times_known(L.S, 0, mf.d1(), L.LA, 0, +1);
  hb.unknown_times_known(L.T, nS, mf.d0(), L.LB, nA, +1);
  hb.known_times_unknown(mf.d0(), L.S, 0, L.LB, nA, +1);
  return hb.build();
}

bool ext_cocycle(const GradedMF& mf, const PolyMatrix& A, const PolyMatrix& B) {
  return B * mf.d1() == mf.d0() * A && A * mf.d0() == mf.d1() * B;
}

// Coboundary dimension with the cap from the kernel vector (I, -I), after
// checking that coboundaries are cocycles and that H matches the polynomial
// products.
std::size_t ext_coboundaries(const GradedMF& mf, const ExtLayouts& L, const SparseMatrixFp& H,
                             const MorphismOptions& opts) {
  const RingDescriptor& ring = mf.ring();
  const std::uint32_t p = ring.characteristic;
  const std::size_t n = mf.size();
  const auto id = PolyMatrix::identity(ring, n);
  const auto neg_id = PolyMatrix::scalar(SparsePoly::constant(ring, -1), n);
  const Vector st = concat(L.S.flatten(id), L.T.flatten(neg_id));
  if (!is_zero_vector(H.multiply(st))) throw std::logic_error("ext1: (I, -I) is not a null homotopy");

  algebra::Xoshiro256 rng(opts.check_seed);
  const Vector hv = random_vector(rng, H.ncols(), p);
  const PolyMatrix S = L.S.unflatten(ring, hv), T = L.T.unflatten(ring, hv, L.S.size());
  const PolyMatrix A = mf.d1() * T + S * mf.d1();
  const PolyMatrix B = T * mf.d0() + mf.d0() * S;
  if (!ext_cocycle(mf, A, B)) throw std::logic_error("ext1: coboundary is not a cocycle");
  if (H.multiply(hv) != concat(L.LA.flatten(A), L.LB.flatten(B))) {
    throw std::logic_error("ext1: coboundary assembly mismatch");
  }
  return capped_rank(H, H.ncols() - 1);
}

// Both squares, all unknowns. Rows: B d1 - d0 A on slots (c, c') of degree
// d - alpha_c + alpha_c', then A d0 - d1 B on slots (r, r') of degree
// d - beta_r + beta_r'.
void ext1_full(const GradedMF& mf, BasisCache& bases, const ExtLayouts& L, const SparseMatrixFp& H,
               const MorphismOptions& opts, MorphismSpace& out) {
  const std::size_t n = mf.size();
  const auto& al = mf.alpha();
  const auto& be = mf.beta();
  const int d = mf.degree();
  const RingDescriptor& ring = mf.ring();
  const Layout Q1(bases, n, n, degree_table(n, [&](auto c, auto s) { return d - al[c] + al[s]; }));
  const Layout Q2(bases, n, n, degree_table(n, [&](auto r, auto s) { return d - be[r] + be[s]; }));
  const std::size_t nA = L.LA.size();
  auto t0 = Clock::now();
  SystemBuilder zb(Q1.size() + Q2.size(), nA + L.LB.size(), ring.characteristic);
  zb.unknown_times_known(L.LB, nA, mf.d1(), Q1, 0, +1);
  zb.known_times_unknown(mf.d0(), L.LA, 0, Q1, 0, -1);
  zb.unknown_times_known(L.LA, 0, mf.d0(), Q2, Q1.size(), +1);
  zb.known_times_unknown(mf.d1(), L.LB, nA, Q2, Q1.size(), -1);
  const SparseMatrixFp Z = zb.build();
  out.unknowns = Z.ncols();
  out.equations = Z.nrows();
  out.timings["assemble"] += seconds_since(t0);

  if (H.ncols() > 0) {
    algebra::Xoshiro256 rng(opts.check_seed + 1);
    if (!is_zero_vector(Z.multiply(H.multiply(random_vector(rng, H.ncols(), ring.characteristic))))) {
      throw std::logic_error("ext1: cocycle assembly rejects a coboundary");
    }
  }

  t0 = Clock::now();
  std::vector<Vector> cocycles;
  std::size_t rank_z;
  if (opts.emit_basis) {
    auto kb = linalg::kernel_basis(Z, strategy_for(Z.ncols()));
    rank_z = kb.report.rank;
    cocycles = std::move(kb.basis);
  } else {
    // cocycle_dim >= coboundary_dim bounds the rank.
    rank_z = capped_rank(Z, Z.ncols() - out.coboundary_dim);
  }
  out.cocycle_dim = Z.ncols() - rank_z;
  out.timings["cocycles"] = seconds_since(t0);
  if (out.coboundary_dim > out.cocycle_dim) throw std::logic_error("ext1: more coboundaries than cocycles");
  out.hom_dim = out.cocycle_dim - out.coboundary_dim;
  if (opts.emit_basis) {
    for (const auto& v : representatives(H, cocycles, Z.ncols(), out.hom_dim)) {
      out.basis.emplace_back(L.LA.unflatten(ring, v), L.LB.unflatten(ring, v, nA));
    }
  }
}

// Uniform twists: every d1 entry has degree a, every d0 entry degree b.
// The first square splits by rows c of B:  b_c d1 = (d0 A)_c, with one
// shared map M: b -> b d1 from n |R_b| unknowns to n |R_d| coordinates. With P spanning the left kernel of M, the A-part of a cocycle
// is exactly the kernel of E = [P (d0 A)_c]_c, and the B-part is fixed up to
// ker M in each row. The second square follows from the first: with
// X = A d0 - d1 B one gets X d1 = A f - d1 d0 A = 0, and d1 is invertible
// over the fraction field (det d0 det d1 = f^n).
void ext1_structured(const GradedMF& mf, BasisCache& bases, const ExtLayouts& L, const SparseMatrixFp& H,
                     const MorphismOptions& opts, MorphismSpace& out) {
  const std::size_t n = mf.size();
  const RingDescriptor& ring = mf.ring();
  const std::uint32_t p = ring.characteristic;
  const PrimeField field(p);
  const int a = mf.d1_degree(0, 0), b = mf.d0_degree(0, 0), d = mf.degree();
  const auto& Ra = bases.get(a);
  const auto& Rb = bases.get(b);
  const auto& Rd = bases.get(d);
  const std::size_t na = Ra.size(), nb = Rb.size(), nd = Rd.size();
  const std::size_t W = n * nd, nBrow = n * nb, nA = n * n * na;
  if (static_cast<double>(nd) * (p - 1.0) * (p - 1.0) >= 9.0e15) throw std::overflow_error("ext1: block too large");
  out.unknowns = nA + n * nBrow;
  out.equations = n * W;

  // M^T: row (r, nu) holds the coordinates of x^nu d1[r][.].
  auto t0 = Clock::now();
  std::vector<double> mt(nBrow * W, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t nu = 0; nu < nb; ++nu) {
      double* row = mt.data() + (r * nb + nu) * W;
      for (std::size_t c = 0; c < n; ++c) {
        for (const auto& t : mf.d1()(r, c).terms()) {
          row[c * nd + Rd.index_of(Rb[nu] * t.monomial)] = static_cast<double>(t.coeff.get_ui());
        }
      }
    }
  }
  DenseEchelon mte(field, W, W);
  mte.insert(mt, nBrow);
  const std::size_t rho = mte.rank();
  const std::vector<Vector> P = mte.kernel_basis();
  const std::size_t nP = P.size();
  out.timings["schur"] = seconds_since(t0);

  // rank E <= nA - coboundary_dim + n dim ker M, since cocycles contain the
  // coboundaries.
  const std::size_t kerM = nBrow - rho;
  const std::size_t bound = nA + n * kerM - std::min(nA + n * kerM, out.coboundary_dim);
  std::optional<std::size_t> cap;
  if (bound < nA) cap = bound;  // reaching it means ext1 = 0, so no basis is lost

  t0 = Clock::now();
  DenseEchelon ee(field, nA, nA, cap);
  if (nP > 0) {
    std::vector<double> Pd(nP * W);
    for (std::size_t i = 0; i < nP; ++i) std::copy(P[i].begin(), P[i].end(), Pd.begin() + i * W);
    const std::size_t nl = n * na;  // columns of one A block: index (r, k)
    std::vector<double> ell(nd * nl), E(nP * nA);
    for (std::size_t c = 0; c < n && !ee.saturated(); ++c) {
      std::fill(ell.begin(), ell.end(), 0.0);
      for (std::size_t r = 0; r < n; ++r) {
        for (const auto& t : mf.d0()(c, r).terms()) {
          for (std::size_t k = 0; k < na; ++k) {
            ell[Rd.index_of(t.monomial * Ra[k]) * nl + r * na + k] = static_cast<double>(t.coeff.get_ui());
          }
        }
      }
      // A is indexed (c', r, k), so block c' of E_c is P[:, block c'] * ell.
      for (std::size_t cp = 0; cp < n; ++cp) {
        cblas_dgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans, static_cast<int>(nP), static_cast<int>(nl),
                    static_cast<int>(nd), 1.0, Pd.data() + cp * nd, static_cast<int>(W), ell.data(),
                    static_cast<int>(nl), 0.0, E.data() + cp * nl, static_cast<int>(nA));
      }
      reduce_doubles(E.data(), E.size(), p);
      ee.insert(E, nP);
      log_line(opts, "ext1: block " + std::to_string(c + 1) + "/" + std::to_string(n) + ", rank " +
                         std::to_string(ee.rank()) + (cap ? " of cap " + std::to_string(*cap) : ""));
    }
  }
  out.timings["cocycles"] = seconds_since(t0);
  out.cocycle_dim = nA - ee.rank() + n * kerM;
  if (out.coboundary_dim > out.cocycle_dim) throw std::logic_error("ext1: more coboundaries than cocycles");
  out.hom_dim = out.cocycle_dim - out.coboundary_dim;

  if (!opts.emit_basis || out.hom_dim == 0) return;

  // Basis: A from ker E, B by solving b_c d1 = (d0 A)_c, plus ker M per row.
  SparseMatrixFp M(0, nBrow, p);
  {
    const SparseMatrixFp Mt = SparseMatrixFp::from_dense([&] {
      std::vector<Vector> rows(nBrow, Vector(W));
      for (std::size_t i = 0; i < nBrow; ++i) {
        for (std::size_t j = 0; j < W; ++j) rows[i][j] = static_cast<std::uint32_t>(mt[i * W + j]);
      }
      return rows;
    }(), W, p);
    M = Mt.transpose();
  }
  const auto a_part = [&](const Vector& v) {
    PolyMatrix A(ring, n, n);
    for (std::size_t cp = 0; cp < n; ++cp) {
      for (std::size_t r = 0; r < n; ++r) {
        std::vector<SparsePoly::Term> terms;
        for (std::size_t k = 0; k < na; ++k) {
          const auto x = v[(cp * n + r) * na + k];
          if (x) terms.push_back({Ra[k], static_cast<unsigned long>(x)});
        }
        A(r, cp) = SparsePoly::from_terms(ring, std::move(terms));
      }
    }
    return A;
  };
  const auto b_row = [&](PolyMatrix& B, std::size_t c, const Vector& x) {
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<SparsePoly::Term> terms;
      for (std::size_t nu = 0; nu < nb; ++nu) {
        if (x[r * nb + nu]) terms.push_back({Rb[nu], static_cast<unsigned long>(x[r * nb + nu])});
      }
      B(c, r) = SparsePoly::from_terms(ring, std::move(terms));
    }
  };

  std::vector<std::pair<PolyMatrix, PolyMatrix>> pairs;
  const auto a_kernel = ee.kernel_basis();
  std::vector<PolyMatrix> As;
  std::vector<Vector> rhs;
  for (const auto& v : a_kernel) {
    As.push_back(a_part(v));
    const PolyMatrix Y = mf.d0() * As.back();
    for (std::size_t c = 0; c < n; ++c) {
      Vector y(W, 0);
      for (std::size_t cp = 0; cp < n; ++cp) {
        for (const auto& t : Y(c, cp).terms()) y[cp * nd + Rd.index_of(t.monomial)] = t.coeff.get_ui();
      }
      rhs.push_back(std::move(y));
    }
  }
  if (!rhs.empty()) {
    const auto sol = linalg::solve_affine_multi(M, rhs);
    for (std::size_t i = 0; i < As.size(); ++i) {
      PolyMatrix B(ring, n, n);
      for (std::size_t c = 0; c < n; ++c) {
        if (!sol.solutions[i * n + c]) throw std::logic_error("ext1: A-part of a cocycle has no B-part");
        b_row(B, c, *sol.solutions[i * n + c]);
      }
      pairs.emplace_back(As[i], std::move(B));
    }
  }
  if (kerM > 0) {
    for (const auto& x : linalg::kernel_basis(M).basis) {
      for (std::size_t c = 0; c < n; ++c) {
        PolyMatrix B(ring, n, n);
        b_row(B, c, x);
        pairs.emplace_back(PolyMatrix(ring, n, n), std::move(B));
      }
    }
  }
  std::vector<Vector> cocycles;
  for (const auto& [A, B] : pairs) {
    if (!ext_cocycle(mf, A, B)) throw std::logic_error("ext1: reconstructed cocycle fails the squares");
    cocycles.push_back(concat(L.LA.flatten(A), L.LB.flatten(B)));
  }
  for (const auto& v : representatives(H, cocycles, L.LA.size() + L.LB.size(), out.hom_dim)) {
    out.basis.emplace_back(L.LA.unflatten(ring, v), L.LB.unflatten(ring, v, L.LA.size()));
  }
}

}  // namespace

MorphismSpace ext1(const GradedMF& mf, const MorphismOptions& opts) {
  require_fp(mf, "ext1");
  const auto t0 = Clock::now();
  BasisCache bases(mf.ring().num_vars);
  const ExtLayouts L = ext_layouts(bases, mf);
  const SparseMatrixFp H = ext_coboundary_map(mf, L);

  MorphismSpace out;
  out.degree = 1;
  out.timings["assemble"] = seconds_since(t0);
  auto t1 = Clock::now();
  out.coboundary_dim = ext_coboundaries(mf, L, H, opts);
  out.timings["coboundaries"] = seconds_since(t1);
  log_line(opts, "ext1: coboundaries " + std::to_string(out.coboundary_dim) + " of " + std::to_string(H.ncols()));

  bool structured = opts.ext_method == ExtMethod::kStructured ||
                    (opts.ext_method == ExtMethod::kAuto && mf.uniform_twists());
  if (structured && !mf.uniform_twists()) throw std::invalid_argument("ext1: structured method needs uniform twists");
  if (structured) {
    out.method = "structured";
    ext1_structured(mf, bases, L, H, opts, out);
  } else {
    out.method = "full";
    ext1_full(mf, bases, L, H, opts, out);
  }
  log_line(opts, "ext1: cocycles " + std::to_string(out.cocycle_dim) + ", ext1 " + std::to_string(out.hom_dim));
  out.timings["total"] = seconds_since(t0);
  return out;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kSpherical: return "spherical";
    case Verdict::kNotSpherical: return "not spherical";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "?";
}

SphericalReport spherical_report(std::optional<std::size_t> hom_dim, std::optional<std::size_t> ext1_dim) {
  SphericalReport rep;
  rep.hom_dim = hom_dim;
  rep.ext1_dim = ext1_dim;
  if (hom_dim) {
    rep.inferred[0] = *hom_dim;
    rep.inferred[3] = *hom_dim;
  }
  if (ext1_dim) {
    rep.inferred[1] = *ext1_dim;
    rep.inferred[2] = *ext1_dim;
  }
  // Either dimension alone can rule sphericity out.
  if ((hom_dim && *hom_dim != 1) || (ext1_dim && *ext1_dim != 0)) rep.verdict = Verdict::kNotSpherical;
  else if (!hom_dim || !ext1_dim) rep.verdict = Verdict::kInconclusive;
  else rep.verdict = Verdict::kSpherical;
  return rep;
}

SphericalReport spherical_check(const GradedMF& mf, const MorphismOptions& opts) {
  const auto h = hom_degree0(mf, opts);
  const auto e = ext1(mf, opts);
  return spherical_report(h.hom_dim, e.hom_dim);
}

}  // namespace cy3::mf
