#include "cy3/mf/graded_mf.hpp"

#include <sstream>

#include "assembly.hpp"
#include "cy3/error.hpp"
#include "cy3/poly/text_format.hpp"

namespace cy3::mf {

namespace {

bool check_product(const PolyMatrix& prod, const SparsePoly& f, const char* name, VerifyReport& rep) {
  for (std::size_t i = 0; i < prod.rows(); ++i) {
    for (std::size_t j = 0; j < prod.cols(); ++j) {
      SparsePoly expect = i == j ? f : SparsePoly(f.ring());
      if (!(prod(i, j) == expect)) {
        rep.ok = false;
        rep.product = name;
        rep.row = i;
        rep.col = j;
        rep.residual = prod(i, j) - expect;
        return false;
      }
    }
  }
  return true;
}

std::optional<int> common_degree(const PolyMatrix& m) {
  std::optional<int> deg;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& e = m(i, j);
      if (e.is_zero()) continue;
      if (!e.is_homogeneous()) throw std::invalid_argument("entry (" + std::to_string(i + 1) + "," +
                                                           std::to_string(j + 1) + ") is not homogeneous");
      const int d = static_cast<int>(e.degree());
      if (deg && *deg != d) throw std::invalid_argument("entries of mixed degree; give twists explicitly");
      deg = d;
    }
  }
  return deg;
}

}  // namespace

std::string VerifyReport::describe() const {
  if (ok) return "ok";
  std::ostringstream os;
  os << product << " differs from f*I at (" << row + 1 << "," << col + 1 << "), residual "
     << (residual ? poly::to_inline(*residual) : std::string("?"));
  return os.str();
}

VerifyReport mf_verify(const SparsePoly& f, const PolyMatrix& d1, const PolyMatrix& d0) {
  if (d1.rows() != d1.cols() || d0.rows() != d0.cols() || d1.rows() != d0.rows()) {
    throw std::invalid_argument("mf_verify: d1 and d0 must be square of equal size");
  }
  poly::require_same_ring(f.ring(), d1.ring(), "mf_verify");
  poly::require_same_ring(f.ring(), d0.ring(), "mf_verify");
  VerifyReport rep;
  if (check_product(d0 * d1, f, "d0*d1", rep)) check_product(d1 * d0, f, "d1*d0", rep);
  return rep;
}

GradedMF GradedMF::create(SparsePoly f, PolyMatrix d1, PolyMatrix d0, std::vector<int> alpha, std::vector<int> beta) {
  const std::size_t n = d1.rows();
  if (f.is_zero() || !f.is_homogeneous()) throw MFError("factorization: f must be a nonzero homogeneous polynomial");
  if (alpha.size() != n || beta.size() != n) throw MFError("factorization: twist vectors must have length n");
  const int d = static_cast<int>(f.degree());
  const VerifyReport rep = mf_verify(f, d1, d0);
  if (!rep.ok) throw MFError("factorization identity fails: " + rep.describe(), rep);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const SparsePoly& a = d1(r, c);
      const int ea = alpha[c] - beta[r];
      if (!a.is_zero() && (ea < 0 || !a.is_homogeneous_of(static_cast<unsigned>(ea)))) {
        throw MFError("d1 entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") has the wrong degree");
      }
      const SparsePoly& b = d0(c, r);
      const int eb = d - alpha[c] + beta[r];
      if (!b.is_zero() && (eb < 0 || !b.is_homogeneous_of(static_cast<unsigned>(eb)))) {
        throw MFError("d0 entry (" + std::to_string(c + 1) + "," + std::to_string(r + 1) + ") has the wrong degree");
      }
    }
  }
  GradedMF mf;
  mf.f_ = std::move(f);
  mf.d1_ = std::move(d1);
  mf.d0_ = std::move(d0);
  mf.alpha_ = std::move(alpha);
  mf.beta_ = std::move(beta);
  mf.degree_ = d;
  return mf;
}

GradedMF GradedMF::uniform(SparsePoly f, PolyMatrix d1, PolyMatrix d0) {
  if (f.is_zero()) throw MFError("factorization: f must be nonzero");
  const auto a = common_degree(d1);
  const auto b = common_degree(d0);
  const int d = static_cast<int>(f.degree());
  int deg_a;
  if (a) deg_a = *a;
  else if (b) deg_a = d - *b;
  else throw MFError("factorization: both matrices are zero");
  if (a && b && *a + *b != d) throw MFError("factorization: entry degrees do not add up to deg f");
  const std::size_t n = d1.rows();
  return create(std::move(f), std::move(d1), std::move(d0), std::vector<int>(n, deg_a), std::vector<int>(n, 0));
}

bool GradedMF::uniform_twists() const {
  for (std::size_t i = 1; i < size(); ++i) {
    if (alpha_[i] != alpha_[0] || beta_[i] != beta_[0]) return false;
  }
  return true;
}

GradedMF direct_sum(const GradedMF& a, const GradedMF& b) {
  if (!(a.f() == b.f())) throw std::invalid_argument("direct_sum: factorizations of different polynomials");
  std::vector<int> alpha = a.alpha(), beta = a.beta();
  alpha.insert(alpha.end(), b.alpha().begin(), b.alpha().end());
  beta.insert(beta.end(), b.beta().begin(), b.beta().end());
  return GradedMF::create(a.f(), poly::direct_sum(a.d1(), b.d1()), poly::direct_sum(a.d0(), b.d0()), alpha, beta);
}

AdjugateResult adjugate_partner(const PolyMatrix& M, const SparsePoly& f) {
  AdjugateResult res;
  const std::size_t n = M.rows();
  if (M.cols() != n) throw std::invalid_argument("adjugate_partner: M must be square");
  poly::require_same_ring(M.ring(), f.ring(), "adjugate_partner");
  const RingDescriptor& ring = f.ring();
  if (ring.is_integral()) throw RingMismatch("adjugate_partner: works over F_p");
  if (f.is_zero() || !f.is_homogeneous()) throw std::invalid_argument("adjugate_partner: f must be nonzero homogeneous");
  const auto dm = common_degree(M);
  if (!dm) {
    res.diagnosis = "M is zero";
    return res;
  }
  const int d = static_cast<int>(f.degree());
  const int e = d - *dm;
  if (e < 0) {
    res.diagnosis = "deg M exceeds deg f";
    return res;
  }
  const std::uint32_t p = ring.characteristic;
  detail::BasisCache bases(ring.num_vars);
  const detail::Layout col_x(bases, n, 1, std::vector<int>(n, e));
  const detail::Layout col_out(bases, n, 1, std::vector<int>(n, d));

  detail::SystemBuilder gb(col_out.size(), col_x.size(), p);
  gb.known_times_unknown(M, col_x, 0, col_out, 0, +1);
  const auto G = gb.build();

  const auto& bd = bases.get(d);
  std::vector<linalg::Vector> rhs(n, linalg::Vector(col_out.size(), 0));
  for (const auto& t : f.terms()) {
    for (std::size_t j = 0; j < n; ++j) {
      rhs[j][col_out.offset(j, 0) + bd.index_of(t.monomial)] = static_cast<std::uint32_t>(t.coeff.get_ui());
    }
  }
  const auto multi = linalg::solve_affine_multi(G, rhs);
  res.kernel_dim = multi.kernel_dim;
  res.report = multi.report;

  bool columns_ok = true;
  PolyMatrix N(ring, n, n);
  for (std::size_t j = 0; j < n && columns_ok; ++j) {
    if (!multi.solutions[j]) {
      columns_ok = false;
      break;
    }
    const PolyMatrix col = col_x.unflatten(ring, *multi.solutions[j]);
    for (std::size_t i = 0; i < n; ++i) N(i, j) = col(i, 0);
  }
  if (!columns_ok) {
    res.diagnosis = "no adjugate partner exists: M x = f e_j is inconsistent";
    return res;
  }
  if (mf_verify(f, M, N).ok) {
    res.partner = std::move(N);
    return res;
  }

  // The column solutions are not unique and the chosen ones miss N M = f I.
  res.used_coupled_system = true;
  const detail::Layout full_x(bases, n, n, std::vector<int>(n * n, e));
  const detail::Layout full_out(bases, n, n, std::vector<int>(n * n, d));
  detail::SystemBuilder cb(2 * full_out.size(), full_x.size(), p);
  cb.known_times_unknown(M, full_x, 0, full_out, 0, +1);
  cb.unknown_times_known(full_x, 0, M, full_out, full_out.size(), +1);
  const auto C = cb.build();
  linalg::Vector b(2 * full_out.size(), 0);
  for (const auto& t : f.terms()) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = full_out.offset(j, j) + bd.index_of(t.monomial);
      b[k] = b[full_out.size() + k] = static_cast<std::uint32_t>(t.coeff.get_ui());
    }
  }
  const auto sol = linalg::solve_affine(C, b, {}, false);
  res.kernel_dim = sol.report.kernel_dim;
  res.report = sol.report;
  if (!sol.consistent) {
    res.diagnosis = "no adjugate partner exists: coupled system is inconsistent";
    return res;
  }
  PolyMatrix Nc = full_x.unflatten(ring, *sol.x0);
  if (!mf_verify(f, M, Nc).ok) throw std::logic_error("adjugate_partner: coupled solution fails verification");
  res.partner = std::move(Nc);
  return res;
}

}  // namespace cy3::mf
