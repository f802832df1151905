// One PASS/FAIL line per acceptance criterion. Everything over F_p is exact:
// the tolerance is zero throughout. Wall-clock limits that are hard
// requirements fail the criterion; advisory targets are only reported.

#include <sys/resource.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "cy3/algebra/jordan.hpp"
#include "cy3/hodge/numbers.hpp"
#include "cy3/hodge/spaces.hpp"
#include "cy3/linalg/eliminate.hpp"
#include "cy3/pipeline/hodge_models.hpp"
#include "cy3/pipeline/pipeline.hpp"
#include "cy3/poly/text_format.hpp"
#include "oracle.hpp"

using namespace cy3;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

double peak_rss_gb() {
  rusage u{};
  getrusage(RUSAGE_SELF, &u);
  return static_cast<double>(u.ru_maxrss) / (1024.0 * 1024.0);  // ru_maxrss is in KiB
}

// Runs `f`, fails it when it exceeds `limit` seconds (if limit > 0).
void criterion(int n, const std::string& title, double limit, const std::function<Outcome()>& f) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = f();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double t = since(t0);
  if (limit > 0 && t >= limit) {
    o.pass = false;
    o.detail += "; over the " + secs(limit) + " limit";
  }
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " [" << secs(t) << "] "
            << o.detail << std::endl;
}

hodge::HodgeDiamond grid(std::vector<std::vector<hodge::Count>> h) { return hodge::HodgeDiamond::from_grid(std::move(h)); }

// Printed diamonds.
const auto kCubic7Category = [] { return grid({{1, 0, 0, 1}, {0, 0, 84, 0}, {0, 84, 0, 0}, {1, 0, 0, 1}}); };
const auto kDqf5Category = [] { return grid({{1, 0, 0, 1}, {0, 0, 90, 0}, {0, 90, 0, 0}, {1, 0, 0, 1}}); };
const auto kZ1 = [] { return grid({{1, 0, 0, 1}, {0, 84, 0, 0}, {0, 0, 84, 0}, {1, 0, 0, 1}}); };
const auto kZ3 = [] { return grid({{1, 0, 0, 1}, {0, 90, 0, 0}, {0, 0, 90, 0}, {1, 0, 0, 1}}); };

// --- E6 seeds, shared by criteria 3-5 ---------------------------------------

struct SeedRun {
  std::vector<pipeline::AttemptReport> accepted;
  std::size_t attempts = 0;
  std::vector<std::string> rejected;
  double seconds = 0;
};

constexpr std::size_t kSeedsWanted = 3;

SeedRun run_seeds() {
  SeedRun out;
  const auto t0 = Clock::now();
  std::uint64_t next = 0;
  while (out.accepted.size() < kSeedsWanted) {
    pipeline::RunConfig cfg;
    cfg.command = "verify-e6";
    cfg.seed = next;
    cfg.retries = 5;
    cfg.emit_basis = true;
    const auto rep = pipeline::run_e6(cfg, [](const std::string& m) { std::cerr << "  " << m << '\n'; });
    out.attempts += rep.attempts.size();
    for (const auto& a : rep.attempts) {
      if (!a.generic) out.rejected.push_back("seed " + std::to_string(a.seed) + ": " + a.diagnosis);
    }
    if (!rep.accepted) break;  // retries exhausted; report what we have
    out.accepted.push_back(rep.attempts[*rep.accepted]);
    next = rep.attempts[*rep.accepted].seed + 1;
  }
  out.seconds = since(t0);
  return out;
}

std::string seed_list(const SeedRun& s) {
  std::string r;
  for (const auto& a : s.accepted) r += (r.empty() ? "" : ",") + std::to_string(a.seed);
  return "{" + r + "}";
}

std::string rejected_note(const SeedRun& s) {
  if (s.rejected.empty()) return "";
  std::string r = "; non-generic:";
  for (const auto& x : s.rejected) r += " [" + x + "]";
  return r;
}

// --- criterion 6 -------------------------------------------------------------

Outcome oracle_suite() {
  std::size_t cases = 0, mismatches = 0, mixed = 0;
  std::string first;
  for (std::uint32_t p : {5u, 313u}) {
    for (const auto& c : oracle::small_suite(p)) {
      const auto g = mf::GradedMF::create(c.f, c.d1, c.d0, c.alpha, c.beta);
      const auto h0 = oracle::mapping_cohomology(g, 0), h1 = oracle::mapping_cohomology(g, 1);
      std::vector<std::pair<std::string, std::size_t>> got;
      got.emplace_back("hom0", mf::hom_degree0(g).hom_dim);
      mf::MorphismOptions o;
      o.ext_method = mf::ExtMethod::kFull;
      got.emplace_back("ext1/full", mf::ext1(g, o).hom_dim);
      got.emplace_back("ext1/auto", mf::ext1(g).hom_dim);
      if (g.uniform_twists()) {
        o.ext_method = mf::ExtMethod::kStructured;
        got.emplace_back("ext1/structured", mf::ext1(g, o).hom_dim);
      } else {
        ++mixed;
      }
      for (const auto& [what, v] : got) {
        const std::size_t want = what == "hom0" ? h0.dim() : h1.dim();
        if (v != want) {
          if (mismatches++ == 0) first = c.name + " F_" + std::to_string(p) + " " + what;
        }
      }
      ++cases;
    }
  }
  std::ostringstream os;
  os << cases << " factorizations over F_5 and F_313 (" << mixed << " with mixed twists), " << mismatches
     << " mismatches";
  if (!first.empty()) os << ", first: " << first;
  return {mismatches == 0 && cases > 0, os.str()};
}

// --- criterion 11 ------------------------------------------------------------

Outcome property_sweep() {
  std::vector<std::string> bad;
  std::mt19937_64 rng(11);

  // Ring axioms on random polynomials over F_313.
  const poly::RingDescriptor r{3, 313, "x"};
  auto rnd = [&] {
    std::vector<poly::SparsePoly::Term> t;
    for (int i = 0; i < 5; ++i) {
      std::vector<unsigned> e(3);
      for (auto& x : e) x = static_cast<unsigned>(rng() % 3);
      t.push_back({poly::Monomial::from_exponents(e), static_cast<long>(rng() % 313)});
    }
    return poly::SparsePoly::from_terms(r, std::move(t));
  };
  std::size_t ring_cases = 0;
  for (int i = 0; i < 300; ++i) {
    const auto a = rnd(), b = rnd(), c = rnd();
    if (!(a * (b + c) == a * b + a * c) || !((a * b) * c == a * (b * c)) || !(a + b == b + a) || !(a * b == b * a)) {
      bad.push_back("ring axioms");
      break;
    }
    ++ring_cases;
  }

  // Kernel bases re-verified, rank + nullity = ncols.
  std::size_t kernels = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t p = trial % 2 ? 313 : 5;
    const std::size_t rows = 2 + rng() % 30, cols = 2 + rng() % 30;
    std::vector<linalg::Vector> dense(rows, linalg::Vector(cols));
    for (auto& row : dense) {
      for (auto& x : row) x = rng() % 3 == 0 ? static_cast<std::uint32_t>(rng() % p) : 0;
    }
    const auto A = linalg::SparseMatrixFp::from_dense(dense, cols, p);
    const auto k = linalg::kernel_basis(A);
    if (k.report.rank + k.basis.size() != cols) {
      bad.push_back("rank + kernel != ncols");
      break;
    }
    oracle::Dense D;
    for (const auto& row : dense) D.emplace_back(row.begin(), row.end());
    if (k.report.rank != oracle::dense_rank(D, p)) {
      bad.push_back("rank disagrees with dense oracle");
      break;
    }
    for (const auto& v : k.basis) {
      if (!oracle::in_kernel(D, {v.begin(), v.end()}, p)) bad.push_back("kernel vector fails A v = 0");
    }
    ++kernels;
  }

  // Diamond symmetries for hypersurfaces.
  std::size_t diamonds = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int nv = 3 + static_cast<int>(rng() % 6), deg = 3 + static_cast<int>(rng() % 3);
    const auto d = hodge::griffiths_hypersurface(std::vector<int>(nv, 1), deg);
    if (!d.serre_symmetric()) bad.push_back("Serre symmetry");
    for (int p = 0; p <= d.n(); ++p) {
      for (int q = 0; q <= d.n(); ++q) {
        if (d(p, q) != d(q, p) || d(p, q) < 0) bad.push_back("Hodge symmetry / sign");
      }
    }
    if (hodge::hkr_profile(d).total() != d.total()) bad.push_back("hkr total");
    ++diamonds;
  }

  // Involution squares to one; assignment invariants.
  std::size_t involutions = 0;
  for (const char* m : {"cubic7", "dqf5", "cubic4"}) {
    const auto rep = pipeline::run_hodge_model(m);
    const auto a = rep.weight == 2 ? hodge::weight2_assignment(rep.hh) : hodge::weight3_assignment(rep.hh, rep.unit);
    const std::size_t n = a.total_dim;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t s = 0;
        for (std::size_t k = 0; k < n; ++k) s += a.involution[i][k] * a.involution[k][j];
        if (s != (i == j ? 1 : 0)) {
          bad.push_back(std::string("c^2 != 1 for ") + m);
          i = j = n;
        }
      }
    }
    if (!hodge::check_assignment(a, rep.hh).empty()) bad.push_back(std::string("assignment invariants for ") + m);
    ++involutions;
  }

  // Validation: non-negative integers, even HH_0; bad inputs are caught.
  for (const char* m : {"cubic7", "dqf5"}) {
    if (!pipeline::run_hodge_model(m).validation.ok()) bad.push_back(std::string("validation of ") + m);
  }
  try {
    hodge::cy3_hodge_numbers(hodge::HochschildProfile(3, {{-3, 1}, {0, 3}, {3, 1}}));
    bad.push_back("odd HH_0 accepted");
  } catch (const hodge::HodgeValidationError&) {
  }
  try {
    hodge::cy3_hodge_numbers(hodge::HochschildProfile(3, {{-3, 1}, {-2, 0}, {0, 2}, {3, 1}}),
                             hodge::UnitProfile{{{0, 1}, {1, 1}, {3, 1}}});
    bad.push_back("negative h^{3,1} accepted");
  } catch (const hodge::HodgeValidationError&) {
  }

  std::ostringstream os;
  os << ring_cases << " ring-axiom triples, " << kernels << " kernels re-verified, " << diamonds << " diamonds, "
     << involutions << " involutions";
  if (!bad.empty()) os << "; violations: " << bad.front() << " (+" << bad.size() - 1 << " more)";
  return {bad.empty(), os.str()};
}

}  // namespace

int main() {
  criterion(1, "Det matches the printed expansion byte-exactly", 1.0, [] {
    std::size_t printed = 0;
    const auto parsed = oracle::parse_printed_det(oracle::read_file(CY3_DATA_DIR "/det_e6_printed.txt"), &printed);
    const std::string golden = oracle::read_file(CY3_DATA_DIR "/det_e6.txt");
    const auto det = algebra::e6_cubic();
    const std::string ours = poly::to_text(det);
    const bool ok = ours == golden && poly::to_text(parsed) == golden;
    // The printed expansion has 89 terms (64 trilinear, 24 of shape
    // y_a^2 y_b, one y25 y26 y27), not 45.
    return Outcome{ok, std::to_string(det.size()) + " terms computed, " + std::to_string(printed) +
                           " terms printed, byte-identical: " + (ok ? "yes" : "no")};
  });

  criterion(2, "Hessian 27x27 symmetric linear, Euler identity exact", 1.0, [] {
    const auto det = algebra::e6_cubic();
    const auto M = algebra::hessian(det);
    const auto grad = algebra::gradient(det);
    poly::SparsePoly euler(det.ring());
    for (std::size_t k = 0; k < 27; ++k) euler += poly::SparsePoly::variable(det.ring(), k) * grad[k];
    const bool shape = M.rows() == 27 && M.cols() == 27;
    const bool ok = shape && M.is_symmetric() && M.entries_homogeneous_of(1) && euler == det.scaled(3);
    return Outcome{ok, ok ? "sum y_k dDet/dy_k = 3 Det" : "structure or Euler check failed"};
  });

  std::cerr << "running the E6 pipeline on " << kSeedsWanted << " generic seeds\n";
  const SeedRun seeds = run_seeds();
  const bool enough = seeds.accepted.size() >= kSeedsWanted;

  criterion(3, "adjugate partner and both factorization identities over F_313", 0, [&] {
    double worst = 0;
    bool ok = enough;
    for (const auto& a : seeds.accepted) {
      ok = ok && a.adjugate_ok && a.factorization_verified;
      if (a.timings.count("adjugate")) worst = std::max(worst, a.timings.at("adjugate"));
    }
    std::ostringstream os;
    os << "seeds " << seed_list(seeds) << ", worst adjugate " << secs(worst) << " (target 600 s), peak RSS "
       << peak_rss_gb() << " GB (target 8 GB)" << rejected_note(seeds);
    return Outcome{ok, os.str()};
  });

  criterion(4, "Hom^0 = 1 with basis (l I, l I) on >= 3 generic seeds", 0, [&] {
    double worst = 0;
    bool ok = enough;
    for (const auto& a : seeds.accepted) {
      ok = ok && a.hom_dim == 1u && a.hom_basis_scalar == true;
      worst = std::max(worst, a.timings.at("hom0"));
    }
    ok = ok && worst <= 300;
    std::ostringstream os;
    os << seeds.accepted.size() << " seeds " << seed_list(seeds) << ", worst Hom^0 " << secs(worst)
       << " (limit 300 s per seed)";
    return Outcome{ok, os.str()};
  });

  criterion(5, "Ext^1 = 0 on the same seeds", 0, [&] {
    double worst = 0;
    bool ok = enough;
    for (const auto& a : seeds.accepted) {
      ok = ok && a.ext1_dim == 0u;
      if (a.timings.count("ext1")) worst = std::max(worst, a.timings.at("ext1"));
    }
    std::ostringstream os;
    os << "seeds " << seed_list(seeds) << ", worst Ext^1 " << secs(worst) << " (advisory target 2700 s)"
       << ", all attempts " << seeds.attempts << " in " << secs(seeds.seconds);
    return Outcome{ok, os.str()};
  });

  criterion(6, "Hom^0 and Ext^1 agree with the dense mapping-complex oracle", 60.0, oracle_suite);

  criterion(7, "cubic sevenfold category diamond", 1.0, [] {
    const auto rep = pipeline::run_hodge_model("cubic7");
    const bool ok = rep.ok() && rep.diamond && *rep.diamond == kCubic7Category();
    return Outcome{ok, "middle row 1, " + std::to_string((*rep.diamond)(1, 2)) + ", " +
                           std::to_string((*rep.diamond)(2, 1)) + ", 1; HH_0 of the sevenfold " +
                           std::to_string((*rep.ambient_hh)[0]) + ", HH_1 " + std::to_string((*rep.ambient_hh)[1])};
  });

  criterion(8, "double quartic fivefold category diamond", 1.0, [] {
    const auto rep = pipeline::run_hodge_model("dqf5");
    const bool ok = rep.ok() && rep.diamond && *rep.diamond == kDqf5Category();
    return Outcome{ok, "middle row 1, " + std::to_string((*rep.diamond)(1, 2)) + ", " +
                           std::to_string((*rep.diamond)(2, 1)) + ", 1; HH_0 of the fivefold " +
                           std::to_string((*rep.ambient_hh)[0]) + ", HH_1 " + std::to_string((*rep.ambient_hh)[1])};
  });

  criterion(9, "cubic fourfold bookkeeping and weight-2 assignment", 1.0, [] {
    const auto rep = pipeline::run_hodge_model("cubic4");
    const auto& amb = *rep.ambient_hh;
    const auto a = hodge::weight2_assignment(rep.hh);
    const bool ok = rep.ok() && (*rep.ambient)(2, 2) == 21 && amb[-2] == 1 && amb[0] == 25 && amb[2] == 1 &&
                    rep.hh[0] == 22 && a.dim(2, 0) == 1 && a.dim(1, 1) == 22 && a.dim(0, 2) == 1 &&
                    hodge::check_assignment(a, rep.hh).empty();
    std::ostringstream os;
    os << "h22 " << (*rep.ambient)(2, 2) << ", HH (" << amb[-2] << ", " << amb[0] << ", " << amb[2] << "), stripped "
       << rep.hh[0] << ", spaces (" << a.dim(2, 0) << ", " << a.dim(1, 1) << ", " << a.dim(0, 2) << ")";
    return Outcome{ok, os.str()};
  });

  criterion(10, "quarter turn of the category diamonds gives Z1 and Z3", 1.0, [] {
    const auto c7 = *pipeline::run_hodge_model("cubic7").diamond;
    const auto d5 = *pipeline::run_hodge_model("dqf5").diamond;
    const auto z1 = hodge::diamond_from_json(oracle::read_file(CY3_DATA_DIR "/diamonds/z1.json"));
    const auto z3 = hodge::diamond_from_json(oracle::read_file(CY3_DATA_DIR "/diamonds/z3.json"));
    const bool m1 = pipeline::mirror_check(c7, kZ1()).match && z1 == kZ1();
    const bool m3 = pipeline::mirror_check(d5, kZ3()).match && z3 == kZ3();
    const bool cross = !pipeline::mirror_check(c7, kZ3()).match;
    return Outcome{m1 && m3 && cross, std::string("cubic7 ~ Z1: ") + (m1 ? "yes" : "no") +
                                          ", dqf5 ~ Z3: " + (m3 ? "yes" : "no") +
                                          ", cubic7 ~ Z3 rejected: " + (cross ? "yes" : "no")};
  });

  criterion(11, "invariant and property checks", 300.0, property_sweep);

  std::cout << (failures ? "FAILED " : "ALL PASSED ") << failures << " failing criteria" << std::endl;
  return failures ? 1 : 0;
}
