#include "cy3/pipeline/pipeline.hpp"

#include <chrono>
#include <json.hpp>
#include <sstream>

#include "cy3/algebra/jordan.hpp"
#include "cy3/linalg/prime_field.hpp"
#include "cy3/poly/text_format.hpp"

namespace cy3::pipeline {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void say(const Logger& log, const std::string& s) {
  if (log) log(s);
}

// Scalar value l if m = l I, nothing otherwise.
std::optional<std::uint64_t> scalar_of(const poly::PolyMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::optional<std::uint64_t> lambda;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& e = m(i, j);
      if (i != j) {
        if (!e.is_zero()) return std::nullopt;
        continue;
      }
      if (e.size() > 1 || (e.size() == 1 && e.terms()[0].monomial.degree() != 0)) return std::nullopt;
      const std::uint64_t v = e.is_zero() ? 0 : e.terms()[0].coeff.get_ui();
      if (lambda && *lambda != v) return std::nullopt;
      lambda = v;
    }
  }
  return lambda;
}

// Hom^0, then Ext^1 unless Hom^0 already rules the seed out.
void morphisms(const mf::GradedMF& g, const RunConfig& cfg, const Logger& log, AttemptReport& a, bool always_ext) {
  mf::MorphismOptions opts;
  opts.emit_basis = cfg.emit_basis;
  opts.check_seed = a.seed + 1;
  if (cfg.verbosity > 0) opts.log = log;

  auto t0 = Clock::now();
  a.hom = mf::hom_degree0(g, opts);
  a.hom_dim = a.hom->hom_dim;
  a.timings["hom0"] = seconds_since(t0);
  say(log, "hom0 = " + std::to_string(*a.hom_dim) + " (" + std::to_string(a.timings["hom0"]) + " s)");
  if (cfg.emit_basis) {
    bool scalar = true;
    for (const auto& [A, B] : a.hom->basis) scalar = scalar && scalar_of(A) && A == B;
    a.hom_basis_scalar = scalar;
  }
  if (*a.hom_dim != 1 && !always_ext) return;

  t0 = Clock::now();
  a.ext = mf::ext1(g, opts);
  a.ext1_dim = a.ext->hom_dim;
  a.timings["ext1"] = seconds_since(t0);
  say(log, "ext1 = " + std::to_string(*a.ext1_dim) + " (" + std::to_string(a.timings["ext1"]) + " s)");
}

json space_json(const mf::MorphismSpace& s, bool with_timings) {
  json j;
  j["degree"] = s.degree;
  j["cocycle_dim"] = s.cocycle_dim;
  j["coboundary_dim"] = s.coboundary_dim;
  j["dim"] = s.hom_dim;
  j["unknowns"] = s.unknowns;
  j["equations"] = s.equations;
  j["method"] = s.method;
  if (!s.basis.empty()) {
    json b = json::array();
    for (const auto& [A, B] : s.basis) b.push_back(describe_pair(A, B));
    j["basis"] = b;
  }
  if (with_timings) j["timings"] = s.timings;
  return j;
}

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

void RunConfig::validate() const {
  if (prime < 3 || prime >= linalg::PrimeField::kMaxPrime || !poly::is_prime(prime)) {
    throw std::invalid_argument("prime must be an odd prime below 65536");
  }
  if (retries < 0) throw std::invalid_argument("retries must be >= 0");
  if (height <= 0) throw std::invalid_argument("height must be positive");
}

std::string describe_pair(const poly::PolyMatrix& A, const poly::PolyMatrix& B) {
  const auto la = scalar_of(A), lb = scalar_of(B);
  if (la && lb && *la == *lb) return "A = B = " + std::to_string(*la) + " I";
  std::ostringstream os;
  const auto dump = [&](const char* name, const poly::PolyMatrix& m) {
    os << name << ":";
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!m(i, j).is_zero()) os << " (" << i + 1 << "," << j + 1 << ")=" << poly::to_inline(m(i, j));
      }
    }
  };
  dump("A", A);
  os << " | ";
  dump("B", B);
  return os.str();
}

PipelineReport run_e6(const RunConfig& cfg, const Logger& log) {
  cfg.validate();
  PipelineReport rep;
  rep.source = "e6";
  rep.config = cfg;

  const auto t0 = Clock::now();
  const auto det = algebra::e6_cubic();
  const auto hess = algebra::hessian(det);
  say(log, "Det and Hessian built (" + std::to_string(seconds_since(t0)) + " s)");

  for (int i = 0; i <= cfg.retries; ++i) {
    AttemptReport a;
    a.seed = cfg.seed + static_cast<std::uint64_t>(i);
    say(log, "seed " + std::to_string(a.seed));
    try {
      auto t = Clock::now();
      a.restriction = algebra::random_restriction(cfg.prime, a.seed, cfg.height, 27, 9, &a.redraws);
      const auto f = algebra::restrict(det, *a.restriction);
      const auto M = algebra::restrict(hess, *a.restriction);
      a.timings["restrict"] = seconds_since(t);

      t = Clock::now();
      const auto adj = mf::adjugate_partner(M, f);
      a.timings["adjugate"] = seconds_since(t);
      a.adjugate_ok = adj.partner.has_value();
      a.adjugate_kernel_dim = adj.kernel_dim;
      a.adjugate_coupled = adj.used_coupled_system;
      say(log, "adjugate: " + std::string(a.adjugate_ok ? "found" : adj.diagnosis) + ", kernel dim " +
                   std::to_string(adj.kernel_dim));
      if (!a.adjugate_ok) {
        a.diagnosis = adj.diagnosis;
      } else {
        const auto g = mf::GradedMF::uniform(f, M, *adj.partner);  // re-verifies both identities
        a.factorization_verified = true;
        morphisms(g, cfg, log, a, false);
        if (a.hom_dim != 1) a.diagnosis = "non-generic: hom0 = " + std::to_string(*a.hom_dim);
        else if (a.ext1_dim != 0) a.diagnosis = "non-generic: ext1 = " + std::to_string(*a.ext1_dim);
        else a.generic = true;
      }
    } catch (const std::exception& e) {
      a.diagnosis = e.what();
    }
    if (!a.diagnosis.empty()) say(log, "seed " + std::to_string(a.seed) + ": " + a.diagnosis);
    rep.attempts.push_back(std::move(a));
    if (rep.attempts.back().generic) {
      rep.accepted = rep.attempts.size() - 1;
      break;
    }
  }
  const AttemptReport& last = rep.attempts[rep.accepted.value_or(rep.attempts.size() - 1)];
  rep.spherical = mf::spherical_report(last.hom_dim, last.ext1_dim);
  return rep;
}

PipelineReport run_file(const RunConfig& cfg, const mf::MFFile& file, const Logger& log) {
  PipelineReport rep;
  rep.source = cfg.input;
  rep.config = cfg;
  AttemptReport a;
  a.seed = cfg.seed;
  const auto g = mf::load_factorization(file);
  a.adjugate_ok = true;  // supplied, not solved for
  a.factorization_verified = true;
  morphisms(g, cfg, log, a, true);
  a.generic = a.hom_dim == 1 && a.ext1_dim == 0;
  rep.spherical = mf::spherical_report(a.hom_dim, a.ext1_dim);
  rep.attempts.push_back(std::move(a));
  rep.accepted = 0;
  return rep;
}

std::string to_json(const PipelineReport& rep, bool with_timings) {
  json j;
  j["schema"] = rep.source == "e6" ? "cy3.e6-report/1" : "cy3.file-report/1";
  j["source"] = rep.source;
  j["config"] = {{"prime", rep.config.prime},
                 {"seed", rep.config.seed},
                 {"height", rep.config.height},
                 {"retries", rep.config.retries},
                 {"emit_basis", rep.config.emit_basis}};
  json attempts = json::array();
  json seeds = json::array();
  for (const auto& a : rep.attempts) {
    json ja;
    ja["seed"] = a.seed;
    seeds.push_back(a.seed);
    if (a.restriction) {
      ja["restriction"] = json::parse(a.restriction->to_json());
      ja["restriction_redraws"] = a.redraws;
    }
    ja["adjugate"] = {{"ok", a.adjugate_ok}, {"kernel_dim", a.adjugate_kernel_dim}, {"coupled", a.adjugate_coupled}};
    ja["factorization_verified"] = a.factorization_verified;
    ja["hom_dim"] = opt(a.hom_dim);
    ja["ext1_dim"] = opt(a.ext1_dim);
    if (a.hom) ja["hom0"] = space_json(*a.hom, with_timings);
    if (a.ext) ja["ext1"] = space_json(*a.ext, with_timings);
    if (a.hom_basis_scalar) ja["hom_basis_scalar"] = *a.hom_basis_scalar;
    ja["generic"] = a.generic;
    ja["diagnosis"] = a.diagnosis;
    if (with_timings) ja["timings"] = a.timings;
    attempts.push_back(std::move(ja));
  }
  j["attempts"] = attempts;
  j["seeds_used"] = seeds;
  j["accepted_seed"] = rep.accepted ? json(rep.attempts[*rep.accepted].seed) : json(nullptr);
  json sph;
  sph["hom_dim"] = opt(rep.spherical.hom_dim);
  sph["ext1_dim"] = opt(rep.spherical.ext1_dim);
  json inferred = json::object();
  for (const auto& [k, v] : rep.spherical.inferred) inferred["ext" + std::to_string(k)] = v;
  sph["inferred"] = inferred;
  sph["verdict"] = mf::verdict_name(rep.spherical.verdict);
  sph["assumption"] = rep.spherical.assumption;
  j["spherical"] = sph;
  return j.dump(2);
}

}  // namespace cy3::pipeline
