#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cy3/mf/graded_mf.hpp"

namespace cy3::mf {

enum class ExtMethod {
  kAuto,        // structured elimination for uniform twists, full system otherwise
  kFull,        // both squares, all unknowns in one sparse system
  kStructured,  // eliminate the B block row by row against the shared map b -> b d1
};

struct MorphismOptions {
  bool emit_basis = false;
  ExtMethod ext_method = ExtMethod::kAuto;
  std::uint64_t check_seed = 1;  // for the randomized coboundary-is-cocycle check
  std::function<void(const std::string&)> log;
};

struct MorphismSpace {
  int degree = 0;
  std::size_t cocycle_dim = 0;
  std::size_t coboundary_dim = 0;
  std::size_t hom_dim = 0;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::string method;
  // Representatives of a basis of cocycles modulo coboundaries, as (A, B).
  std::vector<std::pair<PolyMatrix, PolyMatrix>> basis;
  std::map<std::string, double> timings;
};

// Degree-0 morphisms: A on P1, B on P0 with B d1 = d1 A and A d0 = d0 B,
// modulo A = h0 d1 + d0 h1, B = d1 h0 + h1 d0.
MorphismSpace hom_degree0(const GradedMF& mf, const MorphismOptions& opts = {});

// Degree-1 morphisms: A: P1 -> P0 and B: P0 -> P1(d) with B d1 = d0 A and
// A d0 = d1 B, modulo (A, B) = (d1 T + S d1, T d0 + d0 S) for S on P0 and
// T on P1.
MorphismSpace ext1(const GradedMF& mf, const MorphismOptions& opts = {});

enum class Verdict { kSpherical, kNotSpherical, kInconclusive };
const char* verdict_name(Verdict v);

struct SphericalReport {
  std::optional<std::size_t> hom_dim, ext1_dim;
  std::map<int, std::size_t> inferred;  // Ext^k dimensions via CY3 Serre duality
  Verdict verdict = Verdict::kInconclusive;
  std::string assumption = "ambient category is Calabi-Yau of dimension 3 (caller's assertion)";
};

SphericalReport spherical_report(std::optional<std::size_t> hom_dim, std::optional<std::size_t> ext1_dim);
SphericalReport spherical_check(const GradedMF& mf, const MorphismOptions& opts = {});

}  // namespace cy3::mf
