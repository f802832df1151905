#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cy3/algebra/restriction.hpp"
#include "cy3/mf/io.hpp"
#include "cy3/mf/morphisms.hpp"

namespace cy3::pipeline {

struct RunConfig {
  std::string command, subcommand;
  std::uint32_t prime = 313;
  std::uint64_t seed = 0;
  std::int64_t height = 30;
  int retries = 5;
  std::string input, output;
  int verbosity = 0;
  bool emit_basis = false;

  // Throws std::invalid_argument: prime odd and < 2^16, retries >= 0, height > 0.
  void validate() const;
};

using Logger = std::function<void(const std::string&)>;

struct AttemptReport {
  std::uint64_t seed = 0;
  std::size_t redraws = 0;
  std::optional<algebra::RestrictionSpec> restriction;
  bool adjugate_ok = false;
  std::size_t adjugate_kernel_dim = 0;
  bool adjugate_coupled = false;
  bool factorization_verified = false;
  std::optional<std::size_t> hom_dim, ext1_dim;
  std::optional<mf::MorphismSpace> hom, ext;
  // With emit_basis: does every Hom^0 basis pair have the form (l I, l I)?
  std::optional<bool> hom_basis_scalar;
  bool generic = false;
  std::string diagnosis;
  std::map<std::string, double> timings;
};

struct PipelineReport {
  std::string source;  // "e6" or the input path
  std::vector<AttemptReport> attempts;
  std::optional<std::size_t> accepted;  // index into attempts
  mf::SphericalReport spherical;
  RunConfig config;
};

// Det -> Hessian -> restriction -> adjugate -> factorization -> Hom^0 -> Ext^1,
// moving to seed + 1 while the result is non-generic (adjugate failure,
// Hom^0 != 1 or Ext^1 != 0), up to cfg.retries extra seeds. Every seed is kept.
PipelineReport run_e6(const RunConfig& cfg, const Logger& log = {});

// Same morphism computations for a factorization read from a file. MFError
// from a failing identity propagates.
PipelineReport run_file(const RunConfig& cfg, const mf::MFFile& file, const Logger& log = {});

// Pretty JSON with sorted keys; timings live under "timings" keys only, so
// dropping them leaves a run-independent document.
std::string to_json(const PipelineReport& rep, bool with_timings = true);

// The Hom^0 basis pairs rendered compactly ("scalar" when A = B = l I).
std::string describe_pair(const poly::PolyMatrix& A, const poly::PolyMatrix& B);

}  // namespace cy3::pipeline
