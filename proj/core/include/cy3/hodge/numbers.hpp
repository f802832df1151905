#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cy3/hodge/diamond.hpp"

namespace cy3::hodge {

// Hodge numbers of a CY3 category from its Hochschild profile and unit:
//   h^{i,0} = T^{3-i}
//   h^{3,1} = HH_{-2} - h^{2,0}
//   h^{3,2} = h^{1,0},  h^{2,1} = HH_{-1} - h^{1,0} - h^{3,2}
//   h^{3,3} = h^{0,0},  h^{1,1} = h^{2,2} = (HH_0 - h^{0,0} - h^{3,3}) / 2
//   h^{p,q} = h^{q,p}
// A negative h^{2,1} is allowed through (validate_cy3 flags it); any other
// negative value or an odd HH_0 remainder throws HodgeValidationError.
HodgeDiamond cy3_hodge_numbers(const HochschildProfile& hh, const UnitProfile& unit = {});

struct ValidationIssue {
  std::string clause;
  std::string message;
  bool guaranteed = true;  // false: the clause is not promised by the theory
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  // Only issues on guaranteed clauses count as failures.
  bool ok() const;
  std::string describe() const;
};

// Non-negativity (h^{2,1} reported separately as not guaranteed), evenness
// of HH_0, connectedness HH_{-3} = 1, and agreement of d with hh:
// HH_{-k} = sum over p - q = k of h^{p,q}.
ValidationReport validate_cy3(const HodgeDiamond& d, const HochschildProfile& hh);

// Diamond of a quasi-smooth hypersurface of degree `degree` in weighted
// projective space P(weights); dimension n = #weights - 2. Primitive middle
// numbers h^{n-q,q} are Jacobian-ring dimensions, the coefficient of
// t^{(q+1)d - sum w} in prod (1 - t^{d-w}) / (1 - t^w); one algebraic class
// is added on every (p,p). Throws std::invalid_argument unless every weight
// is positive and below the degree.
HodgeDiamond griffiths_hypersurface(const std::vector<int>& weights, int degree);

// Coefficients 0..max_degree of prod (1 - t^{d-w}) / (1 - t^w).
std::vector<Count> jacobian_hilbert_series(const std::vector<int>& weights, int degree, int max_degree);

struct KLattice {
  std::size_t rank = 0;
  std::vector<std::vector<std::int64_t>> class_vectors;
};

struct GenerationResult {
  bool generates = false;
  std::size_t rational_rank = 0;
};

// Do the class vectors span Q^rank? Throws std::invalid_argument on a vector
// of the wrong length.
GenerationResult klattice_generates(const KLattice& lat);

}  // namespace cy3::hodge
