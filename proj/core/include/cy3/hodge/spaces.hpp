#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cy3/hodge/diamond.hpp"

namespace cy3::hodge {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

// Explicit model: HH_k is the block of standard basis vectors
// [offset(k), offset(k) + dims[k]) in Q^total; every Hodge space is spanned by
// vectors of that ambient space.
struct HodgeSpace {
  int p = 0, q = 0;
  int hh_degree = 0;  // the HH_k containing it, k = q - p
  std::vector<IntVector> basis;
};

struct HodgeSpaceAssignment {
  int weight = 0;
  std::size_t total_dim = 0;
  std::map<int, std::size_t> offset;  // first basis index of HH_k
  std::vector<HodgeSpace> spaces;
  IntMatrix involution;  // total_dim x total_dim, HH_k -> HH_{-k}
  // Weight 3 only: the form on HH_0 and the two Lagrangians.
  IntMatrix symplectic;  // dims[0] x dims[0], HH_0 coordinates
  std::vector<IntVector> V1, V2;
  std::string form_note;

  const HodgeSpace* find(int p, int q) const;
  std::size_t dim(int p, int q) const;
};

// H^{2,0} = HH_{-2} (the unit's degree-0 part), H^{0,2} = HH_2, H^{1,1} = HH_0;
// the involution swaps HH_{-2} and HH_2 and fixes HH_0. Throws
// HodgeValidationError("shape", ...) unless HH is 1, *, 1 in degrees -2, 0, 2
// and zero elsewhere.
HodgeSpaceAssignment weight2_assignment(const HochschildProfile& hh);

// Weight 3 with unit C + C[3]:
//   H^{3,0} = HH_{-3}, H^{0,0} a line in HH_0, H^{1,0} = H^{2,0} = 0,
//   H^{3,1} = HH_{-2}, H^{3,2} = 0, H^{2,1} = HH_{-1},
//   V1 a Lagrangian of HH_0 containing H^{0,0}, V2 a complementary
//   Lagrangian, H^{1,1} a complement of H^{0,0} in V1, H^{3,3} a line in V2,
//   H^{2,2} its complement in V2, and H^{p,q} = c(H^{q,p}) for p < q.
// The form on HH_0 is the standard block form for the basis e_1..e_2g,
// w(e_i, e_{g+i}) = 1, a declared stand-in for the Serre-duality form.
HodgeSpaceAssignment weight3_assignment(const HochschildProfile& hh, const UnitProfile& unit = {});

// Checks the assignment invariants against the profile: dimensions over each
// HH_k, c^2 = 1, c(H^{p,q}) = H^{q,p}, isotropy of V1 and V2, V1 + V2 = HH_0.
// Returns the list of violations (empty when valid).
std::vector<std::string> check_assignment(const HodgeSpaceAssignment& a, const HochschildProfile& hh);

}  // namespace cy3::hodge
