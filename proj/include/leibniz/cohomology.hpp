#pragma once

#include "leibniz/derivations.hpp"

namespace leibniz {

// 2-cochains are bilinear maps L x L -> L, flattened to n^3-vectors: entry
// (u*n + v)*n + w holds the b_w coordinate of c(b_u, b_v). The boundary of a
// linear map u is (d1 u)(x, y) = [x, u(y)] + [u(x), y] - u([x, y]); a cochain
// c is closed when, for all x, y, z,
//   [x, c(y,z)] - [c(x,y), z] + [c(x,z), y]
//     + c(x, [y,z]) - c([x,y], z) + c([x,z], y) = 0.
// Kernel of d1 = derivations, so coboundary_dim(a) + derivation_space(a).dim()
// is always n^2. Expect the closed-cochain computations to be practical for
// n up to about 10; the system has n^3 unknowns.

Vec coboundary_of(const Algebra& a, const Matrix& u);
int coboundary_dim(const Algebra& a);
std::vector<Vec> coboundary_basis(const Algebra& a);  // reduced-echelon, canonical

bool is_cocycle(const Algebra& a, const Vec& c);

// Dimension of the closed 2-cochains. The algebra must satisfy the Leibniz
// identity (validation error otherwise).
int cocycle_dim(const Algebra& a);

enum class Rigidity { certified_rigid, unknown };

struct CohomologyReport {
  int zl2 = 0;  // closed 2-cochains
  int bl2 = 0;  // 2-coboundaries
  int hl2 = 0;  // zl2 - bl2
  // Vanishing second cohomology certifies rigidity; anything else stays
  // unknown, never "not rigid".
  Rigidity rigidity = Rigidity::unknown;
};

// Same Leibniz precondition as cocycle_dim.
CohomologyReport cohomology(const Algebra& a);

}  // namespace leibniz
