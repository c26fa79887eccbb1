/*
  hahn.hpp — Hahn-type pair underlying the block operators.

  Each physical parameter set carries a simpler tridiagonal pair (H1, H2):
  H1 is diagonal with entries linear in the row index, H2 tridiagonal with
  quadratic bands.  The block operators X and Y of tridiag.hpp are fixed
  polynomials in (H1, H2) — degree one resp. three — whose coefficients
  z0..z12 are rational in the parameter values, and the pair closes under
  commutators into a quadratic algebra with two scalars A2, A3.
*/
#pragma once

#include "su3ml/matrix.hpp"
#include "su3ml/rational.hpp"
#include "su3ml/tridiag.hpp"
#include "su3ml/weights.hpp"

#include <array>

namespace su3ml {

struct HahnPair {
    int dim = 0;
    RatMatrix h1, h2;
};

// Boundary convention: the diagonal band formula is evaluated verbatim in
// the first and last rows even though the matching off-diagonal entries fall
// outside the block.  Throws NotPhysical when the multiplicity vanishes.
HahnPair hahn_matrices(const ParamSet& params);

struct ZCoefficients {
    std::array<Rat, 13> z{};  // z0 .. z12
    Rat a2, a3;               // scalars of the closure relations
};

ZCoefficients z_coefficients(const XiParams& xi);
ZCoefficients z_coefficients(const ParamSet& params);

// Assembles
//   X = z0 + z1 H1 + z2 H2 + z3 [H1,H2] + z4 {H1,H2}
//   Y = z5 + z6 H1 + z7 H2 + z8 [H1,H2] + z9 {H1,H2}
//         + z10 H1^2 + z11 H1^2 H2 + z12 H1 H2 H1
// which reproduce the tridiag.hpp blocks entry by entry.
struct ComposedPair {
    RatMatrix x, y;
};
ComposedPair heun_hahn_compose(const ParamSet& params);

// Commutator relations of the pair,
//   [[H1,H2],H2] == 2 {H1,H2} + A3
//   [H1,[H1,H2]] == 2 H1^2 + H2 + A2
// evaluated on a window padded by four rows on both sides and restricted
// back to the physical block: products of truncated band matrices are only
// trustworthy away from the cut.
struct HahnAlgebraReport {
    bool pair_relation_ok = false;
    bool height_relation_ok = false;

    bool all_ok() const { return pair_relation_ok && height_relation_ok; }
};
HahnAlgebraReport hahn_algebra_check(const ParamSet& params);

}  // namespace su3ml
