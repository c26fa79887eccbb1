/*
  symmetry.hpp — the order-144 symmetry group of the coupling problem.

  An element permutes the lines and columns of the double 3x3 grid, may
  transpose both grids, and may swap the two grids; the six parameters are
  then read back off fixed cells of the transformed pair.  Elements are kept
  in the normal form (column perm) ∘ (line perm) ∘ transpose^t ∘ swap^s,
  which is unique, so plain field comparison is group-element equality.

  Equivalence statement: with m' the image of m under an element of sign s
  and d the (shared) multiplicity, char(X_{m'})(x) = s^d · char(X_m)(s·x)
  and char(Y_{m'}) = char(Y_m), as exact rational polynomial identities.
*/
#pragma once

#include "su3ml/poly.hpp"
#include "su3ml/weights.hpp"

#include <array>
#include <compare>
#include <vector>

namespace su3ml {

// Permutation of {0,1,2} stored as images: p[i] is where i goes.
using Perm3 = std::array<int, 3>;

constexpr Perm3 perm_identity() { return {0, 1, 2}; }
Perm3 perm_inverse(const Perm3& p);
// apply b first, then a
Perm3 perm_compose(const Perm3& a, const Perm3& b);
int perm_parity(const Perm3& p);  // +1 even, -1 odd
std::vector<Perm3> all_perms();   // the 6 permutations, lexicographic

struct SymmetryElement {
    Perm3 line_perm{0, 1, 2};
    Perm3 col_perm{0, 1, 2};
    bool transpose = false;
    bool swap_grids = false;
    auto operator<=>(const SymmetryElement&) const = default;
};

constexpr SymmetryElement identity_element() { return {}; }

// a after b.  Pushing a transpose through a permutation exchanges its
// line/column roles, so when `a` transposes, its column part composes with
// b's line part and vice versa; the two flags simply add mod 2.
SymmetryElement compose(const SymmetryElement& a, const SymmetryElement& b);
SymmetryElement inverse(const SymmetryElement& e);

// (-1)^(line parity) * (-1)^(column parity); transpose and swap are even.
int sign_of(const SymmetryElement& e);

// The grid action itself (swap, then transpose, then move cell (i,j) to
// (line(i), col(j))).
Arrangement transform_arrangement(const SymmetryElement& e, const Arrangement& arr);

// Action on parameters: transform the arrangement and read the six
// parameters back.  Throws NonIntegral when (l, n) do not exist; the image
// of an integral tuple is again integral, with the same multiplicity.
ParamSet apply(const SymmetryElement& e, const ParamSet& params);

// All 144 elements in a fixed deterministic order.
std::vector<SymmetryElement> enumerate_group();

// The 12 classical elements: the six column permutations, plus their
// products with the dual flip (swap the grids and exchange lines 1, 3).
std::vector<SymmetryElement> classical_subgroup();

// Replace every representation by its conjugate: (m1, m2) -> (m2, m1) in
// all three slots.  Defined for every tuple; agrees with applying the dual
// flip whenever (l, n) exist.
ParamSet dual(const ParamSet& params);

struct EquivalenceReport {
    int sign = 1;
    bool dims_equal = false;
    bool x_charpoly_match = false;
    bool y_charpoly_match = false;
    ParamSet image;

    bool all_ok() const { return dims_equal && x_charpoly_match && y_charpoly_match; }
};

// Exact check of the equivalence statement for one element.  Throws
// NotPhysical when multiplicity(params) == 0.
EquivalenceReport verify_equivalence(const ParamSet& params, const SymmetryElement& e);

// All distinct images of params under the 144 elements, sorted.
std::vector<ParamSet> orbit(const ParamSet& params);

}  // namespace su3ml
