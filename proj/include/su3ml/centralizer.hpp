/*
  centralizer.hpp — polynomial relations closing on the two label operators.

  The commutator Z = [X, Y] of the finite blocks built by tridiag.hpp
  satisfies further relations whose scalar coefficients depend on the six
  representation labels only through averages over the 51840-element
  reflection group acting on label space (e6.hpp):

      [X, Z] = -6 Y^2 + a2 X^2 + a5 X + a8
      [Y, Z] = -2 X^3 - a2 {X, Y} - a5 Y + a6 X + a9

  together with one degree-four combination that is a12 times the identity.
  This module evaluates the group averages exactly, assembles the
  coefficients, verifies the relations on the finite blocks, and recovers the
  coefficients back from a single block by exact linear algebra.
*/
#pragma once

#include "su3ml/matrix.hpp"
#include "su3ml/rational.hpp"
#include "su3ml/weights.hpp"

#include <array>

namespace su3ml {

// Scaled group averages of six monomials in the transformed label tuple.
// The four even ones are invariant under the full signed label symmetry;
// p5 and p9 change sign under its orientation-reversing half.
struct InvariantValues {
    Rat p2, p5, p6, p8, p9, p12;
    auto operator<=>(const InvariantValues&) const = default;
};

// Exact evaluation, memoised per label tuple.  Labels up to 20 in absolute
// value are summed in 128-bit machine integers (provably overflow-free);
// larger ones fall back to arbitrary precision.
InvariantValues invariant_values(const ParamSet& params);

// Scalar coefficients of the closure relations.
struct StructureConstants {
    Rat a2, a5, a6, a8, a9, a12;
    auto operator<=>(const StructureConstants&) const = default;
};

StructureConstants structure_constants(const InvariantValues& p);
StructureConstants structure_constants(const ParamSet& params);

// Left-minus-right sides of the three relations for an explicit dense pair.
// Zero matrices iff the pair satisfies the closure relations with the given
// coefficients.  Also consumed column-wise by the windowed-representation
// checks of faces.hpp.
struct RelationResiduals {
    RatMatrix x_bracket, y_bracket, central;
};

RelationResiduals relation_residuals(const RatMatrix& x, const RatMatrix& y,
                                     const StructureConstants& a);

// Exact check of the three relations on the block of a physical label tuple.
struct RelationReport {
    int dim = 0;
    bool x_bracket_ok = false;  // [X, Z] relation
    bool y_bracket_ok = false;  // [Y, Z] relation
    bool central_ok = false;    // degree-four combination == a12 * identity

    bool all_ok() const { return x_bracket_ok && y_bracket_ok && central_ok; }
};

RelationReport verify_relations(const ParamSet& params);
RelationReport verify_relations(const ParamSet& params, const StructureConstants& a);

// Recovery of (a2, a5, a6, a8, a9) from the two bracket relations on a single
// block, by exact elimination on the joint linear system.  Small blocks
// satisfy extra polynomial identities (on a 2x2 block X^2 is already a
// combination of X and the identity), so not every coefficient is pinned
// down; `determined` flags the ones that are, and `values` carries the
// unique answer exactly at those positions.  Throws Underdetermined when the
// block pins down none of them, NotPhysical when there is no block at all.
struct FitResult {
    std::array<Rat, 5> values{};        // order: a2, a5, a6, a8, a9
    std::array<bool, 5> determined{};

    bool all_determined() const {
        for (bool d : determined)
            if (!d) return false;
        return true;
    }
};

FitResult fit_constants_from_rep(const ParamSet& params);

}  // namespace su3ml
