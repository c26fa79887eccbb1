/*
  faces.hpp — 4-faces of the root polytope and the doubly-infinite
  tridiagonal operator pairs they label.

  A face is an unordered set of five roots with pairwise inner product 1,
  orthogonal to exactly one positive root.  There are 432 of them: a base
  face per positive root, five in-face reflections of it, and the centrally
  inverted copies; together they form a single orbit under the signed Weyl
  group.  Evaluating the five roots at a label tuple yields five integers
  which, padded with a sixth value 0, parametrize a doubly-infinite
  tridiagonal pair satisfying the closure relations of centralizer.hpp.  The
  relations are verifiable exactly on any 9x9 window, finite blocks split
  off wherever the super-diagonal vanishes, and one particular face and
  block reproduces the operators of tridiag.hpp up to diagonal similarity.
*/
#pragma once

#include "su3ml/centralizer.hpp"
#include "su3ml/e6.hpp"
#include "su3ml/matrix.hpp"
#include "su3ml/weights.hpp"

#include <array>
#include <utility>
#include <vector>

namespace su3ml {

// Five roots in construction order plus the data recording how the face was
// reached.  Faces compare equal as unordered root sets; the orthogonal root,
// the reflection index k, and the global sign are construction metadata.
struct FourFace {
    std::array<RootVector, 5> roots{};
    RootVector orthogonal_root{};  // the unique positive root orthogonal to all five
    int k = 0;                     // 0 for a base face, 1..5 after an in-face reflection
    int sign = 1;                  // -1 for the centrally inverted copy

    std::array<RootVector, 5> sorted_roots() const;
    friend bool operator==(const FourFace& a, const FourFace& b) {
        return a.sorted_roots() == b.sorted_roots();
    }
};

// The base face attached to the highest root: the nested chains
// α1 + ... + αj for j = 5 down to 1, each orthogonal to Θ.
FourFace canonical_face();

// The face orthogonal to `Lambda` with reflection index k and global sign.
// k = 0 transports the canonical face by the minimal word Θ -> Λ (order
// preserved); k in 1..5 reflects the k = 0 face in its k-th root, listing
// -ξk first and then ξj - ξk in j order; sign -1 negates all five roots.
// Throws NotARoot unless Lambda is a positive root, OutOfRange for k
// outside 0..5 or sign outside ±1.
FourFace face(const RootVector& Lambda, int k, int sign);

// All 432 faces: every positive root, k = 0..5, sign +1 then -1, in that
// deterministic order.  The root sets are pairwise distinct.
std::vector<FourFace> enumerate_faces();

// A face evaluated at a label tuple: the five root values plus ξ6 = 0, the
// value of the orthogonal root, and λ± = ±Λ/2 + (Σξ)/6.
struct FaceValues {
    std::array<long, 6> xi{};  // xi[5] always 0
    long Lambda_value = 0;
    Rat lambda_plus;
    Rat lambda_minus;
};

// Throws NonIntegral when a root value is fractional at the given tuple
// (the value forms carry denominator 3).
FaceValues face_values(const FourFace& f, const ParamSet& params);

// Rows and columns j0 .. j0 + width - 1 of the doubly-infinite pair.  With
// s the face sign and p(j) = j Π(j - ξi) over the five face values:
//     X: sub = s,            diag = s * (shared X formula),  super = s p(j)
//     Y: sub = j - λ+,       diag = shared Y formula,        super = p(j) (j - λ-)
// The shared diagonal formulas are those of tridiag.hpp in the offset-free
// gauge.  Throws OutOfRange when width < 1.
std::pair<RatMatrix, RatMatrix> rep_window(const FourFace& f, const ParamSet& params,
                                           long j0, int width);

// Maximum absolute entry of the central column of each closure-relation
// residual on a window.  The relations have bandwidth four, so on a 9x9
// window the central column is exact and must vanish identically.
struct WindowDefects {
    Rat x_bracket, y_bracket, central;

    bool all_zero() const { return x_bracket == 0 && y_bracket == 0 && central == 0; }
};

// Defects of an explicitly given window pair (lets tests corrupt an entry
// and watch the defect appear), and of the 9x9 window centered at j0.
WindowDefects window_defects(const RatMatrix& xw, const RatMatrix& yw,
                             const StructureConstants& a);
WindowDefects verify_window(const FourFace& f, const ParamSet& params, long j0);

// The finite block between consecutive sorted face values: rows ξ(a) + 1 ..
// ξ(a+1), where ξ(1) <= ... <= ξ(6) sorts the six values.  The block is a
// representation in its own right because the super-diagonal vanishes at
// both cut points.  Throws EmptyWindow when the two values coincide,
// OutOfRange unless 1 <= a <= 5.
std::pair<RatMatrix, RatMatrix> extract_finite(const FourFace& f, const ParamSet& params,
                                               int a);

// The face and block reproducing the finite operators of tridiag.hpp: the
// base face of Θ when n <= l, of Θ - α6 otherwise, with rows
// max(ξ4, ξ5, 0) + 1 .. min(ξ1, ξ2, ξ3) in face-value order.  The extracted
// pair is diagonally similar to (build_X, build_Y): characteristic
// polynomials, diagonals, and super·sub products all agree.  Throws
// NotPhysical when the multiplicity vanishes.
struct PhysicalWindow {
    FourFace face;
    long first = 0;  // first row index of the block
    long last = 0;   // last row index, inclusive; last - first + 1 = multiplicity
};

PhysicalWindow physical_face(const ParamSet& params);

}  // namespace su3ml
