/*
  tridiag.hpp — the exact tridiagonal operator pair (X, Y) attached to a
  physical parameter set, with characteristic polynomials and spectra.

  The construction goes through six auxiliary integers xi1..xi6 (xi6 = 0)
  picked by an l-vs-n branch, their extremes xi_a/xi_b, and the combinations
  Lambda and lambda±.  The block dimension is d = xi_a - xi_b, which equals
  the multiplicity.  Characteristic polynomials use the three-term recurrence
  for tridiagonal matrices, exactly.
*/
#pragma once

#include "su3ml/matrix.hpp"
#include "su3ml/poly.hpp"
#include "su3ml/weights.hpp"

#include <vector>

namespace su3ml {

enum class XiBranch { l_le_n, n_lt_l };

struct XiParams {
    std::array<long, 6> xi{};  // xi[5] always 0
    long xi_a = 0;             // min(xi1, xi2, xi3)
    long xi_b = 0;             // max(xi4, xi5, xi6)
    long Lambda = 0;
    Rat lambda_plus;
    Rat lambda_minus;
    XiBranch branch = XiBranch::l_le_n;
};

struct RationalTridiagonal {
    int dim = 0;
    std::vector<Rat> diag;   // length dim
    std::vector<Rat> super;  // length dim-1
    std::vector<Rat> sub;    // length dim-1

    explicit RationalTridiagonal(int d = 0)
        : dim(d), diag(size_t(std::max(d, 0))), super(d > 1 ? d - 1 : 0), sub(d > 1 ? d - 1 : 0) {}

    RatMatrix dense() const {
        RatMatrix m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = diag[i];
        for (int i = 0; i + 1 < dim; ++i) {
            m.at(i, i + 1) = super[i];
            m.at(i + 1, i) = sub[i];
        }
        return m;
    }
    friend bool operator==(const RationalTridiagonal& a, const RationalTridiagonal& b) {
        return a.dim == b.dim && a.diag == b.diag && a.super == b.super && a.sub == b.sub;
    }
};

struct CharPoly {
    RatPoly p;  // monic, degree = dim
};

struct Spectrum {
    std::vector<double> values;  // strictly increasing
    double tolerance = 1e-12;
};

// Throws NonIntegral via derive_ln; defined for any integral (l, n).
XiParams xi_params(const ParamSet& params);

// Throw NotPhysical when multiplicity(params) == 0.
RationalTridiagonal build_X(const ParamSet& params);
RationalTridiagonal build_Y(const ParamSet& params);

// Exact three-term recurrence; works for any RationalTridiagonal.
CharPoly char_poly(const RationalTridiagonal& t);

// Numeric roots of the characteristic polynomial, sorted ascending.  The
// operators here have real spectra; ToleranceNotMet if a root keeps a
// non-negligible imaginary part.
Spectrum spectrum(const RationalTridiagonal& t, double tol = 1e-12);

// Closed forms for the two worked 2x2 families, used as oracles in tests.
// Family A: m = (2, 2, p+1, q+1, p+1, q+1).
RationalTridiagonal example_family_A_X(int p, int q);
RationalTridiagonal example_family_A_Y(int p, int q);
// Its X eigenvalues are alpha ± sqrt(R); returns (alpha, R) exactly.
std::pair<Rat, Rat> example_family_A_X_eigendata(int p, int q);
// Y eigenvalues; the first is always -3/4.
std::pair<Rat, Rat> example_family_A_Y_eigenvalues(int p, int q);

// Family B: m = (2, p+1, 2, q+1, L, p+q-2L+4) with 2 <= L <= p+1 <= q+1.
// X eigenvalues are c ± sqrt(D); returns (c, D) exactly.
std::pair<Rat, Rat> example_family_B_X_eigendata(int L, int p, int q);

// The 1x1 diagonal formula evaluated on a d=1 window; also the scalar
// eigenvalue for multiplicity-one parameter sets (n arbitrary).
Rat x_scalar(int m1, int m2, int mp1, int mp2, int n);

// Diagonal entries at row j (offset xi_b) as functions of six integers and
// Lambda; shared with the infinite-representation windows, which use the
// xi_b = 0 gauge and face values in place of the xi's.
Rat x_diag_entry(const std::array<long, 6>& xi, long Lambda, long xi_b, long j);
Rat y_diag_entry(const std::array<long, 6>& xi, long Lambda, long xi_b, long j);

}  // namespace su3ml
