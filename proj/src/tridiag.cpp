/*
  tridiag.cpp — construction of the exact tridiagonal operator pair.

  Off-diagonal entries are cubic products over the xi's; diagonal entries are
  power-sum expressions E_k = sum_i (xi_i - j - xi_b + 1/2)^k combined with
  Lambda.  The same two diagonal formulas serve the infinite-representation
  windows (faces module), which call them with xi_b = 0 and face values in
  place of the xi's.
*/
#include "su3ml/tridiag.hpp"

#include "su3ml/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace su3ml {

XiParams xi_params(const ParamSet& p) {
    const auto [l, n] = derive_ln(p);
    XiParams x;
    if (l <= n) {
        x.branch = XiBranch::l_le_n;
        x.xi = {l, p.m2, p.mp1 + l - n, l - p.mp2, n - p.m1, 0};
    } else {
        x.branch = XiBranch::n_lt_l;
        x.xi = {n, p.mp1, p.m2 + n - l, l - p.mp2, n - p.m1, 0};
    }
    x.xi_a = std::min({x.xi[0], x.xi[1], x.xi[2]});
    x.xi_b = std::max({x.xi[3], x.xi[4], x.xi[5]});
    long sum = 0;
    for (long v : x.xi) sum += v;
    x.Lambda = x.xi[0] + x.xi[1] + x.xi[2] - x.xi[3] - x.xi[4] - x.xi[5] + 2 * std::labs(l - n);
    x.lambda_plus = Rat(x.Lambda) / 2 + Rat(sum) / 6;
    x.lambda_minus = -Rat(x.Lambda) / 2 + Rat(sum) / 6;
    return x;
}

Rat x_diag_entry(const std::array<long, 6>& xi, long Lambda, long xi_b, long j) {
    Rat E1 = 0, E2 = 0, E3 = 0;
    for (long v : xi) {
        const Rat t = Rat(2 * (v - j - xi_b) + 1) / 2;
        E1 += t;
        E2 += t * t;
        E3 += t * t * t;
    }
    const Rat L2 = Rat(Lambda) * Rat(Lambda);
    return -rat(1, 108) * (rat(7, 2) * E1 * E1 * E1 - 18 * E1 * E2 + 18 * E3) -
           rat(1, 24) * E1 * (L2 + 2);
}

Rat y_diag_entry(const std::array<long, 6>& xi, long Lambda, long xi_b, long j) {
    Rat E1 = 0, E2 = 0, E3 = 0, E4 = 0;
    for (long v : xi) {
        const Rat t = Rat(2 * (v - j - xi_b) + 1) / 2;
        E1 += t;
        E2 += t * t;
        E3 += t * t * t;
        E4 += t * t * t * t;
    }
    const Rat L2 = Rat(Lambda) * Rat(Lambda);
    return rat(1, 288) *
           (rat(5, 2) * E1 * E1 * E1 * E1 + 32 * E1 * E3 +
            6 * (E2 * E2 - 3 * E1 * E1 * E2 - 4 * E4) + 6 * E2 * (L2 + 2) -
            3 * E1 * E1 * (L2 - 2) - rat(3, 2) * L2 * L2 + 6 * L2 - 36);
}

namespace {

Rat super_product(const XiParams& x, long j) {
    return Rat(j + x.xi_b - x.xi[0]) * Rat(j + x.xi_b - x.xi[1]) * Rat(j + x.xi_b - x.xi[2]);
}
Rat sub_product(const XiParams& x, long j) {
    return Rat(j + x.xi_b - x.xi[3]) * Rat(j + x.xi_b - x.xi[4]) * Rat(j + x.xi_b - x.xi[5]);
}

int checked_dim(const ParamSet& p) {
    derive_ln(p);  // NonIntegral for inputs failing the divisibility test
    const int d = multiplicity(p);
    if (d < 1) throw NotPhysical("multiplicity is zero; no operator block exists");
    return d;
}

}  // namespace

RationalTridiagonal build_X(const ParamSet& p) {
    const int d = checked_dim(p);
    const XiParams x = xi_params(p);
    RationalTridiagonal t(d);
    for (long j = 1; j <= d; ++j) t.diag[j - 1] = x_diag_entry(x.xi, x.Lambda, x.xi_b, j);
    for (long j = 1; j < d; ++j) {
        t.super[j - 1] = super_product(x, j);
        t.sub[j - 1] = sub_product(x, j);
    }
    return t;
}

RationalTridiagonal build_Y(const ParamSet& p) {
    const int d = checked_dim(p);
    const XiParams x = xi_params(p);
    RationalTridiagonal t(d);
    for (long j = 1; j <= d; ++j) t.diag[j - 1] = y_diag_entry(x.xi, x.Lambda, x.xi_b, j);
    for (long j = 1; j < d; ++j) {
        t.super[j - 1] = super_product(x, j) * (Rat(j + x.xi_b) - x.lambda_minus);
        t.sub[j - 1] = sub_product(x, j) * (Rat(j + x.xi_b) - x.lambda_plus);
    }
    return t;
}

CharPoly char_poly(const RationalTridiagonal& t) {
    RatPoly prev = RatPoly::constant(1);
    if (t.dim == 0) return {prev};
    RatPoly cur = RatPoly::x() - RatPoly::constant(t.diag[0]);
    for (int k = 2; k <= t.dim; ++k) {
        RatPoly next = (RatPoly::x() - RatPoly::constant(t.diag[k - 1])) * cur -
                       RatPoly::constant(t.super[k - 2] * t.sub[k - 2]) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {cur};
}

Spectrum spectrum(const RationalTridiagonal& t, double tol) {
    const CharPoly cp = char_poly(t);
    std::vector<Cplx> coeffs;
    coeffs.reserve(cp.p.c.size());
    for (const auto& c : cp.p.c) coeffs.emplace_back((long double)rat_to_double(c), 0.0L);
    Spectrum s;
    s.tolerance = tol;
    for (const Cplx& z : poly_roots(coeffs)) {
        if (std::abs(z.imag()) > tol * (1 + std::abs(z)))
            throw ToleranceNotMet("complex root where a real spectrum was expected");
        s.values.push_back(static_cast<double>(z.real()));
    }
    std::sort(s.values.begin(), s.values.end());
    return s;
}

// ---------------------------------------------------------------------------
// Closed-form 2x2 families
// ---------------------------------------------------------------------------

RationalTridiagonal example_family_A_X(int p, int q) {
    const Rat alpha = -rat(1, 27) * Rat(p - q) * Rat(3 + 2 * p + q) * Rat(3 + p + 2 * q);
    const Rat shift = Rat(p) + Rat(q) + rat(3, 2);
    RationalTridiagonal t(2);
    t.diag[0] = alpha - shift;
    t.diag[1] = alpha + shift;
    t.super[0] = Rat(-p);
    t.sub[0] = Rat(q);
    return t;
}

RationalTridiagonal example_family_A_Y(int p, int q) {
    RationalTridiagonal t(2);
    const Rat f = -rat(1, 12);
    t.diag[0] = f * Rat(9 + 24 * p + 8 * p * p + 4 * p * q);
    t.diag[1] = f * Rat(9 + 24 * q + 8 * q * q + 4 * p * q);
    t.super[0] = f * Rat(4 * p) * Rat(6 + p + 2 * q);
    t.sub[0] = f * Rat(4 * q) * Rat(6 + 2 * p + q);
    return t;
}

std::pair<Rat, Rat> example_family_A_X_eigendata(int p, int q) {
    const Rat alpha = -rat(1, 27) * Rat(p - q) * Rat(3 + 2 * p + q) * Rat(3 + p + 2 * q);
    const Rat shift = Rat(p) + Rat(q) + rat(3, 2);
    return {alpha, shift * shift - Rat(p) * Rat(q)};
}

std::pair<Rat, Rat> example_family_A_Y_eigenvalues(int p, int q) {
    return {rat(-3, 4),
            -rat(1, 12) * Rat(9 + 24 * p + 24 * q + 8 * p * p + 8 * q * q + 8 * p * q)};
}

std::pair<Rat, Rat> example_family_B_X_eigendata(int L, int p, int q) {
    const Rat c = -rat(1, 54) * Rat(p - q) *
                  Rat(54 + 36 * p + 36 * q + 4 * p * p + 4 * q * q + 10 * p * q - 36 * L +
                      9 * L * L - 9 * L * p - 9 * L * q);
    const Rat h = rat(1, 2) * Rat(1 - 4 * L + L * L - L * p - L * q);
    const Rat D = h * h - Rat(2 - L + q) * Rat(2 - L + p);
    return {c, D};
}

Rat x_scalar(int m1, int m2, int mp1, int mp2, int n) {
    const std::array<long, 6> xi = {1, m2, mp1 + 1 - n, 1 - mp2, long(n) - m1, 0};
    const long Lambda = long(m1) + m2 + mp1 + mp2 - 1;
    return x_diag_entry(xi, Lambda, 0, 1);
}

}  // namespace su3ml
