/*
  hahn.cpp — Hahn-type pair, z-coefficients, composition, algebra check.

  Band formulas, at row j with offset xi_b:
    H1 diagonal   h(j)      = -(j-1) + (xi1+xi2+xi5+xi6-2)/4 - xi_b
    H2 super      alpha(j)  = -(j+xi_b-xi1)(j+xi_b-xi2)      at (j, j+1)
    H2 sub        beta(j)   = -(j+xi_b-xi5)(j+xi_b-xi6)      at (j+1, j)
    H2 diagonal             = beta(j-1) + alpha(j) + C,
                              C = (xi1+xi2-xi5-xi6)(xi1+xi2-xi5-xi6-2)/4
  with the diagonal formula kept verbatim in the boundary rows.  That choice
  makes the finite block an honest window of the doubly-infinite operator
  (the diagonal collapses to -2 h(j)^2 - A2 on every row), which is what the
  padded-window algebra check relies on.
*/
#include "su3ml/hahn.hpp"

#include "su3ml/errors.hpp"

#include <utility>

namespace su3ml {

namespace {

// Band formula evaluators for one parameter set.
struct Bands {
    std::array<long, 6> xi{};
    long xi_b = 0;

    Rat h(long j) const {
        return Rat(-(j - 1)) + rat(xi[0] + xi[1] + xi[4] + xi[5] - 2, 4) - xi_b;
    }
    Rat sup(long j) const { return Rat(-(j + xi_b - xi[0]) * (j + xi_b - xi[1])); }
    Rat sub(long j) const { return Rat(-(j + xi_b - xi[4]) * (j + xi_b - xi[5])); }
    Rat c_term() const {
        const long s = xi[0] + xi[1] - xi[4] - xi[5];
        return rat(s * (s - 2), 4);
    }
};

// H1 and H2 on rows j = j_first .. j_first + width - 1.
std::pair<RatMatrix, RatMatrix> band_window(const Bands& b, long j_first, int width) {
    RatMatrix h1(width), h2(width);
    const Rat c = b.c_term();
    for (int t = 0; t < width; ++t) {
        const long j = j_first + t;
        h1.at(t, t) = b.h(j);
        h2.at(t, t) = b.sub(j - 1) + b.sup(j) + c;
        if (t + 1 < width) {
            h2.at(t, t + 1) = b.sup(j);
            h2.at(t + 1, t) = b.sub(j);
        }
    }
    return {std::move(h1), std::move(h2)};
}

Bands bands_of(const ParamSet& params, int& dim_out) {
    const XiParams xp = xi_params(params);  // NonIntegral comes first
    const int d = multiplicity(params);
    if (d == 0)
        throw NotPhysical("label tuple carries no block: multiplicity is zero");
    dim_out = d;
    return Bands{xp.xi, xp.xi_b};
}

}  // namespace

HahnPair hahn_matrices(const ParamSet& params) {
    int d = 0;
    const Bands b = bands_of(params, d);
    auto [h1, h2] = band_window(b, 1, d);
    return HahnPair{d, std::move(h1), std::move(h2)};
}

ZCoefficients z_coefficients(const XiParams& xi) {
    const long x1 = xi.xi[0], x2 = xi.xi[1], x3 = xi.xi[2];
    const long x4 = xi.xi[3], x5 = xi.xi[4], x6 = xi.xi[5];
    const long L = xi.Lambda;
    const long s = x1 + x2 + x5 + x6;
    const long q = x1 * x1 + x2 * x2 + x5 * x5 + x6 * x6;

    ZCoefficients out;
    out.a2 = rat(1 - q, 2) + rat(s * s, 8);
    out.a3 = rat(-(x1 + x2 - x5 - x6) * ((x1 - x2) * (x1 - x2) - (x5 - x6) * (x5 - x6)), 4);

    const Rat z2 = rat(x3 + x4, 2) - rat(s, 4);
    const Rat z3 = rat(x3 - x4, 2);
    const Rat z3sq = z3 * z3;

    out.z[2] = z2;
    out.z[3] = z3;
    out.z[1] = z3sq - rat(L * L, 4);
    out.z[4] = rat(1, 2);
    out.z[0] = rat(1, 4) * out.a3 -
               rat(1, 3) * z2 *
                   (rat(L * L, 4) + z3sq - rat(2, 9) * z2 * z2 - out.a2 - rat(1, 2));

    out.z[6] = rat(1, 6) * (4 * z3sq - L * L) * z2 - rat(1, 2) * out.a3;
    out.z[7] = rat(L + 1, 4) * (2 * z3 - 1) - rat(1, 3) * z2 * z2;
    out.z[8] = rat(1, 6) * (3 * L - 2 * z3) * z2;
    out.z[9] = rat(-2, 3) * z2;
    out.z[10] = rat(1, 4) * (2 * z3 - L) * (L + 2 - 2 * z3);
    out.z[11] = rat(L, 2) - z3;
    out.z[12] = z3 - rat(L, 2) - 1;

    const long p4 = x1 * x1 * x1 * x1 + x2 * x2 * x2 * x2 + x5 * x5 * x5 * x5 +
                    x6 * x6 * x6 * x6;
    const Rat l2m = Rat(L * L - 4) - 4 * z3sq;
    out.z[5] = rat(1, 3) * z3 * (out.a2 * L + z3) - rat(1, 3) * z2 * out.a3 -
               rat(1, 24) * out.a2 * (L + 4 - 2 * z3) * (L + 2 - 2 * z3) -
               rat(1, 192) * l2m * l2m - rat(s, 8) * out.a3 -
               rat(1, 48) * ((2 * out.a2 - 1) * Rat(s * s) - Rat(q) * Rat(q)) - rat(p4, 12);
    return out;
}

ZCoefficients z_coefficients(const ParamSet& params) {
    return z_coefficients(xi_params(params));
}

ComposedPair heun_hahn_compose(const ParamSet& params) {
    const HahnPair hp = hahn_matrices(params);
    const ZCoefficients zc = z_coefficients(params);
    const auto& z = zc.z;

    const RatMatrix& h1 = hp.h1;
    const RatMatrix& h2 = hp.h2;
    const RatMatrix I = RatMatrix::identity(hp.dim);
    const RatMatrix comm12 = commutator(h1, h2);
    const RatMatrix anti12 = anticommutator(h1, h2);
    const RatMatrix h1sq = h1 * h1;

    ComposedPair out;
    out.x = z[0] * I + z[1] * h1 + z[2] * h2 + z[3] * comm12 + z[4] * anti12;
    out.y = z[5] * I + z[6] * h1 + z[7] * h2 + z[8] * comm12 + z[9] * anti12 +
            z[10] * h1sq + z[11] * (h1sq * h2) + z[12] * (h1 * (h2 * h1));
    return out;
}

HahnAlgebraReport hahn_algebra_check(const ParamSet& params) {
    constexpr int kPad = 4;
    int d = 0;
    const Bands b = bands_of(params, d);
    const int width = d + 2 * kPad;
    auto [h1, h2] = band_window(b, 1 - kPad, width);

    const ZCoefficients zc = z_coefficients(xi_params(params));
    const RatMatrix I = RatMatrix::identity(width);
    const RatMatrix h3 = commutator(h1, h2);

    const RatMatrix pair_res = commutator(h3, h2) - (Rat(2) * anticommutator(h1, h2) +
                                                     zc.a3 * I);
    const RatMatrix height_res = commutator(h1, h3) - (Rat(2) * (h1 * h1) + h2 + zc.a2 * I);

    auto restricted_zero = [&](const RatMatrix& r) {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                if (r.at(kPad + i, kPad + j) != 0) return false;
        return true;
    };

    HahnAlgebraReport report;
    report.pair_relation_ok = restricted_zero(pair_res);
    report.height_relation_ok = restricted_zero(height_res);
    return report;
}

}  // namespace su3ml
