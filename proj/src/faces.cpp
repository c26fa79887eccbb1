/*
  faces.cpp — face construction, enumeration, windowed representations, and
  finite extraction.  See faces.hpp for the interface.

  Base faces are transported from the canonical one by the unique
  minimal-length Weyl element sending the highest root to the target (the
  stabilizer of the highest root is the parabolic on the other five nodes,
  so the minimal coset representative is unique and the transported order is
  well defined).  In-face reflections and the central inversion are plain
  root arithmetic on top of that.
*/
#include "su3ml/faces.hpp"

#include "su3ml/errors.hpp"
#include "su3ml/tridiag.hpp"

#include <algorithm>
#include <string>

namespace su3ml {

namespace {

RootVector negated(const RootVector& v) {
    RootVector r{};
    for (int i = 0; i < 6; ++i) r[size_t(i)] = -v[size_t(i)];
    return r;
}

RootVector difference(const RootVector& a, const RootVector& b) {
    RootVector r{};
    for (int i = 0; i < 6; ++i) r[size_t(i)] = a[size_t(i)] - b[size_t(i)];
    return r;
}

FourFace base_face(const RootVector& Lambda) {
    const WeylElement w = word_element(minimal_word(Lambda));  // NotARoot gate
    const FourFace canon = canonical_face();
    FourFace f;
    for (int i = 0; i < 5; ++i) f.roots[size_t(i)] = w.apply(canon.roots[size_t(i)]);
    f.orthogonal_root = Lambda;
    return f;
}

FourFace derived_face(const FourFace& base, int k, int sign) {
    FourFace f = base;
    if (k >= 1) {
        const RootVector xi_k = base.roots[size_t(k - 1)];
        f.roots[0] = negated(xi_k);
        int out = 1;
        for (int j = 0; j < 5; ++j) {
            if (j == k - 1) continue;
            f.roots[size_t(out++)] = difference(base.roots[size_t(j)], xi_k);
        }
    }
    if (sign < 0)
        for (auto& r : f.roots) r = negated(r);
    f.k = k;
    f.sign = sign;
    return f;
}

// Exact integer value of a root at a label tuple (forms have denominator 3).
long integral_value(const RootVector& root, const ParamSet& params) {
    const Rat v = root_value(root, params);
    if (v.get_den() != 1)
        throw NonIntegral("root value " + rat_to_string(v) + " is not an integer at this tuple");
    return v.get_num().get_si();
}

// j Π(j - ξi) over all six values; the padded ξ6 = 0 supplies the j factor.
Rat super_product(const std::array<long, 6>& xi, long j) {
    Rat p(1);
    for (long x : xi) p *= Rat(j - x);
    return p;
}

}  // namespace

// ------------------------------------------------------------ construction

std::array<RootVector, 5> FourFace::sorted_roots() const {
    std::array<RootVector, 5> s = roots;
    std::sort(s.begin(), s.end());
    return s;
}

FourFace canonical_face() {
    FourFace f;
    f.roots = {RootVector{1, 1, 1, 1, 1, 0}, RootVector{1, 1, 1, 1, 0, 0},
               RootVector{1, 1, 1, 0, 0, 0}, RootVector{1, 1, 0, 0, 0, 0},
               RootVector{1, 0, 0, 0, 0, 0}};
    f.orthogonal_root = root_system().highest;
    return f;
}

FourFace face(const RootVector& Lambda, int k, int sign) {
    if (k < 0 || k > 5)
        throw OutOfRange("face reflection index " + std::to_string(k) + " outside 0..5");
    if (sign != 1 && sign != -1)
        throw OutOfRange("face sign " + std::to_string(sign) + " must be +1 or -1");
    return derived_face(base_face(Lambda), k, sign);
}

std::vector<FourFace> enumerate_faces() {
    std::vector<FourFace> faces;
    faces.reserve(432);
    for (const RootVector& Lambda : root_system().positive) {
        const FourFace base = base_face(Lambda);
        for (int k = 0; k <= 5; ++k)
            for (int sign : {1, -1}) faces.push_back(derived_face(base, k, sign));
    }
    return faces;
}

// ------------------------------------------------------------------ values

FaceValues face_values(const FourFace& f, const ParamSet& params) {
    FaceValues fv;
    long sum = 0;
    for (int i = 0; i < 5; ++i) {
        fv.xi[size_t(i)] = integral_value(f.roots[size_t(i)], params);
        sum += fv.xi[size_t(i)];
    }
    fv.xi[5] = 0;
    fv.Lambda_value = integral_value(f.orthogonal_root, params);
    fv.lambda_plus = rat(fv.Lambda_value, 2) + rat(sum, 6);
    fv.lambda_minus = rat(-fv.Lambda_value, 2) + rat(sum, 6);
    return fv;
}

// ----------------------------------------------------------------- windows

std::pair<RatMatrix, RatMatrix> rep_window(const FourFace& f, const ParamSet& params,
                                           long j0, int width) {
    if (width < 1) throw OutOfRange("window width " + std::to_string(width) + " < 1");
    const FaceValues fv = face_values(f, params);
    const Rat sgn(f.sign);

    RatMatrix xw(width);
    RatMatrix yw(width);
    for (int t = 0; t < width; ++t) {
        const long j = j0 + t;
        xw.at(t, t) = sgn * x_diag_entry(fv.xi, fv.Lambda_value, 0, j);
        yw.at(t, t) = y_diag_entry(fv.xi, fv.Lambda_value, 0, j);
        if (t + 1 < width) {
            const Rat p = super_product(fv.xi, j);
            xw.at(t, t + 1) = sgn * p;
            xw.at(t + 1, t) = sgn;
            yw.at(t, t + 1) = p * (Rat(j) - fv.lambda_minus);
            yw.at(t + 1, t) = Rat(j) - fv.lambda_plus;
        }
    }
    return {xw, yw};
}

WindowDefects window_defects(const RatMatrix& xw, const RatMatrix& yw,
                             const StructureConstants& a) {
    RatMatrix::check_same(xw, yw);
    const RelationResiduals r = relation_residuals(xw, yw, a);
    const int c = xw.n / 2;
    auto column_max = [&](const RatMatrix& m) {
        Rat best(0);
        for (int i = 0; i < m.n; ++i) {
            const Rat v = rat_abs(m.at(i, c));
            if (v > best) best = v;
        }
        return best;
    };
    return WindowDefects{column_max(r.x_bracket), column_max(r.y_bracket),
                         column_max(r.central)};
}

WindowDefects verify_window(const FourFace& f, const ParamSet& params, long j0) {
    const auto [xw, yw] = rep_window(f, params, j0 - 4, 9);
    return window_defects(xw, yw, structure_constants(params));
}

// -------------------------------------------------------------- extraction

std::pair<RatMatrix, RatMatrix> extract_finite(const FourFace& f, const ParamSet& params,
                                               int a) {
    if (a < 1 || a > 5)
        throw OutOfRange("extraction index " + std::to_string(a) + " outside 1..5");
    const FaceValues fv = face_values(f, params);
    std::array<long, 6> sorted = fv.xi;
    std::sort(sorted.begin(), sorted.end());
    const long lo = sorted[size_t(a - 1)];
    const long hi = sorted[size_t(a)];
    if (lo == hi)
        throw EmptyWindow("sorted face values " + std::to_string(lo) + " repeat at position " +
                          std::to_string(a));
    return rep_window(f, params, lo + 1, int(hi - lo));
}

PhysicalWindow physical_face(const ParamSet& params) {
    if (multiplicity(params) == 0)
        throw NotPhysical("label tuple carries no block: multiplicity is zero");
    const DerivedLN ln = derive_ln(params);

    RootVector Lambda = root_system().highest;
    if (ln.l < ln.n) Lambda[5] -= 1;  // the neighbour face handles l < n

    PhysicalWindow pw;
    pw.face = face(Lambda, 0, 1);
    const FaceValues fv = face_values(pw.face, params);
    pw.first = std::max({fv.xi[3], fv.xi[4], 0L}) + 1;
    pw.last = std::min({fv.xi[0], fv.xi[1], fv.xi[2]});
    return pw;
}

}  // namespace su3ml
