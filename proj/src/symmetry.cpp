/*
  symmetry.cpp — order-144 group acting on parameter sets through the grids.

  The action is concrete: an element rearranges the 18 cells of the double
  grid, and the structure of the grids is rigid enough that the rearranged
  pair is again the grid pair of a unique parameter tuple.  Reading that
  tuple off fixed cells gives the induced action on parameters.
*/
#include "su3ml/symmetry.hpp"

#include "su3ml/errors.hpp"
#include "su3ml/tridiag.hpp"

#include <algorithm>
#include <set>

namespace su3ml {

Perm3 perm_inverse(const Perm3& p) {
    Perm3 q{};
    for (int i = 0; i < 3; ++i) q[p[i]] = i;
    return q;
}

Perm3 perm_compose(const Perm3& a, const Perm3& b) {
    Perm3 r{};
    for (int i = 0; i < 3; ++i) r[i] = a[b[i]];
    return r;
}

int perm_parity(const Perm3& p) {
    int s = 1;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

std::vector<Perm3> all_perms() {
    std::vector<Perm3> out;
    Perm3 p = perm_identity();
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

SymmetryElement compose(const SymmetryElement& a, const SymmetryElement& b) {
    SymmetryElement r;
    if (a.transpose) {
        r.line_perm = perm_compose(a.line_perm, b.col_perm);
        r.col_perm = perm_compose(a.col_perm, b.line_perm);
    } else {
        r.line_perm = perm_compose(a.line_perm, b.line_perm);
        r.col_perm = perm_compose(a.col_perm, b.col_perm);
    }
    r.transpose = a.transpose != b.transpose;
    r.swap_grids = a.swap_grids != b.swap_grids;
    return r;
}

SymmetryElement inverse(const SymmetryElement& e) {
    SymmetryElement r;
    if (e.transpose) {
        // (C_c L_l T S^s)^-1 = C_{l^-1} L_{c^-1} T S^s
        r.line_perm = perm_inverse(e.col_perm);
        r.col_perm = perm_inverse(e.line_perm);
    } else {
        r.line_perm = perm_inverse(e.line_perm);
        r.col_perm = perm_inverse(e.col_perm);
    }
    r.transpose = e.transpose;
    r.swap_grids = e.swap_grids;
    return r;
}

int sign_of(const SymmetryElement& e) {
    return perm_parity(e.line_perm) * perm_parity(e.col_perm);
}

Arrangement transform_arrangement(const SymmetryElement& e, const Arrangement& arr) {
    std::array<std::array<long, 3>, 3> left = arr.left;
    std::array<std::array<long, 3>, 3> right = arr.right;
    if (e.swap_grids) std::swap(left, right);
    if (e.transpose) {
        auto t = [](const std::array<std::array<long, 3>, 3>& g) {
            std::array<std::array<long, 3>, 3> out{};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) out[i][j] = g[j][i];
            return out;
        };
        left = t(left);
        right = t(right);
    }
    const Perm3 li = perm_inverse(e.line_perm);
    const Perm3 ci = perm_inverse(e.col_perm);
    Arrangement out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            out.left[i][j] = left[li[i]][ci[j]];
            out.right[i][j] = right[li[i]][ci[j]];
        }
    return out;
}

namespace {

ParamSet read_back(const Arrangement& arr) {
    const long n = arr.left[1][2];
    const long l = arr.right[1][2];
    ParamSet out;
    out.m1 = static_cast<int>(arr.left[0][0]);
    out.mp1 = static_cast<int>(arr.left[0][1]);
    out.mpp2 = static_cast<int>(arr.left[0][2]);
    out.m2 = static_cast<int>(arr.left[2][0] - n + l);
    out.mp2 = static_cast<int>(arr.left[2][1] - n + l);
    out.mpp1 = static_cast<int>(arr.left[2][2] - n + l);
    return out;
}

}  // namespace

ParamSet apply(const SymmetryElement& e, const ParamSet& params) {
    return read_back(transform_arrangement(e, arrangement(params)));
}

std::vector<SymmetryElement> enumerate_group() {
    std::vector<SymmetryElement> out;
    out.reserve(144);
    const auto perms = all_perms();
    for (const Perm3& lp : perms)
        for (const Perm3& cp : perms)
            for (bool tr : {false, true})
                for (bool sw : {false, true}) out.push_back({lp, cp, tr, sw});
    return out;
}

std::vector<SymmetryElement> classical_subgroup() {
    std::vector<SymmetryElement> out;
    out.reserve(12);
    const SymmetryElement dual_flip{{2, 1, 0}, perm_identity(), false, true};
    for (const Perm3& cp : all_perms()) out.push_back({perm_identity(), cp, false, false});
    for (const Perm3& cp : all_perms())
        out.push_back(compose(SymmetryElement{perm_identity(), cp, false, false}, dual_flip));
    return out;
}

ParamSet dual(const ParamSet& p) {
    return ParamSet{p.m2, p.m1, p.mp2, p.mp1, p.mpp2, p.mpp1};
}

EquivalenceReport verify_equivalence(const ParamSet& params, const SymmetryElement& e) {
    const int d = multiplicity(params);
    if (d == 0) throw NotPhysical("verify_equivalence: zero multiplicity");

    EquivalenceReport rep;
    rep.sign = sign_of(e);
    rep.image = apply(e, params);
    rep.dims_equal = multiplicity(rep.image) == d;
    if (!rep.dims_equal) return rep;

    const RatPoly cx = char_poly(build_X(params)).p;
    const RatPoly cy = char_poly(build_Y(params)).p;
    const RatPoly cx_img = char_poly(build_X(rep.image)).p;
    const RatPoly cy_img = char_poly(build_Y(rep.image)).p;

    RatPoly expected = cx.scale_argument(Rat(rep.sign));
    if (rep.sign < 0 && d % 2 != 0) expected = Rat(-1) * expected;
    rep.x_charpoly_match = cx_img == expected;
    rep.y_charpoly_match = cy_img == cy;
    return rep;
}

std::vector<ParamSet> orbit(const ParamSet& params) {
    std::set<std::array<int, 6>> seen;
    for (const SymmetryElement& e : enumerate_group()) seen.insert(apply(e, params).as_array());
    std::vector<ParamSet> out;
    out.reserve(seen.size());
    for (const auto& a : seen) out.push_back(ParamSet::from_array(a));
    return out;
}

}  // namespace su3ml
