/*
  centralizer.cpp — group-averaged invariants, closure relations, and
  coefficient recovery.  See centralizer.hpp for the interface.

  invariant_values walks the full reflection group through a precomputed
  table of the 51840 integer matrices 3 * (B^{-1} u B)^T acting on the label
  tuple.  Averaging a fixed monomial over the whole group is insensitive to
  replacing each element by its inverse, so the table may be built from the
  readily available inverse action.  Sums run in 128-bit integers whenever
  the labels are small enough for that to be provably overflow-free
  (|entry| <= 20 gives |v_i| <= 360 and 51840 * 360^12 < 2^127), and in GMP
  integers otherwise.
*/
#include "su3ml/centralizer.hpp"

#include "su3ml/e6.hpp"
#include "su3ml/errors.hpp"
#include "su3ml/matrix.hpp"
#include "su3ml/tridiag.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <mutex>
#include <vector>

namespace su3ml {

// ====================================================== invariant averages

namespace {

// Row-major 6x6 images of 3 * (B^{-1} u B)^T over the whole group; every
// entry lies in [-3, 3], so int8 storage keeps the table under 2 MB.
const std::vector<std::array<int8_t, 36>>& action_table() {
    static const std::vector<std::array<int8_t, 36>> table = [] {
        const auto& group = weyl_group();
        std::vector<std::array<int8_t, 36>> t;
        t.reserve(group.size());
        for (const WeylElement& u : group) {
            const auto m3 = param_action_times3(SignedWeylElement{u, 1});
            std::array<int8_t, 36> row{};
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j) row[size_t(i) * 6 + j] = int8_t(m3[i][j]);
            t.push_back(row);
        }
        return t;
    }();
    return table;
}

template <typename Int>
struct MonomialSums {
    Int s2{}, s5{}, s6{}, s8{}, s9{}, s12{};
};

template <typename Int>
MonomialSums<Int> accumulate_sums(const std::array<long, 6>& m) {
    MonomialSums<Int> s;
    for (const auto& row : action_table()) {
        Int v[6];
        for (int i = 0; i < 6; ++i) {
            long acc = 0;
            for (int j = 0; j < 6; ++j) acc += long(row[size_t(i) * 6 + j]) * m[size_t(j)];
            v[i] = acc;
        }
        s.s2 += v[0] * v[0];
        s.s5 += v[2] * v[2] * v[3] * v[4] * v[5];
        const Int t6 = v[0] * v[1] * v[2] * v[3] * v[4] * v[5];
        s.s6 += t6;
        s.s8 += v[0] * v[0] * v[1] * v[2] * v[2] * v[3] * v[4] * v[5];
        const Int t3 = v[0] * v[1] * v[2];
        s.s9 += t3 * t3 * v[3] * v[4] * v[5];
        s.s12 += t6 * t6;
    }
    return s;
}

mpz_class from_int128(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u =
        neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    mpz_class r(static_cast<unsigned long>(u >> 64));
    r <<= 64;
    r += mpz_class(static_cast<unsigned long>(u));
    if (neg) r = -r;
    return r;
}

MonomialSums<mpz_class> widen(const MonomialSums<__int128>& s) {
    MonomialSums<mpz_class> w;
    w.s2 = from_int128(s.s2);
    w.s5 = from_int128(s.s5);
    w.s6 = from_int128(s.s6);
    w.s8 = from_int128(s.s8);
    w.s9 = from_int128(s.s9);
    w.s12 = from_int128(s.s12);
    return w;
}

InvariantValues assemble(const MonomialSums<mpz_class>& s, size_t group_order) {
    const mpz_class order(static_cast<unsigned long>(group_order));
    // explicit return type: a deduced one would be the GMP expression
    // template, which dangles once the lambda's locals go out of scope
    auto pk = [&](long pref_num, long pref_den, const mpz_class& sum, int degree) -> Rat {
        mpz_class three_pow(1);
        for (int i = 0; i < degree; ++i) three_pow *= 3;
        Rat r(sum);
        r /= Rat(order * three_pow);
        return rat(pref_num, pref_den) * r;
    };
    InvariantValues p;
    p.p2 = pk(3, 2, s.s2, 2);
    p.p5 = pk(8, 3, s.s5, 5);
    p.p6 = pk(10, 1, s.s6, 6);
    p.p8 = pk(5, 3, s.s8, 8);
    p.p9 = pk(40, 27, s.s9, 9);
    p.p12 = pk(20, 3, s.s12, 12);
    return p;
}

}  // namespace

InvariantValues invariant_values(const ParamSet& params) {
    static std::map<std::array<int, 6>, InvariantValues> cache;
    static std::mutex cache_mutex;

    const std::array<int, 6> key = params.as_array();
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }

    std::array<long, 6> m{};
    long max_abs = 0;
    for (int i = 0; i < 6; ++i) {
        m[size_t(i)] = key[size_t(i)];
        max_abs = std::max(max_abs, std::abs(m[size_t(i)]));
    }
    const size_t order = action_table().size();
    const InvariantValues p = (max_abs <= 20)
                                  ? assemble(widen(accumulate_sums<__int128>(m)), order)
                                  : assemble(accumulate_sums<mpz_class>(m), order);

    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(key, p);
    return p;
}

// ===================================================== structure constants

StructureConstants structure_constants(const InvariantValues& p) {
    const Rat& p2 = p.p2;
    const Rat p2_2 = p2 * p2;
    const Rat p2_3 = p2_2 * p2;
    const Rat p2_4 = p2_2 * p2_2;
    const Rat p2_5 = p2_4 * p2;
    const Rat p2_6 = p2_4 * p2_2;
    const Rat p5_2 = p.p5 * p.p5;
    const Rat p6_2 = p.p6 * p.p6;

    StructureConstants a;
    a.a2 = p2 - 3;
    a.a5 = -p.p5;
    a.a6 = p.p6 + rat(1, 9) * p2_3 + rat(2, 3) * p2_2 - rat(3, 2) * p2 + 1;
    a.a8 = -p.p8 + rat(1, 54) * p2_4 + rat(1, 12) * p2 * p.p6 + rat(1, 18) * p2_3 +
           rat(1, 2) * p.p6 + rat(1, 6) * p2_2 - rat(1, 4) * p2 + rat(1, 8);
    a.a9 = -p.p9 - p.p5 * (rat(1, 27) * p2_2 + rat(1, 3) * p2 - rat(1, 4));
    a.a12 = -p.p12 + rat(35, 12) * p6_2 + rat(1, 36) * p2_6 + rat(17, 72) * p2_3 * p.p6 -
            rat(1, 18) * p2_2 * p.p8 - rat(7, 18) * p2 * p5_2 + rat(1, 162) * p2_5 -
            rat(1, 3) * p2 * p.p8 + rat(1, 36) * p2_2 * p.p6 - rat(1, 4) * p5_2 -
            rat(13, 108) * p2_4 + rat(13, 2) * p.p8 - rat(13, 24) * p2 * p.p6 -
            rat(19, 54) * p2_3 - 3 * p.p6 - rat(11, 12) * p2_2 + rat(11, 8) * p2 - rat(11, 16);
    return a;
}

StructureConstants structure_constants(const ParamSet& params) {
    return structure_constants(invariant_values(params));
}

// ==================================================== relation verification

namespace {

struct BlockPair {
    int dim;
    RatMatrix x, y;
};

BlockPair dense_blocks(const ParamSet& params) {
    const int d = multiplicity(params);
    if (d == 0)
        throw NotPhysical("label tuple carries no block: multiplicity is zero");
    return BlockPair{d, build_X(params).dense(), build_Y(params).dense()};
}

}  // namespace

RelationResiduals relation_residuals(const RatMatrix& x, const RatMatrix& y,
                                     const StructureConstants& a) {
    const int d = x.n;
    const RatMatrix Z = commutator(x, y);
    const RatMatrix X2 = x * x;
    const RatMatrix Y2 = y * y;
    const RatMatrix X3 = X2 * x;
    const RatMatrix X4 = X2 * X2;
    const RatMatrix Y3 = Y2 * y;
    const RatMatrix XY = anticommutator(x, y);
    const RatMatrix I = RatMatrix::identity(d);

    RelationResiduals r;
    r.x_bracket = commutator(x, Z) - (Rat(-6) * Y2 + a.a2 * X2 + a.a5 * x + a.a8 * I);
    r.y_bracket = commutator(y, Z) -
                  (Rat(-2) * X3 + (-a.a2) * XY + (-a.a5) * y + a.a6 * x + a.a9 * I);

    const Rat x1 = 6 * a.a5 + 2 * a.a9;
    const Rat x2 = -2 * a.a6 - 2 * a.a8;
    const Rat x3 = 6 * a.a2 + a.a6;
    const Rat x4 = -a.a5;
    const Rat x5 = 8 * a.a2 - 24;
    const Rat x7 = -2 * a.a2 + 12;
    const RatMatrix central = x1 * x + x2 * y + x3 * X2 + x4 * XY + x5 * Y2 +
                              x7 * (x * (y * x)) + Rat(-1) * X4 + Rat(4) * Y3 + Z * Z;
    r.central = central - a.a12 * I;
    return r;
}

RelationReport verify_relations(const ParamSet& params, const StructureConstants& a) {
    const BlockPair blocks = dense_blocks(params);
    const RelationResiduals r = relation_residuals(blocks.x, blocks.y, a);

    RelationReport report;
    report.dim = blocks.dim;
    report.x_bracket_ok = r.x_bracket.is_zero();
    report.y_bracket_ok = r.y_bracket.is_zero();
    report.central_ok = r.central.is_zero();
    return report;
}

RelationReport verify_relations(const ParamSet& params) {
    return verify_relations(params, structure_constants(params));
}

// ===================================================== coefficient recovery

FitResult fit_constants_from_rep(const ParamSet& params) {
    const BlockPair blocks = dense_blocks(params);
    const RatMatrix& X = blocks.x;
    const RatMatrix& Y = blocks.y;
    const int d = blocks.dim;

    const RatMatrix Z = commutator(X, Y);
    const RatMatrix X2 = X * X;
    const RatMatrix X3 = X2 * X;
    const RatMatrix Y2 = Y * Y;
    const RatMatrix XY = anticommutator(X, Y);
    const RatMatrix I = RatMatrix::identity(d);

    // Joint linear system in (a2, a5, a6, a8, a9); one row per matrix entry
    // of each bracket relation, right-hand sides moved to the model side.
    constexpr int kCols = 5;
    std::vector<std::array<Rat, kCols + 1>> rows;
    rows.reserve(size_t(2 * d * d));

    const RatMatrix rb = commutator(X, Z) + Rat(6) * Y2;  // = a2 X^2 + a5 X + a8 I
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            rows.push_back({X2.at(i, j), X.at(i, j), Rat(0), I.at(i, j), Rat(0), rb.at(i, j)});

    const RatMatrix rc = commutator(Y, Z) + Rat(2) * X3;  // = -a2{X,Y} - a5 Y + a6 X + a9 I
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            rows.push_back({-XY.at(i, j), -Y.at(i, j), X.at(i, j), Rat(0), I.at(i, j),
                            rc.at(i, j)});

    // Exact Gauss-Jordan on the augmented system.
    int pivot_row_of[kCols];
    for (int c = 0; c < kCols; ++c) pivot_row_of[c] = -1;
    int next_row = 0;
    for (int c = 0; c < kCols && next_row < int(rows.size()); ++c) {
        int p = -1;
        for (int r = next_row; r < int(rows.size()); ++r)
            if (rows[size_t(r)][size_t(c)] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(rows[size_t(next_row)], rows[size_t(p)]);
        const Rat inv = Rat(1) / rows[size_t(next_row)][size_t(c)];
        for (auto& v : rows[size_t(next_row)]) v *= inv;
        for (int r = 0; r < int(rows.size()); ++r) {
            if (r == next_row) continue;
            const Rat factor = rows[size_t(r)][size_t(c)];
            if (factor == 0) continue;
            for (int k = c; k <= kCols; ++k)
                rows[size_t(r)][size_t(k)] -= factor * rows[size_t(next_row)][size_t(k)];
        }
        pivot_row_of[c] = next_row;
        ++next_row;
    }

    // A genuine block pair always yields a consistent system.
    for (int r = next_row; r < int(rows.size()); ++r)
        if (rows[size_t(r)][kCols] != 0)
            throw Error("fit_constants_from_rep: inconsistent relation system");

    // One null-space vector per free column; a coefficient is pinned down
    // exactly when every null vector vanishes there.
    FitResult fit;
    for (int c = 0; c < kCols; ++c) fit.determined[size_t(c)] = (pivot_row_of[c] >= 0);
    for (int f = 0; f < kCols; ++f) {
        if (pivot_row_of[f] >= 0) continue;
        for (int c = 0; c < kCols; ++c)
            if (pivot_row_of[c] >= 0 && rows[size_t(pivot_row_of[c])][size_t(f)] != 0)
                fit.determined[size_t(c)] = false;
    }
    for (int c = 0; c < kCols; ++c)
        if (pivot_row_of[c] >= 0) fit.values[size_t(c)] = rows[size_t(pivot_row_of[c])][kCols];

    bool any = false;
    for (bool flag : fit.determined) any = any || flag;
    if (!any)
        throw Underdetermined("block of dimension " + std::to_string(d) +
                              " pins down none of the coefficients");
    return fit;
}

}  // namespace su3ml
