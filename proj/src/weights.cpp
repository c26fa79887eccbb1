/*
  weights.cpp — parameter derivations, the double magic square, multiplicity,
  Casimir values, and the independent tensor-product oracle.

  The oracle works in the epsilon-coordinate weight lattice of gl(3): an irrep
  with partition (p1 >= p2 >= p3) has its weights enumerated by Gelfand-
  Tsetlin patterns; a tensor product's character is the convolution of two
  weight multisets; constituent multiplicities fall out by repeatedly peeling
  the maximal remaining weight (dominance order).  This path never touches the
  magic-square formula, which is the point.
*/
#include "su3ml/weights.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace su3ml {

DerivedLN derive_ln(const ParamSet& p) {
    const long a = p.m1 + 2L * p.m2 + p.mp1 + 2L * p.mp2 - p.mpp1 - 2L * p.mpp2;
    const long b = 2L * p.m1 + p.m2 + 2L * p.mp1 + p.mp2 - 2L * p.mpp1 - p.mpp2;
    if (a % 3 != 0 || b % 3 != 0)
        throw NonIntegral("l or n is not an integer for the given parameters");
    return DerivedLN{a / 3, b / 3};
}

bool ln_integral(const ParamSet& p) {
    const long a = p.m1 + 2L * p.m2 + p.mp1 + 2L * p.mp2 - p.mpp1 - 2L * p.mpp2;
    const long b = 2L * p.m1 + p.m2 + 2L * p.mp1 + p.mp2 - 2L * p.mpp1 - p.mpp2;
    return a % 3 == 0 && b % 3 == 0;
}

Arrangement arrangement(const ParamSet& p) {
    const auto [l, n] = derive_ln(p);
    Arrangement g;
    g.left = {{{p.m1, p.mp1, p.mpp2},
               {p.mp1 + p.mp2 - l, p.m1 + p.m2 - l, n},
               {p.m2 + n - l, p.mp2 + n - l, p.mpp1 + n - l}}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) g.right[i][j] = g.left[i][j] + (l - n);
    return g;
}

int multiplicity(const ParamSet& p) {
    if (!ln_integral(p)) return 0;
    const Arrangement g = arrangement(p);
    long mn = g.left[0][0];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            mn = std::min(mn, g.left[i][j]);
            mn = std::min(mn, g.right[i][j]);
        }
    return mn > 0 ? static_cast<int>(mn) : 0;
}

std::pair<Rat, Rat> casimir_values(const HighestWeightPair& w) {
    const long m1 = w.m1, m2 = w.m2;
    Rat k = rat(2, 3) * Rat(m1 * m1 + m2 * m2 + m1 * m2) - 2;
    Rat l = rat(1, 9) * Rat(m1 + 2 * m2) * Rat(2 * m1 + m2) * Rat(m1 - m2);
    return {k, l};
}

// ---------------------------------------------------------------------------
// Tensor-product oracle
// ---------------------------------------------------------------------------

namespace {

// Weights live in the epsilon basis with a fixed coordinate sum, so a pair
// (w1, w1+w2) identifies one; dominance order has a handy linear extension:
// lexicographic descending on that pair.
using Weight = std::pair<long, long>;  // (w1, w1 + w2)
using WeightMultiset = std::map<Weight, long>;

// Gelfand-Tsetlin enumeration of the weights of the irrep with partition
// (p1, p2, 0).  Each pattern contributes weight (z, x+y-z, p1+p2-x-y).
WeightMultiset irrep_weights(long p1, long p2) {
    WeightMultiset out;
    for (long x = p2; x <= p1; ++x)
        for (long y = 0; y <= p2; ++y)
            for (long z = y; z <= x; ++z) out[{z, x + y}] += 1;
    return out;
}

struct OracleKey {
    long a1, a2, b1, b2;
    auto operator<=>(const OracleKey&) const = default;
};

// Decomposition of (partition a) (x) (partition b) as highest weight -> mult,
// with highest weights recorded as partitions (q1, q2, q3).
using Decomposition = std::map<std::array<long, 3>, long>;

Decomposition decompose(long a1, long a2, long b1, long b2) {
    const WeightMultiset wa = irrep_weights(a1, a2);
    const WeightMultiset wb = irrep_weights(b1, b2);
    const long total = a1 + a2 + b1 + b2;

    WeightMultiset prod;
    for (const auto& [u, cu] : wa)
        for (const auto& [v, cv] : wb) prod[{u.first + v.first, u.second + v.second}] += cu * cv;

    Decomposition dec;
    // Peel from the top: iterate the multiset in descending order; a maximal
    // remaining weight of a Weyl-invariant multiset is dominant.
    for (long guard = 0;; ++guard) {
        if (guard > 1000000) throw Error("tensor peeling failed to terminate");
        auto it = std::find_if(prod.rbegin(), prod.rend(),
                               [](const auto& kv) { return kv.second != 0; });
        if (it == prod.rend()) break;
        const auto [w1, w12] = it->first;
        const long w2 = w12 - w1, w3 = total - w12;
        const long mult = it->second;
        if (mult < 0 || w1 < w2 || w2 < w3)
            throw Error("tensor peeling reached a non-dominant or negative state");
        dec[{w1, w2, w3}] += mult;
        for (const auto& [u, cu] : irrep_weights(w1 - w3, w2 - w3)) {
            // re-offset by w3 per coordinate to sit at the same total.
            prod[{u.first + w3, u.second + 2 * w3}] -= mult * cu;
        }
    }
    return dec;
}

std::map<OracleKey, Decomposition> g_oracle_cache;
std::mutex g_oracle_mutex;

int default_oracle_bound() {
    if (const char* env = std::getenv("SU3ML_ORACLE_BOUND")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 12;
}

}  // namespace

int lr_oracle(const HighestWeightPair& w, const HighestWeightPair& wp,
              const HighestWeightPair& wpp, int bound) {
    if (bound <= 0) bound = default_oracle_bound();
    for (int v : {w.m1, w.m2, wp.m1, wp.m2, wpp.m1, wpp.m2})
        if (v < 1 || v > bound)
            throw BoundExceeded("lr_oracle entry " + std::to_string(v) +
                                " outside [1, " + std::to_string(bound) + "]");

    // shifted labels -> Dynkin -> partition
    const long a1 = (w.m1 - 1) + (w.m2 - 1), a2 = w.m2 - 1;
    const long b1 = (wp.m1 - 1) + (wp.m2 - 1), b2 = wp.m2 - 1;
    const long c1 = (wpp.m1 - 1) + (wpp.m2 - 1), c2 = wpp.m2 - 1;

    const OracleKey key{a1, a2, b1, b2};
    Decomposition dec;
    {
        std::lock_guard<std::mutex> lock(g_oracle_mutex);
        auto it = g_oracle_cache.find(key);
        if (it == g_oracle_cache.end())
            it = g_oracle_cache.emplace(key, decompose(a1, a2, b1, b2)).first;
        dec = it->second;
    }

    // The constituent appears with every determinant twist (t, t, t) folded
    // in; box counting fixes t uniquely.
    const long excess = (a1 + a2 + b1 + b2) - (c1 + c2);
    if (excess < 0 || excess % 3 != 0) return 0;
    const long t = excess / 3;
    auto it = dec.find({c1 + t, c2 + t, t});
    return it == dec.end() ? 0 : static_cast<int>(it->second);
}

}  // namespace su3ml
