/*
  weights.hpp — coupling-problem parameters and multiplicities.

  A problem instance is six positive integers m = (m1, m2, m'1, m'2, m''1,
  m''2), the shifted highest weights of two su(3) factors and one product
  constituent.  From these, two derived integers (l, n) exist exactly when a
  divisibility-by-3 test passes; the 18-entry double magic square built from
  the parameters has the constituent's multiplicity as its minimum.  An
  independent tensor-product oracle (weight multiplicities + highest-weight
  peeling) cross-checks that minimum.
*/
#pragma once

#include "su3ml/errors.hpp"
#include "su3ml/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <utility>

namespace su3ml {

// Shifted convention: the actual highest weight is (m1-1, m2-1).
struct HighestWeightPair {
    int m1 = 1;
    int m2 = 1;
    auto operator<=>(const HighestWeightPair&) const = default;
};

struct ParamSet {
    int m1 = 1, m2 = 1;      // first factor
    int mp1 = 1, mp2 = 1;    // second factor
    int mpp1 = 1, mpp2 = 1;  // product constituent

    static ParamSet from_array(const std::array<int, 6>& a) {
        return ParamSet{a[0], a[1], a[2], a[3], a[4], a[5]};
    }
    std::array<int, 6> as_array() const { return {m1, m2, mp1, mp2, mpp1, mpp2}; }
    auto operator<=>(const ParamSet&) const = default;
};

struct DerivedLN {
    long l = 0;
    long n = 0;
    auto operator<=>(const DerivedLN&) const = default;
};

// Two 3x3 grids; right = left + (l - n) entrywise, and within each grid the
// three row sums and three column sums agree (the diagonal sums need not).
struct Arrangement {
    std::array<std::array<long, 3>, 3> left{};
    std::array<std::array<long, 3>, 3> right{};
    auto operator<=>(const Arrangement&) const = default;
};

// Throws NonIntegral when the defining divisions by 3 are inexact.
DerivedLN derive_ln(const ParamSet& params);

// True iff derive_ln succeeds (without throwing).
bool ln_integral(const ParamSet& params);

Arrangement arrangement(const ParamSet& params);

// 0 when (l, n) fail integrality or any of the 18 entries is non-positive;
// otherwise the minimum of the 18 entries.
int multiplicity(const ParamSet& params);

inline bool is_physical(const ParamSet& params) { return multiplicity(params) >= 1; }

// (quadratic, cubic) Casimir eigenvalues on the irrep with shifted labels w.
std::pair<Rat, Rat> casimir_values(const HighestWeightPair& w);

// Multiplicity of w'' in w (x) w', by expanding weight multiplicities of both
// factors and peeling highest weights from the product character.  Entirely
// independent of the magic-square minimum.  Throws BoundExceeded when any
// entry exceeds `bound` (default honours SU3ML_ORACLE_BOUND, else 12).
int lr_oracle(const HighestWeightPair& w, const HighestWeightPair& wp,
              const HighestWeightPair& wpp, int bound = 0);

}  // namespace su3ml
