// Unit tests for the Hahn-type pair: band construction with the formula
// boundary convention, z-coefficients, exact composition of the block
// operators, and the padded-window commutator algebra.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "su3ml/errors.hpp"
#include "su3ml/hahn.hpp"
#include "su3ml/tridiag.hpp"

#include <vector>

using namespace su3ml;

namespace {

std::vector<ParamSet> physical_samples(int max_entry) {
    std::vector<ParamSet> out;
    for (int a = 1; a <= max_entry; ++a)
        for (int b = 1; b <= max_entry; ++b)
            for (int c = 1; c <= max_entry; ++c)
                for (int d = 1; d <= max_entry; ++d)
                    for (int e = 1; e <= max_entry; ++e)
                        for (int f = 1; f <= max_entry; ++f) {
                            ParamSet p{a, b, c, d, e, f};
                            if (is_physical(p)) out.push_back(p);
                        }
    return out;
}

}  // namespace

TEST_CASE("pair and z-coefficients at the symmetric point") {
    const ParamSet m{2, 2, 2, 2, 2, 2};
    const HahnPair hp = hahn_matrices(m);
    REQUIRE(hp.dim == 2);
    CHECK(hp.h1.at(0, 0) == rat(1, 2));
    CHECK(hp.h1.at(1, 1) == rat(-1, 2));
    CHECK(hp.h1.at(0, 1) == 0);
    CHECK(hp.h2.at(0, 0) == 1);
    CHECK(hp.h2.at(0, 1) == -1);
    CHECK(hp.h2.at(1, 0) == -1);
    CHECK(hp.h2.at(1, 1) == 1);

    const ZCoefficients zc = z_coefficients(m);
    CHECK(zc.a2 == rat(-3, 2));
    CHECK(zc.a3 == 0);
    CHECK(zc.z[0] == 0);
    CHECK(zc.z[1] == -8);
    CHECK(zc.z[2] == 0);
    CHECK(zc.z[3] == 1);
    CHECK(zc.z[4] == rat(1, 2));
    CHECK(zc.z[5] == rat(-15, 4));
    CHECK(zc.z[6] == 0);
    CHECK(zc.z[7] == rat(7, 4));
    CHECK(zc.z[8] == 0);
    CHECK(zc.z[9] == 0);
    CHECK(zc.z[10] == -6);
    CHECK(zc.z[11] == 2);
    CHECK(zc.z[12] == -3);
}

TEST_CASE("boundary rows keep the band formula") {
    // Here the out-of-range super band is -1 at the single row, so the two
    // candidate conventions differ; the formula one matches the block.
    const ParamSet m{2, 2, 1, 3, 1, 3};
    const HahnPair hp = hahn_matrices(m);
    REQUIRE(hp.dim == 1);
    CHECK(hp.h1.at(0, 0) == rat(1, 2));
    CHECK(hp.h2.at(0, 0) == 1);  // beta(0) + alpha(1) + C = 0 - 1 + 2

    const ComposedPair cp = heun_hahn_compose(m);
    CHECK(cp.x == build_X(m).dense());
    CHECK(cp.y == build_Y(m).dense());
}

TEST_CASE("H2 diagonal collapses to -2 H1^2 - A2 on every row") {
    for (const ParamSet& m : physical_samples(4)) {
        const HahnPair hp = hahn_matrices(m);
        const ZCoefficients zc = z_coefficients(m);
        for (int i = 0; i < hp.dim; ++i) {
            const Rat& h = hp.h1.at(i, i);
            CHECK(hp.h2.at(i, i) == Rat(-2) * h * h - zc.a2);
        }
    }
}

TEST_CASE("composition reproduces the block operators entrywise") {
    for (const ParamSet& m : physical_samples(4)) {
        const ComposedPair cp = heun_hahn_compose(m);
        CHECK(cp.x == build_X(m).dense());
        CHECK(cp.y == build_Y(m).dense());
    }
}

TEST_CASE("super band of X factors through the H2 super band") {
    for (const ParamSet& m : physical_samples(3)) {
        const HahnPair hp = hahn_matrices(m);
        if (hp.dim < 2) continue;
        const ZCoefficients zc = z_coefficients(m);
        const XiParams xp = xi_params(m);
        const RatMatrix x = build_X(m).dense();
        const Rat c =
            rat(xp.xi[0] + xp.xi[1] + xp.xi[4] + xp.xi[5] - 2, 4) - xp.xi_b;
        for (int i = 1; i < hp.dim; ++i) {
            const Rat factor = zc.z[2] + zc.z[3] - rat(2 * i - 1, 2) + c;
            CHECK(x.at(i - 1, i) == factor * hp.h2.at(i - 1, i));
        }
    }
}

TEST_CASE("padded-window commutator relations vanish on the block") {
    for (const ParamSet& m : physical_samples(4)) CHECK(hahn_algebra_check(m).all_ok());
    // single-row blocks with active boundary coupling are the cases a naive
    // unpadded check would get wrong
    CHECK(hahn_algebra_check(ParamSet{2, 2, 1, 2, 1, 2}).all_ok());
    CHECK(hahn_algebra_check(ParamSet{2, 2, 1, 5, 1, 5}).all_ok());
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(hahn_matrices(ParamSet{1, 1, 1, 1, 2, 2}), NotPhysical);
    CHECK_THROWS_AS(heun_hahn_compose(ParamSet{1, 1, 1, 1, 2, 2}), NotPhysical);
    CHECK_THROWS_AS(hahn_algebra_check(ParamSet{1, 1, 1, 1, 2, 2}), NotPhysical);
    CHECK_THROWS_AS(hahn_matrices(ParamSet{1, 2, 1, 1, 1, 1}), NonIntegral);
    CHECK_THROWS_AS(z_coefficients(ParamSet{1, 2, 1, 1, 1, 1}), NonIntegral);
}
