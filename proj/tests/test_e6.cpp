// Unit tests for the E6 layer: root closure, Weyl group, longest element,
// parameter correspondence, the 18-root grids, the order-144 signed
// subgroup and its bridge to the grid symmetry group, minimal words, and
// the root poset.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "su3ml/e6.hpp"
#include "su3ml/tridiag.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace su3ml;

namespace {

using Form = std::array<Rat, 6>;

Form operator+(const Form& a, const Form& b) {
    Form r;
    for (int i = 0; i < 6; ++i) r[i] = a[i] + b[i];
    return r;
}
Form operator-(const Form& a, const Form& b) {
    Form r;
    for (int i = 0; i < 6; ++i) r[i] = a[i] - b[i];
    return r;
}
Form neg(const Form& a) {
    Form r;
    for (int i = 0; i < 6; ++i) r[i] = -a[i];
    return r;
}

Form unit(int k) {
    Form r{Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)};
    r[k] = 1;
    return r;
}

// l = (m1 + 2 m2 + m'1 + 2 m'2 - m''1 - 2 m''2) / 3 and the n analogue.
const Form kL = {rat(1, 3), rat(2, 3), rat(1, 3), rat(2, 3), rat(-1, 3), rat(-2, 3)};
const Form kN = {rat(2, 3), rat(1, 3), rat(2, 3), rat(1, 3), rat(-2, 3), rat(-1, 3)};

RootVector rv(std::initializer_list<int> idx) {
    RootVector v{};
    for (int i : idx) v[i - 1] += 1;
    return v;
}

std::vector<ParamSet> physical_samples(int max_entry, size_t cap) {
    std::vector<ParamSet> out;
    for (int a = 1; a <= max_entry && out.size() < cap; ++a)
        for (int b = 1; b <= max_entry && out.size() < cap; ++b)
            for (int c = 1; c <= max_entry && out.size() < cap; ++c)
                for (int d = 1; d <= max_entry && out.size() < cap; ++d)
                    for (int e = 1; e <= max_entry && out.size() < cap; ++e)
                        for (int f = 1; f <= max_entry && out.size() < cap; ++f) {
                            ParamSet p{a, b, c, d, e, f};
                            if (is_physical(p)) out.push_back(p);
                        }
    return out;
}

}  // namespace

TEST_CASE("root closure: 72 roots, 36 positive, highest root") {
    const RootSystem& rs = root_system();
    CHECK(rs.all.size() == 72);
    CHECK(rs.positive.size() == 36);
    CHECK(rs.highest == RootVector{1, 2, 3, 2, 1, 2});
    CHECK(rs.is_root(rs.highest));

    for (const RootVector& r : rs.all) CHECK(bilinear(r, r) == 2);

    // negatives mirror positives; Theta + alpha_i is never a root
    for (const RootVector& r : rs.positive) {
        RootVector m = r;
        for (int& c : m) c = -c;
        CHECK(rs.is_root(m));
    }
    for (int i = 1; i <= 6; ++i) {
        RootVector up = rs.highest;
        up[i - 1] += 1;
        CHECK(!rs.is_root(up));
    }
}

TEST_CASE("simple reflections are involutive isometries; s3 fixes exactly alpha3-perp") {
    for (int i = 1; i <= 6; ++i) {
        const WeylElement s = simple_reflection(i);
        CHECK(s * s == WeylElement::identity());
        RootVector alpha{};
        alpha[i - 1] = 1;
        RootVector neg_alpha = alpha;
        neg_alpha[i - 1] = -1;
        CHECK(s.apply(alpha) == neg_alpha);
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b) {
                RootVector ea{}, eb{};
                ea[a] = 1;
                eb[b] = 1;
                CHECK(bilinear(s.apply(ea), s.apply(eb)) == cartan_matrix()[a][b]);
            }
    }

    const WeylElement s3 = simple_reflection(3);
    const RootVector alpha3 = rv({3});
    for (const RootVector& r : root_system().all) {
        const bool fixed = s3.apply(r) == r;
        CHECK(fixed == (bilinear(r, alpha3) == 0));
    }
}

TEST_CASE("Weyl group closure has 51840 distinct elements with exact inverses") {
    const auto& group = weyl_group();
    CHECK(group.size() == 51840);

    std::set<std::string> keys;
    for (const auto& w : group) keys.insert(w.key());
    CHECK(keys.size() == 51840);
    CHECK(keys.count(WeylElement::identity().key()) == 1);

    std::mt19937 rng(99);
    std::uniform_int_distribution<size_t> pick(0, group.size() - 1);
    for (int t = 0; t < 100; ++t) {
        const WeylElement &a = group[pick(rng)], &b = group[pick(rng)];
        CHECK(keys.count((a * b).key()) == 1);
        CHECK(a * weyl_inverse(a) == WeylElement::identity());
        CHECK(weyl_inverse(a) * a == WeylElement::identity());
    }

    // random elements preserve the form
    for (int t = 0; t < 25; ++t) {
        const WeylElement& w = group[pick(rng)];
        for (int a = 0; a < 6; ++a)
            for (int b = a; b < 6; ++b) {
                RootVector ea{}, eb{};
                ea[a] = 1;
                eb[b] = 1;
                CHECK(bilinear(w.apply(ea), w.apply(eb)) == cartan_matrix()[a][b]);
            }
    }
}

TEST_CASE("longest element: order two, flips the diagram through -Id") {
    const WeylElement& w0 = longest_element();
    CHECK(w0 * w0 == WeylElement::identity());
    CHECK(w0 * simple_reflection(1) * w0 == simple_reflection(5));
    CHECK(w0 * simple_reflection(2) * w0 == simple_reflection(4));
    CHECK(w0 * simple_reflection(6) * w0 == simple_reflection(6));

    // -w0 exchanges alpha1<->alpha5, alpha2<->alpha4 and fixes alpha3, alpha6
    const SignedWeylElement minus_w0{w0, -1};
    CHECK(minus_w0.apply(rv({1})) == rv({5}));
    CHECK(minus_w0.apply(rv({5})) == rv({1}));
    CHECK(minus_w0.apply(rv({2})) == rv({4}));
    CHECK(minus_w0.apply(rv({4})) == rv({2}));
    CHECK(minus_w0.apply(rv({3})) == rv({3}));
    CHECK(minus_w0.apply(rv({6})) == rv({6}));

    for (const RootVector& r : root_system().positive) {
        const RootVector img = w0.apply(r);
        CHECK(std::all_of(img.begin(), img.end(), [](int c) { return c <= 0; }));
    }
}

TEST_CASE("fundamental weights solve the Cartan system") {
    for (int i = 1; i <= 6; ++i) {
        const auto w = fundamental_weight(i);
        for (int r = 0; r < 6; ++r) {
            Rat acc = 0;
            for (int c = 0; c < 6; ++c) acc += Rat(cartan_matrix()[r][c]) * w[c];
            CHECK(acc == (r == i - 1 ? 1 : 0));
        }
    }
}

TEST_CASE("parameter basis: inverse is exact, frozen value forms hold") {
    const auto& B = param_basis_matrix();
    const auto& inv3 = param_basis_inverse_times3();
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            long acc = 0;
            for (int k = 0; k < 6; ++k) acc += long(inv3[i][k]) * B[k][j];
            CHECK(acc == (i == j ? 3 : 0));
        }

    // value(column_k) must be the k-th coordinate form
    for (int k = 0; k < 6; ++k) {
        RootVector col{};
        for (int r = 0; r < 6; ++r) col[r] = B[r][k];
        CHECK(value_form(col) == unit(k));
    }

    const Form m1 = unit(0), m2 = unit(1), mp1 = unit(2), mp2 = unit(3), mpp1 = unit(4);
    CHECK(value_form(RootVector{1, 2, 3, 2, 1, 2}) == m1 + m2 + mp1 + mp2 - kN);
    CHECK(value_form(rv({6})) == kL - kN);
    CHECK(value_form(rv({1})) == kL - mp2);
    CHECK(value_form(rv({1, 2})) == kN - m1);
    CHECK(value_form(rv({2})) == (mp2 + kN) - (m1 + kL));
    CHECK(value_form(rv({3})) == (mpp1 + kN) - kL);
    CHECK(value_form(RootVector{1, 2, 3, 2, 1, 1}) == m1 + m2 + mp1 + mp2 - kL);
}

TEST_CASE("the 18 coefficient-one roots are the grid entries, as linear forms") {
    const auto& c1 = coefficient_one_roots();
    CHECK(c1.size() == 18);
    CHECK(std::count(c1.begin(), c1.end(), rv({3})) == 1);
    CHECK(std::count(c1.begin(), c1.end(), rv({1, 2, 3, 4, 5, 6})) == 1);

    const RootGrids& g = coefficient_one_grids();
    std::set<RootVector> covered;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            covered.insert(g.left[i][j]);
            covered.insert(g.right[i][j]);
        }
    CHECK(covered == std::set<RootVector>(c1.begin(), c1.end()));

    const Form m1 = unit(0), m2 = unit(1), mp1 = unit(2), mp2 = unit(3), mpp1 = unit(4),
               mpp2 = unit(5);
    const std::array<std::array<Form, 3>, 3> left_forms = {{
        {m1, mp1, mpp2},
        {mp1 + mp2 - kL, m1 + m2 - kL, kN},
        {m2 + kN - kL, mp2 + kN - kL, mpp1 + kN - kL},
    }};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CHECK(value_form(g.left[i][j]) == left_forms[i][j]);
            CHECK(value_form(g.right[i][j]) == left_forms[i][j] + (kL - kN));
        }
}

TEST_CASE("param_action: homomorphism with integral 3M and the value-transport law") {
    const SignedWeylElement id{WeylElement::identity(), 1};
    CHECK(param_action(id) == RatMatrix::identity(6));
    const SignedWeylElement minus_id{WeylElement::identity(), -1};
    CHECK(param_action(minus_id) == Rat(-1) * RatMatrix::identity(6));

    const auto& group = weyl_group();
    std::mt19937 rng(123);
    std::uniform_int_distribution<size_t> pick(0, group.size() - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int t = 0; t < 100; ++t) {
        const SignedWeylElement a{group[pick(rng)], coin(rng) ? 1 : -1};
        const SignedWeylElement b{group[pick(rng)], coin(rng) ? 1 : -1};
        CHECK(param_action(a * b) == param_action(a) * param_action(b));
    }

    for (int t = 0; t < 40; ++t) {
        const SignedWeylElement s{group[pick(rng)], coin(rng) ? 1 : -1};
        const auto m3 = param_action_times3(s);
        for (const auto& row : m3)
            for (int v : row) CHECK(std::abs(v) <= 3);
    }

    // value(rho)(s.m) == value(s^{-1}.rho)(m), with the sign folded into the
    // signed root action; checked on rationals
    const auto samples = physical_samples(4, 6);
    for (int t = 0; t < 30; ++t) {
        const SignedWeylElement s{group[pick(rng)], coin(rng) ? 1 : -1};
        const SignedWeylElement s_inv{weyl_inverse(s.w), s.sign};
        const RatMatrix M = param_action(s);
        for (const ParamSet& m : samples) {
            std::array<Rat, 6> image;
            const auto marr = m.as_array();
            for (int i = 0; i < 6; ++i) {
                Rat acc = 0;
                for (int j = 0; j < 6; ++j) acc += M.at(i, j) * Rat(marr[size_t(j)]);
                image[size_t(i)] = acc;
            }
            for (const RootVector& rho :
                 {root_system().highest, rv({6}), rv({1, 2, 3}), rv({2, 3, 4, 6})}) {
                const Form f = value_form(rho);
                Rat lhs = 0;
                for (int i = 0; i < 6; ++i) lhs += f[size_t(i)] * image[size_t(i)];
                CHECK(lhs == root_value(s_inv.apply(rho), m));
            }
        }
    }

    // s6 negates l - n on parameters
    const SignedWeylElement s6{simple_reflection(6), 1};
    const RatMatrix M6 = param_action(s6);
    for (const ParamSet& m : samples) {
        const auto ln = derive_ln(m);
        std::array<Rat, 6> image;
        const auto marr = m.as_array();
        for (int i = 0; i < 6; ++i) {
            Rat acc = 0;
            for (int j = 0; j < 6; ++j) acc += M6.at(i, j) * Rat(marr[size_t(j)]);
            image[size_t(i)] = acc;
        }
        Rat l_img = 0, n_img = 0;
        for (int i = 0; i < 6; ++i) {
            l_img += kL[size_t(i)] * image[size_t(i)];
            n_img += kN[size_t(i)] * image[size_t(i)];
        }
        CHECK(l_img - n_img == Rat(-(ln.l - ln.n)));
    }
}

TEST_CASE("missing-label subgroup: order 144, equals the signed stabilizer") {
    const auto& sub = missing_label_subgroup();
    CHECK(sub.size() == 144);

    std::set<std::pair<int, std::string>> keys;
    for (const auto& g : sub) keys.insert({g.sign, g.w.key()});
    CHECK(keys.size() == 144);
    for (const auto& a : sub)
        for (int t = 0; t < 3; ++t) CHECK(keys.count({(a * sub[size_t(t)]).sign,
                                                      (a * sub[size_t(t)]).w.key()}) == 1);

    const auto stab = signed_stabilizer_of_root_set(coefficient_one_roots());
    std::set<std::pair<int, std::string>> stab_keys;
    for (const auto& g : stab) stab_keys.insert({g.sign, g.w.key()});
    CHECK(stab_keys == keys);
}

TEST_CASE("plus part of the subgroup is the parabolic fixing omega3") {
    const auto& sub = missing_label_subgroup();
    std::set<std::string> plus_part;
    for (const auto& g : sub)
        if (g.sign == 1) plus_part.insert(g.w.key());
    CHECK(plus_part.size() == 72);

    // integer check via 3*omega3
    const auto w3 = fundamental_weight(3);
    std::array<long, 6> w3x3{};
    for (int i = 0; i < 6; ++i) {
        const Rat v = Rat(3) * w3[size_t(i)];
        REQUIRE(v.get_den() == 1);
        w3x3[size_t(i)] = v.get_num().get_si();
    }
    std::set<std::string> fixers;
    for (const WeylElement& w : weyl_group()) {
        bool fixes = true;
        for (int i = 0; i < 6 && fixes; ++i) {
            long acc = 0;
            for (int j = 0; j < 6; ++j) acc += long(w.at(i, j)) * w3x3[size_t(j)];
            fixes = acc == w3x3[size_t(i)];
        }
        if (fixes) fixers.insert(w.key());
    }
    CHECK(fixers == plus_part);
}

TEST_CASE("bridge to the grid symmetry group is a sign-true isomorphism") {
    const auto& sub = missing_label_subgroup();
    std::set<SymmetryElement> images;
    std::map<std::pair<int, std::string>, SymmetryElement> img_of;
    for (const auto& g : sub) {
        const SymmetryElement e = to_symmetry_element(g);
        images.insert(e);
        img_of[{g.sign, g.w.key()}] = e;
        CHECK(sign_of(e) == g.sign);
    }
    CHECK(images.size() == 144);  // bijective onto the full grid group

    std::mt19937 rng(7);
    std::uniform_int_distribution<size_t> pick(0, sub.size() - 1);
    for (int t = 0; t < 150; ++t) {
        const auto &a = sub[pick(rng)], &b = sub[pick(rng)];
        const auto prod = a * b;
        CHECK(img_of.at({prod.sign, prod.w.key()}) ==
              compose(img_of.at({a.sign, a.w.key()}), img_of.at({b.sign, b.w.key()})));
    }

    // the two actions on parameters agree at sample points
    const auto samples = physical_samples(4, 5);
    for (const auto& g : sub) {
        const SymmetryElement e = to_symmetry_element(g);
        const RatMatrix M = param_action(g);
        for (const ParamSet& m : samples) {
            const ParamSet grid_image = apply(e, m);
            const auto marr = m.as_array();
            const auto iarr = grid_image.as_array();
            for (int i = 0; i < 6; ++i) {
                Rat acc = 0;
                for (int j = 0; j < 6; ++j) acc += M.at(i, j) * Rat(marr[size_t(j)]);
                CHECK(acc == Rat(iarr[size_t(i)]));
            }
        }
    }
}

TEST_CASE("Lambda of the xi-construction is the value of a fixed root") {
    const RootVector theta = root_system().highest;
    RootVector theta_m6 = theta;
    theta_m6[5] -= 1;
    for (const ParamSet& m : physical_samples(4, 200)) {
        const auto ln = derive_ln(m);
        const XiParams xi = xi_params(m);
        if (ln.n <= ln.l) CHECK(Rat(xi.Lambda) == root_value(theta, m));
        if (ln.l <= ln.n) CHECK(Rat(xi.Lambda) == root_value(theta_m6, m));
    }
}

TEST_CASE("minimal words: frozen examples, reachability, first step is s6") {
    CHECK(minimal_word(root_system().highest).gens.empty());

    RootVector theta_m6 = root_system().highest;
    theta_m6[5] -= 1;
    CHECK(minimal_word(theta_m6).str() == "6");

    const GeneratorWord w1 = minimal_word(rv({1}));
    CHECK(w1.gens.size() == 10);
    CHECK(w1.str() == "6324354632");
    CHECK(apply_word(w1, root_system().highest) == rv({1}));

    for (const RootVector& r : root_system().positive) {
        const GeneratorWord w = minimal_word(r);
        CHECK(apply_word(w, root_system().highest) == r);
        CHECK(word_element(w).apply(root_system().highest) == r);
        if (r != root_system().highest) CHECK(w.gens.front() == 6);
    }

    CHECK_THROWS_AS(minimal_word(RootVector{1, 0, 0, 0, 0, 1}), NotARoot);
    RootVector neg = rv({3});
    neg[2] = -1;
    CHECK_THROWS_AS(minimal_word(neg), NotARoot);
}

TEST_CASE("root poset: 60 labeled covers, unique maximum") {
    const auto edges = root_poset();
    CHECK(edges.size() == 60);

    std::set<RootVector> nodes, has_out;
    for (const auto& e : edges) {
        nodes.insert(e.from);
        nodes.insert(e.to);
        has_out.insert(e.from);
        RootVector step = e.from;
        step[e.label - 1] += 1;
        CHECK(step == e.to);
    }
    CHECK(nodes.size() == 36);

    int maximal = 0;
    for (const RootVector& r : root_system().positive)
        if (!has_out.count(r)) {
            ++maximal;
            CHECK(r == root_system().highest);
        }
    CHECK(maximal == 1);

    std::set<std::pair<RootVector, int>> from_alpha3;
    for (const auto& e : edges)
        if (e.from == rv({3})) from_alpha3.insert({e.to, e.label});
    CHECK(from_alpha3 ==
          std::set<std::pair<RootVector, int>>{
              {rv({2, 3}), 2}, {rv({3, 4}), 4}, {rv({3, 6}), 6}});
}
