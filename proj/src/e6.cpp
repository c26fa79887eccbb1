/*
  e6.cpp — E6 roots, Weyl group, parameter correspondence, 18-root grids,
  order-144 signed subgroup, minimal words, root poset.

  Everything is exact integer/rational arithmetic.  The expensive closures
  (72 roots, 51840 group elements, the 144-element subgroup, the cell-action
  table) are computed once on first use and cached in function-local statics.
*/
#include "su3ml/e6.hpp"

#include "su3ml/errors.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <set>
#include <unordered_set>
#include <utility>

namespace su3ml {

// ================================================================ constants

namespace {

constexpr std::array<std::array<int, 6>, 6> kCartan = {{
    {2, -1, 0, 0, 0, 0},
    {-1, 2, -1, 0, 0, 0},
    {0, -1, 2, -1, 0, -1},
    {0, 0, -1, 2, -1, 0},
    {0, 0, 0, -1, 2, 0},
    {0, 0, -1, 0, 0, 2},
}};

// Columns: the roots standing for m1, m2, m'1, m'2, m''1, m''2.
constexpr std::array<std::array<int, 6>, 6> kParamBasis = {{
    // rows are root coordinates; column order m1, m2, m'1, m'2, m''1, m''2
    {0, 1, 1, 0, 0, 0},
    {0, 1, 1, 1, 0, 1},
    {1, 1, 1, 1, 1, 1},
    {1, 1, 0, 1, 0, 1},
    {1, 0, 0, 1, 0, 0},
    {0, 1, 0, 1, 1, 0},
}};

constexpr RootVector kTheta = {1, 2, 3, 2, 1, 2};

using IntMat = std::array<std::array<int, 6>, 6>;

IntMat int_product(const IntMat& x, const IntMat& y) {
    IntMat r{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            int acc = 0;
            for (int k = 0; k < 6; ++k) acc += x[i][k] * y[k][j];
            r[i][j] = acc;
        }
    return r;
}

IntMat int_transpose(const IntMat& x) {
    IntMat r{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) r[i][j] = x[j][i];
    return r;
}

// Exact inverse of an integer matrix scaled by 3; throws if 3*inverse is
// not integral (never happens for the fixed matrices used here).
IntMat exact_inverse_times3(const IntMat& m) {
    RatMatrix a(6), inv = RatMatrix::identity(6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) a.at(i, j) = Rat(m[i][j]);
    for (int col = 0; col < 6; ++col) {
        int pivot = -1;
        for (int r = col; r < 6; ++r)
            if (a.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw Error("exact_inverse_times3: singular matrix");
        for (int j = 0; j < 6; ++j) {
            std::swap(a.at(pivot, j), a.at(col, j));
            std::swap(inv.at(pivot, j), inv.at(col, j));
        }
        const Rat d = a.at(col, col);
        for (int j = 0; j < 6; ++j) {
            a.at(col, j) /= d;
            inv.at(col, j) /= d;
        }
        for (int r = 0; r < 6; ++r) {
            if (r == col || a.at(r, col) == 0) continue;
            const Rat f = a.at(r, col);
            for (int j = 0; j < 6; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    IntMat out{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            const Rat v = Rat(3) * inv.at(i, j);
            if (v.get_den() != 1) throw Error("exact_inverse_times3: denominator exceeds 3");
            out[i][j] = static_cast<int>(v.get_num().get_si());
        }
    return out;
}

const IntMat& cartan_inverse_times3() {
    static const IntMat m = exact_inverse_times3(kCartan);
    return m;
}

RootVector add(const RootVector& a, const RootVector& b) {
    RootVector r{};
    for (int i = 0; i < 6; ++i) r[i] = a[i] + b[i];
    return r;
}

RootVector negate(const RootVector& a) {
    RootVector r{};
    for (int i = 0; i < 6; ++i) r[i] = -a[i];
    return r;
}

}  // namespace

const std::array<std::array<int, 6>, 6>& cartan_matrix() { return kCartan; }

long bilinear(const RootVector& a, const RootVector& b) {
    long acc = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) acc += long(a[i]) * kCartan[i][j] * b[j];
    return acc;
}

// ============================================================ group elements

WeylElement WeylElement::identity() {
    WeylElement e;
    for (int i = 0; i < 6; ++i) e.set(i, i, 1);
    return e;
}

RootVector WeylElement::apply(const RootVector& v) const {
    RootVector r{};
    for (int i = 0; i < 6; ++i) {
        int acc = 0;
        for (int j = 0; j < 6; ++j) acc += at(i, j) * v[j];
        r[i] = acc;
    }
    return r;
}

WeylElement operator*(const WeylElement& x, const WeylElement& y) {
    WeylElement r;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            int acc = 0;
            for (int k = 0; k < 6; ++k) acc += x.at(i, k) * y.at(k, j);
            r.set(i, j, acc);
        }
    return r;
}

WeylElement simple_reflection(int i) {
    if (i < 1 || i > 6) throw OutOfRange("simple_reflection: index must be 1..6");
    WeylElement e = WeylElement::identity();
    for (int j = 0; j < 6; ++j) e.set(i - 1, j, e.at(i - 1, j) - kCartan[i - 1][j]);
    return e;
}

WeylElement weyl_inverse(const WeylElement& w) {
    // w preserves the Cartan form, so w^{-1} = A^{-1} w^T A.
    IntMat wi{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) wi[i][j] = w.at(i, j);
    IntMat prod = int_product(int_product(cartan_inverse_times3(), int_transpose(wi)), kCartan);
    WeylElement out;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            if (prod[i][j] % 3 != 0) throw Error("weyl_inverse: non-integral result");
            out.set(i, j, prod[i][j] / 3);
        }
    return out;
}

RootVector SignedWeylElement::apply(const RootVector& v) const {
    const RootVector img = w.apply(v);
    return sign >= 0 ? img : negate(img);
}

SignedWeylElement operator*(const SignedWeylElement& x, const SignedWeylElement& y) {
    return SignedWeylElement{x.w * y.w, x.sign * y.sign};
}

// =================================================================== closure

bool RootSystem::is_root(const RootVector& v) const {
    return std::binary_search(all.begin(), all.end(), v);
}

bool RootSystem::is_positive(const RootVector& v) const {
    return std::binary_search(positive.begin(), positive.end(), v);
}

const RootSystem& root_system() {
    static const RootSystem rs = [] {
        std::set<RootVector> seen;
        std::vector<RootVector> frontier;
        for (int i = 0; i < 6; ++i) {
            RootVector v{};
            v[i] = 1;
            seen.insert(v);
            frontier.push_back(v);
        }
        std::array<WeylElement, 6> gens;
        for (int i = 1; i <= 6; ++i) gens[size_t(i - 1)] = simple_reflection(i);
        while (!frontier.empty()) {
            std::vector<RootVector> next;
            for (const RootVector& v : frontier)
                for (const WeylElement& g : gens) {
                    const RootVector img = g.apply(v);
                    if (seen.insert(img).second) next.push_back(img);
                }
            frontier = std::move(next);
        }
        RootSystem out;
        out.all.assign(seen.begin(), seen.end());
        for (const RootVector& v : out.all)
            if (std::all_of(v.begin(), v.end(), [](int c) { return c >= 0; }))
                out.positive.push_back(v);
        out.highest = kTheta;
        if (out.all.size() != 72 || out.positive.size() != 36 || !out.is_root(kTheta))
            throw Error("root_system: closure does not match E6");
        return out;
    }();
    return rs;
}

const std::vector<WeylElement>& weyl_group() {
    static const std::vector<WeylElement> group = [] {
        std::vector<WeylElement> elems{WeylElement::identity()};
        std::unordered_set<std::string> seen{elems.front().key()};
        std::array<WeylElement, 6> gens;
        for (int i = 1; i <= 6; ++i) gens[size_t(i - 1)] = simple_reflection(i);
        std::vector<WeylElement> frontier = elems;
        while (!frontier.empty()) {
            std::vector<WeylElement> next;
            for (const WeylElement& m : frontier)
                for (const WeylElement& g : gens) {
                    WeylElement p = g * m;
                    if (seen.insert(p.key()).second) {
                        elems.push_back(p);
                        next.push_back(p);
                    }
                    if (elems.size() > 60000)
                        throw BoundExceeded("weyl_group: closure exceeded 60000 elements");
                }
            frontier = std::move(next);
        }
        if (elems.size() != 51840) throw Error("weyl_group: unexpected order");
        return elems;
    }();
    return group;
}

const WeylElement& longest_element() {
    static const WeylElement w0 = [] {
        const WeylElement* found = nullptr;
        for (const WeylElement& w : weyl_group()) {
            const bool nonpos =
                std::all_of(w.a.begin(), w.a.end(), [](int8_t v) { return v <= 0; });
            if (nonpos) {
                if (found) throw Error("longest_element: not unique");
                found = &w;
            }
        }
        if (!found) throw Error("longest_element: not found");
        return *found;
    }();
    return w0;
}

std::array<Rat, 6> fundamental_weight(int i) {
    if (i < 1 || i > 6) throw OutOfRange("fundamental_weight: index must be 1..6");
    std::array<Rat, 6> out;
    const IntMat& inv3 = cartan_inverse_times3();
    for (int r = 0; r < 6; ++r) out[size_t(r)] = rat(inv3[r][i - 1], 3);
    return out;
}

// =============================================== parameters <-> root space

const std::array<std::array<int, 6>, 6>& param_basis_matrix() { return kParamBasis; }

const std::array<std::array<int, 6>, 6>& param_basis_inverse_times3() {
    static const IntMat inv3 = exact_inverse_times3(kParamBasis);
    return inv3;
}

std::array<Rat, 6> value_form(const RootVector& root) {
    const IntMat& inv3 = param_basis_inverse_times3();
    std::array<Rat, 6> out;
    for (int i = 0; i < 6; ++i) {
        long acc = 0;
        for (int j = 0; j < 6; ++j) acc += long(inv3[i][j]) * root[j];
        out[size_t(i)] = rat(acc, 3);
    }
    return out;
}

Rat root_value(const RootVector& root, const ParamSet& params) {
    const std::array<Rat, 6> form = value_form(root);
    const std::array<int, 6> m = params.as_array();
    Rat acc = 0;
    for (int i = 0; i < 6; ++i) acc += form[size_t(i)] * m[size_t(i)];
    return acc;
}

std::array<std::array<int, 6>, 6> param_action_times3(const SignedWeylElement& s) {
    IntMat wi{};
    const WeylElement winv = weyl_inverse(s.w);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) wi[i][j] = winv.at(i, j);
    IntMat prod =
        int_transpose(int_product(int_product(param_basis_inverse_times3(), wi), kParamBasis));
    if (s.sign < 0)
        for (auto& row : prod)
            for (int& v : row) v = -v;
    return prod;
}

RatMatrix param_action(const SignedWeylElement& s) {
    const IntMat m3 = param_action_times3(s);
    RatMatrix out(6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) out.at(i, j) = rat(m3[i][j], 3);
    return out;
}

// ============================================================== 18-root set

namespace {

RootVector rv(std::initializer_list<int> idx) {
    RootVector v{};
    for (int i : idx) v[i - 1] += 1;
    return v;
}

}  // namespace

const std::vector<RootVector>& coefficient_one_roots() {
    static const std::vector<RootVector> out = [] {
        std::vector<RootVector> list;
        for (const RootVector& r : root_system().positive)
            if (r[2] == 1) list.push_back(r);
        if (list.size() != 18) throw Error("coefficient_one_roots: expected 18 roots");
        return list;
    }();
    return out;
}

const RootGrids& coefficient_one_grids() {
    static const RootGrids grids = [] {
        RootGrids g;
        g.left = {{{rv({3, 4, 5}), rv({1, 2, 3}), rv({2, 3, 4})},
                   {rv({2, 3}), rv({3, 4}), rv({1, 2, 3, 4, 5})},
                   {rv({1, 2, 3, 4}), rv({2, 3, 4, 5}), rv({3})}}};
        const RootVector alpha6 = rv({6});
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) g.right[i][j] = add(g.left[i][j], alpha6);
        return g;
    }();
    return grids;
}

// ====================================================== order-144 subgroup

const std::vector<SignedWeylElement>& missing_label_subgroup() {
    static const std::vector<SignedWeylElement> sub = [] {
        std::vector<SignedWeylElement> gens;
        for (int i : {1, 2, 4, 5, 6}) gens.push_back({simple_reflection(i), 1});
        gens.push_back({longest_element(), -1});

        std::vector<SignedWeylElement> elems{SignedWeylElement{WeylElement::identity(), 1}};
        std::set<std::pair<int, std::string>> seen{{1, elems.front().w.key()}};
        std::vector<SignedWeylElement> frontier = elems;
        while (!frontier.empty()) {
            std::vector<SignedWeylElement> next;
            for (const SignedWeylElement& m : frontier)
                for (const SignedWeylElement& g : gens) {
                    SignedWeylElement p = g * m;
                    if (seen.insert({p.sign, p.w.key()}).second) {
                        elems.push_back(p);
                        next.push_back(p);
                    }
                }
            frontier = std::move(next);
        }
        if (elems.size() != 144) throw Error("missing_label_subgroup: unexpected order");
        return elems;
    }();
    return sub;
}

std::vector<SignedWeylElement> signed_stabilizer_of_root_set(const std::vector<RootVector>& set) {
    std::vector<RootVector> target = set;
    std::sort(target.begin(), target.end());
    std::vector<SignedWeylElement> out;
    for (const WeylElement& w : weyl_group())
        for (int sign : {1, -1}) {
            const SignedWeylElement s{w, sign};
            std::vector<RootVector> img;
            img.reserve(target.size());
            for (const RootVector& r : target) img.push_back(s.apply(r));
            std::sort(img.begin(), img.end());
            if (img == target) out.push_back(s);
        }
    return out;
}

namespace {

// Cells indexed 0..17: left grid row-major, then right grid row-major.
using CellPerm = std::array<int8_t, 18>;

int cell_index(bool right, int i, int j) { return (right ? 9 : 0) + 3 * i + j; }

const std::map<RootVector, int>& cell_of_root() {
    static const std::map<RootVector, int> m = [] {
        std::map<RootVector, int> out;
        const RootGrids& g = coefficient_one_grids();
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                out[g.left[i][j]] = cell_index(false, i, j);
                out[g.right[i][j]] = cell_index(true, i, j);
            }
        return out;
    }();
    return m;
}

CellPerm cell_perm_of_symmetry(const SymmetryElement& e) {
    Arrangement marker;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            marker.left[i][j] = cell_index(false, i, j);
            marker.right[i][j] = cell_index(true, i, j);
        }
    const Arrangement moved = transform_arrangement(e, marker);
    CellPerm p{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            p[size_t(moved.left[i][j])] = static_cast<int8_t>(cell_index(false, i, j));
            p[size_t(moved.right[i][j])] = static_cast<int8_t>(cell_index(true, i, j));
        }
    return p;
}

const std::map<CellPerm, SymmetryElement>& symmetry_by_cell_perm() {
    static const std::map<CellPerm, SymmetryElement> table = [] {
        std::map<CellPerm, SymmetryElement> out;
        for (const SymmetryElement& e : enumerate_group()) out[cell_perm_of_symmetry(e)] = e;
        if (out.size() != 144) throw Error("cell-action table: group action not faithful");
        return out;
    }();
    return table;
}

}  // namespace

SymmetryElement to_symmetry_element(const SignedWeylElement& g) {
    const auto& cells = cell_of_root();
    CellPerm p{};
    for (const auto& [root, idx] : cells) {
        const RootVector img = g.apply(root);
        const auto it = cells.find(img);
        if (it == cells.end())
            throw Error("to_symmetry_element: element does not stabilize the 18-root set");
        p[size_t(idx)] = static_cast<int8_t>(it->second);
    }
    const auto& table = symmetry_by_cell_perm();
    const auto it = table.find(p);
    if (it == table.end())
        throw Error("to_symmetry_element: cell action matches no grid symmetry");
    return it->second;
}

// ============================================================ minimal words

std::string GeneratorWord::str() const {
    std::string s;
    for (int g : gens) s += static_cast<char>('0' + g);
    return s;
}

RootVector apply_word(const GeneratorWord& word, RootVector v) {
    for (int g : word.gens) v = simple_reflection(g).apply(v);
    return v;
}

WeylElement word_element(const GeneratorWord& word) {
    WeylElement e = WeylElement::identity();
    for (int g : word.gens) e = simple_reflection(g) * e;
    return e;
}

GeneratorWord minimal_word(const RootVector& target) {
    const RootSystem& rs = root_system();
    if (!rs.is_positive(target)) throw NotARoot("minimal_word: target is not a positive root");

    std::map<RootVector, std::string> layer{{kTheta, ""}};
    std::set<RootVector> visited{kTheta};
    while (true) {
        const auto found = layer.find(target);
        if (found != layer.end()) {
            GeneratorWord w;
            for (char c : found->second) w.gens.push_back(c - '0');
            return w;
        }
        std::map<RootVector, std::string> next;
        for (const auto& [root, word] : layer)
            for (int i = 1; i <= 6; ++i) {
                const RootVector img = simple_reflection(i).apply(root);
                if (visited.count(img)) continue;
                std::string cand = word + static_cast<char>('0' + i);
                const auto it = next.find(img);
                if (it == next.end() || cand < it->second) next[img] = std::move(cand);
            }
        if (next.empty()) throw Error("minimal_word: target unreachable");
        for (const auto& [root, word] : next) visited.insert(root);
        layer = std::move(next);
    }
}

// ================================================================ root poset

std::vector<PosetEdge> root_poset() {
    const RootSystem& rs = root_system();
    std::vector<PosetEdge> edges;
    for (const RootVector& r : rs.positive)
        for (int i = 1; i <= 6; ++i) {
            RootVector c = r;
            c[i - 1] += 1;
            if (rs.is_root(c)) edges.push_back({r, c, i});
        }
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace su3ml
