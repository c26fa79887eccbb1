/*
  e6.hpp — the exact E6 root system and Weyl group underlying the coupling
  problem.

  Roots are integer coefficient vectors on the simple roots α1..α6 (diagram:
  chain 1–2–3–4–5 with 6 attached to 3).  Weyl elements are 6x6 integer
  matrices acting on root coordinates; the full group of 51840 elements is
  generated once by breadth-first closure and cached.  A fixed basis matrix B
  identifies parameter space with root space: its columns are six chosen
  roots, and every root becomes a linear form in (m1, m2, m'1, m'2, m''1,
  m''2) via B^{-1}.  Under that identification the 18 positive roots with
  α3-coefficient 1 are exactly the 18 grid entries, and the signed Weyl
  elements preserving that set form the order-144 symmetry group.
*/
#pragma once

#include "su3ml/matrix.hpp"
#include "su3ml/rational.hpp"
#include "su3ml/symmetry.hpp"
#include "su3ml/weights.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace su3ml {

// ------------------------------------------------------------------ roots

using RootVector = std::array<int, 6>;

const std::array<std::array<int, 6>, 6>& cartan_matrix();

// Invariant bilinear form normalized so every root has squared length 2.
long bilinear(const RootVector& a, const RootVector& b);

// -------------------------------------------------------------- group elements

struct WeylElement {
    std::array<int8_t, 36> a{};  // row-major 6x6

    int at(int i, int j) const { return a[size_t(6 * i + j)]; }
    void set(int i, int j, int v) { a[size_t(6 * i + j)] = static_cast<int8_t>(v); }

    static WeylElement identity();
    RootVector apply(const RootVector& v) const;
    std::string key() const { return std::string(reinterpret_cast<const char*>(a.data()), 36); }

    friend WeylElement operator*(const WeylElement& x, const WeylElement& y);  // x after y
    auto operator<=>(const WeylElement&) const = default;
};

WeylElement simple_reflection(int i);  // i in 1..6
WeylElement weyl_inverse(const WeylElement& w);

struct SignedWeylElement {
    WeylElement w;
    int sign = 1;  // +1 for W, -1 for the -Id coset

    RootVector apply(const RootVector& v) const;
    friend SignedWeylElement operator*(const SignedWeylElement& x, const SignedWeylElement& y);
    auto operator<=>(const SignedWeylElement&) const = default;
};

// ------------------------------------------------------------------ closure

struct RootSystem {
    std::vector<RootVector> all;       // 72, sorted
    std::vector<RootVector> positive;  // 36, sorted
    RootVector highest{};              // Θ = (1,2,3,2,1,2)

    bool is_root(const RootVector& v) const;
    bool is_positive(const RootVector& v) const;
};

// Reflection-orbit closure of the simple roots; cached.
const RootSystem& root_system();

// All 51840 elements by breadth-first closure over simple reflections,
// deduplicated on matrix entries; cached.  Throws BoundExceeded if closure
// passes 60000 elements (implementation-bug tripwire).
const std::vector<WeylElement>& weyl_group();

// The unique element mapping every positive root to a negative one;
// w0^2 = Id, and -w0 is the diagram flip 1<->5, 2<->4.
const WeylElement& longest_element();

// Fundamental weight ω_i (1-based) in root coordinates: column i of the
// inverse Cartan matrix.
std::array<Rat, 6> fundamental_weight(int i);

// ------------------------------------------- parameters <-> root coordinates

// Columns are the six roots identified with m1, m2, m'1, m'2, m''1, m''2.
const std::array<std::array<int, 6>, 6>& param_basis_matrix();
// 3 B^{-1}, exactly integral.
const std::array<std::array<int, 6>, 6>& param_basis_inverse_times3();

// Coefficients of the linear form m -> value(root) over (m1..m''2);
// denominators divide 3.
std::array<Rat, 6> value_form(const RootVector& root);
Rat root_value(const RootVector& root, const ParamSet& params);

// The matrix M_s with (s·m) = M_s m, i.e. sign * (B^{-1} w^{-1} B)^T.
// Satisfies M_{st} = M_s M_t and value(ρ)(s·m) = sign · value(s^{-1}ρ)(m).
RatMatrix param_action(const SignedWeylElement& s);
// 3 M_s, exactly integral (entries lie in [-3, 3]).
std::array<std::array<int, 6>, 6> param_action_times3(const SignedWeylElement& s);

// ------------------------------------------------------------ the 18-root set

// Positive roots whose α3-coefficient is 1; sorted, size 18.
const std::vector<RootVector>& coefficient_one_roots();

// The same 18 roots laid out as the two grids: value_form(left[i][j])
// equals the left arrangement entry at (i, j), and right adds l - n.
struct RootGrids {
    std::array<std::array<RootVector, 3>, 3> left{};
    std::array<std::array<RootVector, 3>, 3> right{};
};
const RootGrids& coefficient_one_grids();

// -------------------------------------------------------- order-144 subgroup

// Closure of {s1, s2, s4, s5, s6, -w0} in ±W; 144 elements, cached.
const std::vector<SignedWeylElement>& missing_label_subgroup();

// All signed elements mapping the given set of roots onto itself.
std::vector<SignedWeylElement> signed_stabilizer_of_root_set(const std::vector<RootVector>& set);

// The grid-action bijection onto the order-144 group of symmetry.hpp: g and
// its image move the 18 cells identically.  Throws Error if g does not
// stabilize the 18-root set.
SymmetryElement to_symmetry_element(const SignedWeylElement& g);

// ------------------------------------------------------------- minimal words

// Generator word in application order: gens.front() acts first.
struct GeneratorWord {
    std::vector<int> gens;  // values in 1..6
    std::string str() const;
    auto operator<=>(const GeneratorWord&) const = default;
};

RootVector apply_word(const GeneratorWord& word, RootVector v);
WeylElement word_element(const GeneratorWord& word);

// A shortest word w with w(Θ) = target, found by breadth-first search over
// the root orbit; among shortest words the lexicographically least digit
// string (application order) is returned, so results are reproducible.
// Throws NotARoot unless target is a positive root.
GeneratorWord minimal_word(const RootVector& target);

// ---------------------------------------------------------------- root poset

struct PosetEdge {
    RootVector from{};
    RootVector to{};  // from + α_label
    int label = 0;
    auto operator<=>(const PosetEdge&) const = default;
};

// Covering relations β -> β + αi between positive roots; sorted, 60 edges.
std::vector<PosetEdge> root_poset();

}  // namespace su3ml
