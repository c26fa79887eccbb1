/*
  poly.hpp — dense univariate polynomials with exact rational coefficients.

  Coefficients are stored low degree first.  The zero polynomial is the empty
  vector; any other value keeps a nonzero leading coefficient (normalize()
  maintains this).  Everything here is exact; numeric root finding lives in
  numeric.hpp.
*/
#pragma once

#include "su3ml/rational.hpp"

#include <string>
#include <vector>

namespace su3ml {

struct RatPoly {
    std::vector<Rat> c;  // c[k] multiplies x^k

    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { normalize(); }
    static RatPoly constant(const Rat& v) { return RatPoly{{v}}; }
    static RatPoly x() { return RatPoly{{Rat(0), Rat(1)}}; }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    Rat coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : Rat(0);
    }
    Rat leading() const { return c.empty() ? Rat(0) : c.back(); }

    Rat eval(const Rat& x) const {
        Rat acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
        std::vector<Rat> out(std::max(a.c.size(), b.c.size()), Rat(0));
        for (size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) out[i] += b.c[i];
        return RatPoly(std::move(out));
    }
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b) {
        std::vector<Rat> out(std::max(a.c.size(), b.c.size()), Rat(0));
        for (size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) out[i] -= b.c[i];
        return RatPoly(std::move(out));
    }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> out(a.c.size() + b.c.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
        return RatPoly(std::move(out));
    }
    friend RatPoly operator*(const Rat& s, const RatPoly& a) {
        std::vector<Rat> out = a.c;
        for (auto& v : out) v *= s;
        return RatPoly(std::move(out));
    }
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c == b.c; }

    RatPoly derivative() const {
        if (c.size() <= 1) return {};
        std::vector<Rat> out(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) out[i - 1] = Rat(long(i)) * c[i];
        return RatPoly(std::move(out));
    }

    // p(s*x): coefficient k picks up s^k.
    RatPoly scale_argument(const Rat& s) const {
        std::vector<Rat> out = c;
        Rat f = 1;
        for (auto& v : out) {
            v *= f;
            f *= s;
        }
        return RatPoly(std::move(out));
    }

    // Exact division with remainder; divisor must be nonzero.
    static void divmod(const RatPoly& num, const RatPoly& den, RatPoly& quot, RatPoly& rem) {
        quot = {};
        rem = num;
        if (den.is_zero()) throw std::invalid_argument("RatPoly::divmod: zero divisor");
        std::vector<Rat> q(std::max<int>(num.degree() - den.degree() + 1, 0), Rat(0));
        while (!rem.is_zero() && rem.degree() >= den.degree()) {
            int shift = rem.degree() - den.degree();
            Rat f = rem.leading() / den.leading();
            q[shift] += f;
            std::vector<Rat> sub(shift, Rat(0));
            sub.insert(sub.end(), den.c.begin(), den.c.end());
            for (auto& v : sub) v *= f;
            rem = rem - RatPoly(std::move(sub));
        }
        quot = RatPoly(std::move(q));
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            Rat v = coeff(k);
            if (v == 0) continue;
            if (!out.empty()) out += (v > 0) ? " + " : " - ";
            else if (v < 0) out += "-";
            Rat a = rat_abs(v);
            bool need_coeff = (k == 0) || a != 1;
            if (need_coeff) out += rat_to_string(a);
            if (k > 0) {
                if (need_coeff) out += "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }
};

}  // namespace su3ml
