/*
  matrix.hpp — small dense matrices over exact rationals.

  Sized for the problem at hand: representation blocks are at most a dozen
  rows, so everything is straightforward O(n^3) with no cleverness.  The
  characteristic polynomial uses the Faddeev–LeVerrier recurrence (divisions
  are by integers, so the arithmetic stays exact).
*/
#pragma once

#include "su3ml/errors.hpp"
#include "su3ml/poly.hpp"
#include "su3ml/rational.hpp"

#include <vector>

namespace su3ml {

struct RatMatrix {
    int n = 0;  // square
    std::vector<Rat> a;

    RatMatrix() = default;
    explicit RatMatrix(int dim) : n(dim), a(size_t(dim) * dim, Rat(0)) {}

    Rat& at(int i, int j) { return a[size_t(i) * n + j]; }
    const Rat& at(int i, int j) const { return a[size_t(i) * n + j]; }

    static RatMatrix identity(int dim) {
        RatMatrix m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
        return m;
    }

    friend RatMatrix operator+(const RatMatrix& x, const RatMatrix& y) {
        check_same(x, y);
        RatMatrix r = x;
        for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
        return r;
    }
    friend RatMatrix operator-(const RatMatrix& x, const RatMatrix& y) {
        check_same(x, y);
        RatMatrix r = x;
        for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
        return r;
    }
    friend RatMatrix operator*(const Rat& s, const RatMatrix& x) {
        RatMatrix r = x;
        for (auto& v : r.a) v *= s;
        return r;
    }
    friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
        check_same(x, y);
        RatMatrix r(x.n);
        for (int i = 0; i < x.n; ++i)
            for (int k = 0; k < x.n; ++k) {
                const Rat& v = x.at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < x.n; ++j) r.at(i, j) += v * y.at(k, j);
            }
        return r;
    }
    friend bool operator==(const RatMatrix& x, const RatMatrix& y) {
        return x.n == y.n && x.a == y.a;
    }

    RatMatrix transpose() const {
        RatMatrix r(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool is_zero() const {
        for (const auto& v : a)
            if (v != 0) return false;
        return true;
    }

    Rat max_abs() const {
        Rat m = 0;
        for (const auto& v : a) {
            Rat w = rat_abs(v);
            if (w > m) m = w;
        }
        return m;
    }

    Rat trace() const {
        Rat t = 0;
        for (int i = 0; i < n; ++i) t += at(i, i);
        return t;
    }

    static void check_same(const RatMatrix& x, const RatMatrix& y) {
        if (x.n != y.n)
            throw DimensionMismatch("matrix dimensions " + std::to_string(x.n) + " vs " +
                                    std::to_string(y.n));
    }
};

inline RatMatrix commutator(const RatMatrix& x, const RatMatrix& y) {
    return x * y - y * x;
}
inline RatMatrix anticommutator(const RatMatrix& x, const RatMatrix& y) {
    return x * y + y * x;
}

// Monic characteristic polynomial det(xI - A) by Faddeev–LeVerrier.
inline RatPoly char_poly_dense(const RatMatrix& A) {
    const int n = A.n;
    std::vector<Rat> c(size_t(n) + 1, Rat(0));
    c[n] = 1;
    RatMatrix M = RatMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        M = A * M;
        Rat ck = -M.trace() / Rat(k);
        c[size_t(n - k)] = ck;
        for (int i = 0; i < n; ++i) M.at(i, i) += ck;
    }
    return RatPoly(std::move(c));
}

}  // namespace su3ml
