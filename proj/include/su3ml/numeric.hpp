/*
  numeric.hpp — the numeric kernel: polynomial roots and small linear solves
  in complex extended precision.

  Polynomials here are degree ≤ 10 or so, which keeps Durand–Kerner
  (simultaneous Weierstrass iteration) entirely adequate; it handles complex
  and clustered roots without special casing.  The linear solver is plain
  Gaussian elimination with partial pivoting for the Newton steps.
*/
#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace su3ml {

using Cplx = std::complex<long double>;

// Roots of sum_k c[k] x^k (coefficients low degree first, leading != 0).
inline std::vector<Cplx> poly_roots(std::vector<Cplx> c) {
    while (!c.empty() && std::abs(c.back()) == 0.0L) c.pop_back();
    if (c.size() <= 1) return {};
    const size_t deg = c.size() - 1;
    for (auto& v : c) v /= c.back();

    // Standard starting circle: radius from the coefficient bound, points
    // rotated off the axes so symmetric root sets do not trap the iteration.
    long double radius = 0;
    for (size_t k = 0; k + 1 < c.size(); ++k)
        radius = std::max(radius, std::abs(c[k]));
    radius = 1 + radius;
    std::vector<Cplx> z(deg);
    const long double pi = 3.141592653589793238462643383279502884L;
    for (size_t i = 0; i < deg; ++i) {
        long double th = (2 * pi * i) / deg + 0.4L;
        z[i] = radius * Cplx(std::cos(th), std::sin(th)) + Cplx(0.3L, 0.2L);
    }

    auto eval = [&](Cplx x) {
        Cplx acc = 0;
        for (size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
        return acc;
    };
    for (int iter = 0; iter < 600; ++iter) {
        long double moved = 0;
        for (size_t i = 0; i < deg; ++i) {
            Cplx denom = 1;
            for (size_t j = 0; j < deg; ++j)
                if (j != i) denom *= (z[i] - z[j]);
            if (std::abs(denom) == 0.0L) {
                z[i] += Cplx(1e-6L, 1e-6L);
                continue;
            }
            Cplx step = eval(z[i]) / denom;
            z[i] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-22L) break;
    }
    return z;
}

// Solves A x = b in place; A is dim x dim row-major.  Returns false when the
// pivot collapses (singular system).
inline bool solve_linear(std::vector<Cplx> A, std::vector<Cplx> b, std::vector<Cplx>& x) {
    const size_t n = b.size();
    if (A.size() != n * n) throw std::invalid_argument("solve_linear: shape mismatch");
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < n; ++r)
            if (std::abs(A[r * n + col]) > std::abs(A[piv * n + col])) piv = r;
        if (std::abs(A[piv * n + col]) < 1e-30L) return false;
        if (piv != col) {
            for (size_t j = 0; j < n; ++j) std::swap(A[piv * n + j], A[col * n + j]);
            std::swap(b[piv], b[col]);
        }
        for (size_t r = col + 1; r < n; ++r) {
            Cplx f = A[r * n + col] / A[col * n + col];
            if (std::abs(f) == 0.0L) continue;
            for (size_t j = col; j < n; ++j) A[r * n + j] -= f * A[col * n + j];
            b[r] -= f * b[col];
        }
    }
    x.assign(n, Cplx(0));
    for (size_t i = n; i-- > 0;) {
        Cplx acc = b[i];
        for (size_t j = i + 1; j < n; ++j) acc -= A[i * n + j] * x[j];
        x[i] = acc / A[i * n + i];
    }
    return true;
}

// Least-squares fallback for singular Newton steps: solves (A*A^H + eps) via
// normal equations.  Good enough to keep iterating toward degenerate zeros.
inline bool solve_least_squares(const std::vector<Cplx>& A, const std::vector<Cplx>& b,
                                std::vector<Cplx>& x) {
    const size_t n = b.size();
    std::vector<Cplx> AtA(n * n, Cplx(0)), Atb(n, Cplx(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Cplx acc = 0;
            for (size_t k = 0; k < n; ++k) acc += std::conj(A[k * n + i]) * A[k * n + j];
            AtA[i * n + j] = acc;
        }
    long double scale = 0;
    for (size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(AtA[i * n + i]));
    for (size_t i = 0; i < n; ++i) AtA[i * n + i] += scale * 1e-20L + 1e-30L;
    for (size_t i = 0; i < n; ++i) {
        Cplx acc = 0;
        for (size_t k = 0; k < n; ++k) acc += std::conj(A[k * n + i]) * b[k];
        Atb[i] = acc;
    }
    return solve_linear(std::move(AtA), std::move(Atb), x);
}

}  // namespace su3ml
