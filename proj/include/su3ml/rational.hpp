/*
  rational.hpp — exact rational arithmetic used throughout the library.

  GMP's mpq_class is the backend.  This header is the only place that names
  the backend directly: call sites use the Rat/Int aliases and the helpers
  below, so the implementation could be swapped without touching them.
*/
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace su3ml {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "num", "-num" or "num/den"; the canonical CLI wire format.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_from_string: empty string");
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("rat_from_string: cannot parse '" + s + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("rat_from_string: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

// "num/den" when den != 1, plain "num" otherwise.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline Rat rat_pow(const Rat& base, unsigned e) {
    Rat acc = 1, b = base;
    unsigned k = e;
    while (k) {
        if (k & 1u) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

inline double rat_to_double(const Rat& r) { return r.get_d(); }

}  // namespace su3ml
