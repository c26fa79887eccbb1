/*
  errors.hpp — the library's failure vocabulary.

  Every operation that can refuse its input throws one of these; each carries
  a short human-readable reason.  Callers that want a status instead of an
  exception catch Error at the boundary (the CLI does exactly that).
*/
#pragma once

#include <stdexcept>
#include <string>

namespace su3ml {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// ℓ or n fails the divisibility-by-3 test: the weight triple cannot occur.
struct NonIntegral : Error {
    explicit NonIntegral(const std::string& w) : Error("NonIntegral: " + w) {}
};

// Multiplicity zero (or otherwise outside the physical domain).
struct NotPhysical : Error {
    explicit NotPhysical(const std::string& w) : Error("NotPhysical: " + w) {}
};

// An enumeration or oracle exceeded its configured cap.
struct BoundExceeded : Error {
    explicit BoundExceeded(const std::string& w) : Error("BoundExceeded: " + w) {}
};

struct ToleranceNotMet : Error {
    explicit ToleranceNotMet(const std::string& w) : Error("ToleranceNotMet: " + w) {}
};

struct OutOfRange : Error {
    explicit OutOfRange(const std::string& w) : Error("OutOfRange: " + w) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& w) : Error("DimensionMismatch: " + w) {}
};

// A linear fit has no uniquely determined coordinate.
struct Underdetermined : Error {
    explicit Underdetermined(const std::string& w) : Error("Underdetermined: " + w) {}
};

// A requested finite block of an infinite representation is empty.
struct EmptyWindow : Error {
    explicit EmptyWindow(const std::string& w) : Error("EmptyWindow: " + w) {}
};

// Evaluation at a pole (coincident or excluded Bethe roots).
struct PoleHit : Error {
    explicit PoleHit(const std::string& w) : Error("PoleHit: " + w) {}
};

struct NonSimpleRoots : Error {
    explicit NonSimpleRoots(const std::string& w) : Error("NonSimpleRoots: " + w) {}
};

struct NotARoot : Error {
    explicit NotARoot(const std::string& w) : Error("NotARoot: " + w) {}
};

// A numeric eigenvalue could not be matched to the direct spectrum.
struct Unmatched : Error {
    explicit Unmatched(const std::string& w) : Error("Unmatched: " + w) {}
};

}  // namespace su3ml
