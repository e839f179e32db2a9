#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mapspace {

// Exact rational scalar. Every value produced by the library is canonical:
// positive denominator, numerator and denominator coprime.
using Scalar = mpq_class;

// Parses "p", "p/q", "-p/q" (optional leading '+'). Throws std::invalid_argument
// on malformed text or a zero denominator.
Scalar parse_scalar(std::string_view text);

// Canonical "p/q" text; integers are written without the "/1".
std::string to_string(const Scalar& value);

// p/q in lowest terms; q != 0.
inline Scalar ratio(long p, long q)
{
    Scalar r(p, q);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

// Sign (+1/-1) of transposing adjacent homogeneous factors of degrees p and q.
constexpr int koszul_sign(long p, long q) { return ((p * q) % 2 == 0) ? 1 : -1; }

}  // namespace mapspace
