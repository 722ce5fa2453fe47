#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace sheafcalc {

// All arithmetic in this project is exact. Rat is always kept in canonical
// form (lowest terms, positive denominator); decimal output exists only as
// an explicitly requested display approximation.
using Rat = mpq_class;
using Int = mpz_class;

// Parses "p/q" or a bare integer. Decimal literals are rejected.
// Throws std::invalid_argument on malformed input or zero denominator.
Rat parse_rat(const std::string& text);

// Canonical text: "p/q", or just "p" when the denominator is 1.
std::string rat_str(const Rat& x);

// Always "p/q", e.g. "0/1". Used by the table file format.
std::string rat_str_explicit(const Rat& x);

Int rat_floor(const Rat& x);

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

// Canonicalized fraction. The two-argument Rat constructor does not reduce,
// and GMP comparisons assume canonical form; use this for computed
// numerator/denominator pairs.
inline Rat frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Truncated decimal expansion with the given number of fractional digits.
std::string decimal_approx(const Rat& x, unsigned digits = 6);

// Narrowing conversion with a hard failure instead of silent wraparound.
long to_long_checked(const Int& z, const char* what);

}  // namespace sheafcalc
