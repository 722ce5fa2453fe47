#pragma once

#include <optional>

#include "sheafcalc/brill_noether.hpp"

namespace sheafcalc {

// Slope constraint on candidate subcharacters: the weak variant allows
// equal slope but requires strictly smaller rank; the strict variant
// forces a strictly smaller slope and admits equal rank.
enum class ExtremalVariant { weak_slope, strict_slope };

struct ExtremalTriple {
    CharP2 v_prime;
    CharP2 v;
    CharP2 v_dprime;
    ExtremalVariant variant;
    long eps_prime;  // chi(v') - ch0(v')
    long eps;        // min{eps_prime, ch0(v'')}
};

// Lexicographically optimal stable subcharacter: maximal slope under the
// variant's slope constraint, then minimal discriminant (exceptional units
// included as candidates), then minimal rank.
CharP2 extremal_character(const CharP2& v, ExtremalVariant variant, unsigned depth);

// (v', v, v - v') with the excess parameters; fails when the quotient
// character is not semistable.
ExtremalTriple extremal_triple(const CharP2& v, ExtremalVariant variant, unsigned depth);

// Dimension c1^2 + 1 + r*k of the component swept out by extensions of a
// line-bundle-on-curve quotient by O^r, where k = -chi(v, O). Coincides
// with the determinantal expected dimension of B^r(v).
Rat z1_dim(const CharP2& v, unsigned depth);

// Leading behaviour of the second component: dimension grows like
// (r + eps) k. Only the k-coefficient is certified; example_offset is the
// computable part of the constant (the restriction-theorem fiber constant
// is not included).
struct Z2Growth {
    long k_coefficient;
    Rat example_offset;
};

Z2Growth z2_growth(const CharP2& v, ExtremalVariant variant, unsigned depth);

// Integer n with (c1-1)/r < n/(r-1) < c1/r, when gcd(r, c1) > 1 and c1/r is
// not an integer; such n always exists.
std::optional<long> noninteger_witness(long r, long c1);
bool lemma_noninteger_check(long r, long c1);

}  // namespace sheafcalc
