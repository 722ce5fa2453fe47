#pragma once

#include "sheafcalc/dlp.hpp"

namespace sheafcalc {

// A Brill-Noether question: how large is the locus of sheaves of character
// v with at least `sections` global sections.
struct BNQuery {
    CharP2 v;
    unsigned long sections = 0;
};

// Stratum data for rank-r characters with c1 = 1: the general member sits
// in an extension 0 -> O^{r-s} -> E -> E' -> 0 with quotient rank s and
// ch2 = a - 1/2.
struct C1OneParams {
    long r;  // >= 2
    long a;  // <= 0
    long s;  // 0 <= s < r
};

struct GHCohomology {
    Rat h0;
    Rat h1;
    Rat h2;
};

// Determinantal codimension bound k(k - chi(v)).
Rat expected_codim(const BNQuery& q);

// moduli_dim(v) minus the expected codimension. Exact rational on purpose:
// negative or fractional values flag empty strata to the caller.
Rat expected_dim(const BNQuery& q);

// Sharp bound max{p(c1), r} on global sections of a semistable sheaf.
long h0_upper_bound(const CharP2& v);

// The parabola chi(v) = ch0(v) in the (mu, Delta)-plane.
Rat xi(const Rat& mu);

// Closed form 1 + c1^2 + k*r for the expected dimension of B^r(v) in the
// high-rank regime ch0 >= p(ch1), ch1 > 0, with k the discriminant offset;
// checked internally against expected_dim.
Rat expdim_Br_high_rank(const CharP2& v, unsigned depth);

// Degree bound (c1^2 + 3c1)/2 - r on the line-bundle quotient supported on
// a degree-c1 curve.
long quot_degree_bound(long r, long c1);

// Dimension c1^2 + 1 of the relative Picard scheme over smooth plane
// curves of degree c1.
long pic_dim(long c1);

// Actual dimension -r^2 + (s - a + 2) r - s^2 - (a + 1) s + 2 of the c1 = 1
// stratum, and the determinantal expected dimension it must equal.
Rat c1_one_actual_dim(const C1OneParams& p);
Rat c1_one_expected_dim(const C1OneParams& p);

// At least d - 1 components when n > d^2, otherwise the trivial bound 1.
long twist_components_lower_bound(long d, long n);

// Cohomology of the general sheaf in rank >= 2: at most one nonzero group.
GHCohomology gh_generic_cohomology(const CharP2& v);

}  // namespace sheafcalc
