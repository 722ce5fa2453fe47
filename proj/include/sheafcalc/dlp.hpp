#pragma once

#include <string>

#include "sheafcalc/exceptional.hpp"

namespace sheafcalc {

inline constexpr unsigned kDefaultDepth = 10;

// Side of the controlling exceptional slope: "right" is the branch of
// characters v with chi(v, E_alpha) = 0, "left" the branch with
// chi(E_alpha, v) = 0.
enum class Branch { left, right, at_peak };
const char* branch_name(Branch b);

// Value of the curve at mu, truncated to exceptional slopes of dyadic depth
// <= depth. Truncation makes this a certified lower bound of the true
// sup; it is exact wherever the controlling branch is already present, and
// non-decreasing in depth everywhere.
struct CurveEvaluation {
    Rat mu;
    unsigned depth;
    Rat delta_lower;
    ExceptionalSlope witness;
    Branch branch;
};

enum class StabilityKind {
    stable,
    exceptional_unit,
    semistable_exceptional_multiple,
    not_integral,
    below_curve,
};
const char* stability_name(StabilityKind k);

struct StabilityVerdict {
    StabilityKind kind;
    std::string details;
};

// max over exceptional alpha with |mu - alpha| < 3 of p(-|mu - alpha|) -
// Delta_alpha, over the depth-truncated slope table. Ties go to the witness
// of smaller rank, then smaller slope.
CurveEvaluation delta(const Rat& mu, unsigned depth);

// The branch contribution p(-|mu - alpha|) - Delta_alpha of one exceptional
// slope; requires |mu - alpha| < 3.
Rat on_branch_formula(const Rat& mu, const ExceptionalSlope& e);

// Builds the rank-r character sitting exactly on the branch of e at slope mu
// and checks the defining orthogonality through the Euler pairing.
bool branch_orthogonality_check(const Rat& mu, long rank, const ExceptionalSlope& e);

// Trichotomy for positive-rank characters. "below_curve" rather than
// "unstable" because the curve is evaluated at finite depth.
StabilityVerdict classify(const CharP2& v, unsigned depth);

// r^2 (2 Delta - 1) + 1.
Rat moduli_dim(const CharP2& v);

// Smallest discriminant on the chi-integrality grid at (rank, mu) lying on
// or above the truncated curve; with include_exceptional, an exact
// exceptional unit short-circuits to its own discriminant.
Rat min_discriminant(long rank, const Rat& mu, unsigned depth, bool include_exceptional = false);

// k with Delta(v) = min_discriminant + k/rank; 0 for exceptional units.
unsigned long disc_offset_k(const CharP2& v, unsigned depth);

// Rational enclosure lo < x < hi with hi - lo < 10^-8, from continued
// fraction convergents. Keeps irrational branch endpoints out of the exact
// kernel.
struct RationalSandwich {
    Rat lo;
    Rat hi;
};

RationalSandwich golden_branch_end();    // (3 - sqrt(5))/2, right end of the O-branch
RationalSandwich tangent_branch_start(); // sqrt(2) - 1, left end of the T(-1) left branch

}  // namespace sheafcalc
