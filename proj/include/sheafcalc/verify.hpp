#pragma once

#include <chrono>
#include <iosfwd>
#include <utility>
#include <vector>

#include "sheafcalc/extremal.hpp"

namespace sheafcalc {

struct VerifyCheck {
    std::string id;
    std::string inputs;
    std::string expected;
    std::string actual;
    bool pass;
};

// Pass/fail ledger of the exact identities replayed by one suite. Checks
// compare rendered exact values for equality, so the serialized report is
// reproducible byte for byte; elapsed time is kept out of it.
struct VerificationReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<VerifyCheck> checks;
    std::vector<std::string> notes;  // flagged-for-review lines, never failures
    std::chrono::milliseconds elapsed{0};

    std::size_t failures() const;
    bool all_pass() const { return failures() == 0; }
    void serialize(std::ostream& out) const;
};

// Dimension identity of the c1 = 1 strata over the full admissible grid.
VerificationReport suite_c1_one(long r_max, long a_min);

// The (3, 2, -1-k) family: stability, invariants, dimensions, extremal
// subcharacter and the 4k-vs-3k component growth.
VerificationReport suite_vk_family(long k_max, unsigned depth);

// Curve geometry: branch formulas on both exceptional-free regions, the
// peak over E_{2/5}, the section-count parabola gap, and symmetry.
VerificationReport suite_regions(long grid_denominator, unsigned depth);

// The rank-2 twisted-ideal example: 23-dimensional loci above the expected
// dimension 22.
VerificationReport suite_rank2_example();

// Brute force of the divisibility lemma for all admissible (r, c1).
VerificationReport suite_noninteger(long r_max);

}  // namespace sheafcalc
