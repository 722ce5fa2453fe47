#include <doctest.h>

#include "sheafcalc/dlp.hpp"

using namespace sheafcalc;

TEST_CASE("curve values at cited points") {
    for (unsigned depth : {4u, 6u, 10u}) {
        CurveEvaluation third = delta(Rat(1, 3), depth);
        CHECK(third.delta_lower == Rat(5, 9));
        CHECK(third.witness.alpha == 0);
        CHECK(third.branch == Branch::right);
        CHECK(delta(Rat(2, 3), depth).delta_lower == Rat(5, 9));
    }
    CurveEvaluation origin = delta(Rat(0), 6);
    CHECK(origin.delta_lower == 1);
    CHECK(origin.witness.alpha == 0);
    CHECK(origin.branch == Branch::at_peak);

    CHECK(delta(Rat(2, 5), 8).delta_lower == Rat(13, 25));
    CHECK(delta(Rat(1, 2), 8).delta_lower == Rat(5, 8));
    // hand-evaluated: left branch of E_{1/2} at 5/12, and the right branch
    // of E_{5/13} at 77/200 (between the two closed-form regions)
    CHECK(delta(Rat(5, 12), 8).delta_lower == Rat(145, 288));
    CHECK(delta(Rat(77, 200), 8).delta_lower == Rat(522477, 1040000));
    CHECK(delta(Rat(77, 200), 8).witness.alpha == Rat(5, 13));
    // at depth 2 the 5/13 term is absent and the bound is strictly smaller
    CHECK(delta(Rat(77, 200), 2).delta_lower == Rat(39809, 80000));
}

TEST_CASE("curve evaluation is internally consistent") {
    for (long j = 0; j <= 24; ++j) {
        CurveEvaluation ev = delta(frac(j, 24), 8);
        Rat dist = abs(ev.mu - ev.witness.alpha);
        CHECK(ev.delta_lower == hilbert_p(-dist) - ev.witness.disc);
        if (ev.branch == Branch::right) CHECK(ev.mu > ev.witness.alpha);
        if (ev.branch == Branch::left) CHECK(ev.mu < ev.witness.alpha);
        if (ev.branch == Branch::at_peak) CHECK(ev.mu == ev.witness.alpha);
    }
}

TEST_CASE("branch formula") {
    ExceptionalSlope structure = eps(0, 0);
    CHECK(on_branch_formula(Rat(1, 5), structure) == Rat(18, 25));
    CHECK(on_branch_formula(Rat(1, 3), structure) == Rat(5, 9));
    ExceptionalSlope e25 = eps(1, 2);
    CHECK(on_branch_formula(Rat(2, 5), e25) == Rat(13, 25));
    CHECK_THROWS_AS(on_branch_formula(Rat(7, 2), structure), std::domain_error);
}

TEST_CASE("branch orthogonality against the pairing") {
    ExceptionalSlope structure = eps(0, 0);
    CHECK(branch_orthogonality_check(Rat(1, 5), 5, structure));
    CHECK(branch_orthogonality_check(Rat(1, 3), 3, structure));
    ExceptionalSlope e25 = eps(1, 2);
    // right of 2/5: chi(v, E) vanishes, chi(E, v) does not
    CharP2 v = char_from_slope_disc(5, Rat(3, 5), on_branch_formula(Rat(3, 5), e25));
    CHECK(euler_pairing(v, e25.character()) == 0);
    CHECK(euler_pairing(e25.character(), v) != 0);
    CHECK(branch_orthogonality_check(Rat(3, 5), 5, e25));
    // left side, mirrored
    CharP2 w = char_from_slope_disc(5, Rat(1, 5), on_branch_formula(Rat(1, 5), e25));
    CHECK(euler_pairing(e25.character(), w) == 0);
    CHECK(branch_orthogonality_check(Rat(1, 5), 5, e25));
}

TEST_CASE("classification trichotomy") {
    for (long k = 0; k <= 20; ++k)
        CHECK(classify({3, 2, Rat(-1 - k)}, 10).kind == StabilityKind::stable);
    CHECK(classify({2, 1, Rat(-1, 2)}, 10).kind == StabilityKind::exceptional_unit);
    CHECK(classify({2, 1, Rat(1, 2)}, 10).kind == StabilityKind::below_curve);
    CHECK(classify({2, 1, Rat(0)}, 10).kind == StabilityKind::not_integral);
    CHECK(classify({4, 2, Rat(-1)}, 10).kind ==
          StabilityKind::semistable_exceptional_multiple);  // 2 copies of T(-1) character
    CHECK(classify({1, 0, Rat(0)}, 10).kind == StabilityKind::exceptional_unit);
    CHECK(classify({1, 0, Rat(-1)}, 10).kind == StabilityKind::stable);
    CHECK_THROWS_AS(classify({0, 2, Rat(-1)}, 10), std::domain_error);
    CHECK_THROWS_AS(classify({-1, 2, Rat(-1)}, 10), std::domain_error);
}

TEST_CASE("classification is twist invariant") {
    std::vector<CharP2> samples = {{3, 2, Rat(-1)},    {2, 1, Rat(-1, 2)}, {2, 1, Rat(1, 2)},
                                   {2, 1, Rat(0)},     {4, 2, Rat(-1)},    {1, 0, Rat(-2)},
                                   {5, 3, Rat(-7, 2)}};
    for (const auto& v : samples)
        for (long n : {-2L, -1L, 1L, 3L})
            CHECK(classify(twist(v, n), 8).kind == classify(v, 8).kind);
}

TEST_CASE("moduli dimensions") {
    for (long n = 1; n <= 6; ++n) CHECK(moduli_dim({1, 0, Rat(-n)}) == 2 * n);
    for (long k = 0; k <= 6; ++k) CHECK(moduli_dim({3, 2, Rat(-1 - k)}) == 6 * k + 2);
    CHECK(moduli_dim({2, 3, Rat(-11, 2)}) == 28);
    CHECK(moduli_dim({2, 1, Rat(-1, 2)}) == 0);
    CHECK_THROWS_AS(moduli_dim({0, 1, Rat(0)}), std::domain_error);
}

TEST_CASE("stable characters have non-negative moduli dimension") {
    for (long r = 1; r <= 6; ++r)
        for (long c1 = 0; c1 <= r; ++c1) {
            Rat mu = frac(c1, r);
            if (!is_integer(mu * r)) continue;
            Rat d0 = min_discriminant(r, mu, 8);
            for (long k = 0; k <= 2; ++k) {
                CharP2 v = char_from_slope_disc(r, mu, d0 + frac(k, r));
                if (classify(v, 8).kind != StabilityKind::stable) continue;
                CHECK(moduli_dim(v) >= 0);
            }
        }
}

TEST_CASE("minimal discriminants") {
    CHECK(min_discriminant(3, Rat(2, 3), 10) == Rat(5, 9));
    CHECK(min_discriminant(2, Rat(1, 2), 10, true) == Rat(3, 8));
    CHECK(min_discriminant(2, Rat(1, 2), 10, false) == Rat(7, 8));
    CHECK(min_discriminant(1, Rat(0), 10) == 1);
    CHECK_THROWS_AS(min_discriminant(3, Rat(1, 2), 10), std::domain_error);
    // grid results are integral and on/above the curve
    for (long r = 1; r <= 7; ++r)
        for (long c1 = 0; c1 <= 2 * r; ++c1) {
            Rat mu = frac(c1, r);
            Rat d = min_discriminant(r, mu, 8);
            CHECK(is_integer(Rat(r) * (hilbert_p(mu) - d)));
            CHECK(d >= delta(mu, 8).delta_lower);
            CHECK(d - Rat(1, r) < delta(mu, 8).delta_lower);  // minimality on the grid
        }
}

TEST_CASE("discriminant offset") {
    for (long k = 0; k <= 8; ++k) CHECK(disc_offset_k({3, 2, Rat(-1 - k)}, 10) == k);
    for (long n = 1; n <= 6; ++n) CHECK(disc_offset_k({1, 0, Rat(-n)}, 10) == n - 1);
    CHECK(disc_offset_k({2, 1, Rat(-1, 2)}, 10) == 0);  // exceptional unit
    CharP2 at_min = char_from_slope_disc(5, Rat(3, 5), min_discriminant(5, Rat(3, 5), 10));
    CHECK(disc_offset_k(at_min, 10) == 0);
    CHECK_THROWS_AS(disc_offset_k({2, 1, Rat(1, 2)}, 10), std::domain_error);
}

TEST_CASE("depth monotonicity of the truncated curve") {
    for (long j = 0; j <= 30; ++j) {
        Rat mu = frac(j, 30);
        Rat prev(-1);
        for (unsigned depth : {0u, 2u, 4u, 6u, 8u, 10u}) {
            Rat val = delta(mu, depth).delta_lower;
            CHECK(val >= prev);
            prev = val;
        }
    }
}

TEST_CASE("curve symmetry and periodicity") {
    for (long j = 0; j <= 20; ++j) {
        Rat mu = frac(j, 20);
        CHECK(delta(mu, 8).delta_lower == delta(1 - mu, 8).delta_lower);
        CHECK(delta(mu, 8).delta_lower == delta(mu + 1, 8).delta_lower);
    }
}

TEST_CASE("the O-branch is exact on the exceptional-free interval") {
    RationalSandwich golden = golden_branch_end();
    for (long q = 1; q <= 12; ++q)
        for (long p = 1; frac(p, q) < golden.lo; ++p) {
            Rat mu = frac(p, q);
            Rat branch = mu * mu / 2 - Rat(3, 2) * mu + 1;
            CHECK(delta(mu, 8).delta_lower == branch);
            CHECK(delta(mu, 12).delta_lower == branch);
        }
}

TEST_CASE("rational sandwiches enclose the branch endpoints") {
    RationalSandwich golden = golden_branch_end();
    CHECK(golden.hi - golden.lo < Rat(1, 100000000));
    // (3 - sqrt(5))/2 is a root of x^2 - 3x + 1
    CHECK(golden.lo * golden.lo - 3 * golden.lo + 1 > 0);
    CHECK(golden.hi * golden.hi - 3 * golden.hi + 1 < 0);

    RationalSandwich tangent = tangent_branch_start();
    CHECK(tangent.hi - tangent.lo < Rat(1, 100000000));
    // sqrt(2) - 1 is a root of x^2 + 2x - 1
    CHECK(tangent.lo * tangent.lo + 2 * tangent.lo - 1 < 0);
    CHECK(tangent.hi * tangent.hi + 2 * tangent.hi - 1 > 0);
}
