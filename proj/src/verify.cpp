#include "sheafcalc/verify.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace sheafcalc {

std::size_t VerificationReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const VerifyCheck& c) { return !c.pass; }));
}

void VerificationReport::serialize(std::ostream& out) const {
    out << "# sheafcalc-verify suite=" << suite;
    for (const auto& [key, value] : params) out << ' ' << key << '=' << value;
    out << '\n';
    for (const auto& c : checks)
        out << (c.pass ? "PASS " : "FAIL ") << suite << '.' << c.id << " expected=" << c.expected
            << " actual=" << c.actual << " inputs=" << c.inputs << '\n';
    for (const auto& n : notes) out << "# note " << suite << ' ' << n << '\n';
    out << "# suite=" << suite << " checks=" << checks.size() << " failures=" << failures()
        << '\n';
}

namespace {

class SuiteTimer {
public:
    explicit SuiteTimer(VerificationReport& rep)
        : rep_(rep), start_(std::chrono::steady_clock::now()) {}
    ~SuiteTimer() {
        rep_.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start_);
    }

private:
    VerificationReport& rep_;
    std::chrono::steady_clock::time_point start_;
};

void check(VerificationReport& rep, std::string id, std::string inputs, std::string expected,
           std::string actual) {
    bool pass = expected == actual;
    rep.checks.push_back({std::move(id), std::move(inputs), std::move(expected), std::move(actual), pass});
}

void check_rat(VerificationReport& rep, std::string id, std::string inputs, const Rat& expected,
               const Rat& actual) {
    check(rep, std::move(id), std::move(inputs), rat_str(expected), rat_str(actual));
}

void check_true(VerificationReport& rep, std::string id, std::string inputs, bool actual) {
    check(rep, std::move(id), std::move(inputs), "true", actual ? "true" : "false");
}

std::string kv(const std::string& k, const std::string& v) { return k + "=" + v; }

}  // namespace

VerificationReport suite_c1_one(long r_max, long a_min) {
    VerificationReport rep;
    rep.suite = "c1one";
    rep.params = {{"r_max", std::to_string(r_max)}, {"a_min", std::to_string(a_min)}};
    SuiteTimer timer(rep);
    if (r_max < 2) throw std::invalid_argument("c1 = 1 suite needs r_max >= 2");
    long strata = 0;
    for (long r = 2; r <= r_max; ++r)
        for (long a = a_min; a <= 0; ++a)
            for (long s = 0; s < r; ++s) {
                long m = -s - a - 1;  // r - s - chi with chi = r + a + 1
                if (m < 0) continue;
                ++strata;
                C1OneParams p{r, a, s};
                std::string inputs = "r=" + std::to_string(r) + ",a=" + std::to_string(a) +
                                     ",s=" + std::to_string(s);
                check_rat(rep, "dim-identity-" + inputs, inputs, c1_one_expected_dim(p),
                          c1_one_actual_dim(p));
            }
    rep.notes.push_back("admissible strata with m >= 0: " + std::to_string(strata));
    return rep;
}

VerificationReport suite_vk_family(long k_max, unsigned depth) {
    VerificationReport rep;
    rep.suite = "vk";
    rep.params = {{"depth", std::to_string(depth)}, {"k_max", std::to_string(k_max)}};
    SuiteTimer timer(rep);
    if (k_max < 0) throw std::invalid_argument("vk suite needs k_max >= 0");
    const CharP2 tangent_twist{2, 1, Rat(-1, 2)};
    for (long k = 0; k <= k_max; ++k) {
        CharP2 v{3, 2, Rat(-1 - k)};
        std::string ks = std::to_string(k);
        std::string inputs = kv("v", char_str(v));
        check(rep, "classify-k" + ks, inputs, "stable", stability_name(classify(v, depth).kind));
        auto inv = invariants(v);
        check_rat(rep, "mu-k" + ks, inputs, Rat(2, 3), inv.mu);
        check_rat(rep, "delta-k" + ks, inputs, Rat(5, 9) + Rat(k) / 3, inv.delta);
        check_rat(rep, "dim-moduli-k" + ks, inputs, Rat(6 * k + 2), moduli_dim(v));
        check_rat(rep, "expdim-B3-k" + ks, inputs + ",sections=3", Rat(3 * k + 8),
                  expected_dim({v, 3}));
        CharP2 sub = extremal_character(v, ExtremalVariant::strict_slope, depth);
        check(rep, "extremal-ch-k" + ks, inputs, char_str(tangent_twist), char_str(sub));
        CharP2 sub_weak = extremal_character(v, ExtremalVariant::weak_slope, depth);
        check(rep, "extremal-weak-k" + ks, inputs, char_str(tangent_twist), char_str(sub_weak));
        auto triple = extremal_triple(v, ExtremalVariant::strict_slope, depth);
        check(rep, "eps-prime-k" + ks, inputs, "1", std::to_string(triple.eps_prime));
        check(rep, "eps-k" + ks, inputs, "1", std::to_string(triple.eps));
        auto growth = z2_growth(v, ExtremalVariant::strict_slope, depth);
        check(rep, "z2-k-coeff-k" + ks, inputs, "4", std::to_string(growth.k_coefficient));
    }
    // Z1 grows like 3k, Z2 like 4k: the loci separate for large k.
    CharP2 v0{3, 2, Rat(-1)};
    CharP2 v1 = elementary_modification(v0, 1);
    Rat z1_slope = z1_dim(v1, depth) - z1_dim(v0, depth);
    check_rat(rep, "z1-k-coeff", kv("v", char_str(v0)), Rat(3), z1_slope);
    check_true(rep, "z2-exceeds-z1", "z2_k_coeff=4,z1_k_coeff=3",
               z2_growth(v0, ExtremalVariant::strict_slope, depth).k_coefficient > 3);
    return rep;
}

VerificationReport suite_regions(long grid_denominator, unsigned depth) {
    VerificationReport rep;
    rep.suite = "regions";
    rep.params = {{"depth", std::to_string(depth)},
                  {"grid", "1/" + std::to_string(grid_denominator)}};
    SuiteTimer timer(rep);
    if (depth < 6) throw std::invalid_argument("regions suite needs depth >= 6");
    if (grid_denominator < 2) throw std::invalid_argument("regions suite needs a finer grid");

    const RationalSandwich golden = golden_branch_end();      // (3 - sqrt(5))/2
    const RationalSandwich tangent = tangent_branch_start();  // sqrt(2) - 1
    const ExceptionalSlope structure_sheaf = eps(0, 0);
    const ExceptionalSlope tangent_twist = eps(1, 1);

    // (a) On (0, (3 - sqrt(5))/2) the curve is the branch through O.
    for (long j = 1; Rat(j) / grid_denominator < golden.lo; ++j) {
        Rat mu = Rat(j) / grid_denominator;
        std::string inputs = kv("mu", rat_str(mu));
        check_rat(rep, "o-branch-" + rat_str(mu), inputs, mu * mu / 2 - Rat(3, 2) * mu + 1,
                  delta(mu, depth).delta_lower);
    }

    // (b) Peak of the curve above E_{2/5}.
    {
        CurveEvaluation peak = delta(Rat(2, 5), depth);
        check_rat(rep, "peak-above-2/5", "mu=2/5", Rat(13, 25), peak.delta_lower);
        check(rep, "peak-witness", "mu=2/5", "2/5", rat_str(peak.witness.alpha));
    }

    // (c) Parabola gap at the end of the O-branch exceeds 1258/10000.
    check_true(rep, "xi-gap-at-branch-end", kv("mu", rat_str(golden.lo)),
               xi(golden.lo) - Rat(13, 25) > frac(1258, 10000));

    // (d) On (sqrt(2) - 1, 1/2) the curve is the left branch of E_{1/2} and
    //     the parabola sits exactly mu/2 above it.
    for (long j = 1; Rat(j) / grid_denominator < Rat(1, 2); ++j) {
        Rat mu = Rat(j) / grid_denominator;
        if (mu <= tangent.hi) continue;
        std::string inputs = kv("mu", rat_str(mu));
        Rat branch = on_branch_formula(mu, tangent_twist);
        check_rat(rep, "t-branch-" + rat_str(mu), inputs, branch, delta(mu, depth).delta_lower);
        check_rat(rep, "xi-halfslope-" + rat_str(mu), inputs, mu / 2, xi(mu) - branch);
    }

    // Symmetry about mu = 1/2 on the grid.
    for (long j = 1; Rat(j) / grid_denominator < Rat(1, 2); ++j) {
        Rat mu = Rat(j) / grid_denominator;
        check_rat(rep, "symmetry-" + rat_str(mu), kv("mu", rat_str(mu)),
                  delta(1 - mu, depth).delta_lower, delta(mu, depth).delta_lower);
    }

    // Branch orthogonality spot checks through the Euler pairing.
    check_true(rep, "orthogonal-O-1/5", "mu=1/5,r=5",
               branch_orthogonality_check(Rat(1, 5), 5, structure_sheaf));
    check_true(rep, "orthogonal-O-1/3", "mu=1/3,r=3",
               branch_orthogonality_check(Rat(1, 3), 3, structure_sheaf));
    {
        ExceptionalSlope e25 = eps(1, 2);
        Rat mu(3, 5);
        CharP2 v = char_from_slope_disc(5, mu, on_branch_formula(mu, e25));
        check_true(rep, "orthogonal-2/5-right", "mu=3/5,r=5",
                   euler_pairing(v, e25.character()) == 0);
        check_true(rep, "orthogonal-2/5-oneside", "mu=3/5,r=5",
                   euler_pairing(e25.character(), v) != 0);
    }

    // Slopes c1/r with r < 9 between 1/3 and 1/2: their minimal stable
    // discriminant should sit below the parabola. Recorded for review, not
    // as a failure, because "minimal" may or may not admit exceptional
    // units; we take the reading that includes them.
    for (long r = 2; r < 9; ++r)
        for (long c1 = 1; Rat(c1) / r < Rat(1, 2); ++c1) {
            Rat mu = Rat(c1) / r;
            if (!(mu > Rat(1, 3))) continue;
            Rat min_disc = min_discriminant(r, mu, depth, /*include_exceptional=*/true);
            bool below = min_disc < xi(mu);
            rep.notes.push_back("flag r=" + std::to_string(r) + " mu=" + rat_str(mu) +
                                " min_disc=" + rat_str(min_disc) + " xi=" + rat_str(xi(mu)) +
                                (below ? " ok" : " VIOLATED: review"));
        }
    return rep;
}

VerificationReport suite_rank2_example() {
    VerificationReport rep;
    rep.suite = "rank2";
    SuiteTimer timer(rep);

    const CharP2 v{2, 3, Rat(-11, 2)};
    const CharP2 ideal_twist{1, 3, Rat(-11, 2)};
    const CharP2 structure{1, 0, Rat(0)};
    std::string inputs = kv("v", char_str(v));

    check_rat(rep, "chi", inputs, Rat(1), euler_char(v));
    check_rat(rep, "dim-moduli", inputs, Rat(28), moduli_dim(v));
    check_rat(rep, "expdim-B3", inputs + ",sections=3", Rat(22), expected_dim({v, 3}));

    Rat ext1 = -euler_pairing(ideal_twist, structure);
    check_rat(rep, "ext1-IZ3-O", kv("v", char_str(ideal_twist)), Rat(9), ext1);
    Rat hilb_b2 = expected_dim({ideal_twist, 2});
    check_rat(rep, "expdim-B2-twisted-hilbert", kv("v", char_str(ideal_twist)), Rat(16), hilb_b2);

    Rat locus_dim = hilb_b2 + (ext1 - 1) - 1;
    check_rat(rep, "z-locus-dim", inputs, Rat(23), locus_dim);
    check_true(rep, "z-locus-exceeds-expected", "23>22", locus_dim > expected_dim({v, 3}));

    check_true(rep, "length-exceeds-d-squared", "n=10,d=3", 10 > 3 * 3);
    check(rep, "twist-components", "d=3,n=10", "2", std::to_string(twist_components_lower_bound(3, 10)));
    return rep;
}

VerificationReport suite_noninteger(long r_max) {
    VerificationReport rep;
    rep.suite = "noninteger";
    rep.params = {{"r_max", std::to_string(r_max)}};
    SuiteTimer timer(rep);
    if (r_max < 2) throw std::invalid_argument("noninteger suite needs r_max >= 2");
    long skipped = 0;
    for (long r = 2; r <= r_max; ++r)
        for (long c1 = 1; c1 < 3 * r; ++c1) {
            if (std::gcd(r, c1) <= 1 || c1 % r == 0) {
                ++skipped;
                continue;
            }
            auto witness = noninteger_witness(r, c1);
            std::string inputs = "r=" + std::to_string(r) + ",c1=" + std::to_string(c1);
            check_true(rep, "witness-" + inputs, inputs, witness.has_value());
        }
    rep.notes.push_back("pairs skipped (coprime or integer slope): " + std::to_string(skipped));
    return rep;
}

}  // namespace sheafcalc
