#include "sheafcalc/brill_noether.hpp"

namespace sheafcalc {

namespace {

void validate(const C1OneParams& p) {
    if (p.r < 2 || p.a > 0 || p.s < 0 || p.s >= p.r)
        throw std::invalid_argument("c1 = 1 stratum needs r >= 2, a <= 0, 0 <= s < r");
}

}  // namespace

Rat expected_codim(const BNQuery& q) {
    Rat k(Int(q.sections));
    return k * (k - euler_char(q.v));
}

Rat expected_dim(const BNQuery& q) { return moduli_dim(q.v) - expected_codim(q); }

long h0_upper_bound(const CharP2& v) {
    if (v.ch0 < 1) throw std::domain_error("section bound requires positive rank");
    Rat p = hilbert_p(Rat(v.ch1));
    long p_long = to_long_checked(p.get_num(), "p(c1)");  // integral for integer c1
    return std::max(p_long, v.ch0);
}

Rat xi(const Rat& mu) { return mu * mu / 2 + Rat(3, 2) * mu; }

Rat expdim_Br_high_rank(const CharP2& v, unsigned depth) {
    if (v.ch1 <= 0 || Rat(v.ch0) < hilbert_p(Rat(v.ch1)))
        throw std::domain_error("high-rank regime needs ch0 >= p(ch1) and ch1 > 0");
    if (classify(v, depth).kind != StabilityKind::stable)
        throw std::domain_error("high-rank regime needs a stable character");
    unsigned long k = disc_offset_k(v, depth);
    Int c1_sq = Int(v.ch1) * Int(v.ch1);
    Int kr = Int(k) * Int(v.ch0);
    Rat result = 1 + Rat(c1_sq) + Rat(kr);
    Rat expect = expected_dim({v, static_cast<unsigned long>(v.ch0)});
    if (result != expect)
        throw std::logic_error("high-rank expected dimension " + rat_str(result) +
                               " disagrees with expected dimension " + rat_str(expect));
    return result;
}

long quot_degree_bound(long r, long c1) {
    if (c1 < 1) throw std::domain_error("quotient degree bound requires c1 >= 1");
    Int bound = Int(c1) * (c1 + 3) / 2 - r;
    return to_long_checked(bound, "quotient degree bound");
}

long pic_dim(long c1) {
    if (c1 < 1) throw std::domain_error("Picard dimension requires c1 >= 1");
    return to_long_checked(Int(c1) * c1 + 1, "Picard dimension");
}

Rat c1_one_actual_dim(const C1OneParams& p) {
    validate(p);
    Int r(p.r), a(p.a), s(p.s);
    Int value = -r * r + (s - a + 2) * r - s * s - (a + 1) * s + 2;
    return Rat(value);
}

Rat c1_one_expected_dim(const C1OneParams& p) {
    validate(p);
    CharP2 v{p.r, 1, Rat(p.a) - Rat(1, 2)};
    return expected_dim({v, static_cast<unsigned long>(p.r - p.s)});
}

long twist_components_lower_bound(long d, long n) {
    if (d < 1 || n < 1) throw std::domain_error("twist bound requires d >= 1 and n >= 1");
    return Int(n) > Int(d) * d ? d - 1 : 1;
}

GHCohomology gh_generic_cohomology(const CharP2& v) {
    if (v.ch0 < 2) throw std::domain_error("generic cohomology statement requires rank >= 2");
    Rat chi = euler_char(v);
    Rat mu = slope(v);
    if (chi < 0) return {Rat(0), -chi, Rat(0)};
    if (mu > -3) return {chi, Rat(0), Rat(0)};
    if (mu < -3) return {Rat(0), Rat(0), chi};
    throw std::domain_error("generic cohomology case split undefined at mu = -3");
}

}  // namespace sheafcalc
