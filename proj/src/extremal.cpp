#include "sheafcalc/extremal.hpp"

#include <numeric>

namespace sheafcalc {

CharP2 extremal_character(const CharP2& v, ExtremalVariant variant, unsigned depth) {
    if (classify(v, depth).kind != StabilityKind::stable)
        throw std::domain_error("extremal search requires a stable character");
    Rat mu = slope(v);
    if (!(mu > 0)) throw std::domain_error("extremal search requires positive slope");

    // Per candidate rank there is a unique maximal admissible slope, so the
    // search space is finite: the lexicographic optimum is the best
    // (slope, -disc, -rank) among these.
    long rank_hi = variant == ExtremalVariant::weak_slope ? v.ch0 - 1 : v.ch0;
    std::optional<CharP2> best;
    Rat best_mu, best_disc;
    for (long rp = 1; rp <= rank_hi; ++rp) {
        Int c1 = rat_floor(mu * rp);
        if (variant == ExtremalVariant::strict_slope && Rat(c1) == mu * rp) c1 -= 1;
        Rat mup = Rat(c1) / rp;
        Rat dp = min_discriminant(rp, mup, depth, /*include_exceptional=*/true);
        auto kind = classify(char_from_slope_disc(rp, mup, dp), depth).kind;
        if (kind != StabilityKind::stable && kind != StabilityKind::exceptional_unit) continue;
        bool take = !best;
        if (best) {
            take = mup > best_mu || (mup == best_mu && dp < best_disc) ||
                   (mup == best_mu && dp == best_disc && rp < best->ch0);
        }
        if (take) {
            best = char_from_slope_disc(rp, mup, dp);
            best_mu = mup;
            best_disc = dp;
        }
    }
    if (!best) throw std::domain_error("no extremal character");
    return *best;
}

ExtremalTriple extremal_triple(const CharP2& v, ExtremalVariant variant, unsigned depth) {
    CharP2 vp = extremal_character(v, variant, depth);
    CharP2 vd = v - vp;
    if (vd.ch0 <= 0) throw std::domain_error("extremal decomposition does not exist");
    StabilityKind kind = classify(vd, depth).kind;
    if (kind != StabilityKind::stable && kind != StabilityKind::exceptional_unit &&
        kind != StabilityKind::semistable_exceptional_multiple)
        throw std::domain_error("extremal decomposition does not exist");
    Rat excess = euler_char(vp) - vp.ch0;
    long eps_prime = to_long_checked(excess.get_num(), "eps'");  // integral character
    long eps = std::min(eps_prime, vd.ch0);
    return {vp, v, vd, variant, eps_prime, eps};
}

Rat z1_dim(const CharP2& v, unsigned depth) {
    if (classify(v, depth).kind != StabilityKind::stable)
        throw std::domain_error("first-component dimension requires a stable character");
    if (v.ch1 <= 0) throw std::domain_error("first-component dimension requires ch1 > 0");
    Rat k = -euler_pairing(v, CharP2{1, 0, 0});
    if (!is_integer(k) || k < 0) throw std::domain_error("character off the discriminant grid");
    Int c1_sq = Int(v.ch1) * Int(v.ch1);
    Rat result = 1 + Rat(c1_sq) + k * v.ch0;
    // Extensions of O_C(D) by O^r sweep out the determinantal component, so
    // the two dimension counts must agree.
    Rat expect = expected_dim({v, static_cast<unsigned long>(v.ch0)});
    if (result != expect)
        throw std::logic_error("first-component dimension " + rat_str(result) +
                               " disagrees with expected dimension " + rat_str(expect));
    return result;
}

Z2Growth z2_growth(const CharP2& v, ExtremalVariant variant, unsigned depth) {
    ExtremalTriple t = extremal_triple(v, variant, depth);
    if (variant == ExtremalVariant::strict_slope && !(slope(t.v_prime) > Rat(1, 3)))
        throw std::domain_error("second-component growth needs extremal slope above 1/3");
    if (t.eps < 1)
        throw std::domain_error("second-component growth undefined: no section excess");
    long kcoef = v.ch0 + t.eps;
    auto sections = static_cast<unsigned long>(t.v_dprime.ch0 - t.eps);
    Rat bundle_dim = expected_dim({t.v_dprime, sections}) + moduli_dim(t.v_prime) -
                     euler_pairing(t.v_dprime, t.v_prime) - 1;
    unsigned long k = disc_offset_k(v, depth);
    Int slope_total = Int(kcoef) * Int(k);
    Rat offset = bundle_dim - Rat(slope_total);
    return {kcoef, offset};
}

std::optional<long> noninteger_witness(long r, long c1) {
    if (r < 2 || std::gcd(r, c1) <= 1 || c1 % r == 0)
        throw std::domain_error("witness lemma needs gcd(r, c1) > 1 and c1/r not an integer");
    Int lo_num = Int(c1 - 1) * Int(r - 1), hi_num = Int(c1) * Int(r - 1);
    Rat lo = Rat(lo_num) / r, hi = Rat(hi_num) / r;
    for (Int n = rat_floor(lo); Rat(n) < hi; ++n)
        if (lo < Rat(n) && Rat(n) < hi) return to_long_checked(n, "witness");
    return std::nullopt;
}

bool lemma_noninteger_check(long r, long c1) { return noninteger_witness(r, c1).has_value(); }

}  // namespace sheafcalc
