#include "sheafcalc/dlp.hpp"

#include <optional>

namespace sheafcalc {

const char* branch_name(Branch b) {
    switch (b) {
        case Branch::left: return "left";
        case Branch::right: return "right";
        case Branch::at_peak: return "at_peak";
    }
    return "?";
}

const char* stability_name(StabilityKind k) {
    switch (k) {
        case StabilityKind::stable: return "stable";
        case StabilityKind::exceptional_unit: return "exceptional_unit";
        case StabilityKind::semistable_exceptional_multiple:
            return "semistable_exceptional_multiple";
        case StabilityKind::not_integral: return "not_integral";
        case StabilityKind::below_curve: return "below_curve";
    }
    return "?";
}

CurveEvaluation delta(const Rat& mu, unsigned depth) {
    auto table = shared_table(depth);
    const auto& rows = table->fundamental();
    std::optional<ExceptionalSlope> best;
    Rat best_val;
    long n0 = to_long_checked(rat_floor(mu), "slope shift");
    for (std::size_t idx : table->by_rank()) {
        const ExceptionalSlope& e = rows[idx];
        // Scanning by ascending rank, so once even the peak value 1 - disc
        // cannot reach the running maximum, no later slope can either.
        if (best && 1 - e.disc < best_val) break;
        for (long n = n0 - 4; n <= n0 + 3; ++n) {
            Rat a = e.alpha + n;
            Rat dist = abs(mu - a);
            if (!(dist < 3)) continue;
            Rat val = hilbert_p(-dist) - e.disc;
            bool take = !best;
            if (best) {
                if (val > best_val) {
                    take = true;
                } else if (val == best_val) {
                    take = e.rank < best->rank || (e.rank == best->rank && a < best->alpha);
                }
            }
            if (take) {
                best = e.shifted(n);
                best_val = val;
            }
        }
    }
    // The integer slopes are within distance 3 of any mu, so a witness
    // always exists.
    Branch branch = mu > best->alpha   ? Branch::right
                    : mu < best->alpha ? Branch::left
                                       : Branch::at_peak;
    return {mu, depth, best_val, *best, branch};
}

Rat on_branch_formula(const Rat& mu, const ExceptionalSlope& e) {
    Rat dist = abs(mu - e.alpha);
    if (!(dist < 3))
        throw std::domain_error("slope " + rat_str(mu) + " is not within 3 of " + rat_str(e.alpha));
    return hilbert_p(-dist) - e.disc;
}

bool branch_orthogonality_check(const Rat& mu, long rank, const ExceptionalSlope& e) {
    CharP2 v = char_from_slope_disc(rank, mu, on_branch_formula(mu, e));
    CharP2 exc = e.character();
    if (mu < e.alpha) return euler_pairing(exc, v) == 0;
    return euler_pairing(v, exc) == 0;
}

StabilityVerdict classify(const CharP2& v, unsigned depth) {
    if (v.ch0 <= 0) throw std::domain_error("classification requires positive rank");
    Rat chi = euler_char(v);
    if (!is_integer(chi))
        return {StabilityKind::not_integral, "chi = " + rat_str(chi) + " is not an integer"};
    auto inv = invariants(v);
    if (auto e = shared_table(depth)->find_slope(inv.mu);
        e && inv.delta == e->disc && Int(v.ch0) % e->rank == 0) {
        Int m = Int(v.ch0) / e->rank;
        std::string what = "E_{" + rat_str(e->alpha) + "} of rank " + e->rank.get_str();
        if (m == 1) return {StabilityKind::exceptional_unit, "exceptional bundle " + what};
        return {StabilityKind::semistable_exceptional_multiple,
                m.get_str() + " copies of " + what};
    }
    CurveEvaluation ev = delta(inv.mu, depth);
    std::string cmp = "Delta = " + rat_str(inv.delta) + (inv.delta >= ev.delta_lower ? " >= " : " < ") +
                      "delta(" + rat_str(inv.mu) + ") = " + rat_str(ev.delta_lower) + " at depth " +
                      std::to_string(depth);
    if (inv.delta >= ev.delta_lower) return {StabilityKind::stable, cmp};
    return {StabilityKind::below_curve, cmp};
}

Rat moduli_dim(const CharP2& v) {
    if (v.ch0 <= 0) throw std::domain_error("moduli dimension requires positive rank");
    Rat d = discriminant(v);
    Int r2 = Int(v.ch0) * Int(v.ch0);
    return Rat(r2) * (2 * d - 1) + 1;
}

Rat min_discriminant(long rank, const Rat& mu, unsigned depth, bool include_exceptional) {
    if (rank < 1) throw std::domain_error("minimal discriminant requires positive rank");
    if (!is_integer(mu * rank))
        throw std::domain_error("slope " + rat_str(mu) + " is not realizable at rank " +
                                std::to_string(rank));
    if (include_exceptional) {
        if (auto e = shared_table(depth)->find_slope(mu); e && e->rank == rank) return e->disc;
    }
    Rat bound = delta(mu, depth).delta_lower;
    Rat p_mu = hilbert_p(mu);
    Int chi_top = rat_floor(rank * (p_mu - bound));
    return p_mu - Rat(chi_top) / rank;
}

unsigned long disc_offset_k(const CharP2& v, unsigned depth) {
    StabilityVerdict verdict = classify(v, depth);
    if (verdict.kind == StabilityKind::exceptional_unit) return 0;
    if (verdict.kind != StabilityKind::stable)
        throw std::domain_error(std::string("discriminant offset requires a stable or exceptional character (") +
                                stability_name(verdict.kind) + ")");
    auto inv = invariants(v);
    Rat k = (inv.delta - min_discriminant(v.ch0, inv.mu, depth, false)) * v.ch0;
    if (!is_integer(k) || k < 0) throw std::domain_error("character off the discriminant grid");
    return static_cast<unsigned long>(to_long_checked(k.get_num(), "discriminant offset"));
}

namespace {

// Convergents h_n/k_n of a continued fraction; consecutive convergents
// straddle the limit, so the last two give the enclosure once
// k_n * k_{n-1} > 10^8.
RationalSandwich sandwich_from_cf(long a1_then_repeat, long repeated) {
    Int h_prev = 1, k_prev = 0;  // virtual n = -1
    Int h = 0, k = 1;            // a0 = 0
    const Int threshold = 100000000;
    long a = a1_then_repeat;
    while (k * k_prev <= threshold) {
        Int h_next = a * h + h_prev;
        Int k_next = a * k + k_prev;
        h_prev = h;
        k_prev = k;
        h = h_next;
        k = k_next;
        a = repeated;
    }
    Rat last = Rat(h) / Rat(k), prev = Rat(h_prev) / Rat(k_prev);
    if (prev < last) return {prev, last};
    return {last, prev};
}

}  // namespace

RationalSandwich golden_branch_end() { return sandwich_from_cf(2, 1); }

RationalSandwich tangent_branch_start() { return sandwich_from_cf(2, 2); }

}  // namespace sheafcalc
