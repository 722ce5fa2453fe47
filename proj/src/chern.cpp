#include "sheafcalc/chern.hpp"

namespace sheafcalc {

bool operator==(const CharP2& a, const CharP2& b) {
    return a.ch0 == b.ch0 && a.ch1 == b.ch1 && a.ch2 == b.ch2;
}

CharP2 operator+(const CharP2& a, const CharP2& b) {
    return {a.ch0 + b.ch0, a.ch1 + b.ch1, a.ch2 + b.ch2};
}

CharP2 operator-(const CharP2& a, const CharP2& b) {
    return {a.ch0 - b.ch0, a.ch1 - b.ch1, a.ch2 - b.ch2};
}

CharP2 operator*(long m, const CharP2& v) {
    return {m * v.ch0, m * v.ch1, Rat(m * v.ch2)};
}

Rat hilbert_p(const Rat& x) { return (x * x + 3 * x + 2) / 2; }

InvariantView invariants(const CharP2& v) {
    if (v.ch0 == 0) throw std::domain_error("slope undefined for torsion character");
    Rat mu = Rat(v.ch1) / v.ch0;
    Rat delta = mu * mu / 2 - v.ch2 / v.ch0;
    return {mu, delta, euler_char(v)};
}

Rat slope(const CharP2& v) { return invariants(v).mu; }

Rat discriminant(const CharP2& v) { return invariants(v).delta; }

Rat euler_char(const CharP2& v) {
    return v.ch0 + Rat(3, 2) * v.ch1 + v.ch2;
}

Rat euler_pairing(const CharP2& u, const CharP2& w) {
    Int r_u(u.ch0), r_w(w.ch0), c_u(u.ch1), c_w(w.ch1);
    return Rat(r_u * r_w) + Rat(3, 2) * Rat(r_u * c_w - c_u * r_w) - Rat(c_u * c_w) +
           u.ch0 * w.ch2 + u.ch2 * w.ch0;
}

CharP2 twist(const CharP2& v, long n) {
    Int nn(n);
    return {v.ch0, to_long_checked(Int(v.ch1) + nn * v.ch0, "twisted c1"),
            v.ch2 + Rat(nn) * v.ch1 + Rat(nn * nn) * v.ch0 / 2};
}

CharP2 dual(const CharP2& v) { return {v.ch0, -v.ch1, v.ch2}; }

CharP2 elementary_modification(const CharP2& v, unsigned long m) {
    return {v.ch0, v.ch1, v.ch2 - Rat(Int(m))};
}

bool is_integral(const CharP2& v) { return is_integer(euler_char(v)); }

long genus_plane_curve(long c1) {
    if (c1 < 1) throw std::domain_error("plane curves have positive degree");
    return to_long_checked(Int(c1 - 1) * Int(c1 - 2) / 2, "genus");
}

CharP2 torsion_char_from_curve(long c1, long d) {
    long g = genus_plane_curve(c1);
    return {0, c1, Rat(Int(d) + 1 - g) - Rat(3, 2) * c1};
}

CharP2 char_from_slope_disc(long rank, const Rat& mu, const Rat& delta) {
    if (rank == 0) throw std::domain_error("slope undefined for torsion character");
    Rat c1 = mu * rank;
    if (!is_integer(c1))
        throw std::domain_error("slope " + rat_str(mu) + " is not realizable at rank " +
                                std::to_string(rank));
    Rat ch2 = rank * (mu * mu / 2 - delta);
    return {rank, to_long_checked(c1.get_num(), "c1"), ch2};
}

std::string char_str(const CharP2& v) {
    return std::to_string(v.ch0) + "," + std::to_string(v.ch1) + "," + rat_str(v.ch2);
}

CharP2 parse_char(const std::string& text) {
    auto p1 = text.find(',');
    auto p2 = p1 == std::string::npos ? std::string::npos : text.find(',', p1 + 1);
    if (p2 == std::string::npos)
        throw std::invalid_argument("expected \"r,c1,ch2\": '" + text + "'");
    Rat r = parse_rat(text.substr(0, p1));
    Rat c1 = parse_rat(text.substr(p1 + 1, p2 - p1 - 1));
    Rat ch2 = parse_rat(text.substr(p2 + 1));
    if (!is_integer(r) || !is_integer(c1))
        throw std::invalid_argument("rank and c1 must be integers: '" + text + "'");
    return {to_long_checked(r.get_num(), "rank"), to_long_checked(c1.get_num(), "c1"), ch2};
}

}  // namespace sheafcalc
