#pragma once

#include <string>

#include "sheafcalc/rational.hpp"

namespace sheafcalc {

// Chern character (rank, first Chern class, second Chern character) of a
// coherent sheaf on the projective plane. ch2 is an unconstrained exact
// rational; integrality of the character is a predicate, not a type
// constraint, because intermediate arithmetic routinely leaves the integral
// lattice.
struct CharP2 {
    long ch0 = 0;
    long ch1 = 0;
    Rat ch2{0};
};

bool operator==(const CharP2& a, const CharP2& b);
inline bool operator!=(const CharP2& a, const CharP2& b) { return !(a == b); }
CharP2 operator+(const CharP2& a, const CharP2& b);
CharP2 operator-(const CharP2& a, const CharP2& b);
CharP2 operator*(long m, const CharP2& v);

// Slope, discriminant and Euler characteristic of a positive- or
// negative-rank character. Constructing this for rank zero is an error.
struct InvariantView {
    Rat mu;
    Rat delta;
    Rat chi;
};

// Reduced Hilbert polynomial of the structure sheaf: (x^2 + 3x + 2)/2.
Rat hilbert_p(const Rat& x);

InvariantView invariants(const CharP2& v);
Rat slope(const CharP2& v);
Rat discriminant(const CharP2& v);

// chi(v) = ch0 + (3/2) ch1 + ch2. Valid for torsion characters as well.
Rat euler_char(const CharP2& v);

// Bilinear Euler form chi(u, w). For positive ranks this agrees with
// r_u r_w (p(mu_w - mu_u) - Delta_u - Delta_w); the bilinear expansion
// below extends it to rank zero.
Rat euler_pairing(const CharP2& u, const CharP2& w);

CharP2 twist(const CharP2& v, long n);
CharP2 dual(const CharP2& v);

// ch2 -> ch2 - m; the character of a quotient by m point sheaves.
CharP2 elementary_modification(const CharP2& v, unsigned long m);

// c1 and chi both integers.
bool is_integral(const CharP2& v);

// Genus of a smooth plane curve of degree c1 >= 1.
long genus_plane_curve(long c1);

// Character of the pushforward of a degree-d line bundle on a smooth plane
// curve of degree c1; its Euler characteristic is d + 1 - g.
CharP2 torsion_char_from_curve(long c1, long d);

// (rank, rank*mu, ch2) with the requested slope and discriminant.
// rank*mu must be an integer.
CharP2 char_from_slope_disc(long rank, const Rat& mu, const Rat& delta);

std::string char_str(const CharP2& v);
CharP2 parse_char(const std::string& text);  // "r,c1,ch2" with rational ch2

}  // namespace sheafcalc
