#include "sheafcalc/rational.hpp"

#include <cctype>

namespace sheafcalc {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = s[0] == '-';
        s = s.substr(1);
    }
    std::string num = s, den = "1";
    if (auto pos = s.find('/'); pos != std::string::npos) {
        num = s.substr(0, pos);
        den = s.substr(pos + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("not a rational literal: '" + text + "'");
    Int n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    if (negative) n = -n;
    Rat r(n, d);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& x) { return x.get_str(); }

std::string rat_str_explicit(const Rat& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Int rat_floor(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

std::string decimal_approx(const Rat& x, unsigned digits) {
    Int scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    Int n = abs(x.get_num()) * scale / x.get_den();  // truncated
    Int whole = n / scale, frac = n % scale;
    std::string f = frac.get_str();
    f.insert(f.begin(), digits - f.size(), '0');
    std::string out = (sgn(x) < 0 ? "-" : "") + whole.get_str();
    if (digits > 0) out += "." + f;
    return out;
}

long to_long_checked(const Int& z, const char* what) {
    if (!z.fits_slong_p())
        throw std::overflow_error(std::string(what) + " does not fit in a machine integer: " + z.get_str());
    return z.get_si();
}

}  // namespace sheafcalc
