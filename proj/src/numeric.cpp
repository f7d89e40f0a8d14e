#include "kmstab/numeric.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <sstream>

namespace kmstab {

namespace mp = boost::multiprecision;

Int coords_gcd(const IntVec& v) {
    Int g = 0;
    for (const auto& c : v) g = mp::gcd(g, abs(c));
    return g;
}

namespace {

bool parse_int_token(const std::string& s, size_t& pos, Int& out) {
    size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = s[pos] == '-';
        ++pos;
    }
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) {
        pos = start;
        return false;
    }
    out = Int(s.substr(digits, pos - digits));
    if (neg) out = -out;
    return true;
}

} // namespace

Rat parse_rational(const std::string& s) {
    size_t pos = 0;
    Int num;
    if (!parse_int_token(s, pos, num)) fail(ErrorKind::Parse, "bad rational: '" + s + "'");
    Int den = 1;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        if (!parse_int_token(s, pos, den) || den <= 0)
            fail(ErrorKind::Parse, "bad rational denominator in '" + s + "'");
    }
    if (pos != s.size()) fail(ErrorKind::Parse, "trailing characters in rational '" + s + "'");
    return Rat(num, den);
}

std::string format_rational(const Rat& r) {
    std::ostringstream os;
    os << r; // cpp_rational streams canonical p/q, "/1" omitted
    return os.str();
}

std::string format_gauss(const GaussRat& z) {
    if (z.is_zero()) return "0";
    std::string s;
    if (z.re != 0) s = format_rational(z.re);
    if (z.im != 0) {
        if (z.im == 1)
            s += s.empty() ? "i" : "+i";
        else if (z.im == -1)
            s += "-i";
        else {
            std::string im = format_rational(z.im);
            if (!s.empty() && im[0] != '-') s += "+";
            s += im + "i";
        }
    }
    return s;
}

std::pair<Int, Int> primitive_direction(const GaussRat& z) {
    if (z.is_zero()) fail(ErrorKind::Internal, "direction of zero");
    Int xn = numerator(z.re), xd = denominator(z.re);
    Int yn = numerator(z.im), yd = denominator(z.im);
    // common positive denominator, then strip gcd
    Int x = xn * yd;
    Int y = yn * xd;
    Int g = mp::gcd(abs(x), abs(y));
    return {x / g, y / g};
}

} // namespace kmstab
