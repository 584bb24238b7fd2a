#include "editstat/rational.hpp"

#include "editstat/error.hpp"

namespace editstat {

std::string to_fraction(const Rational& r) {
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string to_decimal(const Rational& r, unsigned places) {
    BigInt num = numerator(r);
    const BigInt den = denominator(r);  // positive by cpp_rational invariant
    const bool negative = num < 0;
    if (negative) num = -num;

    BigInt scale = 1;
    for (unsigned i = 0; i < places; ++i) scale *= 10;

    const BigInt scaled = num * scale;
    BigInt quot = scaled / den;
    const BigInt rem = scaled % den;
    if (rem * 2 >= den) ++quot;  // round half away from zero

    const BigInt whole = quot / scale;
    const BigInt frac = quot % scale;

    std::string out = negative && quot != 0 ? "-" : "";
    out += whole.str();
    if (places > 0) {
        std::string digits = frac.str();
        out += '.';
        out.append(places - digits.size(), '0');
        out += digits;
    }
    return out;
}

Rational parse_fraction(std::string_view text) {
    const auto slash = text.find('/');
    BigInt num, den = 1;
    try {
        if (slash == std::string_view::npos) {
            num = BigInt(std::string(text));
        } else {
            num = BigInt(std::string(text.substr(0, slash)));
            den = BigInt(std::string(text.substr(slash + 1)));
        }
    } catch (const std::runtime_error&) {
        throw DataError("malformed fraction: " + std::string(text));
    }
    if (den == 0) throw DataError("fraction with zero denominator: " + std::string(text));
    return Rational(num, den);
}

}  // namespace editstat
