#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polysurf {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as inputs are canonical, which the helpers
// below guarantee.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q", "p", or a decimal literal like "-9.9".
inline Rat rat_parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("rat_parse: empty string");
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::string den = "1" + std::string(text.size() - dot - 1, '0');
        Rat r;
        if (r.set_str(digits + "/" + den, 10) != 0)
            throw std::invalid_argument("rat_parse: bad literal '" + text + "'");
        r.canonicalize();
        return r;
    }
    Rat r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("rat_parse: bad literal '" + text + "'");
    if (r.get_den() == 0) throw std::invalid_argument("rat_parse: zero denominator");
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline int sign(const Rat& r) { return sgn(r); }
inline int sign(const Int& z) { return sgn(z); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a > b ? a : b; }

// Bit length of the larger of |numerator|, denominator; used for stats.
inline std::size_t rat_bits(const Rat& r) {
    std::size_t nb = mpz_sizeinbase(r.get_num().get_mpz_t(), 2);
    std::size_t db = mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
    return nb > db ? nb : db;
}

// Decimal expansion with `digits` fractional digits, round-to-nearest.
// The only lossy conversion in the library; used by the mesh exporters.
inline std::string rat_decimal(const Rat& r, int digits) {
    if (digits < 0) digits = 0;
    Int num = r.get_num(), den = r.get_den();
    bool neg = sign(num) < 0;
    if (neg) num = -num;
    Int pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Int scaled_twice = num * pow10 * 2 + den;  // floor((2*num*10^d + den) / (2*den)) rounds
    Int rounded = scaled_twice / (2 * den);
    std::string s = rounded.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    std::string out = s.substr(0, s.size() - digits);
    if (digits > 0) {
        std::string frac = s.substr(s.size() - digits);
        while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
        if (!(frac.size() == 1 && frac[0] == '0')) out += "." + frac;
    }
    if (neg && out != "0") out.insert(out.begin(), '-');
    return out;
}

}  // namespace polysurf
