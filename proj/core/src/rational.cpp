#include "cobar/rational.hpp"

#include <limits>
#include <numeric>

namespace cobar {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

void Rational::assign(std::int64_t n, std::int64_t d) {
    if (d == 0) throw error("Overflow", "zero denominator");
    *this = from128(n, d);
}

Rational Rational::from128(i128 n, i128 d) {
    if (d == 0) throw error("Overflow", "zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    constexpr i128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr i128 hi = std::numeric_limits<std::int64_t>::max();
    if (n < lo || n > hi || d > hi)
        throw error("Overflow", "rational out of 64-bit range");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw error("SchemaError", "empty rational literal");
    std::size_t slash = s.find('/');
    try {
        std::size_t used = 0;
        std::int64_t n = std::stoll(s.substr(0, slash), &used);
        if (used != (slash == std::string::npos ? s.size() : slash))
            throw error("SchemaError", "bad rational literal '" + s + "'");
        std::int64_t d = 1;
        if (slash != std::string::npos) {
            std::string ds = s.substr(slash + 1);
            d = std::stoll(ds, &used);
            if (used != ds.size())
                throw error("SchemaError", "bad rational literal '" + s + "'");
        }
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw error("SchemaError", "bad rational literal '" + s + "'");
    } catch (const std::out_of_range&) {
        throw error("SchemaError", "rational literal out of range '" + s + "'");
    }
}

std::string Rational::decimal(int digits) const {
    if (digits < 0) digits = 0;
    if (digits > 18) digits = 18;
    i128 scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    i128 scaled2 = i128(num_) * scale * 2;
    i128 q = scaled2 / den_;
    // round half away from zero
    if (q >= 0)
        q = (q + 1) / 2;
    else
        q = (q - 1) / 2;
    bool neg = q < 0;
    if (neg) q = -q;
    i128 ip = q / scale, fp = q % scale;
    std::string out = neg ? "-" : "";
    // __int128 to string via repeated division
    std::string ipstr;
    if (ip == 0) ipstr = "0";
    while (ip > 0) {
        ipstr.insert(ipstr.begin(), char('0' + int(ip % 10)));
        ip /= 10;
    }
    out += ipstr;
    if (digits > 0) {
        std::string fpstr(digits, '0');
        for (int i = digits - 1; i >= 0; --i) {
            fpstr[i] = char('0' + int(fp % 10));
            fp /= 10;
        }
        out += "." + fpstr;
    }
    return out;
}

}  // namespace cobar
