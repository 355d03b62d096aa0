#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cobar {

// Error type shared across the library. `kind` is a stable machine-readable
// tag (e.g. "BirthOrderViolation"), `what()` carries detail.
class error : public std::runtime_error {
public:
    error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

// Exact rational number with int64 numerator/denominator, always reduced,
// denominator > 0. Intermediates use 128-bit arithmetic; results that do not
// fit in 64 bits throw error("Overflow"). Every scalar in the library is
// either a Rational or an ExtRational; no floating point anywhere.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                       i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                       i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw error("Overflow", "division by zero");
        return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
    Rational abs() const { return num_ < 0 ? -*this : *this; }

    // Canonical "p/q" form, q always printed.
    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }
    // Accepts "p/q", "p", optional leading '-'. Throws error("SchemaError").
    static Rational parse(const std::string& s);

    // Decimal rendering with k digits, display only (round to nearest, ties away).
    std::string decimal(int digits) const;

    static Rational floor_int(const Rational& a) {
        std::int64_t q = a.num_ / a.den_;
        if (a.num_ % a.den_ != 0 && a.num_ < 0) --q;
        return Rational(q);
    }
    static Rational ceil_int(const Rational& a) { return -floor_int(-a); }
    static Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
    static Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

private:
    using i128 = __int128;
    std::int64_t num_, den_;

    void assign(std::int64_t n, std::int64_t d);
    static Rational from128(i128 n, i128 d);
};

// Rational extended with +infinity. -infinity never arises in the library
// (energies, bar lengths, shifts and distances are bounded below).
class ExtRational {
public:
    ExtRational() : inf_(false), v_() {}
    ExtRational(const Rational& v) : inf_(false), v_(v) {}
    ExtRational(std::int64_t v) : inf_(false), v_(v) {}
    static ExtRational infinity() {
        ExtRational e;
        e.inf_ = true;
        return e;
    }

    bool is_infinite() const { return inf_; }
    const Rational& finite() const {
        if (inf_) throw error("Overflow", "infinite value used as finite");
        return v_;
    }

    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.v_ == b.v_;
    }
    friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }
    friend bool operator<(const ExtRational& a, const ExtRational& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const ExtRational& a, const ExtRational& b) { return !(b < a); }
    friend bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }
    friend bool operator>=(const ExtRational& a, const ExtRational& b) { return !(a < b); }
    friend ExtRational operator+(const ExtRational& a, const ExtRational& b) {
        if (a.inf_ || b.inf_) return infinity();
        return ExtRational(a.v_ + b.v_);
    }

    static ExtRational min(const ExtRational& a, const ExtRational& b) { return a < b ? a : b; }
    std::string str() const { return inf_ ? "inf" : v_.str(); }
    static ExtRational parse(const std::string& s) {
        if (s == "inf") return infinity();
        return ExtRational(Rational::parse(s));
    }

private:
    bool inf_;
    Rational v_;
};

}  // namespace cobar
