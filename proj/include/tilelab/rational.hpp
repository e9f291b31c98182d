#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "tilelab/errors.hpp"

namespace tilelab {

// Exact rational on 64-bit integers. All arithmetic goes through 128-bit
// intermediates and throws on overflow instead of wrapping; the quantities
// in this project are small, so hitting the guard indicates a logic error.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    Rat operator-() const { return Rat(-num_, den_); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                       i128(a.den_) * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) fail(ErrorCode::domain, "rational division by zero");
        return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    // Lowest-terms string: "p" when integral, "p/q" otherwise.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    static Rat parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rat(std::stoll(s));
            return Rat(std::stoll(s.substr(0, slash)),
                       std::stoll(s.substr(slash + 1)));
        } catch (const std::logic_error&) {
            fail(ErrorCode::parse, "bad rational literal: " + s);
        }
    }

    static Rat pow(const Rat& base, int e) {
        if (e < 0) return Rat(1) / pow(base, -e);
        Rat r(1);
        for (int i = 0; i < e; ++i) r *= base;
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
        return os << r.str();
    }

private:
    using i128 = __int128;

    static Rat from128(i128 n, i128 d) {
        if (d == 0) fail(ErrorCode::domain, "rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        Rat r;
        r.num_ = narrow(n);
        r.den_ = narrow(d);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    static long long narrow(i128 v) {
        if (v > INT64_MAX || v < INT64_MIN)
            fail(ErrorCode::overflow, "rational arithmetic overflow");
        return static_cast<long long>(v);
    }

    void normalize() { *this = from128(num_, den_); }

    long long num_;
    long long den_;
};

}  // namespace tilelab
