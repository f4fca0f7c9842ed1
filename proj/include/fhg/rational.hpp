#pragma once

// Exact rational numbers for utility values.
//
// Numerator and denominator are 64-bit; every intermediate product is formed
// in 128 bits and the result is reduced before narrowing, so an overflow can
// only happen when the reduced value itself does not fit.

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fhg {

__extension__ using wide = __int128;

class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by intent
    Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

    constexpr std::int64_t num() const noexcept { return num_; }
    constexpr std::int64_t den() const noexcept { return den_; }

    constexpr bool is_zero() const noexcept { return num_ == 0; }
    constexpr bool is_integer() const noexcept { return den_ == 1; }
    constexpr int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

    double to_double() const noexcept
    {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    // "p" for integers, "p/q" otherwise.
    std::string str() const
    {
        if (den_ == 1) {
            return std::to_string(num_);
        }
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "p", "p/q", and exact decimals such as "-1.25" or "3.".
    static Rational parse(std::string_view text);

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        return from_wide(static_cast<wide>(a.num_) * b.den_ + static_cast<wide>(b.num_) * a.den_,
                         static_cast<wide>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b)
    {
        return from_wide(static_cast<wide>(a.num_) * b.den_ - static_cast<wide>(b.num_) * a.den_,
                         static_cast<wide>(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b)
    {
        return from_wide(static_cast<wide>(a.num_) * b.num_, static_cast<wide>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b)
    {
        if (b.num_ == 0) {
            throw std::domain_error("rational division by zero");
        }
        return from_wide(static_cast<wide>(a.num_) * b.den_, static_cast<wide>(a.den_) * b.num_);
    }
    Rational operator-() const { return from_wide(-static_cast<wide>(num_), den_); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend constexpr bool operator==(const Rational& a, const Rational& b) noexcept
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Cross-multiplication; denominators are positive so the order is preserved.
    friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept
    {
        const wide lhs = static_cast<wide>(a.num_) * b.den_;
        const wide rhs = static_cast<wide>(b.num_) * a.den_;
        return lhs <=> rhs;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    void assign(std::int64_t num, std::int64_t den)
    {
        *this = from_wide(num, den);
    }

    static wide abs128(wide v) { return v < 0 ? -v : v; }

    static wide gcd128(wide a, wide b)
    {
        a = abs128(a);
        b = abs128(b);
        while (b != 0) {
            const wide t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational from_wide(wide num, wide den)
    {
        if (den == 0) {
            throw std::domain_error("rational with zero denominator");
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const wide g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        constexpr wide lo = INT64_MIN;
        constexpr wide hi = INT64_MAX;
        if (num < lo || num > hi || den > hi) {
            throw std::overflow_error("rational overflow");
        }
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational Rational::parse(std::string_view text)
{
    auto fail = [&] { return std::invalid_argument("malformed number '" + std::string(text) + "'"); };
    if (text.empty()) {
        throw fail();
    }

    auto parse_int = [&](std::string_view s, bool allow_sign) -> wide {
        bool neg = false;
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
            neg = s.front() == '-';
            s.remove_prefix(1);
        }
        if (s.empty()) {
            throw fail();
        }
        wide v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') {
                throw fail();
            }
            v = v * 10 + (c - '0');
            if (v > static_cast<wide>(INT64_MAX)) {
                throw std::overflow_error("number out of range '" + std::string(text) + "'");
            }
        }
        return neg ? -v : v;
    };

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const wide num = parse_int(text.substr(0, slash), true);
        const wide den = parse_int(text.substr(slash + 1), false);
        if (den == 0) {
            throw fail();
        }
        return from_wide(num, den);
    }

    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool neg = false;
        if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
            neg = whole.front() == '-';
            whole.remove_prefix(1);
        }
        if (whole.empty() && frac.empty()) {
            throw fail();
        }
        wide num = whole.empty() ? 0 : parse_int(whole, false);
        wide den = 1;
        for (char c : frac) {
            if (c < '0' || c > '9') {
                throw fail();
            }
            if (den > static_cast<wide>(INT64_MAX) / 10) {
                throw std::overflow_error("too many decimal digits in '" + std::string(text) + "'");
            }
            num = num * 10 + (c - '0');
            den *= 10;
        }
        return from_wide(neg ? -num : num, den);
    }

    return from_wide(parse_int(text, true), 1);
}

}  // namespace fhg
