#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "firefight/error.hpp"

namespace firefight {

/// Exact non-negative-denominator fraction. Budget income is kept in this
/// form so that floor(c * t) never depends on binary rounding.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(implicit)
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) {
            throw ConfigInvalid("rational with zero denominator");
        }
        normalize();
    }

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }

    /// floor(this * t), exact.
    std::int64_t floor_times(std::int64_t t) const {
        return floor_div(num_ * t, den_);
    }

    /// ceil(this), exact.
    std::int64_t ceil() const { return -floor_div(-num_, den_); }
    std::int64_t floor() const { return floor_div(num_, den_); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend Rational operator+(Rational a, Rational b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(Rational a, Rational b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(Rational a, Rational b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(Rational a, Rational b) {
        if (b.num_ == 0) {
            throw ConfigInvalid("division by zero rational");
        }
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(Rational a, Rational b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend std::strong_ordering operator<=>(Rational a, Rational b) {
        // denominators are positive, cross-multiplication keeps the sign
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    /// "a/b", "a" or a plain decimal such as "1.68".
    static Rational parse(std::string_view text) {
        auto fail = [&]() -> Rational {
            throw ConfigInvalid("cannot parse rational '" + std::string(text) + "'");
        };
        if (text.empty()) {
            return fail();
        }
        if (auto slash = text.find('/'); slash != std::string_view::npos) {
            std::int64_t a = 0;
            std::int64_t b = 0;
            if (!parse_int(text.substr(0, slash), a) || !parse_int(text.substr(slash + 1), b) || b == 0) {
                return fail();
            }
            return Rational(a, b);
        }
        bool negative = false;
        std::string_view rest = text;
        if (rest.front() == '-' || rest.front() == '+') {
            negative = rest.front() == '-';
            rest.remove_prefix(1);
        }
        auto dot = rest.find('.');
        std::string_view whole = rest.substr(0, dot);
        std::string_view frac = dot == std::string_view::npos ? std::string_view{} : rest.substr(dot + 1);
        if (whole.empty() && frac.empty()) {
            return fail();
        }
        if (frac.size() > 12) {
            return fail();
        }
        std::int64_t w = 0;
        std::int64_t f = 0;
        if (!whole.empty() && !parse_int(whole, w)) {
            return fail();
        }
        if (!frac.empty() && !parse_int(frac, f)) {
            return fail();
        }
        if (w < 0 || f < 0) {
            return fail();
        }
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) {
            scale *= 10;
        }
        Rational out(w * scale + f, scale);
        return negative ? Rational(-out.num_, out.den_) : out;
    }

    std::string to_string() const {
        if (den_ == 1) {
            return std::to_string(num_);
        }
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Shortest decimal if the denominator only has factors 2 and 5, else a/b.
    std::string to_decimal_string() const {
        std::int64_t d = den_;
        int twos = 0;
        int fives = 0;
        while (d % 2 == 0) {
            d /= 2;
            ++twos;
        }
        while (d % 5 == 0) {
            d /= 5;
            ++fives;
        }
        if (d != 1) {
            return to_string();
        }
        int digits = std::max(twos, fives);
        std::int64_t scale = 1;
        for (int i = 0; i < digits; ++i) {
            scale *= 10;
        }
        std::int64_t scaled = num_ * (scale / den_);
        bool negative = scaled < 0;
        if (negative) {
            scaled = -scaled;
        }
        std::string out = std::to_string(scaled / scale);
        if (digits > 0) {
            std::string frac = std::to_string(scaled % scale);
            out += "." + std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
        }
        return negative ? "-" + out : out;
    }

    friend std::ostream& operator<<(std::ostream& os, Rational r) { return os << r.to_string(); }

private:
    static std::int64_t floor_div(std::int64_t a, std::int64_t b) {
        std::int64_t q = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0))) {
            --q;
        }
        return q;
    }

    static bool parse_int(std::string_view s, std::int64_t& out) {
        if (s.empty()) {
            return false;
        }
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        return ec == std::errc{} && ptr == s.data() + s.size();
    }

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace firefight
