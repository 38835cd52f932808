#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sbal {

// Exact fraction over 128-bit integers.  Always stored reduced with a
// positive denominator.  Wide enough for everything this library produces:
// per-triad fractions have denominators in {1,2,6}, per-type means have
// denominators bounded by 6 * triad count, and the final average combines
// at most four of those.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(long long num, long long den) : num_(num), den_(den) { reduce(); }

    static constexpr Rational of(__int128 num, __int128 den) {
        Rational r;
        r.num_ = num;
        r.den_ = den;
        r.reduce();
        return r;
    }

    constexpr __int128 num() const { return num_; }
    constexpr __int128 den() const { return den_; }

    constexpr Rational operator+(const Rational& o) const {
        return of(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    constexpr Rational operator-(const Rational& o) const {
        return of(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    constexpr Rational operator*(const Rational& o) const {
        return of(num_ * o.num_, den_ * o.den_);
    }
    constexpr Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        return of(num_ * o.den_, den_ * o.num_);
    }

    constexpr bool operator==(const Rational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    constexpr bool operator!=(const Rational& o) const { return !(*this == o); }
    constexpr bool operator<(const Rational& o) const {
        return num_ * o.den_ < o.num_ * den_;
    }
    constexpr bool operator<=(const Rational& o) const { return !(o < *this); }
    constexpr bool operator>(const Rational& o) const { return o < *this; }
    constexpr bool operator>=(const Rational& o) const { return !(*this < o); }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    // "num/den" in decimal, e.g. "2869/3056"
    std::string str() const;

    // Value as a percentage with fixed decimals, e.g. "92.37".
    std::string percent(int decimals = 2) const;

private:
    __int128 num_ = 0;
    __int128 den_ = 1;

    static constexpr __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    constexpr void reduce() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        __int128 g = gcd128(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }
};

} // namespace sbal
