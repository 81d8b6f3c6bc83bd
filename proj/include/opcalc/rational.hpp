#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace opcalc {

/// Exact fraction over arbitrary-precision integers.
///
/// Always held in lowest terms with a positive denominator; every operation
/// re-canonicalizes, so two equal values compare equal field by field.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class value);
    Rational(const mpz_class& num, const mpz_class& den);

    /// Accepts "3", "-5", "1/2", "-7/3" and decimals such as "2.5" (exactly 5/2).
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const noexcept { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational abs() const;
    Rational inverse() const;
    /// Exact integer power; negative exponents invert (base must be nonzero then).
    Rational pow(long exponent) const;
    double to_double() const { return value_.get_d(); }

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace opcalc
