#include "opcalc/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

#include "opcalc/errors.hpp"

namespace opcalc {

ParseError::ParseError(std::size_t offset, std::string expected, std::string snippet)
    : Error("parse error at offset " + std::to_string(offset) + ": expected " + expected),
      offset_(offset),
      expected_(std::move(expected)),
      snippet_(std::move(snippet)) {}

Rational::Rational(long num, long den) : value_(num, den) {
    if (den == 0) throw std::domain_error("zero denominator");
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    if (value_.get_den() == 0) throw std::domain_error("zero denominator");
    value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
    if (den == 0) throw std::domain_error("zero denominator");
    value_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    Rational result;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw std::invalid_argument("malformed rational: " + std::string(text));
        }
        result = Rational(mpz_class(std::string(num), 10), mpz_class(std::string(den), 10));
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto whole = text.substr(0, dot);
        const auto frac = text.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
            throw std::invalid_argument("malformed decimal: " + std::string(text));
        }
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        const mpz_class digits(std::string(whole) + std::string(frac), 10);
        result = Rational(digits, scale);
    } else {
        if (!all_digits(text)) throw std::invalid_argument("malformed integer: " + std::string(text));
        result = Rational(mpz_class(std::string(text), 10), mpz_class(1));
    }
    return negative ? -result : result;
}

Rational Rational::abs() const {
    return Rational(mpq_class(::abs(value_)));
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(value_.get_den(), value_.get_num());
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    mpz_class num;
    mpz_class den;
    const auto e = static_cast<unsigned long>(exponent);
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), e);
    return Rational(num, den);
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-value_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace opcalc
