#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "opcalc/operator_poly.hpp"
#include "opcalc/rational.hpp"
#include "opcalc/tpoly.hpp"

namespace opcalc {

/// Optional trigonometric factor cos(n*pi*t) or sin(n*pi*t).
struct TrigPart {
    enum class Kind : std::uint8_t { none, cos, sin };

    Kind kind = Kind::none;
    unsigned long n = 0;

    static TrigPart none() { return {}; }
    static TrigPart cos(unsigned long n) { return {Kind::cos, n}; }
    static TrigPart sin(unsigned long n) { return {Kind::sin, n}; }

    bool is_none() const { return kind == Kind::none; }
    /// (-1)^n: the factor picked up per unit shift, cos(n*pi*(t+1)) = (-1)^n cos(n*pi*t).
    Rational shift_sign() const { return (kind != Kind::none && n % 2 == 1) ? Rational(-1) : Rational(1); }

    friend bool operator==(const TrigPart&, const TrigPart&) = default;
    friend auto operator<=>(const TrigPart&, const TrigPart&) = default;
};

/// coeff * base^t * poly(t) * trig(t)
///
/// In a normalized expression the polynomial is monic and coeff carries its
/// leading coefficient.
struct Term {
    Rational coeff{1};
    Rational base{1};
    TPoly poly = TPoly::constant(1);
    TrigPart trig;

    friend bool operator==(const Term&, const Term&) = default;
};

/// A finite sum of terms. Normalized: at most one term per (base, trig) key,
/// no zero terms, sorted by key. The empty sum is the zero sequence.
class SequenceExpr {
public:
    SequenceExpr() = default;
    /// Normalizes. Rejects base 0.
    explicit SequenceExpr(std::vector<Term> terms);

    static SequenceExpr constant(const Rational& c);
    static SequenceExpr geometric(const Rational& base, const Rational& coeff = Rational(1));
    static SequenceExpr polynomial(const TPoly& p);
    static SequenceExpr single(const Rational& coeff, const Rational& base, const TPoly& poly,
                               TrigPart trig = {});

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// True when the expression is a plain rational constant (or zero).
    bool is_constant() const;

    friend SequenceExpr operator+(const SequenceExpr& a, const SequenceExpr& b);
    friend SequenceExpr operator-(const SequenceExpr& a, const SequenceExpr& b);
    friend SequenceExpr operator*(const Rational& c, const SequenceExpr& e);
    SequenceExpr operator-() const { return Rational(-1) * *this; }
    friend bool operator==(const SequenceExpr&, const SequenceExpr&) = default;

    /// Canonical display, e.g. "-1/2 * 3^t", "2^(t-1) * t", "1/12 * cos(pi*t)".
    std::string str() const;

private:
    std::vector<Term> terms_;
};

/// Merge like terms, drop zeros, make polynomials monic, sort. Idempotent.
SequenceExpr normalize(const SequenceExpr& e);
std::vector<Term> normalize_terms(std::vector<Term> terms);

/// Exact value at integer t. sin(n*pi*t) vanishes; cos(n*pi*t) is ((-1)^n)^t.
Rational eval_at(const SequenceExpr& e, long t);
Rational eval_term(const Term& term, long t);

/// Value of the term with its trig factor removed: coeff * base^t * poly(t).
Rational eval_amplitude(const Term& term, long t);

/// e(t + k) for any integer k, symbolically.
SequenceExpr shift(const SequenceExpr& e, long k);
Term shift_term(const Term& term, long k);

/// P(T) e = sum_i coeff(T^i) e(t + i), symbolically.
SequenceExpr apply_operator(const OperatorPoly& p, const SequenceExpr& e);

/// Product of two expressions. Throws UnsupportedRhs when two trig factors meet.
SequenceExpr multiply(const SequenceExpr& a, const SequenceExpr& b);

std::string term_str(const Term& term);
std::string trig_str(const TrigPart& trig);

}  // namespace opcalc
