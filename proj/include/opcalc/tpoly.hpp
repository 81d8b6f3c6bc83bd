#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opcalc/rational.hpp"

namespace opcalc {

/// Dense univariate polynomial over the rationals.
///
/// Used for p(t) factors of sequence terms, for the difference-basis form of
/// an operator (variable Delta = T - 1) and for shifted operators. The
/// coefficient vector never ends in a zero; the zero polynomial is empty and
/// has no degree.
class TPoly {
public:
    TPoly() = default;
    /// Coefficients in ascending powers: {a0, a1, a2} is a0 + a1*x + a2*x^2.
    TPoly(std::initializer_list<Rational> ascending);
    explicit TPoly(std::vector<Rational> ascending);

    static TPoly constant(const Rational& c);
    static TPoly monomial(const Rational& c, std::size_t power);
    /// x - root
    static TPoly linear_factor(const Rational& root);

    std::optional<std::size_t> degree() const;
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// Coefficient of x^i; zero beyond the degree.
    Rational coeff(std::size_t i) const;
    Rational leading() const;
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    /// Index of the lowest nonzero coefficient (multiplicity of the root 0).
    std::size_t lowest_power() const;

    Rational eval(const Rational& x) const;

    TPoly operator-() const;
    friend TPoly operator+(const TPoly& a, const TPoly& b);
    friend TPoly operator-(const TPoly& a, const TPoly& b);
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    friend TPoly operator*(const Rational& c, const TPoly& p);
    TPoly& operator+=(const TPoly& o) { return *this = *this + o; }
    TPoly& operator-=(const TPoly& o) { return *this = *this - o; }
    TPoly& operator*=(const TPoly& o) { return *this = *this * o; }
    friend bool operator==(const TPoly&, const TPoly&) = default;

    TPoly pow(std::size_t exponent) const;
    /// Divide by leading coefficient. Zero stays zero.
    TPoly monic() const;
    TPoly derivative() const;
    /// p(x) / x^k for k <= lowest_power().
    TPoly drop_low(std::size_t k) const;

    /// Render in descending powers with the given variable name, e.g. "t^2 - 1/2*t + 3".
    std::string str(char var = 't') const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

enum class PolyOp { add, sub, mul };

/// Exact add/sub/mul; result canonical.
TPoly poly_arith(const TPoly& a, const TPoly& b, PolyOp op);

/// Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
std::pair<TPoly, TPoly> divmod(const TPoly& a, const TPoly& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
TPoly gcd(TPoly a, TPoly b);

/// q(u) = p(u + shift), by binomial expansion.
TPoly taylor_shift(const TPoly& p, const Rational& shift);

/// (Delta p)(x) = p(x + 1) - p(x).
TPoly forward_difference(const TPoly& p);

/// First order+1 coefficients of the power series 1/q. Throws ZeroConstantTerm when q(0) = 0.
std::vector<Rational> series_inverse(const TPoly& q, std::size_t order);

/// Binomial coefficient C(n, k) as a rational.
Rational binomial(std::size_t n, std::size_t k);

}  // namespace opcalc
