#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "opcalc/rational.hpp"
#include "opcalc/tpoly.hpp"

namespace opcalc {

/// A polynomial P(T) = a_0 T^n + a_1 T^(n-1) + ... + a_n in the translation
/// operator T, where T y(t) = y(t + 1). Never zero; the leading coefficient
/// a_0 is nonzero.
class OperatorPoly {
public:
    /// Ascending powers of T. Throws ZeroOperator when every coefficient is zero.
    explicit OperatorPoly(TPoly ascending);
    OperatorPoly(std::initializer_list<Rational> ascending) : OperatorPoly(TPoly(ascending)) {}

    /// From a_0, a_1, ..., a_n (leading coefficient first).
    static OperatorPoly from_leading_first(const std::vector<Rational>& a);
    /// T^k
    static OperatorPoly shift(std::size_t k);

    std::size_t degree() const { return *poly_.degree(); }
    /// Coefficient of T^i.
    Rational coeff(std::size_t i) const { return poly_.coeff(i); }
    /// a_0 ... a_n, leading coefficient first.
    std::vector<Rational> leading_first() const;
    const TPoly& poly() const noexcept { return poly_; }

    /// Exponent k of the largest T^k dividing P.
    std::size_t translation_order() const { return poly_.lowest_power(); }
    /// P / T^k for k <= translation_order().
    OperatorPoly drop_translation(std::size_t k) const { return OperatorPoly(poly_.drop_low(k)); }

    friend OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b) {
        return OperatorPoly(a.poly_ * b.poly_);
    }
    OperatorPoly pow(std::size_t exponent) const { return OperatorPoly(poly_.pow(exponent)); }
    friend bool operator==(const OperatorPoly&, const OperatorPoly&) = default;

    /// e.g. "T^2 - 5*T + 4"
    std::string str() const { return poly_.str('T'); }

private:
    TPoly poly_;
};

/// P(lambda).
Rational eval_scalar(const OperatorPoly& p, const Rational& lambda);

/// P(lambda T): the coefficient of T^i picks up lambda^i. Throws ZeroScale for lambda = 0.
OperatorPoly scale_argument(const OperatorPoly& p, const Rational& lambda);

/// Q with Q(T - 1) = P(T), i.e. P rewritten in the difference operator Delta = T - 1.
TPoly to_delta_basis(const OperatorPoly& p);

struct RootFactor {
    std::size_t multiplicity = 0;
    OperatorPoly cofactor;
};

/// P = (T - lambda)^m * S with S(lambda) != 0.
RootFactor factor_root(const OperatorPoly& p, const Rational& lambda);

}  // namespace opcalc
