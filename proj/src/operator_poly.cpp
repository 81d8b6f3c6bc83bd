#include "opcalc/operator_poly.hpp"

#include <algorithm>

#include "opcalc/errors.hpp"

namespace opcalc {

OperatorPoly::OperatorPoly(TPoly ascending) : poly_(std::move(ascending)) {
    if (poly_.is_zero()) throw ZeroOperator();
}

OperatorPoly OperatorPoly::from_leading_first(const std::vector<Rational>& a) {
    std::vector<Rational> asc(a.rbegin(), a.rend());
    return OperatorPoly(TPoly(std::move(asc)));
}

OperatorPoly OperatorPoly::shift(std::size_t k) {
    return OperatorPoly(TPoly::monomial(Rational(1), k));
}

std::vector<Rational> OperatorPoly::leading_first() const {
    const auto& asc = poly_.coefficients();
    return {asc.rbegin(), asc.rend()};
}

Rational eval_scalar(const OperatorPoly& p, const Rational& lambda) {
    return p.poly().eval(lambda);
}

OperatorPoly scale_argument(const OperatorPoly& p, const Rational& lambda) {
    if (lambda.is_zero()) throw ZeroScale();
    std::vector<Rational> v = p.poly().coefficients();
    Rational power(1);
    for (auto& c : v) {
        c *= power;
        power *= lambda;
    }
    return OperatorPoly(TPoly(std::move(v)));
}

TPoly to_delta_basis(const OperatorPoly& p) {
    return taylor_shift(p.poly(), Rational(1));
}

RootFactor factor_root(const OperatorPoly& p, const Rational& lambda) {
    TPoly rest = p.poly();
    const TPoly factor = TPoly::linear_factor(lambda);
    std::size_t m = 0;
    while (!rest.is_constant() && rest.eval(lambda).is_zero()) {
        rest = divmod(rest, factor).first;
        ++m;
    }
    return {m, OperatorPoly(std::move(rest))};
}

}  // namespace opcalc
