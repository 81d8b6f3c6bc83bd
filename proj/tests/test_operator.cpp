#include "doctest.h"

#include "opcalc/errors.hpp"
#include "opcalc/operator_poly.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace opcalc;
using opcalc::testing::Gen;

TEST_CASE("operator construction") {
    const OperatorPoly p = OperatorPoly::from_leading_first({1, -5, 4});
    CHECK(p.degree() == 2);
    CHECK(p.coeff(2) == Rational(1));
    CHECK(p.coeff(0) == Rational(4));
    CHECK(p.str() == "T^2 - 5*T + 4");
    CHECK(p.leading_first() == std::vector<Rational>{1, -5, 4});
    CHECK_THROWS_AS(OperatorPoly{TPoly()}, ZeroOperator);
    CHECK_THROWS_AS(OperatorPoly({0, 0}), ZeroOperator);
    CHECK(OperatorPoly({0, -2, 1}).translation_order() == 1);
}

TEST_CASE("eval_scalar") {
    CHECK(eval_scalar(OperatorPoly({4, -5, 1}), Rational(3)) == Rational(-2));
    CHECK(eval_scalar(OperatorPoly({6, -5, 1}), Rational(-1)) == Rational(12));
    CHECK(eval_scalar(OperatorPoly({7, 3, 2}), Rational(0)) == Rational(7));
}

TEST_CASE("scale_argument") {
    const OperatorPoly p({4, -5, 1});
    CHECK(scale_argument(p, Rational(3)) == OperatorPoly({4, -15, 9}));
    CHECK(scale_argument(p, Rational(1)) == p);
    // substitute 2T into T - 2
    CHECK(scale_argument(OperatorPoly({-2, 1}), Rational(2)) == OperatorPoly({-2, 2}));
    CHECK_THROWS_AS(scale_argument(p, Rational(0)), ZeroScale);
}

TEST_CASE("to_delta_basis") {
    CHECK(to_delta_basis(OperatorPoly({-1, 1})) == TPoly{0, 1});
    // (D + 1) - 2
    CHECK(opcalc::testing::horner_shift(TPoly{-2, 1}, Rational(1)) == TPoly{-1, 1});
    CHECK(to_delta_basis(OperatorPoly({-2, 1})) == TPoly{-1, 1});
    // (D + 1)^2 - 5(D + 1) + 4
    CHECK(opcalc::testing::horner_shift(TPoly{4, -5, 1}, Rational(1)) == TPoly{0, -3, 1});
    CHECK(to_delta_basis(OperatorPoly({4, -5, 1})) == TPoly{0, -3, 1});
}

TEST_CASE("factor_root") {
    const auto r1 = factor_root(OperatorPoly({-2, 1}), Rational(2));
    CHECK(r1.multiplicity == 1);
    CHECK(r1.cofactor == OperatorPoly({1}));

    const OperatorPoly p({4, -5, 1});
    const auto r2 = factor_root(p, Rational(3));
    CHECK(r2.multiplicity == 0);
    CHECK(r2.cofactor == p);

    const auto r3 = factor_root(OperatorPoly({1, -2, 1}), Rational(1));
    CHECK(r3.multiplicity == 2);
    CHECK(r3.cofactor == OperatorPoly({1}));
}

TEST_CASE("operator transformation invariants") {
    Gen gen(51);
    for (int i = 0; i < 200; ++i) {
        const OperatorPoly p = gen.op(0, 5);
        const Rational lambda = gen.nonzero_rational(-6, 6, 4);

        CHECK(scale_argument(scale_argument(p, lambda), lambda.inverse()) == p);

        const TPoly q = to_delta_basis(p);
        CHECK(taylor_shift(q, Rational(-1)) == p.poly());
        CHECK(q.eval(lambda - Rational(1)) == eval_scalar(p, lambda));

        // Force a root at lambda some of the time.
        const auto m = static_cast<std::size_t>(gen.integer(0, 3));
        const OperatorPoly forced = OperatorPoly(TPoly::linear_factor(lambda).pow(m)) * p;
        const auto f = factor_root(forced, lambda);
        CHECK(f.multiplicity >= m);
        CHECK(OperatorPoly(TPoly::linear_factor(lambda).pow(f.multiplicity)) * f.cofactor == forced);
        CHECK_FALSE(eval_scalar(f.cofactor, lambda).is_zero());
    }
}
