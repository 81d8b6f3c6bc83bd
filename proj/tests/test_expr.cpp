#include "doctest.h"

#include "opcalc/errors.hpp"
#include "opcalc/expr.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace opcalc;
using opcalc::testing::Gen;

namespace {

const TPoly kT{0, 1};

SequenceExpr sin_term(const Rational& c, const Rational& base, unsigned long n = 1) {
    return SequenceExpr::single(c, base, TPoly::constant(1), TrigPart::sin(n));
}

SequenceExpr cos_term(const Rational& c, const Rational& base, unsigned long n = 1) {
    return SequenceExpr::single(c, base, TPoly::constant(1), TrigPart::cos(n));
}

}  // namespace

TEST_CASE("normalize merges and cancels") {
    const SequenceExpr a = SequenceExpr::geometric(3, 2) + SequenceExpr::geometric(3, 3);
    CHECK(a == SequenceExpr::geometric(3, 5));
    CHECK(a.terms().size() == 1);

    CHECK((SequenceExpr::geometric(3) - SequenceExpr::geometric(3)).is_zero());

    const SequenceExpr b = SequenceExpr::polynomial(kT) +
                           SequenceExpr::single(1, 1, TPoly::monomial(Rational(1), 2));
    REQUIRE(b.terms().size() == 1);
    CHECK(b.terms()[0].base == Rational(1));
    CHECK(b.terms()[0].poly == TPoly{0, 1, 1});
}

TEST_CASE("normalized terms have monic polynomials") {
    const SequenceExpr e = SequenceExpr::single(3, 2, TPoly{1, 2});
    REQUIRE(e.terms().size() == 1);
    CHECK(e.terms()[0].coeff == Rational(6));
    CHECK(e.terms()[0].poly == TPoly{Rational(1, 2), Rational(1)});
}

TEST_CASE("trig factors with n = 0") {
    CHECK(SequenceExpr::single(1, 2, TPoly::constant(1), TrigPart::sin(0)).is_zero());
    CHECK(SequenceExpr::single(1, 2, TPoly::constant(1), TrigPart::cos(0)) == SequenceExpr::geometric(2));
}

TEST_CASE("base zero is rejected") {
    CHECK_THROWS_AS(SequenceExpr::geometric(0), UnsupportedRhs);
}

TEST_CASE("eval_at") {
    CHECK(eval_at(SequenceExpr::geometric(3, Rational(-1, 2)), 2) == Rational(-9, 2));
    CHECK(eval_at(cos_term(Rational(1, 12), 1), 3) == Rational(-1, 12));
    CHECK(eval_at(sin_term(Rational(1, 28), 3), 5) == Rational(0));
    CHECK(eval_at(SequenceExpr::geometric(-2), -3) == Rational(-1, 8));
    CHECK(eval_at(cos_term(1, 1, 2), 7) == Rational(1));
}

TEST_CASE("canonical display") {
    CHECK(SequenceExpr::geometric(3, Rational(-1, 2)).str() == "-1/2 * 3^t");
    CHECK(SequenceExpr::single(Rational(1, 2), 2, kT).str() == "2^(t-1) * t");
    CHECK(cos_term(Rational(1, 12), 1).str() == "1/12 * cos(pi*t)");
    CHECK(sin_term(Rational(1, 28), 3).str() == "1/28 * 3^t * sin(pi*t)");
    CHECK(SequenceExpr::polynomial(TPoly{Rational(-1, 4), Rational(-1, 2)}).str() == "-1/2*t - 1/4");
    CHECK(SequenceExpr::geometric(Rational(-2)).str() == "(-2)^t");
    CHECK(SequenceExpr::geometric(Rational(1, 2), 3).str() == "3 * (1/2)^t");
    CHECK(SequenceExpr::single(Rational(1, 4), 2, TPoly{-1, 1}).str() == "2^(t-2) * (t - 1)");
    CHECK(cos_term(1, 1, 3).str() == "cos(3*pi*t)");
    CHECK(SequenceExpr().str() == "0");
    CHECK((SequenceExpr::geometric(2) - SequenceExpr::constant(1)).str() == "-1 + 2^t");
}

TEST_CASE("apply_operator examples") {
    const OperatorPoly p({4, -5, 1});
    CHECK(apply_operator(p, SequenceExpr::geometric(3, Rational(-1, 2))) == SequenceExpr::geometric(3));
    CHECK(apply_operator(OperatorPoly({-1, 1}), SequenceExpr::polynomial(kT)) == SequenceExpr::constant(1));
    CHECK(apply_operator(OperatorPoly({0, 1}), SequenceExpr::geometric(2)) == SequenceExpr::geometric(2, 2));
    CHECK(apply_operator(OperatorPoly({0, 1}), SequenceExpr::polynomial(TPoly{0, 0, 1})).str() == "t^2 + 2*t + 1");
}

TEST_CASE("shift by negative amounts") {
    const SequenceExpr e = SequenceExpr::single(1, 2, kT);
    const SequenceExpr back = shift(e, -1);
    for (long t = -5; t <= 5; ++t) CHECK(eval_at(back, t) == eval_at(e, t - 1));
    CHECK(shift(shift(e, 3), -3) == e);
}

TEST_CASE("apply_operator is pointwise sound") {
    Gen gen(61);
    for (int i = 0; i < 150; ++i) {
        const SequenceExpr e = gen.expr(4, 3);
        const OperatorPoly p = gen.op(0, 4);
        const SequenceExpr applied = apply_operator(p, e);
        for (long t = -5; t <= 20; ++t) {
            CHECK(eval_at(applied, t) == opcalc::testing::pointwise_apply(p, e, t));
        }
    }
}

TEST_CASE("normalize is idempotent and preserves values") {
    Gen gen(71);
    for (int i = 0; i < 150; ++i) {
        std::vector<Term> raw;
        for (int k = 0; k < 5; ++k) raw.push_back(gen.term(3));
        // Duplicate keys on purpose.
        raw.push_back(Term{gen.nonzero_rational(), raw[0].base, gen.poly(2), raw[0].trig});
        const SequenceExpr e(raw);
        CHECK(normalize(e) == e);
        for (long t = -10; t <= 10; ++t) {
            Rational direct;
            for (const auto& term : raw) direct += eval_term(term, t);
            CHECK(eval_at(e, t) == direct);
        }
    }
}

TEST_CASE("cos terms evaluate as signed geometric sequences") {
    Gen gen(81);
    for (int i = 0; i < 50; ++i) {
        const Rational c = gen.nonzero_rational();
        const Rational b = gen.base();
        const auto n = static_cast<unsigned long>(gen.integer(0, 5));
        const SequenceExpr e = cos_term(c, b, n);
        const Rational sign = n % 2 ? Rational(-1) : Rational(1);
        for (long t = -8; t <= 8; ++t) CHECK(eval_at(e, t) == c * b.pow(t) * sign.pow(t));
    }
}

TEST_CASE("forward form of the shift theorem") {
    // (T - l)^n [l^t f(t)] = l^t [l (T - 1)]^n f(t)
    Gen gen(91);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (int i = 0; i < 10; ++i) {
            const Rational lambda = gen.nonzero_rational(-5, 5, 3);
            const TPoly f = gen.poly(3);
            const OperatorPoly lhs_op = OperatorPoly(TPoly::linear_factor(lambda)).pow(n);
            const SequenceExpr lhs = apply_operator(lhs_op, SequenceExpr::single(1, lambda, f));

            const OperatorPoly rhs_op = OperatorPoly(lambda * TPoly::linear_factor(Rational(1))).pow(n);
            const SequenceExpr inner = apply_operator(rhs_op, SequenceExpr::polynomial(f));
            CHECK(lhs == multiply(SequenceExpr::geometric(lambda), inner));
        }
    }
}

TEST_CASE("multiply rejects two trig factors") {
    CHECK_THROWS_AS(multiply(cos_term(1, 1), sin_term(1, 1)), UnsupportedRhs);
    CHECK(multiply(SequenceExpr::geometric(3), sin_term(1, 1)) == sin_term(1, 3));
}
