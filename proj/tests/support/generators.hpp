#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "opcalc/expr.hpp"
#include "opcalc/operator_poly.hpp"
#include "opcalc/rational.hpp"
#include "opcalc/tpoly.hpp"

namespace opcalc::testing {

/// Seeded generator of random algebraic objects for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

    /// numerator in [lo, hi], denominator in [1, max_den]
    Rational rational(long lo = -9, long hi = 9, long max_den = 3) {
        return Rational(integer(lo, hi), integer(1, max_den));
    }

    Rational nonzero_rational(long lo = -9, long hi = 9, long max_den = 3) {
        Rational r;
        while (r.is_zero()) r = rational(lo, hi, max_den);
        return r;
    }

    TPoly poly(std::size_t max_degree) {
        const auto d = static_cast<std::size_t>(integer(0, static_cast<long>(max_degree)));
        std::vector<Rational> c(d + 1);
        for (auto& x : c) x = rational();
        c.back() = nonzero_rational();
        return TPoly(std::move(c));
    }

    /// Degree between min_degree and max_degree with nonzero leading coefficient.
    OperatorPoly op(std::size_t min_degree, std::size_t max_degree) {
        const auto d = static_cast<std::size_t>(integer(static_cast<long>(min_degree), static_cast<long>(max_degree)));
        std::vector<Rational> c(d + 1);
        for (auto& x : c) x = rational();
        c.back() = nonzero_rational();
        return OperatorPoly(TPoly(std::move(c)));
    }

    Rational base() {
        static const std::vector<Rational> bases = {Rational(1),  Rational(2),    Rational(-1), Rational(3),
                                                    Rational(1, 2), Rational(-2), Rational(-1, 3), Rational(5, 2)};
        return bases[static_cast<std::size_t>(integer(0, static_cast<long>(bases.size()) - 1))];
    }

    TrigPart trig() {
        switch (integer(0, 5)) {
            case 0: return TrigPart::cos(static_cast<unsigned long>(integer(1, 3)));
            case 1: return TrigPart::sin(static_cast<unsigned long>(integer(1, 3)));
            default: return TrigPart::none();
        }
    }

    Term term(std::size_t max_poly_degree = 3) {
        return Term{nonzero_rational(), base(), poly(max_poly_degree), trig()};
    }

    SequenceExpr expr(std::size_t max_terms, std::size_t max_poly_degree = 3) {
        std::vector<Term> terms;
        const long k = integer(1, static_cast<long>(max_terms));
        for (long i = 0; i < k; ++i) terms.push_back(term(max_poly_degree));
        return SequenceExpr(std::move(terms));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace opcalc::testing
