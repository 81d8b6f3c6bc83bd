#pragma once

// Reference computations for the tests. Each one takes a route that the
// library does not: Horner composition instead of binomial expansion,
// brute-force summation instead of falling factorials, undetermined
// coefficients instead of operator inversion, pointwise shifts instead of
// symbolic ones.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "opcalc/expr.hpp"
#include "opcalc/operator_poly.hpp"
#include "opcalc/rational.hpp"
#include "opcalc/tpoly.hpp"

namespace opcalc::testing {

/// p(u + shift) by Horner's scheme: ((a_n (u+s) + a_{n-1}) (u+s) + ...).
inline TPoly horner_shift(const TPoly& p, const Rational& shift) {
    const TPoly lin{shift, Rational(1)};
    TPoly acc;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * lin + TPoly::constant(*it);
    return acc;
}

/// sum_i coeff(T^i) e(t + i), evaluated point by point.
inline Rational pointwise_apply(const OperatorPoly& p, const SequenceExpr& e, long t) {
    Rational acc;
    for (std::size_t i = 0; i <= p.degree(); ++i) acc += p.coeff(i) * eval_at(e, t + static_cast<long>(i));
    return acc;
}

/// S_m(t) with S_0 = f and S_k(t) = sum_{j=0}^{t-1} S_{k-1}(j), for t = 0..t_max.
inline std::vector<Rational> nested_sums(const std::function<Rational(long)>& f, std::size_t m, long t_max) {
    std::vector<Rational> level(static_cast<std::size_t>(t_max) + 1);
    for (long t = 0; t <= t_max; ++t) level[static_cast<std::size_t>(t)] = f(t);
    for (std::size_t k = 0; k < m; ++k) {
        std::vector<Rational> next(level.size());
        Rational running;
        for (std::size_t t = 0; t < level.size(); ++t) {
            next[t] = running;
            running += level[t];
        }
        level = std::move(next);
    }
    return level;
}

/// Solves the square rational system a x = b by Gauss-Jordan elimination.
inline std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::runtime_error("singular oracle system");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            const Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

/// Polynomial y of the given degree with sum_i coeff(T^i) base^i y(t+i) = f(t),
/// found by matching values at degree+1 points. Only valid off resonance.
inline TPoly undetermined_coefficients(const OperatorPoly& p, const Rational& base, const TPoly& f,
                                       std::size_t degree) {
    const std::size_t n = degree + 1;
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    std::vector<Rational> b(n);
    for (std::size_t row = 0; row < n; ++row) {
        const long t = static_cast<long>(row);
        for (std::size_t j = 0; j < n; ++j) {
            Rational acc;
            for (std::size_t i = 0; i <= p.degree(); ++i) {
                acc += p.coeff(i) * base.pow(static_cast<long>(i)) * Rational(t + static_cast<long>(i)).pow(static_cast<long>(j));
            }
            a[row][j] = acc;
        }
        b[row] = f.eval(Rational(t));
    }
    return TPoly(solve_linear(std::move(a), std::move(b)));
}

}  // namespace opcalc::testing
