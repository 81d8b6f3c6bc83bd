#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "opcalc/expr.hpp"
#include "opcalc/operator_poly.hpp"
#include "opcalc/rational.hpp"
#include "opcalc/tpoly.hpp"

namespace opcalc {

/// y(t) = value
struct InitialCondition {
    long t = 0;
    Rational value;

    friend bool operator==(const InitialCondition&, const InitialCondition&) = default;
};

/// P(T) y = rhs, optionally with n consecutive initial conditions.
struct Equation {
    OperatorPoly op;
    SequenceExpr rhs;
    std::optional<std::vector<InitialCondition>> initial;

    /// Checks degree >= 1 and that initial conditions (if any) are n consecutive abscissae.
    void validate() const;
    /// "y(t+2) - 5*y(t+1) + 4*y(t) = 3^t"
    std::string str() const;

    friend bool operator==(const Equation&, const Equation&) = default;
};

/// Rule identifiers recorded in a solve trace.
enum class Rule {
    linearity,            // split the right-hand side term by term, and reassemble
    inverse_translation,  // 1/T^k f(t) = f(t - k)
    power_rule,           // 1/P(T) b^t = b^t / P(b)
    cosine_rule,          // 1/P(T) cos(n pi t) = cos(n pi t) / P((-1)^n)
    sine_rule,            // 1/P(T) sin(n pi t) = sin(n pi t) / P((-1)^n)
    scale_rule,           // 1/P(T) b^t f(t) = b^t 1/P(bT) f(t)
    shift_theorem,        // 1/P(T - b) b^t f(t) = b^t 1/P(b(T - 1)) f(t)
    delta_inversion,      // 1/R(Delta) f by truncated power series
    unity,                // 1/(T - 1) 1 = t
    propagation,          // repeated antidifference in the falling-factorial basis
};

std::string rule_id(Rule rule);
std::string rule_label(Rule rule);

struct TraceStep {
    Rule rule;
    std::string before;
    std::string after;
    std::string note;
};

struct SolveTrace {
    std::vector<TraceStep> steps;
};

/// Homogeneous mode t^power * modulus^t * cos(angle t) (or sin) for a root
/// that is not rational.
struct NumericMode {
    double modulus = 0.0;
    double angle = 0.0;
    std::size_t power = 0;
    bool sine = false;

    double eval(long t) const;
    std::string str() const;
};

struct BasisElement {
    std::variant<SequenceExpr, NumericMode> value;

    bool is_exact() const { return std::holds_alternative<SequenceExpr>(value); }
    const SequenceExpr& exact() const { return std::get<SequenceExpr>(value); }
    const NumericMode& numeric() const { return std::get<NumericMode>(value); }
    double eval_numeric(long t) const;
    std::string str() const;
};

using Constant = std::variant<Rational, double>;

struct Solution {
    SequenceExpr particular;
    std::vector<BasisElement> homogeneous;
    std::optional<std::vector<Constant>> constants;
    SolveTrace trace;

    bool exact_basis() const;
    /// y_P + sum c_i basis_i when the basis is exact and constants were fitted.
    std::optional<SequenceExpr> general_exact() const;
    /// y_G(t) in floating point; requires fitted constants.
    double eval_general(long t) const;
    /// The fitted homogeneous part alone, in floating point.
    double eval_homogeneous(long t) const;
};

struct ParticularResult {
    SequenceExpr solution;
    SolveTrace trace;
};

/// y_P with P(T) y_P = rhs exactly. Deterministic, linear in rhs.
ParticularResult solve_particular(const OperatorPoly& p, const SequenceExpr& rhs);

/// g with Delta^m g = f, each intermediate sum vanishing at t = 0. Requires m >= 1.
TPoly antidifference(const TPoly& f, std::size_t m);

/// Coordinates of f in the falling-factorial basis t^(k) = t(t-1)...(t-k+1).
std::vector<Rational> to_falling_factorial(const TPoly& f);
TPoly from_falling_factorial(const std::vector<Rational>& b);

/// Basis of P(T) y = 0 on the integers: t^j b^t for every nonzero root b of multiplicity > j.
std::vector<BasisElement> solve_homogeneous(const OperatorPoly& p);

/// Tolerance used for pivots when the basis includes numeric modes.
inline constexpr double kPivotTolerance = 1e-12;

/// Coefficients c_i with y_P(t_k) + sum c_i basis_i(t_k) = value_k for each condition.
std::vector<Constant> fit_constants(const OperatorPoly& p, const SequenceExpr& particular,
                                    const std::vector<BasisElement>& basis,
                                    const std::vector<InitialCondition>& initial);

/// Particular + homogeneous (+ fitted constants).
Solution solve(const Equation& eq);

}  // namespace opcalc
