#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "opcalc/rational.hpp"
#include "opcalc/solver.hpp"

namespace opcalc {

/// Absolute tolerance for comparisons that involve numeric homogeneous modes.
inline constexpr double kNumericTolerance = 1e-8;
inline constexpr long kDefaultHorizon = 50;

enum class VerifyMethod { forward_apply, iterate };
enum class VerifyStatus { exact_match, within_tolerance, mismatch };

using Value = std::variant<Rational, double>;
std::string value_str(const Value& v);

struct Mismatch {
    long t = 0;
    Value expected;
    Value got;
    /// Trig channel the disagreement was found in ("1", "cos(pi*t)", ...).
    std::string channel;
};

struct VerifyCheck {
    VerifyMethod method = VerifyMethod::forward_apply;
    long t_min = 0;
    long t_max = 0;
    VerifyStatus status = VerifyStatus::exact_match;
    double max_abs_deviation = 0.0;
    std::optional<Mismatch> mismatch;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    bool ok() const;
};

std::string method_str(VerifyMethod m);
std::string status_str(VerifyStatus s);

/// y(t0), ..., y(t0 + horizon) by stepping the recurrence forward exactly
/// from the initial conditions. Shares nothing with the rule engine.
std::vector<Rational> iterate_recurrence(const Equation& eq, long horizon);

/// Forward-applies P to the particular solution on -horizon..horizon and,
/// when constants were fitted, compares y_G with iteration on t0..t0+horizon.
///
/// The forward check runs per trig channel: the amplitude multiplying
/// cos(n*pi*t) (or sin) is compared separately, so sine terms are checked
/// even though they vanish on the integers. Points are scanned 0..horizon
/// first, then -1..-horizon, and the first disagreement is reported.
VerifyReport verify_solution(const Equation& eq, const Solution& sol, long horizon = kDefaultHorizon);

}  // namespace opcalc
