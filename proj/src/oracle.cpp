#include "opcalc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "opcalc/errors.hpp"

namespace opcalc {

std::string value_str(const Value& v) {
    if (std::holds_alternative<Rational>(v)) return std::get<Rational>(v).str();
    std::ostringstream os;
    os.precision(17);
    os << std::get<double>(v);
    return os.str();
}

bool VerifyReport::ok() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const VerifyCheck& c) { return c.status == VerifyStatus::mismatch; });
}

std::string method_str(VerifyMethod m) {
    return m == VerifyMethod::iterate ? "iterate" : "forward-apply";
}

std::string status_str(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::exact_match: return "exact-match";
        case VerifyStatus::within_tolerance: return "max-abs-deviation";
        case VerifyStatus::mismatch: return "mismatch-at";
    }
    return "";
}

std::vector<Rational> iterate_recurrence(const Equation& eq, long horizon) {
    if (!eq.initial || eq.initial->empty()) throw MissingInitialConditions();
    const auto& init = *eq.initial;
    const std::size_t n = eq.op.degree();
    if (horizon < static_cast<long>(n) - 1) throw std::invalid_argument("horizon shorter than the initial conditions");

    const long t0 = init.front().t;
    std::vector<Rational> y;
    y.reserve(static_cast<std::size_t>(horizon) + 1);
    for (const auto& c : init) y.push_back(c.value);

    const Rational lead = eq.op.coeff(n);
    while (static_cast<long>(y.size()) <= horizon) {
        const std::size_t base = y.size() - n;
        const long t = t0 + static_cast<long>(base);
        Rational acc = eval_at(eq.rhs, t);
        for (std::size_t i = 0; i < n; ++i) acc -= eq.op.coeff(i) * y[base + i];
        y.push_back(acc / lead);
    }
    y.resize(static_cast<std::size_t>(horizon) + 1);
    return y;
}

namespace {

Rational channel_value(const SequenceExpr& e, const TrigPart& channel, long t) {
    Rational acc;
    for (const auto& term : e.terms()) {
        if (term.trig == channel) acc += eval_amplitude(term, t);
    }
    return acc;
}

std::string channel_name(const TrigPart& trig) {
    return trig.is_none() ? "1" : trig_str(trig);
}

std::vector<long> scan_order(long horizon) {
    std::vector<long> ts;
    for (long t = 0; t <= horizon; ++t) ts.push_back(t);
    for (long t = -1; t >= -horizon; --t) ts.push_back(t);
    return ts;
}

VerifyCheck forward_check(const Equation& eq, const SequenceExpr& particular, long horizon) {
    VerifyCheck check;
    check.method = VerifyMethod::forward_apply;
    check.t_min = -horizon;
    check.t_max = horizon;

    std::set<TrigPart> channels;
    for (const auto& term : particular.terms()) channels.insert(term.trig);
    for (const auto& term : eq.rhs.terms()) channels.insert(term.trig);

    const std::size_t n = eq.op.degree();
    for (const long t : scan_order(horizon)) {
        for (const auto& channel : channels) {
            // The amplitude of channel c picks up c.shift_sign()^i under T^i.
            const Rational sign = channel.shift_sign();
            Rational got;
            Rational power(1);
            for (std::size_t i = 0; i <= n; ++i) {
                const Rational a = eq.op.coeff(i);
                if (!a.is_zero()) got += a * power * channel_value(particular, channel, t + static_cast<long>(i));
                power *= sign;
            }
            const Rational expected = channel_value(eq.rhs, channel, t);
            if (got != expected) {
                check.status = VerifyStatus::mismatch;
                check.mismatch = Mismatch{t, expected, got, channel_name(channel)};
                return check;
            }
        }
    }
    return check;
}

VerifyCheck iteration_check(const Equation& eq, const Solution& sol, long horizon) {
    VerifyCheck check;
    check.method = VerifyMethod::iterate;
    const long t0 = eq.initial->front().t;
    check.t_min = t0;
    check.t_max = t0 + horizon;
    const std::vector<Rational> iterated = iterate_recurrence(eq, horizon);

    if (const auto general = sol.general_exact()) {
        for (std::size_t i = 0; i < iterated.size(); ++i) {
            const long t = t0 + static_cast<long>(i);
            const Rational closed = eval_at(*general, t);
            if (closed != iterated[i]) {
                check.status = VerifyStatus::mismatch;
                check.mismatch = Mismatch{t, iterated[i], closed, "1"};
                return check;
            }
        }
        return check;
    }

    check.status = VerifyStatus::within_tolerance;
    for (std::size_t i = 0; i < iterated.size(); ++i) {
        const long t = t0 + static_cast<long>(i);
        // The particular part is exact, so subtract it before leaving the rationals.
        const Rational residual = iterated[i] - eval_at(sol.particular, t);
        const double dev = std::abs(sol.eval_homogeneous(t) - residual.to_double());
        const double expected = iterated[i].to_double();
        const double closed = sol.eval_general(t);
        check.max_abs_deviation = std::max(check.max_abs_deviation, dev);
        if (!(dev <= kNumericTolerance)) {
            check.status = VerifyStatus::mismatch;
            check.mismatch = Mismatch{t, expected, closed, "1"};
            return check;
        }
    }
    return check;
}

}  // namespace

VerifyReport verify_solution(const Equation& eq, const Solution& sol, long horizon) {
    VerifyReport report;
    report.checks.push_back(forward_check(eq, sol.particular, horizon));
    if (eq.initial && sol.constants) report.checks.push_back(iteration_check(eq, sol, horizon));
    return report;
}

}  // namespace opcalc
