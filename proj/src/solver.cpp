#include "opcalc/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "opcalc/errors.hpp"
#include "opcalc/roots.hpp"

namespace opcalc {

std::string rule_id(Rule rule) {
    switch (rule) {
        case Rule::linearity: return "linearity";
        case Rule::inverse_translation: return "inverse-translation";
        case Rule::power_rule: return "power-rule";
        case Rule::cosine_rule: return "cosine-rule";
        case Rule::sine_rule: return "sine-rule";
        case Rule::scale_rule: return "scale-rule";
        case Rule::shift_theorem: return "shift-theorem";
        case Rule::delta_inversion: return "delta-inversion";
        case Rule::unity: return "unity";
        case Rule::propagation: return "propagation";
    }
    return "unknown";
}

std::string rule_label(Rule rule) {
    switch (rule) {
        case Rule::linearity: return "linearity: 1/P(T) [a f + b g] = a/P(T) f + b/P(T) g";
        case Rule::inverse_translation: return "inverse translation: 1/T^k f(t) = f(t-k)";
        case Rule::power_rule: return "power rule: 1/P(T) b^t = b^t / P(b)";
        case Rule::cosine_rule: return "cosine rule: 1/P(T) cos(n*pi*t) = cos(n*pi*t) / P((-1)^n)";
        case Rule::sine_rule: return "sine rule: 1/P(T) sin(n*pi*t) = sin(n*pi*t) / P((-1)^n)";
        case Rule::scale_rule: return "scale rule: 1/P(T) b^t f(t) = b^t 1/P(bT) f(t)";
        case Rule::shift_theorem: return "shift theorem: 1/P(T-b) b^t f(t) = b^t 1/P(b(T-1)) f(t)";
        case Rule::delta_inversion: return "difference-basis inversion: 1/R(D) f = sum c_k D^k f, D = T - 1";
        case Rule::unity: return "unity: 1/(T-1) 1 = t";
        case Rule::propagation: return "propagation: 1/(T-1)^m f by repeated antidifference";
    }
    return "";
}

// ---------------------------------------------------------------------------
// Equation

void Equation::validate() const {
    if (op.degree() < 1) throw SemanticError("equation must involve at least two shifts of y");
    if (!initial) return;
    if (initial->size() != op.degree()) {
        throw SemanticError("expected " + std::to_string(op.degree()) + " initial conditions, got " +
                            std::to_string(initial->size()));
    }
    for (std::size_t i = 1; i < initial->size(); ++i) {
        if ((*initial)[i].t != (*initial)[i - 1].t + 1) {
            throw NonConsecutiveConditions("initial conditions must be at consecutive t");
        }
    }
}

std::string Equation::str() const {
    std::string lhs;
    for (std::size_t i = op.degree() + 1; i-- > 0;) {
        const Rational a = op.coeff(i);
        if (a.is_zero()) continue;
        const std::string y = i == 0 ? "y(t)" : "y(t+" + std::to_string(i) + ")";
        const Rational mag = a.abs();
        if (lhs.empty()) {
            if (a.sign() < 0) lhs += "-";
        } else {
            lhs += a.sign() < 0 ? " - " : " + ";
        }
        if (!mag.is_one()) lhs += mag.str() + "*";
        lhs += y;
    }
    return lhs + " = " + rhs.str();
}

// ---------------------------------------------------------------------------
// Falling factorials and antidifference

std::vector<Rational> to_falling_factorial(const TPoly& f) {
    if (f.is_zero()) return {};
    const std::size_t d = *f.degree();
    std::vector<Rational> table(d + 1);
    for (std::size_t i = 0; i <= d; ++i) table[i] = f.eval(Rational(static_cast<long>(i)));
    std::vector<Rational> b(d + 1);
    Rational factorial(1);
    for (std::size_t k = 0; k <= d; ++k) {
        if (k > 0) factorial *= Rational(static_cast<long>(k));
        b[k] = table[0] / factorial;
        for (std::size_t i = 0; i + 1 < table.size() - k; ++i) table[i] = table[i + 1] - table[i];
    }
    return b;
}

TPoly from_falling_factorial(const std::vector<Rational>& b) {
    TPoly result;
    TPoly falling = TPoly::constant(1);
    for (std::size_t k = 0; k < b.size(); ++k) {
        result += b[k] * falling;
        falling *= TPoly::linear_factor(Rational(static_cast<long>(k)));
    }
    return result;
}

TPoly antidifference(const TPoly& f, std::size_t m) {
    if (m == 0) throw std::invalid_argument("antidifference order must be at least 1");
    std::vector<Rational> b = to_falling_factorial(f);
    for (std::size_t level = 0; level < m; ++level) {
        std::vector<Rational> next(b.size() + 1);
        for (std::size_t k = 0; k < b.size(); ++k) next[k + 1] = b[k] / Rational(static_cast<long>(k + 1));
        b = std::move(next);
    }
    return from_falling_factorial(b);
}

// ---------------------------------------------------------------------------
// Particular solution

namespace {

std::string inverse_str(const OperatorPoly& p, const std::string& arg) {
    return "1/(" + p.str() + ") [" + arg + "]";
}

std::string delta_inverse_str(const TPoly& q, const std::string& arg) {
    return "1/(" + q.str('D') + ") [" + arg + "]";
}

// "b^t * cos(pi*t) * " style prefix for a lifted difference-basis problem.
std::string lift_prefix(const Rational& base, const TrigPart& trig) {
    std::string s;
    if (!base.is_one()) {
        s += (base.is_integer() && base.sign() > 0 ? base.str() : "(" + base.str() + ")") + "^t * ";
    }
    if (!trig.is_none()) s += trig_str(trig) + " * ";
    return s;
}

class ParticularSolver {
public:
    explicit ParticularSolver(SolveTrace& trace) : trace_(trace) {}

    SequenceExpr solve(const OperatorPoly& p, const SequenceExpr& rhs) {
        if (const std::size_t k = p.translation_order(); k > 0) {
            const OperatorPoly reduced = p.drop_translation(k);
            record(Rule::inverse_translation, inverse_str(p, rhs.str()),
                   "T^(-" + std::to_string(k) + ") " + inverse_str(reduced, rhs.str()),
                   "factor out T^" + std::to_string(k));
            const SequenceExpr z = solve_reduced(reduced, rhs);
            const SequenceExpr y = shift(z, -static_cast<long>(k));
            record(Rule::inverse_translation, "T^(-" + std::to_string(k) + ") [" + z.str() + "]", y.str(),
                   "t -> t-" + std::to_string(k));
            return y;
        }
        return solve_reduced(p, rhs);
    }

private:
    SequenceExpr solve_reduced(const OperatorPoly& p, const SequenceExpr& rhs) {
        const auto& terms = rhs.terms();
        if (terms.size() > 1) {
            std::string split;
            for (const auto& term : terms) {
                if (!split.empty()) split += " + ";
                split += inverse_str(p, term_str(term));
            }
            record(Rule::linearity, inverse_str(p, rhs.str()), split, "");
        }
        SequenceExpr result;
        for (const auto& term : terms) result = result + solve_term(p, term);
        if (terms.size() > 1) record(Rule::linearity, "sum of term solutions", result.str(), "reassemble");
        return result;
    }

    SequenceExpr solve_term(const OperatorPoly& p, const Term& term) {
        const std::string before = inverse_str(p, term_str(term));
        const Rational& lambda = term.base;
        const Rational mu = term.trig.shift_sign();
        const bool constant_poly = term.poly.is_constant();

        // Pure b^t, non-resonant.
        if (term.trig.is_none() && constant_poly) {
            const Rational denom = eval_scalar(p, lambda);
            if (!denom.is_zero()) {
                SequenceExpr y = SequenceExpr::geometric(lambda, term.coeff / denom);
                record(Rule::power_rule, before, y.str(), "P(" + lambda.str() + ") = " + denom.str());
                return y;
            }
        }
        // Pure cos/sin(n pi t), non-resonant.
        if (lambda.is_one() && !term.trig.is_none() && constant_poly) {
            const Rational denom = eval_scalar(p, mu);
            if (!denom.is_zero()) {
                SequenceExpr y = SequenceExpr::single(term.coeff / denom, lambda, term.poly, term.trig);
                const Rule rule = term.trig.kind == TrigPart::Kind::cos ? Rule::cosine_rule : Rule::sine_rule;
                record(rule, before, y.str(), "P((-1)^" + std::to_string(term.trig.n) + ") = " + denom.str());
                return y;
            }
        }

        const TPoly amplitude = term.coeff * term.poly;
        // Pure polynomial: rewrite P in D = T - 1 directly.
        if (lambda.is_one() && term.trig.is_none()) {
            const TPoly q = to_delta_basis(p);
            return solve_delta(q, amplitude, lambda, term.trig);
        }

        const Rational rho = lambda * mu;
        const RootFactor resonance = factor_root(p, rho);
        if (resonance.multiplicity > 0) {
            // P(T) = P~(T - rho) and 1/P~(T - rho) rho^t f = rho^t 1/P~(rho (T - 1)) f.
            const TPoly shifted = taylor_shift(p.poly(), rho);
            const TPoly q = scale_argument(OperatorPoly(shifted), rho).poly();
            record(Rule::shift_theorem, before,
                   lift_prefix(lambda, term.trig) + delta_inverse_str(q, amplitude.str('t')),
                   "(T - " + rho.str() + ")^" + std::to_string(resonance.multiplicity) + " divides P; P(T) = Q(T - " +
                       rho.str() + ") with Q(u) = " + shifted.str('u'));
            return solve_delta(q, amplitude, lambda, term.trig);
        }

        OperatorPoly scaled = p;
        if (!lambda.is_one()) {
            scaled = scale_argument(p, lambda);
            record(Rule::scale_rule, before,
                   lift_prefix(lambda, TrigPart::none()) +
                       inverse_str(scaled, term_str(Term{term.coeff, Rational(1), term.poly, term.trig})),
                   "P(" + lambda.str() + "T) = " + scaled.str());
        }
        if (constant_poly) {
            // Trig factor over the scaled operator.
            const Rational denom = eval_scalar(scaled, mu);
            SequenceExpr y = SequenceExpr::single(term.coeff / denom, lambda, term.poly, term.trig);
            const Rule rule = term.trig.kind == TrigPart::Kind::cos ? Rule::cosine_rule : Rule::sine_rule;
            record(rule, inverse_str(scaled, trig_str(term.trig)), y.str(),
                   "P((-1)^" + std::to_string(term.trig.n) + ") = " + denom.str());
            return y;
        }
        const TPoly q = to_delta_basis(scale_argument(scaled, mu));
        return solve_delta(q, amplitude, lambda, term.trig);
    }

    // Solve Q(D) g = f on polynomials and lift to base^t * g(t) * trig.
    SequenceExpr solve_delta(const TPoly& q, const TPoly& f, const Rational& base, const TrigPart& trig) {
        const std::size_t m = q.lowest_power();
        const TPoly r = q.drop_low(m);
        const std::size_t order = f.degree().value_or(0);
        const std::vector<Rational> inv = series_inverse(r, order);

        TPoly h;
        TPoly diff = f;
        for (std::size_t k = 0; k <= order && !diff.is_zero(); ++k) {
            h += inv[k] * diff;
            diff = forward_difference(diff);
        }

        const auto lift = [&](const TPoly& g) {
            return SequenceExpr::single(Rational(1), base, g, trig);
        };

        if (m == 0 || !r.is_constant()) {
            std::string coeffs;
            for (const auto& c : inv) coeffs += (coeffs.empty() ? "" : ", ") + c.str();
            const std::string target =
                m == 0 ? lift(h).str()
                       : lift_prefix(base, trig) + delta_inverse_str(TPoly::monomial(Rational(1), m), h.str('t'));
            record(Rule::delta_inversion, delta_inverse_str(q, f.str('t')), target, "1/(" + r.str('D') + ") = " + coeffs + " + O(D^" + std::to_string(order + 1) + ")");
            if (m == 0) return lift(h);
        }

        const TPoly g = antidifference(h, m);
        const Rule rule = (m == 1 && h.is_constant()) ? Rule::unity : Rule::propagation;
        // With a constant cofactor, show the problem as 1/(r D^m) [r h] like the hand derivation.
        const Rational scale = r.is_constant() ? r.coeff(0) : Rational(1);
        SequenceExpr y = lift(g);
        record(rule, delta_inverse_str(scale * TPoly::monomial(Rational(1), m), (scale * h).str('t')), y.str(),
               "antidifference of order " + std::to_string(m) + ": " + g.str('t'));
        return y;
    }

    void record(Rule rule, std::string before, std::string after, std::string note) {
        trace_.steps.push_back({rule, std::move(before), std::move(after), std::move(note)});
    }

    SolveTrace& trace_;
};

}  // namespace

ParticularResult solve_particular(const OperatorPoly& p, const SequenceExpr& rhs) {
    ParticularResult out;
    ParticularSolver solver(out.trace);
    out.solution = solver.solve(p, normalize(rhs));
    return out;
}

// ---------------------------------------------------------------------------
// Homogeneous solution

double NumericMode::eval(long t) const {
    const double td = static_cast<double>(t);
    double trig = 0.0;
    if (sine) {
        trig = std::sin(angle * td);
    } else if (angle == 0.0) {
        trig = 1.0;
    } else if (angle == std::numbers::pi) {
        trig = (t % 2 == 0) ? 1.0 : -1.0;
    } else {
        trig = std::cos(angle * td);
    }
    return std::pow(td, static_cast<double>(power)) * std::pow(modulus, td) * trig;
}

std::string NumericMode::str() const {
    std::ostringstream os;
    os.precision(12);
    if (power == 1) os << "t * ";
    if (power > 1) os << "t^" << power << " * ";
    os << modulus << "^t";
    if (angle != 0.0) os << " * " << (sine ? "sin(" : "cos(") << angle << "*t)";
    return os.str();
}

double BasisElement::eval_numeric(long t) const {
    if (is_exact()) return eval_at(exact(), t).to_double();
    return numeric().eval(t);
}

std::string BasisElement::str() const {
    return is_exact() ? exact().str() : numeric().str();
}

std::vector<BasisElement> solve_homogeneous(const OperatorPoly& p) {
    std::vector<BasisElement> basis;
    if (p.degree() < 1) return basis;
    const RootSet roots = find_roots(p.poly());
    for (const auto& root : roots.roots) {
        for (std::size_t j = 0; j < root.multiplicity; ++j) {
            if (root.is_exact()) {
                // T is invertible on sequences over the integers: a zero root contributes nothing.
                if (root.exact().is_zero()) break;
                basis.push_back({SequenceExpr::single(Rational(1), root.exact(), TPoly::monomial(Rational(1), j))});
                continue;
            }
            const std::complex<double> z = root.numeric();
            if (z.imag() < 0) break;
            if (z.imag() == 0) {
                basis.push_back({NumericMode{std::abs(z.real()), z.real() < 0 ? std::numbers::pi : 0.0, j, false}});
                continue;
            }
            basis.push_back({NumericMode{std::abs(z), std::arg(z), j, false}});
            basis.push_back({NumericMode{std::abs(z), std::arg(z), j, true}});
        }
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Constants

namespace {

void check_conditions(const OperatorPoly& p, const std::vector<InitialCondition>& initial) {
    if (initial.size() != p.degree()) {
        throw SemanticError("expected " + std::to_string(p.degree()) + " initial conditions, got " +
                            std::to_string(initial.size()));
    }
    for (std::size_t i = 1; i < initial.size(); ++i) {
        if (initial[i].t != initial[i - 1].t + 1) {
            throw NonConsecutiveConditions("initial conditions must be at consecutive t");
        }
    }
}

std::vector<Constant> solve_exact(std::vector<std::vector<Rational>> a, std::size_t unknowns) {
    const std::size_t rows = a.size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < unknowns; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) throw SingularSystem("initial conditions do not determine the constants");
        std::swap(a[pivot], a[rank]);
        const Rational inv = a[rank][col].inverse();
        for (auto& x : a[rank]) x *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col].is_zero()) continue;
            const Rational f = a[r][col];
            for (std::size_t c = 0; c <= unknowns; ++c) a[r][c] -= f * a[rank][c];
        }
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r) {
        if (!a[r][unknowns].is_zero()) {
            throw SingularSystem("initial conditions are inconsistent with the closed form");
        }
    }
    std::vector<Constant> out;
    for (std::size_t i = 0; i < unknowns; ++i) out.emplace_back(a[i][unknowns]);
    return out;
}

std::vector<Constant> solve_numeric(std::vector<std::vector<double>> a, std::size_t unknowns) {
    const std::size_t rows = a.size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < unknowns; ++col) {
        std::size_t pivot = rank;
        for (std::size_t r = rank; r < rows; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        }
        if (pivot >= rows || std::abs(a[pivot][col]) < kPivotTolerance) {
            throw SingularSystem("initial conditions do not determine the constants");
        }
        std::swap(a[pivot], a[rank]);
        const double inv = 1.0 / a[rank][col];
        for (auto& x : a[rank]) x *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            const double f = a[r][col];
            for (std::size_t c = 0; c <= unknowns; ++c) a[r][c] -= f * a[rank][c];
        }
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r) {
        if (std::abs(a[r][unknowns]) > 1e-8) {
            throw SingularSystem("initial conditions are inconsistent with the closed form");
        }
    }
    std::vector<Constant> out;
    for (std::size_t i = 0; i < unknowns; ++i) out.emplace_back(a[i][unknowns]);
    return out;
}

}  // namespace

std::vector<Constant> fit_constants(const OperatorPoly& p, const SequenceExpr& particular,
                                    const std::vector<BasisElement>& basis,
                                    const std::vector<InitialCondition>& initial) {
    check_conditions(p, initial);
    const bool exact = std::all_of(basis.begin(), basis.end(), [](const BasisElement& b) { return b.is_exact(); });
    const std::size_t r = basis.size();
    if (exact) {
        std::vector<std::vector<Rational>> a(initial.size(), std::vector<Rational>(r + 1));
        for (std::size_t k = 0; k < initial.size(); ++k) {
            const long t = initial[k].t;
            for (std::size_t i = 0; i < r; ++i) a[k][i] = eval_at(basis[i].exact(), t);
            a[k][r] = initial[k].value - eval_at(particular, t);
        }
        return solve_exact(std::move(a), r);
    }
    std::vector<std::vector<double>> a(initial.size(), std::vector<double>(r + 1));
    for (std::size_t k = 0; k < initial.size(); ++k) {
        const long t = initial[k].t;
        for (std::size_t i = 0; i < r; ++i) a[k][i] = basis[i].eval_numeric(t);
        a[k][r] = (initial[k].value - eval_at(particular, t)).to_double();
    }
    return solve_numeric(std::move(a), r);
}

// ---------------------------------------------------------------------------
// Solution

bool Solution::exact_basis() const {
    return std::all_of(homogeneous.begin(), homogeneous.end(), [](const BasisElement& b) { return b.is_exact(); });
}

std::optional<SequenceExpr> Solution::general_exact() const {
    if (!constants || !exact_basis()) return std::nullopt;
    SequenceExpr y = particular;
    for (std::size_t i = 0; i < homogeneous.size(); ++i) {
        y = y + std::get<Rational>((*constants)[i]) * homogeneous[i].exact();
    }
    return y;
}

double Solution::eval_homogeneous(long t) const {
    if (!constants) throw std::logic_error("constants have not been fitted");
    double y = 0.0;
    for (std::size_t i = 0; i < homogeneous.size(); ++i) {
        const auto& c = (*constants)[i];
        const double cv = std::holds_alternative<Rational>(c) ? std::get<Rational>(c).to_double() : std::get<double>(c);
        y += cv * homogeneous[i].eval_numeric(t);
    }
    return y;
}

double Solution::eval_general(long t) const {
    return eval_at(particular, t).to_double() + eval_homogeneous(t);
}

Solution solve(const Equation& eq) {
    eq.validate();
    Solution sol;
    auto particular = solve_particular(eq.op, eq.rhs);
    sol.particular = std::move(particular.solution);
    sol.trace = std::move(particular.trace);
    sol.homogeneous = solve_homogeneous(eq.op);
    if (eq.initial) sol.constants = fit_constants(eq.op, sol.particular, sol.homogeneous, *eq.initial);
    return sol;
}

}  // namespace opcalc
