#include "opcalc/expr.hpp"

#include <algorithm>
#include <sstream>

#include "opcalc/errors.hpp"

namespace opcalc {

namespace {

bool key_less(const Term& a, const Term& b) {
    if (a.trig != b.trig) return a.trig < b.trig;
    return a.base < b.base;
}

bool same_key(const Term& a, const Term& b) {
    return a.trig == b.trig && a.base == b.base;
}

Rational parity_power(const Rational& sign, long t) {
    if (sign.is_one()) return Rational(1);
    return (t % 2 == 0) ? Rational(1) : Rational(-1);
}

std::string base_str(const Rational& base, long offset) {
    std::string b = (base.is_integer() && base.sign() > 0) ? base.str() : "(" + base.str() + ")";
    if (offset == 0) return b + "^t";
    return b + "^(t" + (offset < 0 ? "-" : "+") + std::to_string(offset < 0 ? -offset : offset) + ")";
}

// Finds k < 0 with |coeff| = |base|^k, so that coeff * base^t prints as base^(t+k).
bool negative_power_of(const Rational& base, const Rational& coeff, long& k, bool& negated) {
    const Rational b = base.abs();
    const Rational c = coeff.abs();
    if (b.is_one() || c.is_zero()) return false;
    Rational v = b.inverse();
    for (long e = -1; e > -4096; --e, v /= b) {
        if (v == c) {
            const Rational exact = base.pow(e);
            if (exact == coeff) {
                negated = false;
            } else if (exact == -coeff) {
                negated = true;
            } else {
                return false;
            }
            k = e;
            return true;
        }
        if (b > Rational(1) ? v < c : v > c) return false;
    }
    return false;
}

bool is_unit_monomial(const TPoly& p) {
    return !p.is_zero() && p.leading().is_one() && p.lowest_power() == *p.degree();
}

}  // namespace

std::vector<Term> normalize_terms(std::vector<Term> terms) {
    std::vector<Term> merged;
    for (auto& term : terms) {
        if (term.base.is_zero()) throw UnsupportedRhs("geometric base must be nonzero");
        if (term.trig.kind == TrigPart::Kind::sin && term.trig.n == 0) continue;
        if (term.trig.kind == TrigPart::Kind::cos && term.trig.n == 0) term.trig = TrigPart::none();
        // Fold coeff into the polynomial while merging.
        term.poly = term.coeff * term.poly;
        term.coeff = Rational(1);
        auto it = std::find_if(merged.begin(), merged.end(),
                               [&](const Term& m) { return same_key(m, term); });
        if (it == merged.end()) {
            merged.push_back(std::move(term));
        } else {
            it->poly += term.poly;
        }
    }
    std::vector<Term> out;
    for (auto& term : merged) {
        if (term.poly.is_zero()) continue;
        term.coeff = term.poly.leading();
        term.poly = term.poly.monic();
        out.push_back(std::move(term));
    }
    std::sort(out.begin(), out.end(), key_less);
    return out;
}

SequenceExpr normalize(const SequenceExpr& e) {
    return SequenceExpr(e.terms());
}

SequenceExpr::SequenceExpr(std::vector<Term> terms) : terms_(normalize_terms(std::move(terms))) {}

SequenceExpr SequenceExpr::constant(const Rational& c) {
    return single(c, Rational(1), TPoly::constant(1));
}

SequenceExpr SequenceExpr::geometric(const Rational& base, const Rational& coeff) {
    return single(coeff, base, TPoly::constant(1));
}

SequenceExpr SequenceExpr::polynomial(const TPoly& p) {
    return single(Rational(1), Rational(1), p);
}

SequenceExpr SequenceExpr::single(const Rational& coeff, const Rational& base, const TPoly& poly,
                                  TrigPart trig) {
    return SequenceExpr(std::vector<Term>{Term{coeff, base, poly, trig}});
}

bool SequenceExpr::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Term& t = terms_.front();
    return t.base.is_one() && t.trig.is_none() && t.poly.is_constant();
}

SequenceExpr operator+(const SequenceExpr& a, const SequenceExpr& b) {
    std::vector<Term> all = a.terms_;
    all.insert(all.end(), b.terms_.begin(), b.terms_.end());
    return SequenceExpr(std::move(all));
}

SequenceExpr operator-(const SequenceExpr& a, const SequenceExpr& b) {
    return a + (-b);
}

SequenceExpr operator*(const Rational& c, const SequenceExpr& e) {
    std::vector<Term> all = e.terms_;
    for (auto& t : all) t.coeff *= c;
    return SequenceExpr(std::move(all));
}

Rational eval_amplitude(const Term& term, long t) {
    return term.coeff * term.base.pow(t) * term.poly.eval(Rational(t));
}

Rational eval_term(const Term& term, long t) {
    switch (term.trig.kind) {
        case TrigPart::Kind::sin: return Rational();
        case TrigPart::Kind::cos: return eval_amplitude(term, t) * parity_power(term.trig.shift_sign(), t);
        case TrigPart::Kind::none: break;
    }
    return eval_amplitude(term, t);
}

Rational eval_at(const SequenceExpr& e, long t) {
    Rational acc;
    for (const auto& term : e.terms()) acc += eval_term(term, t);
    return acc;
}

Term shift_term(const Term& term, long k) {
    Term out = term;
    out.coeff = term.coeff * term.base.pow(k) * parity_power(term.trig.shift_sign(), k);
    out.poly = taylor_shift(term.poly, Rational(k));
    return out;
}

SequenceExpr shift(const SequenceExpr& e, long k) {
    std::vector<Term> out;
    out.reserve(e.terms().size());
    for (const auto& term : e.terms()) out.push_back(shift_term(term, k));
    return SequenceExpr(std::move(out));
}

SequenceExpr apply_operator(const OperatorPoly& p, const SequenceExpr& e) {
    std::vector<Term> out;
    for (std::size_t i = 0; i <= p.degree(); ++i) {
        const Rational a = p.coeff(i);
        if (a.is_zero()) continue;
        for (const auto& term : e.terms()) {
            Term shifted = shift_term(term, static_cast<long>(i));
            shifted.coeff *= a;
            out.push_back(std::move(shifted));
        }
    }
    return SequenceExpr(std::move(out));
}

SequenceExpr multiply(const SequenceExpr& a, const SequenceExpr& b) {
    std::vector<Term> out;
    for (const auto& x : a.terms()) {
        for (const auto& y : b.terms()) {
            if (!x.trig.is_none() && !y.trig.is_none()) {
                throw UnsupportedRhs("product of two trigonometric factors is not supported");
            }
            out.push_back(Term{x.coeff * y.coeff, x.base * y.base, x.poly * y.poly,
                               x.trig.is_none() ? y.trig : x.trig});
        }
    }
    return SequenceExpr(std::move(out));
}

std::string trig_str(const TrigPart& trig) {
    if (trig.is_none()) return "";
    std::string s = trig.kind == TrigPart::Kind::cos ? "cos(" : "sin(";
    if (trig.n != 1) s += std::to_string(trig.n) + "*";
    return s + "pi*t)";
}

std::string term_str(const Term& term) {
    if (term.base.is_one() && term.trig.is_none()) return (term.coeff * term.poly).str('t');

    std::vector<std::string> parts;
    bool negated = false;
    bool base_done = false;
    if (term.coeff == Rational(-1)) {
        negated = true;
    } else if (!term.coeff.is_one()) {
        long k = 0;
        if (!term.base.is_one() && negative_power_of(term.base, term.coeff, k, negated)) {
            parts.push_back(base_str(term.base, k));
            base_done = true;
        } else {
            parts.push_back(term.coeff.str());
        }
    }
    if (!term.base.is_one() && !base_done) parts.push_back(base_str(term.base, 0));
    if (!(term.poly == TPoly::constant(1))) {
        parts.push_back(is_unit_monomial(term.poly) ? term.poly.str('t') : "(" + term.poly.str('t') + ")");
    }
    if (!term.trig.is_none()) parts.push_back(trig_str(term.trig));

    std::string s = negated ? "-" : "";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) s += " * ";
        s += parts[i];
    }
    return s;
}

std::string SequenceExpr::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        std::string t = term_str(terms_[i]);
        if (i == 0) {
            s = t;
        } else if (!t.empty() && t.front() == '-') {
            s += " - " + t.substr(1);
        } else {
            s += " + " + t;
        }
    }
    return s;
}

}  // namespace opcalc
