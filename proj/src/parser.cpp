#include "opcalc/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <string>

#include "opcalc/errors.hpp"

namespace opcalc {

namespace {

enum class Tok { number, ident, punct, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    std::size_t offset = 0;

    bool is(char c) const { return kind == Tok::punct && text.size() == 1 && text[0] == c; }
    bool is_ident(std::string_view name) const { return kind == Tok::ident && text == name; }
};

std::string snippet_at(std::string_view src, std::size_t offset) {
    const std::size_t from = offset > 12 ? offset - 12 : 0;
    return std::string(src.substr(from, 24));
}

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    const auto fail = [&](std::size_t at, const char* expected) {
        throw ParseError(at, expected, snippet_at(src, at));
    };
    while (i < src.size()) {
        const auto c = static_cast<unsigned char>(src[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(c)) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            if (i < src.size() && src[i] == '.') {
                ++i;
                if (i >= src.size() || !std::isdigit(static_cast<unsigned char>(src[i]))) fail(i, "digit");
                while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            }
            out.push_back({Tok::number, std::string(src.substr(start, i - start)), start});
        } else if (std::isalpha(c) || c == '_') {
            while (i < src.size() && (std::isalpha(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
            out.push_back({Tok::ident, std::string(src.substr(start, i - start)), start});
        } else if (std::string_view("+-*/^()=,").find(static_cast<char>(c)) != std::string_view::npos) {
            out.push_back({Tok::punct, std::string(1, static_cast<char>(c)), start});
            ++i;
        } else {
            fail(start, "operator, number or identifier");
        }
    }
    out.push_back({Tok::end, "", src.size()});
    return out;
}

/// Linear combination of y(t+k) plus a known sequence.
struct Value {
    std::map<long, Rational> y;
    SequenceExpr known;

    bool has_y() const { return !y.empty(); }
};

Value known_value(SequenceExpr e) {
    return Value{{}, std::move(e)};
}

Value add(Value a, const Value& b, const Rational& sign) {
    for (const auto& [k, c] : b.y) {
        a.y[k] += sign * c;
        if (a.y[k].is_zero()) a.y.erase(k);
    }
    a.known = a.known + sign * b.known;
    return a;
}

Value scale(Value v, const Rational& c) {
    for (auto it = v.y.begin(); it != v.y.end();) {
        it->second *= c;
        it = it->second.is_zero() ? v.y.erase(it) : std::next(it);
    }
    v.known = c * v.known;
    return v;
}

Rational constant_of(const SequenceExpr& e) {
    return e.is_zero() ? Rational() : e.terms().front().coeff;
}

class Parser {
public:
    Parser(std::string_view src, char var, bool allow_y) : src_(src), toks_(tokenize(src)), var_(var), allow_y_(allow_y) {}

    Value parse_expr() {
        Value acc;
        bool first = true;
        while (true) {
            Rational sign(1);
            if (peek().is('+') || peek().is('-')) {
                sign = peek().is('-') ? Rational(-1) : Rational(1);
                next();
            } else if (!first) {
                break;
            }
            acc = add(std::move(acc), parse_term(), sign);
            first = false;
        }
        return acc;
    }

    void expect(char c, const char* expected) {
        if (!peek().is(c)) fail(expected);
        next();
    }

    void expect_end() {
        if (peek().kind != Tok::end) fail("end of input");
    }

    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
    const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

    [[noreturn]] void fail(const char* expected) const {
        throw ParseError(peek().offset, expected, snippet_at(src_, peek().offset));
    }

    long parse_integer(const char* expected) {
        const Token& tok = peek();
        if (tok.kind != Tok::number || tok.text.find('.') != std::string::npos || tok.text.size() > 15) fail(expected);
        next();
        return std::stol(tok.text);
    }

    long parse_signed_integer(const char* expected) {
        long sign = 1;
        if (peek().is('-') || peek().is('+')) {
            sign = peek().is('-') ? -1 : 1;
            next();
        }
        return sign * parse_integer(expected);
    }

    // '(' 't' [('+'|'-') int] ')' after the caller consumed "y" or "^".
    long parse_t_offset() {
        if (!peek().is_ident("t")) fail("t");
        next();
        long offset = 0;
        if (peek().is('+') || peek().is('-')) {
            const long sign = peek().is('-') ? -1 : 1;
            next();
            offset = sign * parse_integer("integer shift");
        }
        return offset;
    }

private:
    Value parse_term() {
        Value acc = parse_unary();
        while (true) {
            const Token& tok = peek();
            if (tok.is('*')) {
                next();
                acc = multiply_values(std::move(acc), parse_unary(), tok.offset);
            } else if (tok.is('/')) {
                const std::size_t at = tok.offset;
                next();
                const std::size_t divisor_at = peek().offset;
                Value d = parse_unary();
                if (d.has_y() || !d.known.is_constant()) throw UnsupportedRhs("division by a non-constant at offset " + std::to_string(divisor_at));
                const Rational c = constant_of(d.known);
                if (c.is_zero()) throw SemanticError("division by zero at offset " + std::to_string(at));
                acc = scale(std::move(acc), c.inverse());
            } else if (tok.kind == Tok::ident || tok.is('(')) {
                const std::size_t at = tok.offset;
                acc = multiply_values(std::move(acc), parse_power(), at);
            } else {
                break;
            }
        }
        return acc;
    }

    Value parse_unary() {
        if (peek().is('-')) {
            next();
            return scale(parse_unary(), Rational(-1));
        }
        if (peek().is('+')) {
            next();
            return parse_unary();
        }
        return parse_power();
    }

    Value multiply_values(Value a, Value b, std::size_t at) {
        if (a.has_y() && b.has_y()) throw SemanticError("product of unknowns at offset " + std::to_string(at));
        if (b.has_y()) std::swap(a, b);
        if (a.has_y()) {
            if (!b.known.is_constant()) {
                throw SemanticError("y must have constant coefficients (offset " + std::to_string(at) + ")");
            }
            return scale(std::move(a), constant_of(b.known));
        }
        try {
            return known_value(multiply(a.known, b.known));
        } catch (const UnsupportedRhs& e) {
            throw UnsupportedRhs(std::string(e.what()) + " (offset " + std::to_string(at) + ")");
        }
    }

    Value parse_power() {
        const std::size_t base_at = peek().offset;
        Value base = parse_primary();
        if (!peek().is('^')) return base;
        next();

        // Geometric exponent: c^t or c^(t+k).
        bool geometric = false;
        long offset = 0;
        if (peek().is_ident("t")) {
            next();
            geometric = true;
        } else if (peek().is('(') && peek(1).is_ident("t")) {
            next();
            offset = parse_t_offset();
            expect(')', "')'");
            geometric = true;
        }
        if (geometric) {
            if (var_ != 't') throw ParseError(base_at, "polynomial in T", snippet_at(src_, base_at));
            if (base.has_y() || !base.known.is_constant()) {
                throw UnsupportedRhs("only a rational constant may be raised to the power t (offset " +
                                     std::to_string(base_at) + ")");
            }
            const Rational b = constant_of(base.known);
            if (b.is_zero()) throw UnsupportedRhs("geometric base must be nonzero (offset " + std::to_string(base_at) + ")");
            return known_value(SequenceExpr::geometric(b, b.pow(offset)));
        }

        long exponent = 0;
        if (peek().is('(')) {
            next();
            exponent = parse_signed_integer("integer exponent");
            expect(')', "')'");
        } else if (peek().kind == Tok::number || peek().is('-') || peek().is('+')) {
            exponent = parse_signed_integer("integer exponent");
        } else if (peek().kind == Tok::ident) {
            throw UnsupportedRhs("exponent '" + peek().text + "' is not supported (offset " +
                                 std::to_string(peek().offset) + ")");
        } else {
            fail("exponent");
        }

        if (base.has_y()) {
            if (exponent == 1) return base;
            throw SemanticError("y must appear linearly (offset " + std::to_string(base_at) + ")");
        }
        if (exponent < 0) {
            if (!base.known.is_constant()) {
                throw UnsupportedRhs("negative power of a non-constant (offset " + std::to_string(base_at) + ")");
            }
            const Rational c = constant_of(base.known);
            if (c.is_zero()) throw SemanticError("zero raised to a negative power");
            return known_value(SequenceExpr::constant(c.pow(exponent)));
        }
        if (exponent > 64) throw SemanticError("exponent too large (offset " + std::to_string(base_at) + ")");
        SequenceExpr result = SequenceExpr::constant(1);
        for (long i = 0; i < exponent; ++i) result = multiply(result, base.known);
        return known_value(std::move(result));
    }

    Value parse_primary() {
        const Token& tok = peek();
        if (tok.kind == Tok::number) {
            next();
            return known_value(SequenceExpr::constant(Rational::parse(tok.text)));
        }
        if (tok.is('(')) {
            next();
            Value v = parse_expr();
            expect(')', "')'");
            return v;
        }
        if (tok.kind == Tok::ident) {
            const std::string name = tok.text;
            if (name.size() == 1 && name[0] == var_) {
                next();
                return known_value(SequenceExpr::polynomial(TPoly{Rational(0), Rational(1)}));
            }
            if (name == "y" && allow_y_) {
                next();
                expect('(', "'('");
                const long k = parse_t_offset();
                expect(')', "')'");
                Value v;
                v.y[k] = Rational(1);
                return v;
            }
            if ((name == "cos" || name == "sin") && var_ == 't') {
                next();
                expect('(', "'('");
                const unsigned long n = parse_trig_argument();
                expect(')', "')'");
                const TrigPart trig = name == "cos" ? TrigPart::cos(n) : TrigPart::sin(n);
                return known_value(SequenceExpr::single(Rational(1), Rational(1), TPoly::constant(1), trig));
            }
        }
        fail("expression");
    }

    // [int ['*']] 'pi' ['*'] 't'
    unsigned long parse_trig_argument() {
        unsigned long n = 1;
        if (peek().kind == Tok::number) {
            n = static_cast<unsigned long>(parse_integer("integer multiple of pi"));
            if (peek().is('*')) next();
        }
        if (!peek().is_ident("pi")) fail("pi");
        next();
        if (peek().is('*')) next();
        if (!peek().is_ident("t")) fail("t");
        next();
        return n;
    }

    std::string_view src_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    char var_;
    bool allow_y_;
};

}  // namespace

Equation parse_equation(std::string_view src) {
    Parser parser(src, 't', true);
    Value lhs = parser.parse_expr();
    parser.expect('=', "'='");
    Value rhs = parser.parse_expr();
    parser.expect_end();

    // sum c_k y(t+k) = phi(t)
    Value eq = add(std::move(lhs), rhs, Rational(-1));
    if (!eq.has_y()) throw SemanticError("equation does not involve y");
    const SequenceExpr phi = -eq.known;

    const long lowest = eq.y.begin()->first;
    const long lift = lowest < 0 ? -lowest : 0;
    std::vector<Rational> coeffs(static_cast<std::size_t>(eq.y.rbegin()->first + lift) + 1);
    for (const auto& [k, c] : eq.y) coeffs[static_cast<std::size_t>(k + lift)] = c;

    Equation out{OperatorPoly(TPoly(std::move(coeffs))), shift(phi, lift), std::nullopt};
    out.validate();
    return out;
}

std::vector<InitialCondition> parse_initial(std::string_view src) {
    Parser parser(src, 't', false);
    std::vector<InitialCondition> out;
    while (true) {
        if (!parser.peek().is_ident("y")) parser.fail("y");
        parser.next();
        parser.expect('(', "'('");
        const long t = parser.parse_signed_integer("integer abscissa");
        parser.expect(')', "')'");
        parser.expect('=', "'='");
        bool negative = false;
        if (parser.peek().is('-') || parser.peek().is('+')) {
            negative = parser.peek().is('-');
            parser.next();
        }
        if (parser.peek().kind != Tok::number) parser.fail("number");
        Rational value = Rational::parse(parser.next().text);
        if (parser.peek().is('/')) {
            parser.next();
            if (parser.peek().kind != Tok::number) parser.fail("number");
            const Rational den = Rational::parse(parser.next().text);
            if (den.is_zero()) throw SemanticError("zero denominator in initial condition");
            value /= den;
        }
        out.push_back({t, negative ? -value : value});
        if (parser.peek().kind == Tok::end) break;
        parser.expect(',', "',' or end of input");
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.t < b.t; });
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (out[i].t != out[i - 1].t + 1) {
            throw NonConsecutiveConditions("initial conditions must be at consecutive t (gap between y(" +
                                           std::to_string(out[i - 1].t) + ") and y(" + std::to_string(out[i].t) + "))");
        }
    }
    return out;
}

SequenceExpr parse_expression(std::string_view src) {
    Parser parser(src, 't', false);
    Value v = parser.parse_expr();
    parser.expect_end();
    return v.known;
}

OperatorPoly parse_operator(std::string_view src) {
    Parser parser(src, 'T', false);
    Value v = parser.parse_expr();
    parser.expect_end();
    const SequenceExpr& e = v.known;
    if (e.is_zero()) throw ZeroOperator();
    const Term& term = e.terms().front();
    return OperatorPoly(term.coeff * term.poly);
}

}  // namespace opcalc
