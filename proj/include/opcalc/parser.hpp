#pragma once

#include <string_view>
#include <vector>

#include "opcalc/expr.hpp"
#include "opcalc/operator_poly.hpp"
#include "opcalc/solver.hpp"

namespace opcalc {

/*
 * Equation DSL
 *
 *   equation   := expr '=' expr
 *   expr       := ['+'|'-'] term (('+'|'-') term)*
 *   term       := unary (('*'|'/') unary | power)*      juxtaposition multiplies
 *   unary      := ('+'|'-') unary | power
 *   power      := primary ['^' exponent]
 *   exponent   := 't' | '(' 't' [('+'|'-') int] ')' | ['-'] int | '(' ['-'] int ')'
 *   primary    := number | 't' | 'y' '(' 't' [('+'|'-') int] ')'
 *               | ('cos'|'sin') '(' [int ['*']] 'pi' ['*'] 't' ')' | '(' expr ')'
 *   number     := digits ['.' digits]
 *
 * y(t+k) must appear linearly with constant coefficients; every other term is
 * moved to the right-hand side. A negative lowest shift y(t-k) multiplies the
 * whole equation by T^k.
 */

/// Throws ParseError for malformed text, SemanticError (or UnsupportedRhs)
/// for well-formed text outside the model.
Equation parse_equation(std::string_view src);

/// "y(0)=1, y(1)=3/2": sorted by t, must be consecutive.
std::vector<InitialCondition> parse_initial(std::string_view src);

/// A right-hand-side style expression in t, e.g. "-1/2 * 3^t".
SequenceExpr parse_expression(std::string_view src);

/// A polynomial in T, e.g. "T^2-5*T+4".
OperatorPoly parse_operator(std::string_view src);

}  // namespace opcalc
