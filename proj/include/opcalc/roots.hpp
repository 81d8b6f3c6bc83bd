#pragma once

#include <complex>
#include <cstddef>
#include <variant>
#include <vector>

#include "opcalc/rational.hpp"
#include "opcalc/tpoly.hpp"

namespace opcalc {

/// One root of a polynomial with its multiplicity. Exact roots are rational;
/// everything else is a floating-point approximation.
struct Root {
    std::variant<Rational, std::complex<double>> value;
    std::size_t multiplicity = 1;

    bool is_exact() const { return std::holds_alternative<Rational>(value); }
    const Rational& exact() const { return std::get<Rational>(value); }
    std::complex<double> numeric() const;
};

struct RootSet {
    std::vector<Root> roots;

    std::size_t total_multiplicity() const;
    bool all_exact() const;
};

/// Convergence tolerance for the Newton polish of numeric roots.
inline constexpr double kRootTolerance = 1e-12;
/// Imaginary parts below this magnitude are snapped to zero.
inline constexpr double kRealSnap = 1e-10;

/// Rational roots are found exactly from the candidates p/q of the primitive
/// integer form and removed by repeated division; the rest is split into
/// squarefree parts and solved numerically from the companion matrix.
/// Numeric complex roots are reported in conjugate pairs. Requires degree >= 1.
RootSet find_roots(const TPoly& p);

/// Integer-coefficient multiple of p with content 1 and positive leading term.
std::vector<mpz_class> primitive_integer_form(const TPoly& p);

/// Squarefree decomposition (Yun): returns (f_i, i) with p = c * prod f_i^i.
std::vector<std::pair<TPoly, std::size_t>> squarefree_factors(const TPoly& p);

}  // namespace opcalc
