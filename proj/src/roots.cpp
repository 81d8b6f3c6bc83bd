#include "opcalc/roots.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace opcalc {

std::complex<double> Root::numeric() const {
    if (is_exact()) return {exact().to_double(), 0.0};
    return std::get<std::complex<double>>(value);
}

std::size_t RootSet::total_multiplicity() const {
    std::size_t n = 0;
    for (const auto& r : roots) n += r.multiplicity;
    return n;
}

bool RootSet::all_exact() const {
    return std::all_of(roots.begin(), roots.end(), [](const Root& r) { return r.is_exact(); });
}

std::vector<mpz_class> primitive_integer_form(const TPoly& p) {
    mpz_class den_lcm = 1;
    for (const auto& c : p.coefficients()) {
        const mpz_class d = c.denominator();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> ints;
    ints.reserve(p.coefficients().size());
    mpz_class content = 0;
    for (const auto& c : p.coefficients()) {
        mpz_class v = c.numerator() * (den_lcm / c.denominator());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        ints.push_back(std::move(v));
    }
    if (content == 0) return ints;
    if (!ints.empty() && ints.back() < 0) content = -content;
    for (auto& v : ints) v /= content;
    return ints;
}

std::vector<std::pair<TPoly, std::size_t>> squarefree_factors(const TPoly& p) {
    std::vector<std::pair<TPoly, std::size_t>> out;
    if (p.is_constant()) return out;
    const TPoly dp = p.derivative();
    const TPoly a0 = gcd(p, dp);
    TPoly b = divmod(p, a0).first;
    TPoly c = divmod(dp, a0).first;
    TPoly d = c - b.derivative();
    for (std::size_t i = 1; !b.is_constant(); ++i) {
        const TPoly a = gcd(b, d);
        b = divmod(b, a).first;
        c = divmod(d, a).first;
        d = c - b.derivative();
        if (!a.is_constant()) out.emplace_back(a.monic(), i);
    }
    return out;
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> small;
    std::vector<mpz_class> large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

using cplx = std::complex<double>;

cplx eval_complex(const std::vector<double>& c, cplx z) {
    cplx acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

cplx newton_polish(const std::vector<double>& c, const std::vector<double>& dc, cplx z) {
    for (int iter = 0; iter < 60; ++iter) {
        const cplx f = eval_complex(c, z);
        const cplx df = eval_complex(dc, z);
        if (std::abs(df) == 0.0) break;
        const cplx step = f / df;
        z -= step;
        if (std::abs(step) <= kRootTolerance * std::max(1.0, std::abs(z))) break;
    }
    return z;
}

// Roots of a squarefree polynomial with no rational roots.
std::vector<cplx> numeric_roots(const TPoly& f) {
    const TPoly m = f.monic();
    const std::size_t n = *m.degree();
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                                      static_cast<Eigen::Index>(n));
    for (std::size_t i = 1; i < n; ++i) {
        companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
    }
    std::vector<double> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) c[i] = m.coeff(i).to_double();
    for (std::size_t i = 0; i < n; ++i) {
        companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 1)) = -c[i];
    }
    std::vector<double> dc(n);
    for (std::size_t i = 1; i <= n; ++i) dc[i - 1] = static_cast<double>(i) * c[i];

    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    const auto eig = solver.eigenvalues();

    std::vector<cplx> reals;
    std::vector<cplx> uppers;
    for (Eigen::Index i = 0; i < eig.size(); ++i) {
        cplx z = newton_polish(c, dc, eig[i]);
        if (std::abs(z.imag()) < kRealSnap) {
            z = newton_polish(c, dc, cplx(z.real(), 0.0));
            reals.emplace_back(z.real(), 0.0);
        } else if (z.imag() > 0) {
            uppers.push_back(z);
        }
    }
    std::vector<cplx> out = reals;
    for (const auto& z : uppers) {
        out.push_back(z);
        out.push_back(std::conj(z));
    }
    return out;
}

}  // namespace

RootSet find_roots(const TPoly& p) {
    if (p.is_constant()) throw std::invalid_argument("find_roots requires degree >= 1");
    RootSet out;
    TPoly rest = p;
    if (const std::size_t k = rest.lowest_power(); k > 0) {
        out.roots.push_back({Rational(), k});
        rest = rest.drop_low(k);
    }

    if (!rest.is_constant()) {
        const auto ints = primitive_integer_form(rest);
        std::set<Rational> candidates;
        for (const auto& num : positive_divisors(ints.front())) {
            for (const auto& den : positive_divisors(ints.back())) {
                candidates.insert(Rational(num, den));
                candidates.insert(-Rational(num, den));
            }
        }
        for (const auto& r : candidates) {
            if (rest.is_constant()) break;
            std::size_t mult = 0;
            const TPoly factor = TPoly::linear_factor(r);
            while (!rest.is_constant() && rest.eval(r).is_zero()) {
                rest = divmod(rest, factor).first;
                ++mult;
            }
            if (mult > 0) out.roots.push_back({r, mult});
        }
    }

    for (const auto& [factor, mult] : squarefree_factors(rest)) {
        for (const auto& z : numeric_roots(factor)) out.roots.push_back({z, mult});
    }
    return out;
}

}  // namespace opcalc
