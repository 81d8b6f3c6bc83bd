#include "opcalc/tpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "opcalc/errors.hpp"

namespace opcalc {

TPoly::TPoly(std::initializer_list<Rational> ascending) : coeffs_(ascending) {
    trim();
}

TPoly::TPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
    trim();
}

TPoly TPoly::constant(const Rational& c) {
    return TPoly(std::vector<Rational>{c});
}

TPoly TPoly::monomial(const Rational& c, std::size_t power) {
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return TPoly(std::move(v));
}

TPoly TPoly::linear_factor(const Rational& root) {
    return TPoly{-root, Rational(1)};
}

void TPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> TPoly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

Rational TPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational();
}

Rational TPoly::leading() const {
    return coeffs_.empty() ? Rational() : coeffs_.back();
}

std::size_t TPoly::lowest_power() const {
    std::size_t k = 0;
    while (k < coeffs_.size() && coeffs_[k].is_zero()) ++k;
    return k;
}

Rational TPoly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

TPoly TPoly::operator-() const {
    std::vector<Rational> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(-c);
    return TPoly(std::move(v));
}

TPoly operator+(const TPoly& a, const TPoly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return TPoly(std::move(v));
}

TPoly operator-(const TPoly& a, const TPoly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return TPoly(std::move(v));
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return TPoly(std::move(v));
}

TPoly operator*(const Rational& c, const TPoly& p) {
    std::vector<Rational> v;
    v.reserve(p.coeffs_.size());
    for (const auto& x : p.coeffs_) v.push_back(c * x);
    return TPoly(std::move(v));
}

TPoly TPoly::pow(std::size_t exponent) const {
    TPoly result = constant(1);
    for (std::size_t i = 0; i < exponent; ++i) result *= *this;
    return result;
}

TPoly TPoly::monic() const {
    if (is_zero()) return {};
    return leading().inverse() * *this;
}

TPoly TPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        v[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
    }
    return TPoly(std::move(v));
}

TPoly TPoly::drop_low(std::size_t k) const {
    if (k > lowest_power()) throw std::invalid_argument("drop_low: polynomial not divisible by x^k");
    if (k >= coeffs_.size()) return {};
    return TPoly(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

std::string TPoly::str(char var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (!mag.is_one()) os << mag << '*';
        os << var;
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

TPoly poly_arith(const TPoly& a, const TPoly& b, PolyOp op) {
    switch (op) {
        case PolyOp::add: return a + b;
        case PolyOp::sub: return a - b;
        case PolyOp::mul: return a * b;
    }
    return {};
}

std::pair<TPoly, TPoly> divmod(const TPoly& a, const TPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const std::size_t db = *b.degree();
    std::vector<Rational> rem = a.coefficients();
    if (rem.size() <= db) return {TPoly(), a};
    std::vector<Rational> quot(rem.size() - db);
    const Rational lead_inv = b.leading().inverse();
    for (std::size_t i = rem.size(); i-- > db;) {
        const Rational q = rem[i] * lead_inv;
        quot[i - db] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeff(j);
    }
    return {TPoly(std::move(quot)), TPoly(std::move(rem))};
}

TPoly gcd(TPoly a, TPoly b) {
    while (!b.is_zero()) {
        TPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Rational binomial(std::size_t n, std::size_t k) {
    if (k > n) return Rational();
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rational(r, mpz_class(1));
}

TPoly taylor_shift(const TPoly& p, const Rational& shift) {
    if (p.is_zero()) return {};
    const std::size_t n = *p.degree();
    std::vector<Rational> powers(n + 1);
    powers[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) powers[i] = powers[i - 1] * shift;
    // q_j = sum_{i >= j} a_i * C(i, j) * shift^(i - j)
    std::vector<Rational> q(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const Rational& a = p.coeff(i);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j <= i; ++j) q[j] += a * binomial(i, j) * powers[i - j];
    }
    return TPoly(std::move(q));
}

TPoly forward_difference(const TPoly& p) {
    return taylor_shift(p, Rational(1)) - p;
}

std::vector<Rational> series_inverse(const TPoly& q, std::size_t order) {
    if (q.coeff(0).is_zero()) throw ZeroConstantTerm();
    const Rational inv0 = q.coeff(0).inverse();
    std::vector<Rational> c(order + 1);
    c[0] = inv0;
    for (std::size_t k = 1; k <= order; ++k) {
        Rational acc;
        for (std::size_t j = 1; j <= k; ++j) acc += q.coeff(j) * c[k - j];
        c[k] = -acc * inv0;
    }
    return c;
}

}  // namespace opcalc
