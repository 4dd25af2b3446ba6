#include "qschur/laurent.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace qschur {

LaurentPoly LaurentPoly::constant(Rational c) {
    LaurentPoly p;
    p.add_term(0, c);
    return p;
}

LaurentPoly LaurentPoly::v_power(long long k) {
    LaurentPoly p;
    p.add_term(k, Rational(1));
    return p;
}

LaurentPoly LaurentPoly::monomial(long long k, Rational c) {
    LaurentPoly p;
    p.add_term(k, c);
    return p;
}

bool LaurentPoly::is_constant() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

Rational LaurentPoly::constant_value() const {
    auto it = coeffs_.find(0);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::coefficient(long long k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

long long LaurentPoly::min_exponent() const {
    if (coeffs_.empty()) throw std::logic_error("min_exponent of zero polynomial");
    return coeffs_.begin()->first;
}

long long LaurentPoly::max_exponent() const {
    if (coeffs_.empty()) throw std::logic_error("max_exponent of zero polynomial");
    return coeffs_.rbegin()->first;
}

bool LaurentPoly::integer_coefficients() const {
    for (const auto& [k, c] : coeffs_)
        if (c.get_den() != 1) return false;
    return true;
}

void LaurentPoly::add_term(long long k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p;
    for (const auto& [k, c] : coeffs_) p.coeffs_.emplace(k, -c);
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.coeffs_) add_term(k, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.coeffs_) add_term(k, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    if (a.is_zero() || b.is_zero()) return p;
    // Iterate the smaller factor outermost.
    const LaurentPoly& outer = a.coeffs_.size() <= b.coeffs_.size() ? a : b;
    const LaurentPoly& inner = a.coeffs_.size() <= b.coeffs_.size() ? b : a;
    for (const auto& [ka, ca] : outer.coeffs_)
        for (const auto& [kb, cb] : inner.coeffs_)
            p.add_term(ka + kb, ca * cb);
    return p;
}

void LaurentPoly::scale(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return;
    }
    for (auto& [k, coeff] : coeffs_) coeff *= c;
}

void LaurentPoly::mul_monomial(long long k, const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return;
    }
    std::map<long long, Rational> shifted;
    for (auto& [e, coeff] : coeffs_) shifted.emplace(e + k, coeff * c);
    coeffs_ = std::move(shifted);
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::domain_error("LaurentPoly division by zero");
    if (num.is_zero()) return {};

    // Clear the lowest exponents: both sides become ordinary polynomials with
    // nonzero constant term, and the quotient picks up the shift a - b.
    const long long a = num.min_exponent();
    const long long b = den.min_exponent();
    const std::size_t np = static_cast<std::size_t>(num.max_exponent() - a) + 1;
    const std::size_t dp = static_cast<std::size_t>(den.max_exponent() - b) + 1;
    if (np < dp) throw std::logic_error("exact_div: nonzero remainder");

    std::vector<Rational> p(np), q(dp);
    for (const auto& [k, c] : num.coeffs_) p[static_cast<std::size_t>(k - a)] = c;
    for (const auto& [k, c] : den.coeffs_) q[static_cast<std::size_t>(k - b)] = c;

    const Rational lead = q[dp - 1];
    // Divisors are typically very sparse (two-term balanced factors), so
    // iterate their nonzero entries only.
    std::vector<std::pair<std::size_t, Rational>> q_nonzero;
    for (std::size_t j = 0; j < dp; ++j)
        if (q[j] != 0) q_nonzero.emplace_back(j, q[j]);
    std::vector<Rational> quot(np - dp + 1);
    for (std::size_t i = np; i-- >= dp;) {
        if (p[i] == 0) continue;
        const Rational f = p[i] / lead;
        quot[i - (dp - 1)] = f;
        for (const auto& [j, qc] : q_nonzero) p[i - (dp - 1) + j] -= f * qc;
    }
    for (const Rational& c : p)
        if (c != 0) throw std::logic_error("exact_div: nonzero remainder");

    LaurentPoly result;
    for (std::size_t i = 0; i < quot.size(); ++i)
        result.add_term(static_cast<long long>(i) + a - b, quot[i]);
    return result;
}

std::string LaurentPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        Rational c = it->second;
        const long long k = it->first;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            if (c < 0) {
                os << " - ";
                c = -c;
            } else {
                os << " + ";
            }
        }
        const bool unit = (c == 1);
        if (k == 0) {
            os << c;
        } else {
            if (!unit) os << c << "*";
            os << "v";
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace qschur
