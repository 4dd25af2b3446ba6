#pragma once

#include <string>
#include <vector>

#include "qschur/laurent.hpp"

namespace qschur {

int euler_phi(int lprime);

/// l'-th cyclotomic polynomial, ascending integer coefficients, monic of
/// degree phi(l'). Computed by exact division of x^l' - 1 by the product of
/// the cyclotomic polynomials of the proper divisors of l'.
std::vector<mpz_class> cyclotomic_polynomial(int lprime);

/// l' for odd l', l'/2 for even l'.
int l_of(int lprime);

/// Element of Q(eps) for eps a primitive l'-th root of unity, written in the
/// power basis 1, x, ..., x^{phi(l')-1} of Q[x]/Phi_{l'}(x). Equality is
/// coordinate-wise; the orders of two operands must agree.
class CyclotomicNumber {
public:
    CyclotomicNumber() : CyclotomicNumber(1) {}
    explicit CyclotomicNumber(int lprime);
    CyclotomicNumber(int lprime, std::vector<Rational> coords);

    static CyclotomicNumber zero(int lprime) { return CyclotomicNumber(lprime); }
    static CyclotomicNumber one(int lprime) { return from_rational(lprime, Rational(1)); }
    static CyclotomicNumber from_rational(int lprime, Rational c);
    /// eps^k, any integer k.
    static CyclotomicNumber eps_power(int lprime, long long k);

    int order() const { return order_; }
    const std::vector<Rational>& coords() const { return coords_; }
    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational

    CyclotomicNumber operator-() const;
    CyclotomicNumber& operator+=(const CyclotomicNumber& o);
    CyclotomicNumber& operator-=(const CyclotomicNumber& o);
    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
    CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }
    void scale(const Rational& c);

    /// Multiplicative inverse via extended gcd with Phi_{l'}; throws
    /// std::domain_error on zero.
    CyclotomicNumber inverse() const;

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

    std::string to_string() const;

private:
    int order_;
    std::vector<Rational> coords_;
};

/// The specialization homomorphism v -> eps: v^k maps to the class of
/// x^{k mod l'} reduced modulo Phi_{l'}.
CyclotomicNumber specialize(const LaurentPoly& p, int lprime);

}  // namespace qschur
