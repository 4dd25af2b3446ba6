#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace qschur {

/// Exact rational coefficients. GMP keeps these canonical (gcd 1, positive
/// denominator) under arithmetic.
using Rational = mpq_class;

/// gmpxx has no long long constructors; route 64-bit values explicitly.
inline mpz_class to_mpz(long long x) {
    if constexpr (sizeof(long) >= sizeof(long long)) {
        return mpz_class(static_cast<long>(x));
    } else {
        mpz_class hi(static_cast<long>(x >> 32));
        mpz_class lo(static_cast<unsigned long>(static_cast<unsigned long long>(x) & 0xffffffffULL));
        return (hi << 32) + lo;
    }
}

inline Rational to_rational(long long x) { return Rational(to_mpz(x)); }

/// Laurent polynomial in the quantum parameter v with rational coefficients,
/// stored sparsely as exponent -> coefficient. No zero coefficient is ever
/// kept, so structural equality is semantic equality.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(Rational c);
    static LaurentPoly from_int(long c) { return constant(Rational(c)); }
    /// v^k
    static LaurentPoly v_power(long long k);
    static LaurentPoly monomial(long long k, Rational c);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const;
    /// The coefficient of v^0; only meaningful together with is_constant().
    Rational constant_value() const;

    const std::map<long long, Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(long long k) const;
    long long min_exponent() const;  // requires nonzero
    long long max_exponent() const;  // requires nonzero
    std::size_t term_count() const { return coeffs_.size(); }

    /// True when every coefficient is an integer (membership in Z[v, v^-1]).
    bool integer_coefficients() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    void scale(const Rational& c);
    /// Multiply by the monomial c * v^k in place.
    void mul_monomial(long long k, const Rational& c);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Exact quotient num/den. The divisor must divide exactly; a nonzero
    /// remainder indicates an arithmetic bug upstream and throws
    /// std::logic_error. Division by zero throws std::domain_error.
    static LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

    /// Human-readable form such as "v^4 + v^2 + 2 + v^-2 + v^-4".
    std::string to_string() const;

private:
    std::map<long long, Rational> coeffs_;

    void add_term(long long k, const Rational& c);
};

}  // namespace qschur
