#include "qschur/qcomb.hpp"

#include <stdexcept>

namespace qschur {

namespace {

/// v^c - v^-c as a two-term Laurent polynomial (zero when c = 0).
LaurentPoly balanced_pair(long long c) {
    LaurentPoly p = LaurentPoly::v_power(c);
    p -= LaurentPoly::v_power(-c);
    return p;
}

}  // namespace

LaurentPoly qint(long long c) {
    LaurentPoly p;
    if (c == 0) return p;
    if (c < 0) return -qint(-c);
    for (long long j = 0; j < c; ++j) p += LaurentPoly::v_power(c - 1 - 2 * j);
    return p;
}

LaurentPoly qfact(int t) {
    if (t < 0) throw std::invalid_argument("qfact: t must be >= 0");
    LaurentPoly p = LaurentPoly::from_int(1);
    for (int i = 1; i <= t; ++i) p *= qint(i);
    return p;
}

LaurentPoly qbinom(long long c, int t) {
    if (t < 0) throw std::invalid_argument("qbinom: t must be >= 0");
    LaurentPoly num = LaurentPoly::from_int(1);
    for (int s = 1; s <= t; ++s) {
        const LaurentPoly factor = balanced_pair(c - s + 1);
        if (factor.is_zero()) return {};  // 0 <= c < t forces a zero factor
        num *= factor;
    }
    for (int s = 1; s <= t; ++s) num = LaurentPoly::exact_div(num, balanced_pair(s));
    if (!num.integer_coefficients())
        throw std::logic_error("qbinom: non-integer coefficients after exact division");
    return num;
}

CyclotomicNumber qbinom_at_eps(long long c, int t, int lprime) {
    return specialize(qbinom(c, t), lprime);
}

std::vector<LaurentPoly> gauss_expand(int m) {
    if (m < 0) throw std::invalid_argument("gauss_expand: m must be >= 0");
    std::vector<LaurentPoly> coeffs{LaurentPoly::from_int(1)};
    for (int j = 0; j < m; ++j) {
        // Multiply by (1 + v^{2j} X).
        coeffs.emplace_back();
        for (std::size_t tdeg = coeffs.size(); tdeg-- > 1;) {
            LaurentPoly shifted = coeffs[tdeg - 1];
            shifted.mul_monomial(2 * j, Rational(1));
            coeffs[tdeg] += shifted;
        }
    }
    return coeffs;
}

Rational binomial(long long m, long long t) {
    if (t < 0) throw std::invalid_argument("binomial: t must be >= 0");
    Rational result(1);
    for (long long i = 0; i < t; ++i) {
        result *= to_rational(m - i);
        result /= to_rational(i + 1);
    }
    return result;
}

CyclotomicNumber lemma_mt_rhs(long long m, long long t, int lprime) {
    if (m < 0 || t < 0 || t > m) throw std::invalid_argument("lemma_mt_rhs: need 0 <= t <= m");
    const long long l = l_of(lprime);
    const long long m0 = m % l, m1 = m / l;
    const long long t0 = t % l, t1 = t / l;
    const long long exponent = l * (t1 * l - t1 * m0 - t1 * l * m1 - t0 * m1);
    CyclotomicNumber result = CyclotomicNumber::eps_power(lprime, exponent);
    result *= qbinom_at_eps(m0, static_cast<int>(t0), lprime);
    result.scale(binomial(m1, t1));
    return result;
}

Rational cor_ml_value(long long m, int lprime) {
    const long long l = l_of(lprime);
    // Floor decomposition: m = m0 + l*m1 with 0 <= m0 <= l-1, m1 in Z.
    long long m0 = m % l;
    if (m0 < 0) m0 += l;
    const long long m1 = (m - m0) / l;
    if (lprime % 2 != 0) return to_rational(m1);
    const bool negate = (l + m) % 2 != 0;
    return to_rational(negate ? -m1 : m1);
}

bool check_m_injectivity(long long m, long long mprime, int lprime) {
    if (m == mprime) return true;
    const CyclotomicNumber em = CyclotomicNumber::eps_power(lprime, m);
    const CyclotomicNumber emp = CyclotomicNumber::eps_power(lprime, mprime);
    if (em != emp) return true;
    const int l = l_of(lprime);
    return qbinom_at_eps(m, l, lprime) != qbinom_at_eps(mprime, l, lprime);
}

}  // namespace qschur
