#pragma once

#include <vector>

#include "qschur/cyclotomic.hpp"
#include "qschur/laurent.hpp"

namespace qschur {

/// Balanced quantum integer [c] = (v^c - v^-c)/(v - v^-1), antisymmetric in c.
LaurentPoly qint(long long c);

/// Quantum factorial [t]! = [1][2]...[t]; [0]! = 1.
LaurentPoly qfact(int t);

/// Balanced Gaussian binomial, computed from the product
/// prod_{s=1}^{t} (v^{c-s+1} - v^{-c+s-1}) / (v^s - v^-s).
/// The quotient must come out with integer coefficients; a fractional result
/// would indicate an arithmetic bug and throws std::logic_error.
LaurentPoly qbinom(long long c, int t);

/// qbinom evaluated at a primitive l'-th root of unity.
CyclotomicNumber qbinom_at_eps(long long c, int t, int lprime);

/// Coefficients (in X^0..X^m) of prod_{j=0}^{m-1} (1 + v^{2j} X).
std::vector<LaurentPoly> gauss_expand(int m);

/// Ordinary binomial coefficient with the generalized convention
/// C(m, t) = m(m-1)...(m-t+1)/t! so m may be negative; t >= 0.
Rational binomial(long long m, long long t);

/// Closed form for [m over t] at eps in terms of the base-l digits of m and
/// t: with m = m0 + l*m1 and t = t0 + l*t1 (0 <= m0, t0 <= l-1), the value is
/// eps^{l(t1*l - t1*m0 - t1*l*m1 - t0*m1)} * [m0 over t0]_eps * C(m1, t1).
CyclotomicNumber lemma_mt_rhs(long long m, long long t, int lprime);

/// Closed form for [m over l] at eps: m1 for odd l', (-1)^{l+m} m1 for even
/// l', where m = m0 + l*m1 with 0 <= m0 <= l-1 and m1 any integer.
Rational cor_ml_value(long long m, int lprime);

/// True iff (eps^m = eps^m' and [m over l]_eps = [m' over l]_eps) implies
/// m = m' for this particular pair.
bool check_m_injectivity(long long m, long long mprime, int lprime);

}  // namespace qschur
