#include <doctest.h>

#include <vector>

#include "qschur/cyclotomic.hpp"
#include "qschur/laurent.hpp"
#include "qschur/sampling.hpp"
#include "qschur/scalar.hpp"

using namespace qschur;

namespace {

// Test-side dense integer polynomial arithmetic, independent of the library
// path, used as the exact-division oracle for cyclotomic polynomials.
using DensePoly = std::vector<long long>;  // ascending coefficients

DensePoly pmul(const DensePoly& a, const DensePoly& b) {
    DensePoly p(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
    return p;
}

DensePoly pdiv_exact(DensePoly num, const DensePoly& den) {
    REQUIRE(den.back() == 1);  // monic
    REQUIRE(num.size() >= den.size());
    DensePoly quot(num.size() - den.size() + 1, 0);
    for (std::size_t i = num.size(); i-- >= den.size();) {
        const long long f = num[i];
        quot[i - (den.size() - 1)] = f;
        if (f == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i - (den.size() - 1) + j] -= f * den[j];
    }
    for (long long c : num) REQUIRE(c == 0);
    return quot;
}

std::vector<long long> as_int_coeffs(const std::vector<mpz_class>& p) {
    std::vector<long long> out;
    for (const mpz_class& c : p) out.push_back(c.get_si());
    return out;
}

LaurentPoly random_laurent(Prng& rng) {
    LaurentPoly p;
    const long long terms = rng.next_in(0, 5);
    for (long long i = 0; i < terms; ++i) {
        Rational c(to_mpz(rng.next_in(-9, 9)), to_mpz(rng.next_in(1, 4)));
        c.canonicalize();
        p += LaurentPoly::monomial(rng.next_in(-6, 6), c);
    }
    return p;
}

CyclotomicNumber random_cyclo(Prng& rng, int lprime) {
    std::vector<Rational> coords;
    for (int i = 0; i < euler_phi(lprime); ++i) {
        Rational c(to_mpz(rng.next_in(-9, 9)), to_mpz(rng.next_in(1, 4)));
        c.canonicalize();
        coords.push_back(c);
    }
    return CyclotomicNumber(lprime, std::move(coords));
}

}  // namespace

TEST_CASE("laurent basics and normalization") {
    LaurentPoly p = LaurentPoly::v_power(2) + LaurentPoly::v_power(-2);
    CHECK(p.term_count() == 2);
    CHECK(p.coefficient(2) == 1);
    CHECK((p - p).is_zero());
    CHECK(p - p == LaurentPoly{});

    LaurentPoly q = LaurentPoly::monomial(3, Rational(1, 2));
    q += LaurentPoly::monomial(3, Rational(-1, 2));
    CHECK(q.is_zero());  // cancelled coefficients are stripped

    CHECK(LaurentPoly::from_int(0).is_zero());
    CHECK(LaurentPoly::from_int(5).constant_value() == 5);
    CHECK(p.to_string() == "v^2 + v^-2");
}

TEST_CASE("laurent ring axioms on random inputs") {
    Prng rng(0);
    for (int trial = 0; trial < 300; ++trial) {
        const LaurentPoly a = random_laurent(rng);
        const LaurentPoly b = random_laurent(rng);
        const LaurentPoly c = random_laurent(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * LaurentPoly::from_int(1) == a);
        CHECK((a + (-a)).is_zero());
    }
}

TEST_CASE("laurent exact division") {
    Prng rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        const LaurentPoly a = random_laurent(rng);
        LaurentPoly b = random_laurent(rng);
        if (b.is_zero()) b = LaurentPoly::v_power(-1) + LaurentPoly::from_int(3);
        CHECK(LaurentPoly::exact_div(a * b, b) == a);
    }
    const LaurentPoly num = LaurentPoly::v_power(1) + LaurentPoly::from_int(1);
    const LaurentPoly den = LaurentPoly::v_power(2) + LaurentPoly::from_int(-1);
    CHECK_THROWS_AS(LaurentPoly::exact_div(num, den), std::logic_error);
    CHECK_THROWS_AS(LaurentPoly::exact_div(num, LaurentPoly{}), std::domain_error);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(as_int_coeffs(cyclotomic_polynomial(1)) == DensePoly{-1, 1});
    CHECK(as_int_coeffs(cyclotomic_polynomial(4)) == DensePoly{1, 0, 1});

    // Oracle for Phi_6: exact division (x^6 - 1) / (Phi_1 Phi_2 Phi_3).
    DensePoly x6m1(7, 0);
    x6m1[0] = -1;
    x6m1[6] = 1;
    const DensePoly phi1{-1, 1}, phi2{1, 1}, phi3{1, 1, 1};
    const DensePoly expected = pdiv_exact(x6m1, pmul(pmul(phi1, phi2), phi3));
    CHECK(expected == DensePoly{1, -1, 1});
    CHECK(as_int_coeffs(cyclotomic_polynomial(6)) == expected);

    for (int lp = 1; lp <= 20; ++lp) {
        const auto phi = cyclotomic_polynomial(lp);
        CHECK(static_cast<int>(phi.size()) - 1 == euler_phi(lp));
        CHECK(phi.back() == 1);
    }
    CHECK_THROWS_AS(cyclotomic_polynomial(0), std::invalid_argument);
}

TEST_CASE("l_of") {
    CHECK(l_of(3) == 3);
    CHECK(l_of(6) == 3);
    CHECK(l_of(1) == 1);
    CHECK(l_of(2) == 1);
    CHECK(l_of(12) == 6);
}

TEST_CASE("specialize examples") {
    // eps^2 = -1 for l' = 4 is structural (Phi_4 = x^2 + 1), hence
    // eps + eps^-1 = 0.
    const CyclotomicNumber eps = specialize(LaurentPoly::v_power(1), 4);
    CHECK(eps * eps == CyclotomicNumber::from_rational(4, Rational(-1)));
    const LaurentPoly p = LaurentPoly::v_power(1) + LaurentPoly::v_power(-1);
    CHECK(specialize(p, 4).is_zero());

    for (int lp : {1, 2, 3, 5, 8}) {
        CHECK(specialize(LaurentPoly::from_int(1), lp) == CyclotomicNumber::one(lp));
    }
    CHECK(specialize(LaurentPoly::v_power(3), 3) == CyclotomicNumber::one(3));
}

TEST_CASE("specialize is a ring homomorphism") {
    for (int lp = 1; lp <= 12; ++lp) {
        Prng rng(static_cast<std::uint64_t>(lp));
        for (int trial = 0; trial < 1000; ++trial) {
            const LaurentPoly p = random_laurent(rng);
            const LaurentPoly q = random_laurent(rng);
            CHECK(specialize(p * q, lp) == specialize(p, lp) * specialize(q, lp));
            CHECK(specialize(p + q, lp) == specialize(p, lp) + specialize(q, lp));
        }
    }
}

TEST_CASE("primitivity of eps") {
    for (int lp = 1; lp <= 12; ++lp) {
        const CyclotomicNumber one = CyclotomicNumber::one(lp);
        CHECK(CyclotomicNumber::eps_power(lp, lp) == one);
        for (int k = 1; k < lp; ++k) CHECK(CyclotomicNumber::eps_power(lp, k) != one);
        if (lp % 2 == 0)
            CHECK(CyclotomicNumber::eps_power(lp, l_of(lp)) ==
                  CyclotomicNumber::from_rational(lp, Rational(-1)));
    }
}

TEST_CASE("cyclotomic ring axioms on random inputs") {
    for (int lp : {3, 4, 5, 6, 8, 12}) {
        Prng rng(100 + static_cast<std::uint64_t>(lp));
        for (int trial = 0; trial < 200; ++trial) {
            const CyclotomicNumber a = random_cyclo(rng, lp);
            const CyclotomicNumber b = random_cyclo(rng, lp);
            const CyclotomicNumber c = random_cyclo(rng, lp);
            CHECK(a + b == b + a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * CyclotomicNumber::one(lp) == a);
        }
    }
}

TEST_CASE("cyclotomic inverse") {
    CHECK(CyclotomicNumber::one(5).inverse() == CyclotomicNumber::one(5));

    // Oracle: z * z^{-1} reduces to 1; for eps at l' = 4 the inverse is -eps
    // because eps^2 = -1.
    const CyclotomicNumber eps = CyclotomicNumber::eps_power(4, 1);
    const CyclotomicNumber inv = eps.inverse();
    CHECK(eps * inv == CyclotomicNumber::one(4));
    CHECK(inv == -eps);

    const CyclotomicNumber two = CyclotomicNumber::from_rational(6, Rational(2));
    CHECK(two.inverse() == CyclotomicNumber::from_rational(6, Rational(1, 2)));

    for (int lp : {2, 3, 4, 5, 6, 7, 12}) {
        Prng rng(200 + static_cast<std::uint64_t>(lp));
        for (int trial = 0; trial < 100; ++trial) {
            const CyclotomicNumber z = random_cyclo(rng, lp);
            if (z.is_zero()) continue;
            CHECK(z * z.inverse() == CyclotomicNumber::one(lp));
        }
    }
    CHECK_THROWS_AS(CyclotomicNumber::zero(4).inverse(), std::domain_error);
}

TEST_CASE("scalar variants") {
    const ScalarMode generic{};
    const ScalarMode at4{4};

    const Scalar g = Scalar::v_power(generic, 2);
    const Scalar s = Scalar::v_power(at4, 2);
    CHECK(g.is_generic());
    CHECK(!s.is_generic());
    CHECK(s.mode() == at4);
    CHECK_THROWS_AS(g + s, std::invalid_argument);
    CHECK_THROWS_AS(Scalar::v_power(at4, 1) * Scalar::v_power(ScalarMode{5}, 1),
                    std::invalid_argument);

    CHECK(Scalar::from_laurent(at4, LaurentPoly::v_power(1) + LaurentPoly::v_power(-1)).is_zero());
    CHECK(Scalar::v_power(generic, 3).inverse() == Scalar::v_power(generic, -3));
    CHECK_THROWS_AS(Scalar::zero(generic).inverse(), std::domain_error);
    CHECK_THROWS_AS((Scalar::v_power(generic, 1) + Scalar::one(generic)).inverse(),
                    std::domain_error);
    CHECK(Scalar::v_power(at4, 5).inverse() * Scalar::v_power(at4, 5) == Scalar::one(at4));
}
