#include "qschur/scalar.hpp"

#include <stdexcept>

namespace qschur {

Scalar Scalar::zero(const ScalarMode& m) {
    if (m.generic()) return Scalar(LaurentPoly{});
    return Scalar(CyclotomicNumber::zero(*m.lprime));
}

Scalar Scalar::one(const ScalarMode& m) { return from_rational(m, Rational(1)); }

Scalar Scalar::from_int(const ScalarMode& m, long c) { return from_rational(m, Rational(c)); }

Scalar Scalar::from_rational(const ScalarMode& m, const Rational& c) {
    if (m.generic()) return Scalar(LaurentPoly::constant(c));
    return Scalar(CyclotomicNumber::from_rational(*m.lprime, c));
}

Scalar Scalar::v_power(const ScalarMode& m, long long k) {
    if (m.generic()) return Scalar(LaurentPoly::v_power(k));
    return Scalar(CyclotomicNumber::eps_power(*m.lprime, k));
}

Scalar Scalar::from_laurent(const ScalarMode& m, const LaurentPoly& p) {
    if (m.generic()) return Scalar(p);
    return Scalar(specialize(p, *m.lprime));
}

ScalarMode Scalar::mode() const {
    if (is_generic()) return {};
    return {std::get<CyclotomicNumber>(value_).order()};
}

bool Scalar::is_zero() const {
    if (is_generic()) return std::get<LaurentPoly>(value_).is_zero();
    return std::get<CyclotomicNumber>(value_).is_zero();
}

const LaurentPoly& Scalar::as_laurent() const {
    if (!is_generic()) throw std::invalid_argument("Scalar: expected generic variant");
    return std::get<LaurentPoly>(value_);
}

const CyclotomicNumber& Scalar::as_cyclotomic() const {
    if (is_generic()) throw std::invalid_argument("Scalar: expected specialized variant");
    return std::get<CyclotomicNumber>(value_);
}

void Scalar::require_compatible(const Scalar& o) const {
    if (is_generic() != o.is_generic())
        throw std::invalid_argument("Scalar: mixed generic/specialized arithmetic");
    if (!is_generic() &&
        std::get<CyclotomicNumber>(value_).order() != std::get<CyclotomicNumber>(o.value_).order())
        throw std::invalid_argument("Scalar: mixed root-of-unity orders");
}

Scalar Scalar::operator-() const {
    if (is_generic()) return Scalar(-std::get<LaurentPoly>(value_));
    return Scalar(-std::get<CyclotomicNumber>(value_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_compatible(o);
    if (is_generic())
        std::get<LaurentPoly>(value_) += std::get<LaurentPoly>(o.value_);
    else
        std::get<CyclotomicNumber>(value_) += std::get<CyclotomicNumber>(o.value_);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    require_compatible(o);
    if (is_generic())
        std::get<LaurentPoly>(value_) -= std::get<LaurentPoly>(o.value_);
    else
        std::get<CyclotomicNumber>(value_) -= std::get<CyclotomicNumber>(o.value_);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    require_compatible(o);
    if (is_generic())
        std::get<LaurentPoly>(value_) *= std::get<LaurentPoly>(o.value_);
    else
        std::get<CyclotomicNumber>(value_) *= std::get<CyclotomicNumber>(o.value_);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_generic()) {
        const LaurentPoly& p = std::get<LaurentPoly>(value_);
        if (p.is_zero()) throw std::domain_error("Scalar::inverse: zero");
        if (p.term_count() != 1)
            throw std::domain_error("Scalar::inverse: generic scalar is not a unit");
        const auto& [k, c] = *p.coefficients().begin();
        return Scalar(LaurentPoly::monomial(-k, Rational(1) / c));
    }
    return Scalar(std::get<CyclotomicNumber>(value_).inverse());
}

std::string Scalar::to_string() const {
    if (is_generic()) return std::get<LaurentPoly>(value_).to_string();
    return std::get<CyclotomicNumber>(value_).to_string();
}

Scalar specialize(const Scalar& s, int lprime) {
    return Scalar(specialize(s.as_laurent(), lprime));
}

}  // namespace qschur
