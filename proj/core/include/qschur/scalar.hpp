#pragma once

#include <optional>
#include <string>
#include <variant>

#include "qschur/cyclotomic.hpp"
#include "qschur/laurent.hpp"

namespace qschur {

/// Which coefficient ring a computation runs in: the generic ring of Laurent
/// polynomials in v, or Q(eps) for a fixed primitive l'-th root of unity.
struct ScalarMode {
    std::optional<int> lprime;

    bool generic() const { return !lprime.has_value(); }
    friend bool operator==(const ScalarMode&, const ScalarMode&) = default;
};

/// Exact coefficient: either a Laurent polynomial in v (generic) or a
/// cyclotomic number (specialized at a primitive l'-th root of unity).
/// Mixing the two variants, or two different orders, in one arithmetic
/// operation is a usage error and throws std::invalid_argument.
class Scalar {
public:
    Scalar() : value_(LaurentPoly{}) {}
    explicit Scalar(LaurentPoly p) : value_(std::move(p)) {}
    explicit Scalar(CyclotomicNumber z) : value_(std::move(z)) {}

    static Scalar zero(const ScalarMode& m);
    static Scalar one(const ScalarMode& m);
    static Scalar from_int(const ScalarMode& m, long c);
    static Scalar from_rational(const ScalarMode& m, const Rational& c);
    /// v^k in the given mode (eps^k when specialized).
    static Scalar v_power(const ScalarMode& m, long long k);
    /// Interpret a generic Laurent polynomial in the given mode, specializing
    /// when the mode carries an l'.
    static Scalar from_laurent(const ScalarMode& m, const LaurentPoly& p);

    ScalarMode mode() const;
    bool is_generic() const { return std::holds_alternative<LaurentPoly>(value_); }
    bool is_zero() const;

    const LaurentPoly& as_laurent() const;
    const CyclotomicNumber& as_cyclotomic() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

    /// Multiplicative inverse. Generic scalars must be monomials c*v^k (the
    /// units of the Laurent ring); otherwise throws std::domain_error, as
    /// does inverting zero.
    Scalar inverse() const;

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::variant<LaurentPoly, CyclotomicNumber> value_;

    void require_compatible(const Scalar& o) const;
};

/// Base change of a generic scalar to Q(eps).
Scalar specialize(const Scalar& s, int lprime);

}  // namespace qschur
