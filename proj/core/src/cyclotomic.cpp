#include "qschur/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace qschur {

namespace {

// Exact division of integer polynomials (ascending coefficients), divisor
// monic or at least with exact quotient. Throws on nonzero remainder.
std::vector<mpz_class> int_poly_div(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    while (!num.empty() && num.back() == 0) num.pop_back();
    if (den.empty() || den.back() == 0) throw std::domain_error("int_poly_div: zero divisor");
    if (num.empty()) return {};
    if (num.size() < den.size()) throw std::logic_error("int_poly_div: nonzero remainder");
    const std::size_t dd = den.size() - 1;
    std::vector<mpz_class> quot(num.size() - den.size() + 1);
    for (std::size_t i = num.size(); i-- >= den.size();) {
        if (num[i] == 0) continue;
        mpz_class f = num[i] / den.back();
        if (f * den.back() != num[i]) throw std::logic_error("int_poly_div: nonzero remainder");
        quot[i - dd] = f;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= f * den[j];
    }
    for (const mpz_class& c : num)
        if (c != 0) throw std::logic_error("int_poly_div: nonzero remainder");
    return quot;
}

std::vector<mpz_class> int_poly_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<mpz_class> p(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
    return p;
}

std::vector<mpz_class> cyclotomic_uncached(int lprime) {
    // x^l' - 1 divided by the product of Phi_d over proper divisors d | l'.
    std::vector<mpz_class> num(static_cast<std::size_t>(lprime) + 1);
    num[0] = -1;
    num[static_cast<std::size_t>(lprime)] = 1;
    std::vector<mpz_class> den{1};
    for (int d = 1; d < lprime; ++d)
        if (lprime % d == 0) den = int_poly_mul(den, cyclotomic_polynomial(d));
    return int_poly_div(std::move(num), den);
}

// Per-thread cache keeps the reduction path lock-free; entries never change
// once inserted.
const std::vector<mpz_class>& cyclotomic_cached(int lprime) {
    thread_local std::unordered_map<int, std::vector<mpz_class>> cache;
    auto it = cache.find(lprime);
    if (it != cache.end()) return it->second;
    return cache.emplace(lprime, cyclotomic_uncached(lprime)).first->second;
}

// Reduce an ascending rational polynomial modulo Phi_{l'}, returning exactly
// phi(l') coordinates.
std::vector<Rational> reduce_mod_phi(std::vector<Rational> poly, int lprime) {
    const std::vector<mpz_class>& phi = cyclotomic_cached(lprime);
    const std::size_t deg = phi.size() - 1;  // = euler_phi(lprime)
    for (std::size_t i = poly.size(); i-- > deg;) {
        if (poly[i] == 0) continue;
        Rational f = poly[i];  // phi is monic
        for (std::size_t j = 0; j <= deg; ++j) poly[i - deg + j] -= f * Rational(phi[j]);
    }
    poly.resize(deg);
    for (Rational& c : poly) c.canonicalize();
    return poly;
}

}  // namespace

int euler_phi(int lprime) {
    if (lprime < 1) throw std::invalid_argument("euler_phi: order must be >= 1");
    int n = lprime, result = lprime;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<mpz_class> cyclotomic_polynomial(int lprime) {
    if (lprime < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be >= 1");
    return cyclotomic_cached(lprime);
}

int l_of(int lprime) {
    if (lprime < 1) throw std::invalid_argument("l_of: order must be >= 1");
    return lprime % 2 == 0 ? lprime / 2 : lprime;
}

CyclotomicNumber::CyclotomicNumber(int lprime) : order_(lprime) {
    if (lprime < 1) throw std::invalid_argument("CyclotomicNumber: order must be >= 1");
    coords_.assign(static_cast<std::size_t>(euler_phi(lprime)), Rational(0));
}

CyclotomicNumber::CyclotomicNumber(int lprime, std::vector<Rational> coords)
    : order_(lprime), coords_(std::move(coords)) {
    if (lprime < 1) throw std::invalid_argument("CyclotomicNumber: order must be >= 1");
    if (coords_.size() != static_cast<std::size_t>(euler_phi(lprime)))
        throw std::invalid_argument("CyclotomicNumber: coordinate count must equal phi(l')");
}

CyclotomicNumber CyclotomicNumber::from_rational(int lprime, Rational c) {
    CyclotomicNumber z(lprime);
    z.coords_[0] = std::move(c);
    return z;
}

CyclotomicNumber CyclotomicNumber::eps_power(int lprime, long long k) {
    if (lprime < 1) throw std::invalid_argument("eps_power: order must be >= 1");
    long long e = k % lprime;
    if (e < 0) e += lprime;
    thread_local std::unordered_map<int, std::vector<CyclotomicNumber>> cache;
    std::vector<CyclotomicNumber>& powers = cache[lprime];
    if (powers.empty()) {
        powers.reserve(static_cast<std::size_t>(lprime));
        for (int i = 0; i < lprime; ++i) {
            std::vector<Rational> poly(static_cast<std::size_t>(i) + 1, Rational(0));
            poly[static_cast<std::size_t>(i)] = 1;
            powers.emplace_back(lprime, reduce_mod_phi(std::move(poly), lprime));
        }
    }
    return powers[static_cast<std::size_t>(e)];
}

bool CyclotomicNumber::is_zero() const {
    for (const Rational& c : coords_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicNumber::is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

Rational CyclotomicNumber::rational_value() const {
    if (!is_rational()) throw std::logic_error("rational_value: element is not rational");
    return coords_[0];
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber z(order_);
    for (std::size_t i = 0; i < coords_.size(); ++i) z.coords_[i] = -coords_[i];
    return z;
}

namespace {
void require_same_order(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("cyclotomic arithmetic: mismatched root-of-unity orders");
}
}  // namespace

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
    require_same_order(*this, o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
    require_same_order(*this, o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    require_same_order(a, b);
    const std::size_t na = a.coords_.size(), nb = b.coords_.size();
    std::vector<Rational> prod(na + nb - 1, Rational(0));
    for (std::size_t i = 0; i < na; ++i) {
        if (a.coords_[i] == 0) continue;
        for (std::size_t j = 0; j < nb; ++j) {
            if (b.coords_[j] == 0) continue;
            prod[i + j] += a.coords_[i] * b.coords_[j];
        }
    }
    return CyclotomicNumber(a.order_, reduce_mod_phi(std::move(prod), a.order_));
}

void CyclotomicNumber::scale(const Rational& c) {
    for (Rational& x : coords_) x *= c;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw std::domain_error("CyclotomicNumber::inverse: zero element");
    // Extended Euclid over Q[x] between Phi_{l'} and the representative.
    // Phi is irreducible and deg(rep) < deg(Phi), so the gcd is a nonzero
    // constant g with t * rep = g (mod Phi).
    auto trim = [](std::vector<Rational>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    auto divmod = [&trim](std::vector<Rational> a, const std::vector<Rational>& b) {
        std::vector<Rational> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
        while (a.size() >= b.size()) {
            const Rational f = a.back() / b.back();
            const std::size_t shift = a.size() - b.size();
            q[shift] = f;
            for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
            trim(a);
        }
        return std::pair{std::move(q), std::move(a)};
    };

    std::vector<Rational> r0;
    for (const mpz_class& c : cyclotomic_cached(order_)) r0.emplace_back(c);
    std::vector<Rational> r1(coords_);
    trim(r1);
    std::vector<Rational> t0{}, t1{Rational(1)};

    while (!r1.empty()) {
        auto [q, rem] = divmod(r0, r1);
        std::vector<Rational> t_next(std::max(t0.size(), q.size() + t1.size()), Rational(0));
        for (std::size_t i = 0; i < t0.size(); ++i) t_next[i] = t0[i];
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < t1.size(); ++j) t_next[i + j] -= q[i] * t1[j];
        }
        trim(t_next);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t_next);
    }
    if (r0.size() != 1 || r0[0] == 0)
        throw std::logic_error("CyclotomicNumber::inverse: gcd with Phi not constant");
    const Rational g = r0[0];
    for (Rational& c : t0) c /= g;
    return CyclotomicNumber(order_, reduce_mod_phi(std::move(t0), order_));
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a.order_ == b.order_ && a.coords_ == b.coords_;
}

std::string CyclotomicNumber::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coords_.size(); i-- > 0;) {
        Rational c = coords_[i];
        if (c == 0) continue;
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
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << "e";
            if (i != 1) os << "^" << i;
        }
    }
    return os.str();
}

CyclotomicNumber specialize(const LaurentPoly& p, int lprime) {
    if (lprime < 1) throw std::invalid_argument("specialize: order must be >= 1");
    std::vector<Rational> acc(static_cast<std::size_t>(lprime), Rational(0));
    for (const auto& [k, c] : p.coefficients()) {
        long long e = k % lprime;
        if (e < 0) e += lprime;
        acc[static_cast<std::size_t>(e)] += c;
    }
    return CyclotomicNumber(lprime, reduce_mod_phi(std::move(acc), lprime));
}

}  // namespace qschur
