#pragma once

#include <map>
#include <string>
#include <vector>

#include "qschur/scalar.hpp"

namespace qschur {

/// Basis index of the r-fold tensor space: an r-tuple of integers, each
/// indexing a basis vector of the underlying free module.
using IndexTuple = std::vector<long long>;

/// Residue of j modulo n, normalized into {1, ..., n}.
int residue_mod(long long j, int n);

/// Composition of r into n nonnegative parts; indexes weight spaces.
struct Composition {
    int n = 1;
    std::vector<int> parts;

    Composition() = default;
    Composition(int n_, std::vector<int> parts_);

    int r() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend bool operator<(const Composition& a, const Composition& b);

    std::string to_string() const;
};

/// Dominance order: mu is dominated by la when every prefix sum of mu is at
/// most the corresponding prefix sum of la.
bool dominated_by(const Composition& mu, const Composition& la);

/// All of Lambda(n, r), ordered lexicographically.
std::vector<Composition> enumerate_compositions(int n, int r);

/// The weight of a basis tuple: part i counts the entries with residue i
/// modulo n.
Composition weight_of(const IndexTuple& idx, int n);

/// Finitely supported vector in the r-fold tensor space with exact scalar
/// coefficients. All coefficients share one scalar mode; zero coefficients
/// are never stored.
class TensorVector {
public:
    TensorVector() : TensorVector(1, ScalarMode{}) {}
    TensorVector(int r, ScalarMode mode);

    static TensorVector basis(const ScalarMode& mode, IndexTuple idx);
    static TensorVector zero(int r, const ScalarMode& mode) { return TensorVector(r, mode); }

    int rank() const { return r_; }
    ScalarMode mode() const { return mode_; }
    const std::map<IndexTuple, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }

    /// Accumulate c onto the coefficient of idx, stripping it when the sum
    /// cancels. Throws when idx has the wrong length or c the wrong mode.
    void add_term(IndexTuple idx, const Scalar& c);

    TensorVector operator-() const;
    TensorVector& operator+=(const TensorVector& o);
    TensorVector& operator-=(const TensorVector& o);
    friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
    friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }

    TensorVector scaled(const Scalar& c) const;
    void scale_in_place(const Scalar& c);

    /// Equality is exact: same rank and identical term maps.
    friend bool operator==(const TensorVector& a, const TensorVector& b) {
        return a.r_ == b.r_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorVector& a, const TensorVector& b) { return !(a == b); }

    std::string to_string() const;

private:
    int r_;
    ScalarMode mode_;
    std::map<IndexTuple, Scalar> terms_;
};

/// Base change of a generic vector to Q(eps) coefficients.
TensorVector specialize(const TensorVector& vec, int lprime);

}  // namespace qschur
