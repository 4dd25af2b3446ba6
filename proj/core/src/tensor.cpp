#include "qschur/tensor.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qschur {

int residue_mod(long long j, int n) {
    long long r = j % n;
    if (r <= 0) r += n;
    return static_cast<int>(r);
}

Composition::Composition(int n_, std::vector<int> parts_) : n(n_), parts(std::move(parts_)) {
    if (n < 1) throw std::invalid_argument("Composition: n must be >= 1");
    if (parts.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("Composition: part count must equal n");
    for (int p : parts)
        if (p < 0) throw std::invalid_argument("Composition: parts must be nonnegative");
}

int Composition::r() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool operator<(const Composition& a, const Composition& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.parts < b.parts;
}

std::string Composition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    os << ")";
    return os.str();
}

bool dominated_by(const Composition& mu, const Composition& la) {
    if (mu.n != la.n) throw std::invalid_argument("dominated_by: mismatched n");
    int psum_mu = 0, psum_la = 0;
    for (int i = 0; i < mu.n; ++i) {
        psum_mu += mu.parts[i];
        psum_la += la.parts[i];
        if (psum_mu > psum_la) return false;
    }
    return true;
}

std::vector<Composition> enumerate_compositions(int n, int r) {
    if (n < 1 || r < 0) throw std::invalid_argument("enumerate_compositions: need n >= 1, r >= 0");
    std::vector<Composition> out;
    std::vector<int> parts(n, 0);
    // Recursive fill, lexicographic in parts.
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n - 1) {
            parts[pos] = remaining;
            out.emplace_back(n, parts);
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            parts[pos] = k;
            self(self, pos + 1, remaining - k);
        }
    };
    rec(rec, 0, r);
    return out;
}

Composition weight_of(const IndexTuple& idx, int n) {
    if (n < 1) throw std::invalid_argument("weight_of: n must be >= 1");
    std::vector<int> parts(n, 0);
    for (long long j : idx) ++parts[residue_mod(j, n) - 1];
    return Composition(n, std::move(parts));
}

TensorVector::TensorVector(int r, ScalarMode mode) : r_(r), mode_(mode) {
    if (r < 1) throw std::invalid_argument("TensorVector: r must be >= 1");
}

TensorVector TensorVector::basis(const ScalarMode& mode, IndexTuple idx) {
    TensorVector v(static_cast<int>(idx.size()), mode);
    v.add_term(std::move(idx), Scalar::one(mode));
    return v;
}

void TensorVector::add_term(IndexTuple idx, const Scalar& c) {
    if (idx.size() != static_cast<std::size_t>(r_))
        throw std::invalid_argument("TensorVector::add_term: tuple length must equal r");
    if (c.mode() != mode_)
        throw std::invalid_argument("TensorVector::add_term: scalar mode mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(std::move(idx), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorVector TensorVector::operator-() const {
    TensorVector v(r_, mode_);
    for (const auto& [idx, c] : terms_) v.terms_.emplace(idx, -c);
    return v;
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
    if (r_ != o.r_) throw std::invalid_argument("TensorVector: rank mismatch");
    for (const auto& [idx, c] : o.terms_) add_term(idx, c);
    return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) {
    if (r_ != o.r_) throw std::invalid_argument("TensorVector: rank mismatch");
    for (const auto& [idx, c] : o.terms_) add_term(idx, -c);
    return *this;
}

TensorVector TensorVector::scaled(const Scalar& c) const {
    TensorVector v(r_, mode_);
    if (c.is_zero()) return v;
    for (const auto& [idx, coeff] : terms_) v.add_term(idx, coeff * c);
    return v;
}

void TensorVector::scale_in_place(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return;
    }
    for (auto& [idx, coeff] : terms_) coeff *= c;
}

std::string TensorVector::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*w[";
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i) os << ",";
            os << idx[i];
        }
        os << "]";
    }
    return os.str();
}

TensorVector specialize(const TensorVector& vec, int lprime) {
    TensorVector out(vec.rank(), ScalarMode{lprime});
    for (const auto& [idx, c] : vec.terms()) out.add_term(idx, specialize(c, lprime));
    return out;
}

}  // namespace qschur
