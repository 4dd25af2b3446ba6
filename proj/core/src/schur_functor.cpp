#include "qschur/schur_functor.hpp"

#include <stdexcept>

#include "qschur/operator_expr.hpp"

namespace qschur {

namespace {

void check_pair(const TruncationPair& pair) {
    if (!pair.valid()) throw std::invalid_argument("TruncationPair: need N >= n >= 1 and r >= 1");
}

bool entry_in_image(long long j, const TruncationPair& pair) {
    return residue_mod(j, pair.N) <= pair.n;
}

}  // namespace

TensorVector idempotent_e(const TruncationPair& pair, const TensorVector& vec) {
    check_pair(pair);
    TensorVector out(vec.rank(), vec.mode());
    for (const auto& [idx, c] : vec.terms()) {
        bool keep = true;
        for (long long j : idx)
            if (!entry_in_image(j, pair)) {
                keep = false;
                break;
            }
        if (keep) out.add_term(idx, c);
    }
    return out;
}

TensorVector retract(const TruncationPair& pair, const TensorVector& vec) {
    check_pair(pair);
    TensorVector out(vec.rank(), vec.mode());
    for (const auto& [idx, c] : vec.terms()) {
        IndexTuple mapped(idx.size());
        for (std::size_t t = 0; t < idx.size(); ++t) {
            const long long j = idx[t];
            const int a = residue_mod(j, pair.N);
            if (a > pair.n)
                throw std::invalid_argument("retract: entry outside the image of e");
            const long long b = (j - a) / pair.N;
            mapped[t] = a + static_cast<long long>(pair.n) * b;
        }
        out.add_term(std::move(mapped), c);
    }
    return out;
}

TensorVector section(const TruncationPair& pair, const TensorVector& vec) {
    check_pair(pair);
    TensorVector out(vec.rank(), vec.mode());
    for (const auto& [idx, c] : vec.terms()) {
        IndexTuple mapped(idx.size());
        for (std::size_t t = 0; t < idx.size(); ++t) {
            const long long j = idx[t];
            const int a = residue_mod(j, pair.n);
            const long long b = (j - a) / pair.n;
            mapped[t] = a + static_cast<long long>(pair.N) * b;
        }
        out.add_term(std::move(mapped), c);
    }
    return out;
}

std::function<TensorVector(const TensorVector&)> transport_endomorphism(
    const Session& big_session, const OperatorExpr& op, const TruncationPair& pair) {
    check_pair(pair);
    if (big_session.n != pair.N)
        throw std::invalid_argument("transport_endomorphism: session modulus must equal N");
    if (big_session.r != pair.r)
        throw std::invalid_argument("transport_endomorphism: session rank must equal r");
    return [big_session, op, pair](const TensorVector& x) {
        return retract(pair, idempotent_e(pair, apply_expr(big_session, op, section(pair, x))));
    };
}

}  // namespace qschur
