#pragma once

#include <functional>

#include "qschur/tensor.hpp"

namespace qschur {

struct Session;
class OperatorExpr;

/// A truncation from modulus N down to modulus n <= N at fixed rank r.
/// The induced functor between module categories is an equivalence when
/// N >= n >= r.
struct TruncationPair {
    int n = 1;
    int N = 1;
    int r = 1;

    bool valid() const { return N >= n && n >= 1 && r >= 1; }
    bool morita_range() const { return N >= n && n >= r; }
};

/// Truncation idempotent e on the N-modulus tensor space: keeps exactly the
/// terms all of whose entries have residue mod N inside {1,...,n}. Idempotent
/// and Hecke-equivariant.
TensorVector idempotent_e(const TruncationPair& pair, const TensorVector& vec);

/// Entry-wise retraction rho from the image of e onto the n-modulus tensor
/// space: j = a + N*b with a in {1,...,n} maps to a + n*b. Coefficients are
/// untouched. Throws std::invalid_argument when some entry's residue mod N
/// falls outside {1,...,n}.
TensorVector retract(const TruncationPair& pair, const TensorVector& vec);

/// Inverse of retract: j = a + n*b with a in {1,...,n} maps to a + N*b.
TensorVector section(const TruncationPair& pair, const TensorVector& vec);

/// The image of e * op * e under the identification along rho: the map
/// x -> retract(e(op(section(x)))) on the n-modulus tensor space. The
/// operator expression must be valid in the N-session (big_session.n == N).
std::function<TensorVector(const TensorVector&)> transport_endomorphism(
    const Session& big_session, const OperatorExpr& op, const TruncationPair& pair);

}  // namespace qschur
