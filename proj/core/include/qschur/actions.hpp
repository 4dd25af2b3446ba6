#pragma once

#include <optional>

#include "qschur/tensor.hpp"

namespace qschur {

/// Ambient configuration for tensor-space computations: the residue modulus
/// n, the tensor rank r, and the coefficient mode. All action functions are
/// pure; the session is read-only.
struct Session {
    int n = 2;
    int r = 2;
    std::optional<int> lprime;
    /// Offers candidate E_n/F_n operators built from the same residue
    /// formulas read modulo n; they are only ever validated extensionally.
    bool enable_affine_node = false;
    /// Harness self-test hook: deliberately perturbs one coefficient of the
    /// T-action so the relation suites must report failures.
    bool perturb_t_selftest = false;

    ScalarMode mode() const { return {lprime}; }
};

/// Right action of X_t^{-power}: entry j_t becomes j_t - power*n, so
/// power = -1 realizes the inverse generator (which adds n). Linear,
/// invertible.
TensorVector apply_x(const Session& ses, int t, long long power, const TensorVector& vec);

/// Right action of the Hecke generator T_k. On tuples whose k, k+1 entries
/// both lie in {1,...,n} this is the three-case table (equal: v^2; ascending:
/// v * swap; descending: v * swap + (v^2-1) * id). Out-of-window entries are
/// reduced one X-shift at a time through the commutation rules
///   X_{k+1} T_k = T_k X_k + (v^2-1) X_{k+1}
///   X_k T_k     = T_k X_{k+1} - (v^2-1) X_{k+1}
/// and their inverse forms, until the table applies.
TensorVector apply_t(const Session& ses, int k, const TensorVector& vec);

/// Right action of T_k^{-1} = v^{-2} (T_k - (v^2-1)).
TensorVector apply_t_inv(const Session& ses, int k, const TensorVector& vec);

/// Left action of E_i through the iterated coproduct: each slot t with
/// residue i+1 is lowered by one, weighted by v^{c_t} where c_t counts
/// residue-i entries minus residue-(i+1) entries strictly after slot t.
TensorVector apply_e_gen(const Session& ses, int i, const TensorVector& vec);

/// Left action of F_i: each slot t with residue i is raised by one, weighted
/// by v^{-c_t} where c_t counts residue-i entries minus residue-(i+1)
/// entries strictly before slot t.
TensorVector apply_f_gen(const Session& ses, int i, const TensorVector& vec);

/// Diagonal action of k_i^exponent: scales a tuple of weight lambda by
/// v^{exponent * lambda_i}.
TensorVector apply_k(const Session& ses, int i, long long exponent, const TensorVector& vec);

/// Diagonal action of the divided k-power [k_i; 0 over t]: scales a tuple of
/// weight lambda by the Gaussian binomial [lambda_i over t].
TensorVector apply_k_binom(const Session& ses, int i, int t, const TensorVector& vec);

/// Central shift operators: z_s^+ lowers one slot by s*n, z_s^- raises one
/// slot by s*n, summed over slots (primitive coproduct).
TensorVector apply_z(const Session& ses, int s, bool plus, const TensorVector& vec);

/// Weight idempotent 1_lambda: keeps exactly the terms of weight lambda.
/// Agrees with the composite of apply_k_binom(i, lambda_i) over i = 1..n.
TensorVector project_weight(const Session& ses, const Composition& lam, const TensorVector& vec);

}  // namespace qschur
