#include "qschur/actions.hpp"

#include <stdexcept>

#include "qschur/qcomb.hpp"

namespace qschur {

namespace {

void check_rank(const Session& ses, const TensorVector& vec) {
    if (vec.rank() != ses.r) throw std::invalid_argument("action: vector rank differs from session r");
    if (vec.mode() != ses.mode())
        throw std::invalid_argument("action: vector scalar mode differs from session");
}

bool in_window(long long a, int n) { return 1 <= a && a <= n; }

struct TScalars {
    Scalar v;
    Scalar v2;
    Scalar v2m1;
    Scalar one;

    explicit TScalars(const ScalarMode& mode)
        : v(Scalar::v_power(mode, 1)),
          v2(Scalar::v_power(mode, 2)),
          v2m1(v2 - Scalar::one(mode)),
          one(Scalar::one(mode)) {}
};

/// idx * T_k for a single basis tuple, coefficient 1. k is 1-based and
/// already validated. Recursion peels one X-shift per step; slots other than
/// k-1, k (0-based) are spectators throughout.
TensorVector t_on_tuple(const Session& ses, const TScalars& sc, int k, const IndexTuple& idx) {
    const int n = ses.n;
    const ScalarMode mode = ses.mode();
    const std::size_t ka = static_cast<std::size_t>(k - 1), kb = static_cast<std::size_t>(k);
    const long long a = idx[ka], b = idx[kb];

    const Scalar& v2 = sc.v2;
    const Scalar& v2m1 = sc.v2m1;

    if (in_window(a, n) && in_window(b, n)) {
        TensorVector out(ses.r, mode);
        if (a == b) {
            out.add_term(idx, v2);
        } else {
            IndexTuple swapped(idx);
            std::swap(swapped[ka], swapped[kb]);
            out.add_term(std::move(swapped), sc.v);
            if (b < a) out.add_term(idx, v2m1);
            if (ses.perturb_t_selftest && a < b) out.add_term(idx, sc.one);
        }
        return out;
    }

    auto shifted = [&](std::size_t slot, long long delta) {
        IndexTuple t(idx);
        t[slot] += delta;
        return t;
    };
    auto shift_all = [&](TensorVector vec, std::size_t slot, long long delta) {
        TensorVector out(ses.r, mode);
        for (const auto& [t, c] : vec.terms()) {
            IndexTuple moved(t);
            moved[slot] += delta;
            out.add_term(std::move(moved), c);
        }
        return out;
    };

    if (a > n) {
        // idx = (a-n, b) * X_k^{-1};  X_k^{-1} T_k = T_k X_{k+1}^{-1} + (v^2-1) X_k^{-1}
        TensorVector rec = t_on_tuple(ses, sc, k, shifted(ka, -n));
        TensorVector out = shift_all(std::move(rec), kb, +n);
        out.add_term(idx, v2m1);
        return out;
    }
    if (a <= 0) {
        // idx = (a+n, b) * X_k;  X_k T_k = T_k X_{k+1} - (v^2-1) X_{k+1}
        TensorVector rec = t_on_tuple(ses, sc, k, shifted(ka, +n));
        TensorVector out = shift_all(std::move(rec), kb, -n);
        IndexTuple extra(idx);
        extra[ka] += n;
        extra[kb] -= n;
        out.add_term(std::move(extra), -v2m1);
        return out;
    }
    if (b > n) {
        // idx = (a, b-n) * X_{k+1}^{-1};  X_{k+1}^{-1} T_k = T_k X_k^{-1} - (v^2-1) X_k^{-1}
        TensorVector rec = t_on_tuple(ses, sc, k, shifted(kb, -n));
        TensorVector out = shift_all(std::move(rec), ka, +n);
        IndexTuple extra(idx);
        extra[ka] += n;
        extra[kb] -= n;
        out.add_term(std::move(extra), -v2m1);
        return out;
    }
    // b <= 0: idx = (a, b+n) * X_{k+1};  X_{k+1} T_k = T_k X_k + (v^2-1) X_{k+1}
    TensorVector rec = t_on_tuple(ses, sc, k, shifted(kb, +n));
    TensorVector out = shift_all(std::move(rec), ka, -n);
    out.add_term(idx, v2m1);
    return out;
}

}  // namespace

TensorVector apply_x(const Session& ses, int t, long long power, const TensorVector& vec) {
    check_rank(ses, vec);
    if (t < 1 || t > ses.r) throw std::out_of_range("apply_x: slot index out of range");
    TensorVector out(ses.r, ses.mode());
    const long long delta = -power * ses.n;
    for (const auto& [idx, c] : vec.terms()) {
        IndexTuple moved(idx);
        moved[static_cast<std::size_t>(t - 1)] += delta;
        out.add_term(std::move(moved), c);
    }
    return out;
}

TensorVector apply_t(const Session& ses, int k, const TensorVector& vec) {
    check_rank(ses, vec);
    if (k < 1 || k > ses.r - 1) throw std::out_of_range("apply_t: generator index out of range");
    const TScalars sc(ses.mode());
    TensorVector out(ses.r, ses.mode());
    for (const auto& [idx, c] : vec.terms()) {
        TensorVector part = t_on_tuple(ses, sc, k, idx);
        for (const auto& [jdx, d] : part.terms()) out.add_term(jdx, d * c);
    }
    return out;
}

TensorVector apply_t_inv(const Session& ses, int k, const TensorVector& vec) {
    check_rank(ses, vec);
    if (k < 1 || k > ses.r - 1) throw std::out_of_range("apply_t_inv: generator index out of range");
    const ScalarMode mode = ses.mode();
    const Scalar v2m1 = Scalar::v_power(mode, 2) - Scalar::one(mode);
    TensorVector out = apply_t(ses, k, vec);
    out -= vec.scaled(v2m1);
    out.scale_in_place(Scalar::v_power(mode, -2));
    return out;
}

namespace {

void check_uindex(const Session& ses, int i, const char* what) {
    const int hi = ses.enable_affine_node ? ses.n : ses.n - 1;
    if (i < 1 || i > hi) throw std::out_of_range(std::string(what) + ": generator index out of range");
}

}  // namespace

TensorVector apply_e_gen(const Session& ses, int i, const TensorVector& vec) {
    check_rank(ses, vec);
    check_uindex(ses, i, "apply_e_gen");
    const int n = ses.n;
    const int res_lower = residue_mod(i, n);       // i
    const int res_upper = residue_mod(i + 1, n);   // i+1, wrapped for the affine node
    const ScalarMode mode = ses.mode();
    TensorVector out(ses.r, mode);
    for (const auto& [idx, c] : vec.terms()) {
        for (std::size_t t = 0; t < idx.size(); ++t) {
            if (residue_mod(idx[t], n) != res_upper) continue;
            long long exp = 0;
            for (std::size_t u = t + 1; u < idx.size(); ++u) {
                const int res = residue_mod(idx[u], n);
                if (res == res_lower) ++exp;
                if (res == res_upper) --exp;
            }
            IndexTuple moved(idx);
            --moved[t];
            out.add_term(std::move(moved), c * Scalar::v_power(mode, exp));
        }
    }
    return out;
}

TensorVector apply_f_gen(const Session& ses, int i, const TensorVector& vec) {
    check_rank(ses, vec);
    check_uindex(ses, i, "apply_f_gen");
    const int n = ses.n;
    const int res_lower = residue_mod(i, n);
    const int res_upper = residue_mod(i + 1, n);
    const ScalarMode mode = ses.mode();
    TensorVector out(ses.r, mode);
    for (const auto& [idx, c] : vec.terms()) {
        for (std::size_t t = 0; t < idx.size(); ++t) {
            if (residue_mod(idx[t], n) != res_lower) continue;
            long long exp = 0;
            for (std::size_t u = 0; u < t; ++u) {
                const int res = residue_mod(idx[u], n);
                if (res == res_lower) ++exp;
                if (res == res_upper) --exp;
            }
            IndexTuple moved(idx);
            ++moved[t];
            out.add_term(std::move(moved), c * Scalar::v_power(mode, -exp));
        }
    }
    return out;
}

TensorVector apply_k(const Session& ses, int i, long long exponent, const TensorVector& vec) {
    check_rank(ses, vec);
    if (i < 1 || i > ses.n) throw std::out_of_range("apply_k: generator index out of range");
    const ScalarMode mode = ses.mode();
    TensorVector out(ses.r, mode);
    for (const auto& [idx, c] : vec.terms()) {
        const Composition lam = weight_of(idx, ses.n);
        out.add_term(idx, c * Scalar::v_power(mode, exponent * lam.parts[static_cast<std::size_t>(i - 1)]));
    }
    return out;
}

TensorVector apply_k_binom(const Session& ses, int i, int t, const TensorVector& vec) {
    check_rank(ses, vec);
    if (i < 1 || i > ses.n) throw std::out_of_range("apply_k_binom: generator index out of range");
    if (t < 0) throw std::invalid_argument("apply_k_binom: t must be >= 0");
    const ScalarMode mode = ses.mode();
    TensorVector out(ses.r, mode);
    // The eigenvalue only depends on lambda_i in [0, r]; memoize per call.
    std::vector<std::optional<Scalar>> eigen(static_cast<std::size_t>(ses.r) + 1);
    for (const auto& [idx, c] : vec.terms()) {
        const Composition lam = weight_of(idx, ses.n);
        const int li = lam.parts[static_cast<std::size_t>(i - 1)];
        auto& cached = eigen[static_cast<std::size_t>(li)];
        if (!cached) cached = Scalar::from_laurent(mode, qbinom(li, t));
        out.add_term(idx, c * *cached);
    }
    return out;
}

TensorVector apply_z(const Session& ses, int s, bool plus, const TensorVector& vec) {
    check_rank(ses, vec);
    if (s < 1) throw std::invalid_argument("apply_z: s must be >= 1");
    const long long delta = (plus ? -1LL : 1LL) * static_cast<long long>(s) * ses.n;
    TensorVector out(ses.r, ses.mode());
    for (const auto& [idx, c] : vec.terms()) {
        for (std::size_t t = 0; t < idx.size(); ++t) {
            IndexTuple moved(idx);
            moved[t] += delta;
            out.add_term(std::move(moved), c);
        }
    }
    return out;
}

TensorVector project_weight(const Session& ses, const Composition& lam, const TensorVector& vec) {
    check_rank(ses, vec);
    if (lam.n != ses.n) throw std::invalid_argument("project_weight: weight has wrong n");
    if (lam.r() != ses.r) throw std::invalid_argument("project_weight: weight has wrong size");
    TensorVector out(ses.r, ses.mode());
    for (const auto& [idx, c] : vec.terms())
        if (weight_of(idx, ses.n) == lam) out.add_term(idx, c);
    return out;
}

}  // namespace qschur
