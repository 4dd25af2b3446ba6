#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "qschur/actions.hpp"

namespace qschur {

/// Symbolic linear operator on tensor vectors: generator leaves plus
/// composition and linear combination. Values are immutable and cheap to
/// copy (shared structure).
class OperatorExpr {
public:
    enum class Kind {
        Identity,
        HeckeT,
        HeckeTInv,
        XShift,
        EGen,
        FGen,
        KGen,
        KBinom,
        ZGen,
        WeightProj,
        IdempotentE,
        Compose,
        LinComb,
    };

    /// Which action a subexpression belongs to. Hecke leaves act on the
    /// right, quantum-group leaves on the left; the two commute on tensor
    /// space, and composition respects each side's own order.
    enum class Side { Neutral, Hecke, UGen, Mixed };

    OperatorExpr() : OperatorExpr(identity()) {}

    static OperatorExpr identity();
    static OperatorExpr hecke_t(int k);
    static OperatorExpr hecke_t_inv(int k);
    static OperatorExpr x_shift(int t, long long power);
    static OperatorExpr e_gen(int i);
    static OperatorExpr f_gen(int i);
    static OperatorExpr k_gen(int i, long long exponent);
    static OperatorExpr k_binom(int i, int t);
    static OperatorExpr z_gen(int s, bool plus);
    static OperatorExpr weight_proj(Composition lam);
    static OperatorExpr idempotent_e(int n, int N);
    static OperatorExpr compose(std::vector<OperatorExpr> ops);
    static OperatorExpr lin_comb(std::vector<std::pair<Scalar, OperatorExpr>> terms);

    Kind kind() const;
    Side side() const;

    // Leaf payload accessors; meaningful only for the matching kind.
    int index() const;
    long long power() const;
    int arg_t() const;
    bool z_plus() const;
    const Composition& lambda() const;
    int trunc_n() const;
    int trunc_big_n() const;
    const std::vector<OperatorExpr>& children() const;
    const std::vector<Scalar>& coefficients() const;

private:
    struct Node;
    std::shared_ptr<const Node> node_;
    explicit OperatorExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
};

/// Evaluate an operator expression. A Compose list is split into its Hecke
/// word (applied left to right, matching the right action) and its
/// quantum-group word (applied right to left, matching the left action);
/// mixed subexpressions are evaluated in the quantum-group pass. LinComb is
/// pointwise.
TensorVector apply_expr(const Session& ses, const OperatorExpr& op, const TensorVector& vec);

}  // namespace qschur
