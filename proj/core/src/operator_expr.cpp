#include "qschur/operator_expr.hpp"

#include <stdexcept>

#include "qschur/schur_functor.hpp"

namespace qschur {

struct OperatorExpr::Node {
    Kind kind = Kind::Identity;
    int index = 0;          // generator index (k, i, t, s by kind)
    long long power = 0;    // XShift power / KGen exponent
    int arg_t = 0;          // KBinom t
    bool z_plus = true;     // ZGen sign
    Composition lambda;     // WeightProj
    int trunc_n = 0, trunc_big_n = 0;  // IdempotentE
    std::vector<OperatorExpr> children;
    std::vector<Scalar> coeffs;  // LinComb, parallel to children
};

OperatorExpr OperatorExpr::identity() {
    return OperatorExpr(std::make_shared<const Node>());
}

OperatorExpr OperatorExpr::hecke_t(int k) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::HeckeT;
    n->index = k;
    return OperatorExpr(std::move(n));
}

OperatorExpr OperatorExpr::hecke_t_inv(int k) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::HeckeTInv;
    n->index = k;
    return OperatorExpr(std::move(n));
}

OperatorExpr OperatorExpr::x_shift(int t, long long power) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::XShift;
    n->index = t;
    n->power = power;
    return OperatorExpr(std::move(n));
}

OperatorExpr OperatorExpr::e_gen(int i) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::EGen;
    n->index = i;
    return OperatorExpr(std::move(n));
}

OperatorExpr OperatorExpr::f_gen(int i) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::FGen;
    n->index = i;
    return OperatorExpr(std::move(n));
}

OperatorExpr OperatorExpr::k_gen(int i, long long exponent) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::KGen;
    n->index = i;
    n->power = exponent;
    return OperatorExpr(std::move(n));
}

OperatorExpr OperatorExpr::k_binom(int i, int t) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::KBinom;
    n->index = i;
    n->arg_t = t;
    return OperatorExpr(std::move(n));
}

OperatorExpr OperatorExpr::z_gen(int s, bool plus) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::ZGen;
    n->index = s;
    n->z_plus = plus;
    return OperatorExpr(std::move(n));
}

OperatorExpr OperatorExpr::weight_proj(Composition lam) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::WeightProj;
    n->lambda = std::move(lam);
    return OperatorExpr(std::move(n));
}

OperatorExpr OperatorExpr::idempotent_e(int small_n, int big_n) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::IdempotentE;
    n->trunc_n = small_n;
    n->trunc_big_n = big_n;
    return OperatorExpr(std::move(n));
}

OperatorExpr OperatorExpr::compose(std::vector<OperatorExpr> ops) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Compose;
    n->children = std::move(ops);
    return OperatorExpr(std::move(n));
}

OperatorExpr OperatorExpr::lin_comb(std::vector<std::pair<Scalar, OperatorExpr>> terms) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::LinComb;
    for (auto& [c, op] : terms) {
        n->coeffs.push_back(std::move(c));
        n->children.push_back(std::move(op));
    }
    return OperatorExpr(std::move(n));
}

OperatorExpr::Kind OperatorExpr::kind() const { return node_->kind; }
int OperatorExpr::index() const { return node_->index; }
long long OperatorExpr::power() const { return node_->power; }
int OperatorExpr::arg_t() const { return node_->arg_t; }
bool OperatorExpr::z_plus() const { return node_->z_plus; }
const Composition& OperatorExpr::lambda() const { return node_->lambda; }
int OperatorExpr::trunc_n() const { return node_->trunc_n; }
int OperatorExpr::trunc_big_n() const { return node_->trunc_big_n; }
const std::vector<OperatorExpr>& OperatorExpr::children() const { return node_->children; }
const std::vector<Scalar>& OperatorExpr::coefficients() const { return node_->coeffs; }

OperatorExpr::Side OperatorExpr::side() const {
    switch (node_->kind) {
        case Kind::Identity:
            return Side::Neutral;
        case Kind::HeckeT:
        case Kind::HeckeTInv:
        case Kind::XShift:
            return Side::Hecke;
        case Kind::EGen:
        case Kind::FGen:
        case Kind::KGen:
        case Kind::KBinom:
        case Kind::ZGen:
        case Kind::WeightProj:
        case Kind::IdempotentE:
            return Side::UGen;
        case Kind::Compose:
        case Kind::LinComb: {
            Side acc = Side::Neutral;
            for (const OperatorExpr& child : node_->children) {
                const Side s = child.side();
                if (s == Side::Neutral) continue;
                if (acc == Side::Neutral)
                    acc = s;
                else if (acc != s)
                    return Side::Mixed;
            }
            return acc;
        }
    }
    return Side::Mixed;
}

TensorVector apply_expr(const Session& ses, const OperatorExpr& op, const TensorVector& vec) {
    switch (op.kind()) {
        case OperatorExpr::Kind::Identity:
            return vec;
        case OperatorExpr::Kind::HeckeT:
            return apply_t(ses, op.index(), vec);
        case OperatorExpr::Kind::HeckeTInv:
            return apply_t_inv(ses, op.index(), vec);
        case OperatorExpr::Kind::XShift:
            return apply_x(ses, op.index(), op.power(), vec);
        case OperatorExpr::Kind::EGen:
            return apply_e_gen(ses, op.index(), vec);
        case OperatorExpr::Kind::FGen:
            return apply_f_gen(ses, op.index(), vec);
        case OperatorExpr::Kind::KGen:
            return apply_k(ses, op.index(), op.power(), vec);
        case OperatorExpr::Kind::KBinom:
            return apply_k_binom(ses, op.index(), op.arg_t(), vec);
        case OperatorExpr::Kind::ZGen:
            return apply_z(ses, op.index(), op.z_plus(), vec);
        case OperatorExpr::Kind::WeightProj:
            return project_weight(ses, op.lambda(), vec);
        case OperatorExpr::Kind::IdempotentE: {
            if (op.trunc_big_n() != ses.n)
                throw std::invalid_argument("apply_expr: idempotent e expects the N-session");
            const TruncationPair pair{op.trunc_n(), op.trunc_big_n(), ses.r};
            return idempotent_e(pair, vec);
        }
        case OperatorExpr::Kind::Compose: {
            // Split the word by side: the Hecke factors act on the right and
            // compose left to right; everything else composes right to left.
            std::vector<const OperatorExpr*> hecke_word, u_word;
            for (const OperatorExpr& child : op.children()) {
                if (child.side() == OperatorExpr::Side::Hecke)
                    hecke_word.push_back(&child);
                else
                    u_word.push_back(&child);
            }
            TensorVector acc = vec;
            for (const OperatorExpr* h : hecke_word) acc = apply_expr(ses, *h, acc);
            for (auto it = u_word.rbegin(); it != u_word.rend(); ++it)
                acc = apply_expr(ses, **it, acc);
            return acc;
        }
        case OperatorExpr::Kind::LinComb: {
            TensorVector acc(ses.r, ses.mode());
            const auto& children = op.children();
            const auto& coeffs = op.coefficients();
            for (std::size_t i = 0; i < children.size(); ++i) {
                if (coeffs[i].mode() != ses.mode())
                    throw std::invalid_argument("apply_expr: LinComb coefficient mode mismatch");
                acc += apply_expr(ses, children[i], vec).scaled(coeffs[i]);
            }
            return acc;
        }
    }
    throw std::logic_error("apply_expr: unhandled node kind");
}

}  // namespace qschur
