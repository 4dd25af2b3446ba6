#include "qschur/json_io.hpp"

#include <stdexcept>

namespace qschur {

namespace {

long long to_int64(const mpz_class& z, const char* what) {
    if (!z.fits_slong_p())
        throw std::logic_error(std::string(what) + ": integer exceeds the JSON int64 encoding");
    return z.get_si();
}

json rational_pair(const Rational& c) {
    return json::array({to_int64(c.get_num(), "rational"), to_int64(c.get_den(), "rational")});
}

Rational rational_from_pair(const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("rational: expected [num, den]");
    Rational c(to_mpz(j[0].get<long long>()), to_mpz(j[1].get<long long>()));
    c.canonicalize();
    return c;
}

}  // namespace

json to_json(const LaurentPoly& p) {
    json arr = json::array();
    for (const auto& [k, c] : p.coefficients())
        arr.push_back(json::array(
            {k, to_int64(c.get_num(), "laurent"), to_int64(c.get_den(), "laurent")}));
    return arr;
}

LaurentPoly laurent_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("laurent: expected array of triples");
    LaurentPoly p;
    for (const json& triple : j) {
        if (!triple.is_array() || triple.size() != 3)
            throw std::invalid_argument("laurent: expected [exponent, num, den]");
        Rational c(to_mpz(triple[1].get<long long>()), to_mpz(triple[2].get<long long>()));
        c.canonicalize();
        p += LaurentPoly::monomial(triple[0].get<long long>(), c);
    }
    return p;
}

json to_json(const CyclotomicNumber& z) {
    json coords = json::array();
    for (const Rational& c : z.coords()) coords.push_back(rational_pair(c));
    return json{{"lprime", z.order()}, {"coords", coords}};
}

CyclotomicNumber cyclotomic_from_json(const json& j) {
    const int lprime = j.at("lprime").get<int>();
    std::vector<Rational> coords;
    for (const json& pair : j.at("coords")) coords.push_back(rational_from_pair(pair));
    return CyclotomicNumber(lprime, std::move(coords));
}

json to_json(const Scalar& s) {
    if (s.is_generic()) return json{{"generic", to_json(s.as_laurent())}};
    return json{{"specialized", to_json(s.as_cyclotomic())}};
}

Scalar scalar_from_json(const json& j) {
    if (j.contains("generic")) return Scalar(laurent_from_json(j.at("generic")));
    if (j.contains("specialized")) return Scalar(cyclotomic_from_json(j.at("specialized")));
    throw std::invalid_argument("scalar: expected \"generic\" or \"specialized\"");
}

json to_json(const Composition& c) { return json(c.parts); }

Composition composition_from_json(const json& j) {
    std::vector<int> parts = j.get<std::vector<int>>();
    const int n = static_cast<int>(parts.size());
    return Composition(n, std::move(parts));
}

json to_json(const TensorVector& v) {
    json terms = json::array();
    for (const auto& [idx, c] : v.terms())
        terms.push_back(json{{"idx", idx}, {"coeff", to_json(c)}});
    return json{{"r", v.rank()}, {"terms", terms}};
}

TensorVector tensor_from_json(const json& j) {
    const int r = j.at("r").get<int>();
    const json& terms = j.at("terms");
    // The mode comes from the first coefficient; an empty vector is generic.
    ScalarMode mode{};
    if (!terms.empty()) mode = scalar_from_json(terms.front().at("coeff")).mode();
    TensorVector v(r, mode);
    for (const json& term : terms)
        v.add_term(term.at("idx").get<IndexTuple>(), scalar_from_json(term.at("coeff")));
    return v;
}

json to_json(const OperatorExpr& op) {
    using Kind = OperatorExpr::Kind;
    switch (op.kind()) {
        case Kind::Identity:
            return json{{"kind", "identity"}};
        case Kind::HeckeT:
            return json{{"kind", "hecke_t"}, {"k", op.index()}};
        case Kind::HeckeTInv:
            return json{{"kind", "hecke_t_inv"}, {"k", op.index()}};
        case Kind::XShift:
            return json{{"kind", "x_shift"}, {"t", op.index()}, {"power", op.power()}};
        case Kind::EGen:
            return json{{"kind", "e_gen"}, {"i", op.index()}};
        case Kind::FGen:
            return json{{"kind", "f_gen"}, {"i", op.index()}};
        case Kind::KGen:
            return json{{"kind", "k_gen"}, {"i", op.index()}, {"exponent", op.power()}};
        case Kind::KBinom:
            return json{{"kind", "k_binom"}, {"i", op.index()}, {"t", op.arg_t()}};
        case Kind::ZGen:
            return json{{"kind", "z_gen"}, {"s", op.index()}, {"sign", op.z_plus() ? "+" : "-"}};
        case Kind::WeightProj:
            return json{{"kind", "weight_proj"}, {"lambda", to_json(op.lambda())}};
        case Kind::IdempotentE:
            return json{{"kind", "idempotent_e"}, {"n", op.trunc_n()}, {"N", op.trunc_big_n()}};
        case Kind::Compose: {
            json ops = json::array();
            for (const OperatorExpr& child : op.children()) ops.push_back(to_json(child));
            return json{{"kind", "compose"}, {"ops", ops}};
        }
        case Kind::LinComb: {
            json terms = json::array();
            const auto& children = op.children();
            const auto& coeffs = op.coefficients();
            for (std::size_t i = 0; i < children.size(); ++i)
                terms.push_back(json{{"coeff", to_json(coeffs[i])}, {"op", to_json(children[i])}});
            return json{{"kind", "lincomb"}, {"terms", terms}};
        }
    }
    throw std::logic_error("to_json: unhandled operator kind");
}

OperatorExpr operator_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "identity") return OperatorExpr::identity();
    if (kind == "hecke_t") return OperatorExpr::hecke_t(j.at("k").get<int>());
    if (kind == "hecke_t_inv") return OperatorExpr::hecke_t_inv(j.at("k").get<int>());
    if (kind == "x_shift")
        return OperatorExpr::x_shift(j.at("t").get<int>(), j.at("power").get<long long>());
    if (kind == "e_gen") return OperatorExpr::e_gen(j.at("i").get<int>());
    if (kind == "f_gen") return OperatorExpr::f_gen(j.at("i").get<int>());
    if (kind == "k_gen")
        return OperatorExpr::k_gen(j.at("i").get<int>(), j.at("exponent").get<long long>());
    if (kind == "k_binom") return OperatorExpr::k_binom(j.at("i").get<int>(), j.at("t").get<int>());
    if (kind == "z_gen") {
        const std::string sign = j.at("sign").get<std::string>();
        if (sign != "+" && sign != "-") throw std::invalid_argument("z_gen: sign must be + or -");
        return OperatorExpr::z_gen(j.at("s").get<int>(), sign == "+");
    }
    if (kind == "weight_proj")
        return OperatorExpr::weight_proj(composition_from_json(j.at("lambda")));
    if (kind == "idempotent_e")
        return OperatorExpr::idempotent_e(j.at("n").get<int>(), j.at("N").get<int>());
    if (kind == "compose") {
        std::vector<OperatorExpr> ops;
        for (const json& child : j.at("ops")) ops.push_back(operator_from_json(child));
        return OperatorExpr::compose(std::move(ops));
    }
    if (kind == "lincomb") {
        std::vector<std::pair<Scalar, OperatorExpr>> terms;
        for (const json& term : j.at("terms"))
            terms.emplace_back(scalar_from_json(term.at("coeff")),
                               operator_from_json(term.at("op")));
        return OperatorExpr::lin_comb(std::move(terms));
    }
    throw std::invalid_argument("operator: unknown kind \"" + kind + "\"");
}

json to_json(const Session& ses) {
    json j{{"n", ses.n}, {"r", ses.r}};
    if (ses.lprime)
        j["lprime"] = *ses.lprime;
    else
        j["lprime"] = nullptr;
    return j;
}

Session session_from_json(const json& j) {
    Session ses;
    ses.n = j.at("n").get<int>();
    ses.r = j.at("r").get<int>();
    if (j.contains("lprime") && !j.at("lprime").is_null()) ses.lprime = j.at("lprime").get<int>();
    return ses;
}

}  // namespace qschur
