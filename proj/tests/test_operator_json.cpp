#include <doctest.h>

#include "qschur/json_io.hpp"
#include "qschur/sampling.hpp"

using namespace qschur;

namespace {

const ScalarMode kGeneric{};

TensorVector basis(IndexTuple idx) { return TensorVector::basis(kGeneric, std::move(idx)); }

}  // namespace

TEST_CASE("apply_expr basics") {
    const Session ses{2, 2};
    const TensorVector v = basis({1, 2}) + basis({0, 3}).scaled(Scalar::from_int(kGeneric, -2));

    CHECK(apply_expr(ses, OperatorExpr::identity(), v) == v);

    const OperatorExpr scaled =
        OperatorExpr::lin_comb({{Scalar::v_power(kGeneric, 2), OperatorExpr::identity()}});
    CHECK(apply_expr(ses, scaled, v) == v.scaled(Scalar::v_power(kGeneric, 2)));
}

TEST_CASE("apply_expr EF commutator example") {
    const Session ses{2, 1};
    const OperatorExpr ef = OperatorExpr::compose({OperatorExpr::e_gen(1), OperatorExpr::f_gen(1)});
    const OperatorExpr fe = OperatorExpr::compose({OperatorExpr::f_gen(1), OperatorExpr::e_gen(1)});
    const OperatorExpr commutator = OperatorExpr::lin_comb(
        {{Scalar::one(kGeneric), ef}, {-Scalar::one(kGeneric), fe}});
    CHECK(apply_expr(ses, commutator, basis({1})) == basis({1}));
}

TEST_CASE("compose splits by action side") {
    const Session ses{2, 2};
    const TensorVector v = basis({2, 1});

    // Hecke words compose left to right.
    const OperatorExpr tw = OperatorExpr::compose(
        {OperatorExpr::hecke_t(1), OperatorExpr::x_shift(1, 1)});
    CHECK(apply_expr(ses, tw, v) == apply_x(ses, 1, 1, apply_t(ses, 1, v)));

    // U words compose right to left.
    const OperatorExpr uw = OperatorExpr::compose(
        {OperatorExpr::e_gen(1), OperatorExpr::f_gen(1)});
    CHECK(apply_expr(ses, uw, v) == apply_e_gen(ses, 1, apply_f_gen(ses, 1, v)));

    // A mixed word applies its Hecke part and its U part independently; the
    // two actions commute, so the relative interleaving is immaterial.
    const OperatorExpr mixed = OperatorExpr::compose(
        {OperatorExpr::e_gen(1), OperatorExpr::hecke_t(1), OperatorExpr::k_gen(1, 1)});
    CHECK(apply_expr(ses, mixed, v) ==
          apply_e_gen(ses, 1, apply_k(ses, 1, 1, apply_t(ses, 1, v))));
}

TEST_CASE("weight projection and idempotent nodes") {
    const Session ses{3, 2};
    const TensorVector v = basis({1, 2}) + basis({1, 3});
    const OperatorExpr proj = OperatorExpr::weight_proj(Composition(3, {1, 1, 0}));
    CHECK(apply_expr(ses, proj, v) == basis({1, 2}));

    const OperatorExpr e = OperatorExpr::idempotent_e(2, 3);
    CHECK(apply_expr(ses, e, v) == basis({1, 2}));

    const Session wrong{2, 2};
    CHECK_THROWS_AS(apply_expr(wrong, e, basis({1, 2})), std::invalid_argument);
}

TEST_CASE("operator JSON round trip") {
    const OperatorExpr expr = OperatorExpr::lin_comb(
        {{Scalar::v_power(kGeneric, 2),
          OperatorExpr::compose({OperatorExpr::hecke_t(1), OperatorExpr::hecke_t_inv(2),
                                 OperatorExpr::x_shift(1, -1), OperatorExpr::e_gen(1),
                                 OperatorExpr::f_gen(2), OperatorExpr::k_gen(1, -1),
                                 OperatorExpr::k_binom(2, 1), OperatorExpr::z_gen(1, false),
                                 OperatorExpr::weight_proj(Composition(3, {2, 1, 0})),
                                 OperatorExpr::idempotent_e(2, 3)})},
         {Scalar::from_int(kGeneric, -3), OperatorExpr::identity()}});
    const json encoded = to_json(expr);
    CHECK(to_json(operator_from_json(encoded)) == encoded);
}

TEST_CASE("tensor vector JSON round trip") {
    Prng rng(5);
    SampleParams params;
    params.r = 3;
    params.window_lo = -4;
    params.window_hi = 7;
    for (int trial = 0; trial < 50; ++trial) {
        const TensorVector v = random_vector(rng, params, kGeneric);
        CHECK(tensor_from_json(to_json(v)) == v);
    }
    for (int trial = 0; trial < 50; ++trial) {
        const TensorVector v = random_vector(rng, params, ScalarMode{6});
        CHECK(tensor_from_json(to_json(v)) == v);
    }
    // Vectors with richer scalars than sampled integer coefficients.
    TensorVector v(2, kGeneric);
    v.add_term({0, -5}, Scalar(LaurentPoly::monomial(-3, Rational(7, 2)) +
                               LaurentPoly::v_power(4)));
    CHECK(tensor_from_json(to_json(v)) == v);
}

TEST_CASE("laurent JSON is sorted triples") {
    LaurentPoly p = LaurentPoly::monomial(2, Rational(1));
    p += LaurentPoly::monomial(-1, Rational(1, 2));
    const json j = to_json(p);
    CHECK(j.dump() == "[[-1,1,2],[2,1,1]]");
    CHECK(laurent_from_json(j) == p);
}

TEST_CASE("session JSON") {
    Session ses{3, 2};
    ses.lprime = 6;
    const json j = to_json(ses);
    const Session back = session_from_json(j);
    CHECK(back.n == 3);
    CHECK(back.r == 2);
    CHECK(back.lprime == 6);
    CHECK(!session_from_json(json{{"n", 1}, {"r", 5}, {"lprime", nullptr}}).lprime);
}

TEST_CASE("scalar JSON rejects malformed input") {
    CHECK_THROWS_AS(scalar_from_json(json{{"bogus", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(operator_from_json(json{{"kind", "nope"}}), std::invalid_argument);
}
