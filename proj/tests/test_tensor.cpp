#include <doctest.h>

#include "qschur/actions.hpp"
#include "qschur/qcomb.hpp"
#include "qschur/sampling.hpp"

using namespace qschur;

namespace {

const ScalarMode kGeneric{};

Scalar sc_v(long long k) { return Scalar::v_power(kGeneric, k); }
Scalar sc_int(long c) { return Scalar::from_int(kGeneric, c); }

TensorVector basis(IndexTuple idx) { return TensorVector::basis(kGeneric, std::move(idx)); }

TensorVector sample(Prng& rng, const Session& ses) {
    SampleParams params;
    params.r = ses.r;
    params.window_lo = 1 - 2LL * ses.n;
    params.window_hi = 3LL * ses.n;
    return random_vector(rng, params, ses.mode());
}

}  // namespace

TEST_CASE("weight_of") {
    CHECK(weight_of({1, 4, 2}, 2) == Composition(2, {1, 2}));
    CHECK(weight_of({5}, 5) == Composition(5, {0, 0, 0, 0, 1}));
    CHECK(weight_of({0, -1}, 2) == Composition(2, {1, 1}));
    CHECK(residue_mod(0, 2) == 2);
    CHECK(residue_mod(-1, 2) == 1);
    CHECK(residue_mod(7, 3) == 1);
}

TEST_CASE("composition helpers") {
    CHECK_THROWS_AS(Composition(2, {1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(Composition(2, {1}), std::invalid_argument);
    CHECK(dominated_by(Composition(2, {1, 1}), Composition(2, {2, 0})));
    CHECK(!dominated_by(Composition(2, {2, 0}), Composition(2, {1, 1})));
    CHECK(enumerate_compositions(2, 2).size() == 3);
    CHECK(enumerate_compositions(3, 3).size() == 10);
    CHECK(enumerate_compositions(1, 4).size() == 1);
}

TEST_CASE("tensor vector invariants") {
    TensorVector v(2, kGeneric);
    v.add_term({1, 2}, sc_int(1));
    v.add_term({1, 2}, sc_int(-1));
    CHECK(v.is_zero());
    CHECK_THROWS_AS(v.add_term({1, 2, 3}, sc_int(1)), std::invalid_argument);
    CHECK_THROWS_AS(v.add_term({1, 2}, Scalar::one(ScalarMode{4})), std::invalid_argument);
}

TEST_CASE("apply_x") {
    const Session ses{2, 2};
    CHECK(apply_x(ses, 1, -1, basis({1, 2})) == basis({3, 2}));
    const TensorVector v = basis({1, 2}) + basis({0, 0}).scaled(sc_int(2));
    CHECK(apply_x(ses, 1, 0, v) == v);
    CHECK(apply_x(ses, 2, 2, basis({1, 2})) == basis({1, -2}));
    // Invertibility.
    CHECK(apply_x(ses, 1, 1, apply_x(ses, 1, -1, v)) == v);
    CHECK_THROWS_AS(apply_x(ses, 3, 1, v), std::out_of_range);
}

TEST_CASE("apply_t on the window") {
    const Session ses{2, 2};
    CHECK(apply_t(ses, 1, basis({1, 1})) == basis({1, 1}).scaled(sc_v(2)));

    TensorVector expected = basis({1, 2}).scaled(sc_v(1));
    expected += basis({2, 1}).scaled(sc_v(2) - sc_int(1));
    CHECK(apply_t(ses, 1, basis({2, 1})) == expected);

    CHECK(apply_t(ses, 1, basis({1, 2})) == basis({2, 1}).scaled(sc_v(1)));
    CHECK_THROWS_AS(apply_t(ses, 2, basis({1, 1})), std::out_of_range);
}

TEST_CASE("apply_t beyond the window") {
    // The coefficient on the swapped term is v^2, not v: the case table does
    // not extend verbatim outside {1..n}^r.
    for (int n : {2, 3}) {
        const Session ses{n, 2};
        TensorVector expected = basis({1LL - n, 1}).scaled(sc_v(2));
        expected += basis({1, 1LL - n}).scaled(sc_v(2) - sc_int(1));
        CHECK(apply_t(ses, 1, basis({1, 1LL - n})) == expected);
    }
}

TEST_CASE("apply_t_inv") {
    const Session ses{2, 2};
    CHECK(apply_t_inv(ses, 1, basis({1, 1})) == basis({1, 1}).scaled(sc_v(-2)));

    TensorVector expected = basis({2, 1}).scaled(sc_v(1));
    expected -= basis({1, 2}).scaled(sc_v(2) - sc_int(1));
    expected.scale_in_place(sc_v(-2));
    CHECK(apply_t_inv(ses, 1, basis({1, 2})) == expected);

    for (int n : {1, 2, 3}) {
        Session s{n, 3};
        Prng rng(42);
        for (int trial = 0; trial < 100; ++trial) {
            const TensorVector v = sample(rng, s);
            for (int k = 1; k <= s.r - 1; ++k) {
                CHECK(apply_t_inv(s, k, apply_t(s, k, v)) == v);
                CHECK(apply_t(s, k, apply_t_inv(s, k, v)) == v);
            }
        }
    }
}

TEST_CASE("apply_e_gen") {
    const Session ses{2, 2};
    TensorVector expected = basis({1, 2}).scaled(sc_v(-1));
    expected += basis({2, 1});
    CHECK(apply_e_gen(ses, 1, basis({2, 2})) == expected);
    CHECK(apply_e_gen(ses, 1, basis({1, 1})).is_zero());

    const Session rank1{2, 1};
    CHECK(apply_e_gen(rank1, 1, basis({2})) == basis({1}));
    CHECK_THROWS_AS(apply_e_gen(ses, 2, basis({1, 1})), std::out_of_range);
}

TEST_CASE("apply_f_gen") {
    const Session rank1{2, 1};
    CHECK(apply_f_gen(rank1, 1, basis({1})) == basis({2}));

    const Session ses{2, 2};
    CHECK(apply_f_gen(ses, 1, basis({2, 2})).is_zero());
    TensorVector expected = basis({2, 1});
    expected += basis({1, 2}).scaled(sc_v(-1));
    CHECK(apply_f_gen(ses, 1, basis({1, 1})) == expected);
}

TEST_CASE("apply_k") {
    const Session ses{2, 2};
    CHECK(apply_k(ses, 1, 1, basis({1, 1})) == basis({1, 1}).scaled(sc_v(2)));
    CHECK(apply_k(ses, 2, 1, basis({1, 1})) == basis({1, 1}));
    CHECK(apply_k(ses, 1, -1, basis({1, 2})) == basis({1, 2}).scaled(sc_v(-1)));
    CHECK_THROWS_AS(apply_k(ses, 3, 1, basis({1, 1})), std::out_of_range);
}

TEST_CASE("apply_k_binom") {
    const Session ses{2, 2};
    const TensorVector v = basis({1, 1}) + basis({1, 2}).scaled(sc_int(3));
    CHECK(apply_k_binom(ses, 1, 0, v) == v);
    CHECK(apply_k_binom(ses, 1, 2, basis({1, 1})) == basis({1, 1}));
    CHECK(apply_k_binom(ses, 1, 3, basis({1, 1})).is_zero());
    // Eigenvalue substitution k_i -> v^{lambda_i} in the divided power.
    CHECK(apply_k_binom(ses, 1, 1, basis({1, 1})) ==
          basis({1, 1}).scaled(Scalar(qbinom(2, 1))));
}

TEST_CASE("apply_z") {
    const Session rank1{2, 1};
    CHECK(apply_z(rank1, 1, true, basis({1})) == basis({-1}));
    CHECK(apply_z(rank1, 2, true, basis({5})) == basis({1}));

    const Session ses{2, 2};
    CHECK(apply_z(ses, 1, false, basis({1, 2})) == basis({3, 2}) + basis({1, 4}));
}

TEST_CASE("project_weight") {
    const Session ses{2, 2};
    CHECK(project_weight(ses, Composition(2, {2, 0}), basis({1, 1})) == basis({1, 1}));
    CHECK(project_weight(ses, Composition(2, {2, 0}), basis({1, 2})).is_zero());

    // Orthogonality of the weight projections on random vectors.
    const auto lambdas = enumerate_compositions(2, 2);
    Prng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const TensorVector v = sample(rng, ses);
        for (const Composition& lam : lambdas)
            for (const Composition& mu : lambdas) {
                const TensorVector got = project_weight(ses, lam, project_weight(ses, mu, v));
                if (lam == mu)
                    CHECK(got == project_weight(ses, lam, v));
                else
                    CHECK(got.is_zero());
            }
    }
}

TEST_CASE("specialization naturality spot checks") {
    const Session generic{3, 2};
    Session at5 = generic;
    at5.lprime = 5;
    Prng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const TensorVector v = sample(rng, generic);
        CHECK(specialize(apply_t(generic, 1, v), 5) == apply_t(at5, 1, specialize(v, 5)));
        CHECK(specialize(apply_e_gen(generic, 2, v), 5) ==
              apply_e_gen(at5, 2, specialize(v, 5)));
        CHECK(specialize(apply_z(generic, 1, true, v), 5) ==
              apply_z(at5, 1, true, specialize(v, 5)));
    }
}

TEST_CASE("affine node candidates are gated by the flag") {
    Session ses{2, 2};
    CHECK_THROWS_AS(apply_e_gen(ses, 2, basis({1, 1})), std::out_of_range);
    ses.enable_affine_node = true;
    // E_n lowers residue-1 entries (i+1 wraps to 1 mod n).
    const TensorVector image = apply_e_gen(ses, 2, basis({1, 1}));
    CHECK(!image.is_zero());
}
