#include <doctest.h>

#include "qschur/suites.hpp"

using namespace qschur;

namespace {

SuiteConfig quick(int n, int r, long trials = 25) {
    SuiteConfig cfg;
    cfg.n = n;
    cfg.r = r;
    cfg.trials = trials;
    return cfg;
}

const IdentityResult* find_result(const VerificationReport& rep, const std::string& id) {
    for (const IdentityResult& r : rep.results)
        if (r.id == id) return &r;
    return nullptr;
}

}  // namespace

TEST_CASE("hecke suite passes") {
    CHECK(verify_hecke_presentation(quick(2, 2)).all_pass());
    SuiteConfig at4 = quick(2, 2);
    at4.lprime = 4;
    CHECK(verify_hecke_presentation(at4).all_pass());
    CHECK(verify_hecke_presentation(quick(1, 3, 10)).all_pass());
}

TEST_CASE("bimodule suite passes") {
    CHECK(verify_bimodule_commutation(quick(2, 2, 10)).all_pass());
    SuiteConfig affine = quick(2, 2, 10);
    affine.enable_affine_node = true;
    const VerificationReport rep = verify_bimodule_commutation(affine);
    CHECK(rep.all_pass());
    bool has_candidate = false;
    for (const IdentityResult& r : rep.results)
        if (r.id.rfind("affine-candidate:", 0) == 0) has_candidate = true;
    CHECK(has_candidate);
}

TEST_CASE("idempotent suite passes") {
    const VerificationReport rep = verify_weight_idempotents(quick(2, 2, 15));
    CHECK(rep.all_pass());
    const IdentityResult* count = find_result(rep, "weight-count");
    REQUIRE(count != nullptr);
    CHECK(count->status == "pass");
}

TEST_CASE("qla suite passes and skips vacuous relations") {
    CHECK(verify_level_zero_qla(quick(3, 2, 10)).all_pass());
    SuiteConfig at6 = quick(3, 2, 8);
    at6.lprime = 6;
    CHECK(verify_level_zero_qla(at6).all_pass());
    const VerificationReport rep = verify_level_zero_qla(quick(2, 2, 10));
    CHECK(rep.all_pass());
    const IdentityResult* serre = find_result(rep, "serre");
    REQUIRE(serre != nullptr);
    CHECK(serre->status == "skipped");
}

TEST_CASE("qcomb suite passes for a single order") {
    SuiteConfig cfg;
    cfg.lprime = 3;
    const VerificationReport rep = verify_qcomb_lemmas(cfg);
    CHECK(rep.all_pass());
    CHECK(find_result(rep, "lemma-mt[l'=3]") != nullptr);
    CHECK(find_result(rep, "injectivity[l'=3]") != nullptr);
}

TEST_CASE("schur suite passes and labels the Morita range") {
    SuiteConfig cfg = quick(2, 2, 10);
    cfg.N = 3;
    const VerificationReport rep = verify_schur_functor(cfg);
    CHECK(rep.all_pass());
    CHECK(rep.config.at("morita_range").get<bool>());

    SuiteConfig outside = quick(2, 3, 10);
    outside.N = 3;
    const VerificationReport rep2 = verify_schur_functor(outside);
    CHECK(rep2.all_pass());
    CHECK(!rep2.config.at("morita_range").get<bool>());

    const IdentityResult* observed = find_result(rep, "transport-egen[E1]");
    REQUIRE(observed != nullptr);
    CHECK(observed->status == "skipped");
    CHECK(observed->counterexample.at("agrees").get<bool>());

    SuiteConfig missing = quick(2, 2, 10);
    CHECK_THROWS_AS(verify_schur_functor(missing), std::invalid_argument);
}

TEST_CASE("specialization suite passes") {
    SuiteConfig cfg = quick(2, 2, 20);
    cfg.lprime = 4;
    CHECK(verify_specialization_naturality(cfg).all_pass());
    SuiteConfig classical = quick(2, 2, 20);
    classical.lprime = 1;
    CHECK(verify_specialization_naturality(classical).all_pass());
}

TEST_CASE("reports are deterministic") {
    SuiteConfig cfg = quick(2, 2, 30);
    cfg.seed = 12345;
    const std::string a = verify_hecke_presentation(cfg).to_json().dump();
    const std::string b = verify_hecke_presentation(cfg).to_json().dump();
    CHECK(a == b);
}

TEST_CASE("sabotaged T action trips the relation suites") {
    SuiteConfig cfg = quick(2, 2, 10);
    cfg.sabotage_t = true;

    const VerificationReport hecke = verify_hecke_presentation(cfg);
    CHECK(hecke.fail_count() > 0);
    const VerificationReport bimodule = verify_bimodule_commutation(cfg);
    CHECK(bimodule.fail_count() > 0);

    // Counterexamples carry the offending input and both sides, and the
    // exhaustive pass plus shrinking makes the reported input a single term.
    for (const IdentityResult& r : hecke.results) {
        if (r.status != "fail") continue;
        REQUIRE(r.counterexample.contains("input"));
        CHECK(r.counterexample.at("input").at("terms").size() == 1);
        break;
    }
}

TEST_CASE("suite dispatch") {
    CHECK(run_suite("hecke", quick(2, 2, 5)).suite == "hecke");
    CHECK_THROWS_AS(run_suite("nonsense", quick(2, 2)), std::invalid_argument);
    CHECK(suite_names().size() == 7);
}
