#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"
#include "qschur/json_io.hpp"
#include "qschur/qcomb.hpp"
#include "qschur/suites.hpp"

using namespace qschur;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = qschur::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("cli qbinom specialized") {
    const CliResult res = run_cli({"qbinom", "--c", "4", "--t", "2", "--lprime", "3"});
    CHECK(res.code == 0);
    const json j = json::parse(res.out);
    CHECK(j.at("lprime") == 3);
    CHECK(cyclotomic_from_json(j.at("specialized")).is_zero());

    const CliResult pretty =
        run_cli({"qbinom", "--c", "4", "--t", "2", "--lprime", "3", "--pretty"});
    CHECK(pretty.code == 0);
    CHECK(pretty.out == "0\n");
}

TEST_CASE("cli qbinom generic") {
    const CliResult res = run_cli({"qbinom", "--c", "4", "--t", "2"});
    CHECK(res.code == 0);
    const json j = json::parse(res.out);
    CHECK(laurent_from_json(j.at("generic")) == qbinom(4, 2));
}

TEST_CASE("cli cyclotomic") {
    const CliResult res = run_cli({"cyclotomic", "--lprime", "6"});
    CHECK(res.code == 0);
    const json j = json::parse(res.out);
    CHECK(j.at("phi") == 2);
    CHECK(j.at("coeffs") == json::array({1, -1, 1}));
}

TEST_CASE("cli act identity round trip") {
    TensorVector v(2, ScalarMode{});
    v.add_term({1, 2}, Scalar::v_power(ScalarMode{}, 3));
    v.add_term({0, -1}, Scalar::from_int(ScalarMode{}, -2));
    const auto vec_path = write_temp("qschur_cli_vec.json", to_json(v).dump());
    const auto op_path =
        write_temp("qschur_cli_op.json", to_json(OperatorExpr::identity()).dump());

    const CliResult res = run_cli({"act", "--n", "2", "--r", "2", "--op", op_path.string(),
                                   "--in", vec_path.string()});
    CHECK(res.code == 0);
    CHECK(tensor_from_json(json::parse(res.out)) == v);

    std::filesystem::remove(vec_path);
    std::filesystem::remove(op_path);
}

TEST_CASE("cli act applies operators") {
    TensorVector v(1, ScalarMode{});
    v.add_term({2}, Scalar::one(ScalarMode{}));
    const auto vec_path = write_temp("qschur_cli_vec2.json", to_json(v).dump());
    const auto op_path = write_temp("qschur_cli_op2.json",
                                    to_json(OperatorExpr::e_gen(1)).dump());
    const CliResult res = run_cli({"act", "--n", "2", "--r", "1", "--op", op_path.string(),
                                   "--in", vec_path.string()});
    CHECK(res.code == 0);
    TensorVector expected(1, ScalarMode{});
    expected.add_term({1}, Scalar::one(ScalarMode{}));
    CHECK(tensor_from_json(json::parse(res.out)) == expected);
    std::filesystem::remove(vec_path);
    std::filesystem::remove(op_path);
}

TEST_CASE("cli weights groups by weight") {
    TensorVector v(2, ScalarMode{});
    v.add_term({1, 1}, Scalar::one(ScalarMode{}));
    v.add_term({1, 2}, Scalar::one(ScalarMode{}));
    v.add_term({3, 1}, Scalar::one(ScalarMode{}));
    const auto vec_path = write_temp("qschur_cli_vec3.json", to_json(v).dump());
    const CliResult res = run_cli({"weights", "--n", "2", "--in", vec_path.string()});
    CHECK(res.code == 0);
    const json j = json::parse(res.out);
    REQUIRE(j.at("weights").size() == 2);
    CHECK(j.at("weights")[0].at("lambda") == json::array({1, 1}));
    CHECK(j.at("weights")[0].at("terms").size() == 1);
    CHECK(j.at("weights")[1].at("lambda") == json::array({2, 0}));
    CHECK(j.at("weights")[1].at("terms").size() == 2);
    std::filesystem::remove(vec_path);
}

TEST_CASE("cli verify suite") {
    const CliResult res =
        run_cli({"verify", "hecke", "--n", "2", "--r", "2", "--trials", "20", "--seed", "0"});
    CHECK(res.code == 0);
    const json j = json::parse(res.out);
    CHECK(j.at("suite") == "hecke");
    CHECK(j.at("config").at("n") == 2);
    CHECK(!j.at("results").empty());
    for (const json& r : j.at("results")) CHECK(r.at("status") != "fail");
}

TEST_CASE("cli schur-functor shorthand") {
    const CliResult res = run_cli({"schur-functor", "--n", "2", "--N", "3", "--r", "2",
                                   "--trials", "10"});
    CHECK(res.code == 0);
    const json j = json::parse(res.out);
    CHECK(j.at("suite") == "schur-functor");
    CHECK(j.at("config").at("morita_range") == true);
}

TEST_CASE("cli usage errors exit 2") {
    CHECK(run_cli({"verify", "nonsense"}).code == 2);
    CHECK(run_cli({"qbinom", "--c", "4"}).code == 2);  // missing --t
    CHECK(run_cli({"act", "--n", "2", "--r", "2", "--op", "-"}).code == 2);  // two stdin readers
    CHECK(run_cli({}).code == 2);
    const CliResult bad = run_cli({"verify", "nonsense"});
    CHECK(!bad.err.empty());
}

TEST_CASE("cli report-merge") {
    SuiteConfig cfg;
    cfg.trials = 10;
    cfg.lprime = 3;
    const std::string pass_report = verify_qcomb_lemmas(cfg).to_json().dump();
    const auto pass_path = write_temp("qschur_cli_pass.json", pass_report);

    const CliResult ok = run_cli({"report-merge", pass_path.string()});
    CHECK(ok.code == 0);
    CHECK(json::parse(ok.out).at("summary").at("failures") == 0);

    json failing = json::parse(pass_report);
    failing["results"][0]["status"] = "fail";
    const auto fail_path = write_temp("qschur_cli_fail.json", failing.dump());
    const CliResult bad = run_cli({"report-merge", pass_path.string(), fail_path.string()});
    CHECK(bad.code == 1);
    CHECK(json::parse(bad.out).at("summary").at("failures") == 1);

    std::filesystem::remove(pass_path);
    std::filesystem::remove(fail_path);
}
