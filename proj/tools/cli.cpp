#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "qschur/json_io.hpp"
#include "qschur/qcomb.hpp"
#include "qschur/suites.hpp"

namespace qschur::cli {

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;

json read_json_source(const std::string& path, std::istream& stdin_stream) {
    if (path == "-") return json::parse(stdin_stream);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open \"" + path + "\"");
    return json::parse(in);
}

void write_output(const std::string& out_path, const std::string& text, std::ostream& out) {
    if (out_path.empty()) {
        out << text << "\n";
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write \"" + out_path + "\"");
    f << text << "\n";
}

/// Parse a vector and align it with the session: rank and, for nonempty
/// vectors, the scalar mode must match; an empty vector adopts the session
/// mode.
TensorVector read_vector(const json& j, const Session& ses) {
    TensorVector parsed = tensor_from_json(j);
    if (parsed.rank() != ses.r)
        throw std::runtime_error("input vector rank differs from session r");
    if (parsed.is_zero()) return TensorVector::zero(ses.r, ses.mode());
    if (parsed.mode() != ses.mode())
        throw std::runtime_error("input vector scalar mode differs from session");
    return parsed;
}

std::string report_pretty(const VerificationReport& rep) {
    std::ostringstream os;
    os << "suite " << rep.suite << "\n";
    for (const IdentityResult& r : rep.results) {
        os << "  " << r.status;
        for (std::size_t i = r.status.size(); i < 8; ++i) os << ' ';
        os << r.trials << "\t" << r.id << "\n";
    }
    os << (rep.all_pass() ? "all pass" : std::to_string(rep.fail_count()) + " failing");
    return os.str();
}

struct VerifyFlags {
    SuiteConfig cfg;
    bool pretty = false;
    std::string out_path;

    void attach(CLI::App* cmd, bool with_big_n) {
        cmd->add_option("--n", cfg.n, "residue modulus n");
        cmd->add_option("--r", cfg.r, "tensor rank r");
        if (with_big_n) cmd->add_option("--N", cfg.N, "enlarged modulus N >= n");
        cmd->add_option("--lprime", cfg.lprime, "root-of-unity order (absent = generic)");
        cmd->add_option("--trials", cfg.trials, "random trials per identity");
        cmd->add_option("--seed", cfg.seed, "PRNG seed");
        cmd->add_option("--window-lo", cfg.window_lo, "sampling window lower bound");
        cmd->add_option("--window-hi", cfg.window_hi, "sampling window upper bound");
        cmd->add_option("--support", cfg.support_bound, "max sampled support size");
        cmd->add_option("--coeff-bound", cfg.coeff_bound, "max |coefficient| of sampled terms");
        cmd->add_flag("--enable-affine-node", cfg.enable_affine_node,
                      "include the candidate affine-node generators");
        cmd->add_flag("--pretty", pretty, "human-readable output");
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    }
};

int emit_report(const VerificationReport& rep, const VerifyFlags& flags, std::ostream& out) {
    write_output(flags.out_path, flags.pretty ? report_pretty(rep) : rep.to_json().dump(), out);
    return rep.all_pass() ? kOk : kVerifyFail;
}

int run_verify_all(const VerifyFlags& flags, std::ostream& out) {
    std::ostringstream progress;
    AcceptanceOutcome outcome = run_acceptance_criteria(flags.pretty ? &progress : nullptr);
    if (flags.pretty) {
        write_output(flags.out_path, progress.str() + (outcome.all_pass ? "all criteria pass" : "criteria failing"), out);
    } else {
        json lines = json::array();
        for (const CriterionOutcome& c : outcome.criteria)
            lines.push_back(json{{"criterion", c.number},
                                 {"name", c.name},
                                 {"pass", c.pass},
                                 {"seconds", c.seconds},
                                 {"detail", c.detail}});
        json reports = json::array();
        for (const VerificationReport& rep : outcome.reports) reports.push_back(rep.to_json());
        write_output(flags.out_path,
                     json{{"criteria", lines}, {"reports", reports}, {"all_pass", outcome.all_pass}}
                         .dump(),
                     out);
    }
    return outcome.all_pass ? kOk : kVerifyFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact affine quantum Schur-Weyl toolkit"};
    app.require_subcommand(1);

    // qbinom
    long long qb_c = 0;
    int qb_t = 0;
    std::optional<int> qb_lprime;
    bool qb_pretty = false;
    std::string qb_out;
    CLI::App* qbinom_cmd = app.add_subcommand("qbinom", "Gaussian binomial [c over t]");
    qbinom_cmd->add_option("--c", qb_c, "upper argument")->required();
    qbinom_cmd->add_option("--t", qb_t, "lower argument (>= 0)")->required();
    qbinom_cmd->add_option("--lprime", qb_lprime, "evaluate at a primitive l'-th root of unity");
    qbinom_cmd->add_flag("--pretty", qb_pretty, "human-readable value");
    qbinom_cmd->add_option("--out", qb_out, "output file");

    // cyclotomic
    int cyc_lprime = 1;
    bool cyc_pretty = false;
    std::string cyc_out;
    CLI::App* cyc_cmd = app.add_subcommand("cyclotomic", "l'-th cyclotomic polynomial");
    cyc_cmd->add_option("--lprime", cyc_lprime, "order l' >= 1")->required();
    cyc_cmd->add_flag("--pretty", cyc_pretty, "human-readable polynomial");
    cyc_cmd->add_option("--out", cyc_out, "output file");

    // act
    Session act_ses;
    std::string act_op = "-", act_in = "-", act_out;
    bool act_pretty = false;
    CLI::App* act_cmd = app.add_subcommand("act", "apply an operator expression to a vector");
    act_cmd->add_option("--n", act_ses.n, "residue modulus n")->required();
    act_cmd->add_option("--r", act_ses.r, "tensor rank r")->required();
    act_cmd->add_option("--lprime", act_ses.lprime, "root-of-unity order (absent = generic)");
    act_cmd->add_flag("--enable-affine-node", act_ses.enable_affine_node,
                      "allow the candidate affine-node generators");
    act_cmd->add_option("--op", act_op, "operator JSON file, or - for stdin")->required();
    act_cmd->add_option("--in", act_in, "vector JSON file, or - for stdin (default)");
    act_cmd->add_option("--out", act_out, "output file");
    act_cmd->add_flag("--pretty", act_pretty, "human-readable vector");

    // weights
    int w_n = 2;
    std::string w_in = "-", w_out;
    CLI::App* weights_cmd = app.add_subcommand("weights", "decompose a vector by weight");
    weights_cmd->add_option("--n", w_n, "residue modulus n")->required();
    weights_cmd->add_option("--in", w_in, "vector JSON file, or - for stdin (default)");
    weights_cmd->add_option("--out", w_out, "output file");

    // verify
    VerifyFlags verify_flags;
    std::string verify_suite;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", verify_suite, "hecke | bimodule | idempotents | qla | qcomb | schur-functor | specialization | all")
        ->required();
    verify_flags.attach(verify_cmd, true);

    // schur-functor (shorthand for verify schur-functor)
    VerifyFlags schur_flags;
    CLI::App* schur_cmd = app.add_subcommand("schur-functor", "run the truncation-functor suite");
    schur_flags.attach(schur_cmd, true);

    // report-merge
    std::vector<std::string> merge_files;
    std::string merge_out;
    CLI::App* merge_cmd = app.add_subcommand("report-merge", "merge suite reports");
    merge_cmd->add_option("files", merge_files, "report JSON files")->required();
    merge_cmd->add_option("--out", merge_out, "output file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends print to stdout and exit cleanly.
            out << app.help();
            return kOk;
        }
        err << e.what() << "\n";
        return kUsage;
    }

    try {
        if (qbinom_cmd->parsed()) {
            json result{{"c", qb_c}, {"t", qb_t}};
            std::string pretty;
            if (qb_lprime) {
                const CyclotomicNumber value = qbinom_at_eps(qb_c, qb_t, *qb_lprime);
                result["lprime"] = *qb_lprime;
                result["specialized"] = to_json(value);
                pretty = value.to_string();
            } else {
                const LaurentPoly value = qbinom(qb_c, qb_t);
                result["generic"] = to_json(value);
                pretty = value.to_string();
            }
            write_output(qb_out, qb_pretty ? pretty : result.dump(), out);
            return kOk;
        }

        if (cyc_cmd->parsed()) {
            const std::vector<mpz_class> phi = cyclotomic_polynomial(cyc_lprime);
            if (cyc_pretty) {
                std::ostringstream os;
                for (std::size_t i = phi.size(); i-- > 0;) {
                    if (phi[i] == 0) continue;
                    if (i + 1 < phi.size()) os << (phi[i] < 0 ? " - " : " + ");
                    else if (phi[i] < 0) os << "-";
                    const mpz_class a = abs(phi[i]);
                    if (a != 1 || i == 0) os << a;
                    if (i >= 1) {
                        os << "x";
                        if (i > 1) os << "^" << i;
                    }
                }
                write_output(cyc_out, os.str(), out);
            } else {
                json coeffs = json::array();
                for (const mpz_class& c : phi) {
                    if (!c.fits_slong_p())
                        throw std::runtime_error("cyclotomic coefficient exceeds int64");
                    coeffs.push_back(c.get_si());
                }
                write_output(cyc_out,
                             json{{"lprime", cyc_lprime},
                                  {"phi", euler_phi(cyc_lprime)},
                                  {"coeffs", coeffs}}
                                 .dump(),
                             out);
            }
            return kOk;
        }

        if (act_cmd->parsed()) {
            if (act_op == "-" && act_in == "-")
                throw std::runtime_error("--op and --in cannot both read stdin");
            const OperatorExpr op = operator_from_json(read_json_source(act_op, std::cin));
            const TensorVector vec = read_vector(read_json_source(act_in, std::cin), act_ses);
            const TensorVector result = apply_expr(act_ses, op, vec);
            write_output(act_out, act_pretty ? result.to_string() : to_json(result).dump(), out);
            return kOk;
        }

        if (weights_cmd->parsed()) {
            const json jvec = read_json_source(w_in, std::cin);
            const TensorVector parsed = tensor_from_json(jvec);
            std::map<Composition, json> groups;
            for (const auto& [idx, c] : parsed.terms()) {
                const Composition lam = weight_of(idx, w_n);
                if (!groups.count(lam)) groups[lam] = json::array();
                groups[lam].push_back(json{{"idx", idx}, {"coeff", to_json(c)}});
            }
            json decomposition = json::array();
            for (const auto& [lam, terms] : groups)
                decomposition.push_back(json{{"lambda", to_json(lam)}, {"terms", terms}});
            write_output(w_out,
                         json{{"n", w_n}, {"r", parsed.rank()}, {"weights", decomposition}}.dump(),
                         out);
            return kOk;
        }

        if (verify_cmd->parsed()) {
            if (verify_suite == "all") return run_verify_all(verify_flags, out);
            return emit_report(run_suite(verify_suite, verify_flags.cfg), verify_flags, out);
        }

        if (schur_cmd->parsed()) {
            if (!schur_flags.cfg.N) throw std::runtime_error("schur-functor requires --N");
            return emit_report(verify_schur_functor(schur_flags.cfg), schur_flags, out);
        }

        if (merge_cmd->parsed()) {
            json reports = json::array();
            long fails = 0;
            for (const std::string& path : merge_files) {
                json rep = read_json_source(path, std::cin);
                for (const json& res : rep.at("results"))
                    if (res.at("status").get<std::string>() == "fail") ++fails;
                reports.push_back(std::move(rep));
            }
            write_output(merge_out,
                         json{{"reports", reports},
                              {"summary", json{{"reports", reports.size()}, {"failures", fails}}}}
                             .dump(),
                         out);
            return fails == 0 ? kOk : kVerifyFail;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    err << "error: no subcommand\n";
    return kUsage;
}

}  // namespace qschur::cli
