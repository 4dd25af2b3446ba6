// Acceptance suite: runs the pinned verification matrix end to end and
// prints one pass/fail line per criterion. Exit code is the number of
// failing criteria.

#include <fstream>
#include <iostream>
#include <string>

#include "qschur/suites.hpp"

int main(int argc, char** argv) {
    std::string out_path;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--out" && i + 1 < argc) {
            out_path = argv[++i];
        } else {
            std::cerr << "usage: acceptance [--out report.json]\n";
            return 2;
        }
    }

    qschur::AcceptanceOutcome outcome = qschur::run_acceptance_criteria(&std::cout);

    int failures = 0;
    for (const qschur::CriterionOutcome& line : outcome.criteria)
        if (!line.pass) ++failures;
    std::cout << (outcome.all_pass ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL") << " ("
              << outcome.criteria.size() - failures << "/" << outcome.criteria.size()
              << " criteria)" << std::endl;

    if (!out_path.empty()) {
        nlohmann::json reports = nlohmann::json::array();
        for (const qschur::VerificationReport& rep : outcome.reports)
            reports.push_back(rep.to_json());
        nlohmann::json criteria = nlohmann::json::array();
        for (const qschur::CriterionOutcome& line : outcome.criteria)
            criteria.push_back({{"criterion", line.number},
                                {"name", line.name},
                                {"pass", line.pass},
                                {"seconds", line.seconds},
                                {"detail", line.detail}});
        std::ofstream f(out_path);
        f << nlohmann::json{{"criteria", criteria},
                            {"reports", reports},
                            {"all_pass", outcome.all_pass}}
                 .dump()
          << "\n";
    }

    return failures;
}
