#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace psh {

struct CriterionResult {
    std::string id;
    std::string title;
    std::string tolerance;
    bool pass = true;
    std::vector<std::string> notes;     // failed sub-checks
    std::vector<std::string> details;   // informational
    double seconds = 0;
};

struct AcceptanceOptions {
    bool stretch = true;  // run the n=40 tangential orthogonality check
    bool verbose = false;
};

// Runs every acceptance criterion, printing one PASS/FAIL line each.
std::vector<CriterionResult> run_acceptance(std::ostream& out, const AcceptanceOptions& opt = {});

}  // namespace psh
