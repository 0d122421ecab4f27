#pragma once

#include "qkz/check.hpp"
#include "qkz/contour.hpp"
#include "qkz/ratfunc.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qkz {

enum class EqChoice { Auto, Deterministic, Probabilistic };

struct SuiteConfig {
    std::vector<int> Ns, ms;
    std::vector<std::string> suites;
    EqChoice eq = EqChoice::Auto;
    unsigned seed = 20240601u;
    double tol = 1e-6;  // numeric rows must also meet this relative error
    int threads = 1;
    double budget_sec = 600;
};

struct CaseResult {
    std::string suite, name, params, status;  // pass fail error timeout
    double runtime = 0;
    long subcases = 0;
    std::string detail;
    NumRows rows;
};

struct Case {
    std::string suite, name, params;
    std::function<CaseResult()> run;
};

const std::vector<std::string>& suite_names();
const std::vector<std::string>& symbolic_suites();
bool known_suite(const std::string& s);
// Budget gate for (N, m) in a suite; empty when admissible, else the reason.
std::string budget_violation(const std::string& suite, int N, int m);

// Cases of one suite at (N, m); empty when the suite has nothing at that point.
std::vector<Case> suite_cases(const std::string& suite, int N, int m, const SuiteConfig& cfg);
std::vector<Case> select_cases(const SuiteConfig& cfg);

// Runs cases on cfg.threads workers; results keep the case order. A case
// over budget is reported as timeout and abandoned.
std::vector<CaseResult> run_cases(const std::vector<Case>& cases, const SuiteConfig& cfg, bool* abandoned = nullptr);

}  // namespace qkz
