#include "qkz/suite.hpp"

#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>
#include <thread>
#include <vector>

using namespace qkz;

namespace {

using Pairs = std::vector<std::pair<int, int>>;

struct Outcome {
    bool pass = true;
    long cases = 0;
    std::string note;
};

std::vector<CaseResult> run(const std::string& suite, const Pairs& pts, const std::vector<std::string>& names = {})
{
    SuiteConfig cfg;
    cfg.threads = int(std::max(1u, std::thread::hardware_concurrency() / 2));
    cfg.budget_sec = 300;
    std::vector<Case> cases;
    for (auto [N, m] : pts)
        for (auto& c : suite_cases(suite, N, m, cfg)) {
            bool keep = names.empty();
            for (auto& n : names) keep |= c.name == n;
            if (keep) cases.push_back(c);
        }
    return run_cases(cases, cfg);
}

// Every case passes and each (suite, params) group stays below limit seconds.
Outcome judge(const std::vector<CaseResult>& res, double limit)
{
    Outcome o;
    std::map<std::string, double> group;
    for (auto& r : res) {
        ++o.cases;
        group[r.params] += r.runtime;
        if (r.status != "pass" && o.pass) {
            o.pass = false;
            o.note = r.name + " " + r.params + ": " + r.status + (r.detail.empty() ? "" : " (" + r.detail + ")");
        }
    }
    if (o.cases == 0) {
        o.pass = false;
        o.note = "no cases";
    }
    double worst = 0;
    for (auto& [p, t] : group) worst = std::max(worst, t);
    if (o.pass && worst > limit) {
        o.pass = false;
        o.note = "slowest case took " + std::to_string(worst) + " s";
    }
    if (o.pass) o.note = std::to_string(o.cases) + " cases, slowest " + std::to_string(worst).substr(0, 5) + " s";
    return o;
}

bool report(int k, const Outcome& o)
{
    std::printf("criterion %d: %s  %s\n", k, o.pass ? "PASS" : "FAIL", o.note.c_str());
    std::fflush(stdout);
    return o.pass;
}

std::vector<CaseResult> concat(std::vector<CaseResult> a, const std::vector<CaseResult>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

int main()
{
    bool ok = true;
    ok &= report(1, judge(run("H", {{2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 1}}), 120));
    ok &= report(2, judge(run("G", {{3, 1}, {3, 2}, {4, 1}}), 120));
    ok &= report(3, judge(run("omega", {{2, 1}, {2, 2}, {3, 1}}), 120));
    ok &= report(4, judge(run("another", {{3, 1}, {3, 2}}, {"anotherformula"}), 120));
    ok &= report(5, judge(run("integrand", {{2, 2}, {3, 1}, {3, 2}}), 120));
    ok &= report(6, judge(run("difference", {{2, 2}, {3, 1}, {3, 2}}), 120));

    auto emt = concat(run("emt", {{2, 2}, {3, 2}}, {"rescond"}), run("emt", {{2, 1}, {3, 1}}, {"m1_route"}));
    Outcome o7 = judge(emt, 120);
    if (o7.pass) {
        o7.note += "; cond4:";
        for (auto& r : emt)
            if (r.name == "rescond") {
                std::string d = r.detail.find("delta=1 holds") != std::string::npos ? "0,1" : "0";
                if (r.detail.find("delta=0 holds") == std::string::npos) d = "1";
                o7.note += " (" + r.params + ") delta=" + d + ";";
            }
    }
    ok &= report(7, o7);

    ok &= report(8, judge(run("rmatrix", {{2, 1}, {3, 1}, {4, 1}}), 120));
    ok &= report(9, judge(run("numeric", {{2, 1}, {3, 1}},
                              {"gamma_functional", "gamma2", "zetarel1", "s0", "onetime", "hw", "smirnov", "zerocycle",
                               "contour_invariance", "stir"}),
                          60));
    // optional, does not gate the exit status
    report(10, judge(run("numeric", {{2, 1}}, {"res0"}), 60));
    return ok ? 0 : 1;
}
