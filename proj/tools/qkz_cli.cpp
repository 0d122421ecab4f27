#include "qkz/cycles.hpp"
#include "qkz/hfun.hpp"
#include "qkz/suite.hpp"
#include "qkz/weights.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace qkz;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "qkz-report/1";

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::vector<int> Ns{3}, ms{1};
    std::vector<std::string> suites;
    std::string eq = "auto", out;
    unsigned seed = 20240601u;
    double tol = 1e-6, budget = 600;
    int threads = 1;
    bool timings = false;
};

void add_common(CLI::App* c, Common& o, bool suites)
{
    c->add_option("--N", o.Ns, "rank(s), comma separated")->delimiter(',')->envname("QKZ_N");
    c->add_option("--m", o.ms, "m value(s), comma separated")->delimiter(',')->envname("QKZ_M");
    if (suites) c->add_option("--suite", o.suites, "suite names")->delimiter(',')->envname("QKZ_SUITE");
    c->add_option("--seed", o.seed)->envname("QKZ_SEED");
    c->add_option("--eq-mode", o.eq, "auto, det or prob")->envname("QKZ_EQ_MODE");
    c->add_option("--tol", o.tol, "max relative error for numeric rows")->envname("QKZ_TOL");
    c->add_option("--threads", o.threads)->envname("QKZ_THREADS");
    c->add_option("--budget-sec", o.budget, "time budget per case")->envname("QKZ_BUDGET_SEC");
    c->add_option("--out", o.out, "report file (default stdout)")->envname("QKZ_OUT");
    c->add_flag("--timings", o.timings, "record per-case runtime (reports stop being byte-stable)");
}

SuiteConfig to_config(const Common& o)
{
    SuiteConfig c;
    c.Ns = o.Ns, c.ms = o.ms, c.suites = o.suites;
    if (o.eq == "auto") c.eq = EqChoice::Auto;
    else if (o.eq == "det") c.eq = EqChoice::Deterministic;
    else if (o.eq == "prob") c.eq = EqChoice::Probabilistic;
    else throw ConfigError("unknown --eq-mode " + o.eq);
    if (o.threads < 1) throw ConfigError("--threads must be positive");
    if (!(o.budget > 0)) throw ConfigError("--budget-sec must be positive");
    if (!(o.tol > 0)) throw ConfigError("--tol must be positive");
    c.seed = o.seed, c.tol = o.tol, c.threads = o.threads, c.budget_sec = o.budget;
    for (auto& s : c.suites) {
        if (!known_suite(s)) throw ConfigError("unknown suite " + s);
        for (int N : c.Ns)
            for (int m : c.ms)
                if (auto why = budget_violation(s, N, m); !why.empty())
                    throw ConfigError("N=" + std::to_string(N) + " m=" + std::to_string(m) + ": " + why);
    }
    return c;
}

json report(const SuiteConfig& c, const std::vector<CaseResult>& res, bool timings)
{
    json j;
    j["schema"] = kSchema;
    j["config"] = {{"N", c.Ns},
                   {"m", c.ms},
                   {"suites", c.suites},
                   {"eq_mode", c.eq == EqChoice::Auto ? "auto" : c.eq == EqChoice::Deterministic ? "det" : "prob"},
                   {"seed", c.seed},
                   {"tol", c.tol},
                   {"budget_sec", c.budget_sec}};
    json cases = json::array();
    std::map<std::string, int> counts{{"pass", 0}, {"fail", 0}, {"error", 0}, {"timeout", 0}};
    for (auto& r : res) {
        json e{{"suite", r.suite}, {"name", r.name}, {"params", r.params}, {"status", r.status}, {"subcases", r.subcases}};
        if (!r.detail.empty()) e["detail"] = r.detail;
        if (timings) e["runtime_sec"] = r.runtime;
        cases.push_back(e);
        counts[r.status]++;
    }
    j["cases"] = cases;
    j["summary"] = {{"total", res.size()}, {"pass", counts["pass"]}, {"fail", counts["fail"]},
                    {"error", counts["error"]}, {"timeout", counts["timeout"]}};
    return j;
}

void emit(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + path);
    f << text;
}

int finish(const std::vector<CaseResult>& res, bool abandoned)
{
    int code = 0;
    for (auto& r : res)
        if (r.status != "pass") code = 1;
    std::cout.flush();
    // workers past their budget are still running; do not wait for them
    if (abandoned) std::_Exit(code);
    return code;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

std::string csv_num(cplx z)
{
    std::ostringstream os;
    os << std::setprecision(15) << z.real();
    if (z.imag() != 0) os << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

std::string dump(const std::string& what, int N, int m, int mu, int nu)
{
    if (what == "h-table") return HTable::build(N, m).dump_H();
    if (what == "g-table") return HTable::build(N, m).dump_G();
    if (what == "omega") {
        std::vector<QRat> b;
        for (int j = 1; j <= N * m; ++j) b.push_back(qvar(var_beta(j)));
        QRat h = qvar(var_hbar());
        std::string s;
        for (auto& eps : enumerate(Signature::singlet(N, m))) {
            s += "omega_" + eps.str() + ":\n";
            s += omega_at<QRat>(N, eps.entries(), b, h).str([](const QRat& x) { return x.str(); });
        }
        return s;
    }
    if (what == "emt-cycle") {
        auto d = build_emt(N, m, mu, nu);
        std::string s = "N=" + std::to_string(N) + " m=" + std::to_string(m) + " mu=" + std::to_string(mu) +
                        " nu=" + std::to_string(nu) + " l=" + std::to_string(d.ell) + "\n";
        s += "w exponents:";
        for (int e : d.wexp) s += " " + std::to_string(e);
        s += "\nc_m omega power: " + std::to_string(d.cm_omega) + "\n";
        s += "w = " + d.w.str() + "\n";
        s += "prefactor = " + d.prefactor.str() + "\n";
        s += "P = " + d.P_munu.str() + "\n";
        return s;
    }
    throw ConfigError("unknown dump target " + what);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"qKZ level-zero identity suites and numeric checks"};
    app.require_subcommand(1);

    Common so;
    bool all = false, all_symbolic = false;
    auto* suite = app.add_subcommand("suite", "run identity suites and write a JSON report");
    add_common(suite, so, true);
    suite->add_flag("--all", all, "every suite");
    suite->add_flag("--all-symbolic", all_symbolic, "every exact suite");

    auto* emt = app.add_subcommand("emt", "EMT cycle checks");
    emt->require_subcommand(1);
    auto* verify = emt->add_subcommand("verify", "recurrence conditions for one EMT witness");
    Common eo;
    eo.ms = {2};
    std::string sign = "+";
    int mu = 0, nu = 0;
    add_common(verify, eo, false);
    verify->add_option("--sign", sign, "+ or -");
    verify->add_option("--mu", mu)->check(CLI::Range(0, 1));
    verify->add_option("--nu", nu)->check(CLI::Range(0, 1));

    auto* dmp = app.add_subcommand("dump", "canonical text of a table");
    std::string what;
    int dN = 2, dm = 1, dmu = 0, dnu = 0;
    dmp->add_option("what", what, "h-table, g-table, omega or emt-cycle")->required();
    dmp->add_option("--N", dN)->envname("QKZ_N");
    dmp->add_option("--m", dm)->envname("QKZ_M");
    dmp->add_option("--mu", dmu)->check(CLI::Range(0, 1));
    dmp->add_option("--nu", dnu)->check(CLI::Range(0, 1));

    auto* num = app.add_subcommand("numeric", "numeric checks as CSV rows");
    Common no;
    add_common(num, no, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*suite) {
            if (all) so.suites = suite_names();
            else if (all_symbolic) so.suites = symbolic_suites();
            auto cfg = to_config(so);
            bool abandoned = false;
            auto res = run_cases(select_cases(cfg), cfg, &abandoned);
            emit(so.out, report(cfg, res, so.timings).dump(2) + "\n");
            return finish(res, abandoned);
        }
        if (*verify) {
            if (sign != "+" && sign != "-") throw ConfigError("--sign must be + or -");
            if (eo.Ns.size() != 1 || eo.ms.size() != 1) throw ConfigError("emt verify takes one N and one m");
            eo.suites = {"emt"};
            auto cfg = to_config(eo);
            int N = cfg.Ns[0], m = cfg.ms[0];
            std::vector<Case> pick;
            std::string tail = m == 1 ? " mu=" + std::to_string(mu) : (sign == "+" ? " sign=+" : " sign=-");
            for (auto& c : suite_cases("emt", N, m, cfg)) {
                bool want = c.name == "omegasum" || c.name.rfind("skew", 0) == 0 ||
                            (c.name == "prefactor_reduction" && c.params.ends_with("mu=" + std::to_string(mu))) ||
                            ((c.name == "rescond" || c.name == "m1_route") && c.params.ends_with(tail));
                if (want) pick.push_back(c);
            }
            bool abandoned = false;
            auto res = run_cases(pick, cfg, &abandoned);
            json j = report(cfg, res, eo.timings);
            j["emt"] = {{"N", N}, {"m", m}, {"sign", sign}, {"mu", mu}, {"nu", nu},
                        {"P", build_emt(N, m, mu, nu).P_munu.str()}};
            emit(eo.out, j.dump(2) + "\n");
            return finish(res, abandoned);
        }
        if (*dmp) {
            if (auto why = budget_violation("H", dN, dm); !why.empty() && what != "emt-cycle") throw ConfigError(why);
            if (auto why = budget_violation("emt", dN, dm); !why.empty()) throw ConfigError(why);
            std::cout << dump(what, dN, dm, dmu, dnu);
            return 0;
        }
        if (*num) {
            no.suites = {"numeric"};
            auto cfg = to_config(no);
            bool abandoned = false;
            auto res = run_cases(select_cases(cfg), cfg, &abandoned);
            std::ostringstream os;
            os << "check,value,reference,abs_err,rel_err,case,status\n";
            for (auto& r : res) {
                std::string tag = r.name + (r.params.empty() ? "" : " " + r.params);
                if (r.rows.empty()) os << ",,,,," << csv_field(tag) << "," << r.status << "\n";
                for (auto& row : r.rows)
                    os << csv_field(row.check) << "," << csv_num(row.value) << "," << csv_num(row.reference) << ","
                       << std::setprecision(3) << row.abs_err << "," << row.rel_err << "," << csv_field(tag) << ","
                       << r.status << "\n";
            }
            emit(no.out, os.str());
            for (auto& r : res)
                if (r.status != "pass") std::cerr << r.name << " " << r.params << ": " << r.status << " " << r.detail << "\n";
            return finish(res, abandoned);
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
