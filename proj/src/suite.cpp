#include "qkz/suite.hpp"

#include "qkz/cycles.hpp"
#include "qkz/hfun.hpp"
#include "qkz/smirnov.hpp"
#include "qkz/tensor.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <memory>
#include <mutex>
#include <set>
#include <thread>

namespace qkz {

namespace {

struct LazyH {
    int N, m;
    std::once_flag once;
    std::unique_ptr<HTable> t;
    const HTable& get()
    {
        std::call_once(once, [this] { t = std::make_unique<HTable>(HTable::build(N, m)); });
        return *t;
    }
};

std::string nm(int N, int m) { return "N=" + std::to_string(N) + " m=" + std::to_string(m); }

CaseResult from_check(const CheckResult& r)
{
    CaseResult c;
    c.status = r.pass ? "pass" : "fail";
    if (r.pass && r.cases == 0) c.detail = "vacuous at these parameters";
    c.subcases = r.cases;
    if (!r.pass) c.detail = r.detail;
    return c;
}

EqConfig eq_for(int N, int m, const SuiteConfig& cfg)
{
    EqConfig e;
    e.seed = cfg.seed;
    if (cfg.eq == EqChoice::Auto) return auto_eq(N, m, e);
    e.mode = cfg.eq == EqChoice::Deterministic ? EqMode::Deterministic : EqMode::Probabilistic;
    return e;
}

std::string rescond_summary(const RescondReport& r)
{
    std::string s;
    for (int d = 0; d < 2; ++d)
        s += "cond4 delta=" + std::to_string(d) + (r.delta_mask() >> d & 1 ? " holds" : " fails") + "; ";
    s += std::string("cond2 ") + (r.cond2_equal ? "=" : "~") + ", cond3.5 " + (r.cond35_equal ? "=" : "~");
    return s;
}

void add(std::vector<Case>& out, const std::string& suite, const std::string& name, const std::string& params,
         std::function<CaseResult()> f)
{
    out.push_back({suite, name, params, std::move(f)});
}

void add_check(std::vector<Case>& out, const std::string& suite, const std::string& name, const std::string& params,
               std::function<CheckResult()> f)
{
    add(out, suite, name, params, [f] { return from_check(f()); });
}

void add_numeric(std::vector<Case>& out, const std::string& name, const std::string& params, double tol,
                 std::function<CheckResult(NumRows*)> f)
{
    add(out, "numeric", name, params, [f, tol] {
        NumRows rows;
        CaseResult c = from_check(f(&rows));
        if (tol > 0 && c.status == "pass")
            for (auto& r : rows)
                if (r.rel_err > tol) {
                    c.status = "fail";
                    c.detail = r.check + ": relative error above --tol";
                    break;
                }
        c.rows = std::move(rows);
        return c;
    });
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> s{"H", "G", "omega", "another", "integrand", "difference", "rmatrix", "emt", "numeric"};
    return s;
}

const std::vector<std::string>& symbolic_suites()
{
    static const std::vector<std::string> s{"H", "G", "omega", "another", "integrand", "difference", "rmatrix", "emt"};
    return s;
}

bool known_suite(const std::string& s)
{
    return std::find(suite_names().begin(), suite_names().end(), s) != suite_names().end();
}

std::string budget_violation(const std::string& suite, int N, int m)
{
    if (N < 2 || m < 1) return "need N >= 2 and m >= 1";
    int ell = (N - 1) * m;
    if (suite == "numeric") return N <= 3 && ell <= 2 ? "" : "numeric suite limited to N <= 3, (N-1) m <= 2";
    if (suite == "rmatrix") return N <= 5 ? "" : "rmatrix suite limited to N <= 5";
    if (suite == "emt") return N <= 7 && ell <= 12 ? "" : "emt suite limited to N <= 7, (N-1) m <= 12";
    return N <= 5 && ell <= 4 ? "" : suite + " suite limited to N <= 5, (N-1) m <= 4";
}

std::vector<Case> suite_cases(const std::string& suite, int N, int m, const SuiteConfig& cfg)
{
    std::vector<Case> out;
    const std::string P = nm(N, m);
    auto H = std::make_shared<LazyH>();
    H->N = N, H->m = m;
    EqConfig eq = eq_for(N, m, cfg);

    if (suite == "H") {
        add(out, suite, "path_independence", P, [H] {
            CaseResult c;
            c.subcases = 1;
            c.status = H->get().path_independent() ? "pass" : "fail";
            if (c.status == "fail") c.detail = H->get().path_detail();
            return c;
        });
        add_check(out, suite, "rel1", P, [H] { return verify_rel1(H->get()); });
        add_check(out, suite, "rel2", P, [H] { return verify_shift(H->get()); });
        add_check(out, suite, "Hpol", P, [H] { return verify_Hpol(H->get()); });
        add_check(out, suite, "extcoeff", P, [H] { return verify_extcoeff(H->get()); });
        add_check(out, suite, "rel3", P, [H] { return verify_seed(H->get()); });
    } else if (suite == "G") {
        if (N < 3) return out;
        for (auto& name : G_identity_names())
            add_check(out, suite, name, P, [H, name] { return verify_G_identity(name, H->get()); });
    } else if (suite == "omega") {
        add_check(out, suite, "braid", P, [=] { return check_omega_braid(N, m, eq); });
        add_check(out, suite, "triangular", P, [=] { return check_triangular(N, m, eq); });
        add_check(out, suite, "omegahweq", P, [=] { return check_omegahweq(N, m, eq); });
        add_check(out, suite, "basechangeeq", P, [=] { return check_basechange(H->get(), eq); });
        add_check(out, suite, "coeffprove2", P, [=] { return check_coeffprove2(H->get(), eq); });
    } else if (suite == "another") {
        add_check(out, suite, "anotherformula", P, [=] { return check_anotherformula(H->get(), eq); });
        add_check(out, suite, "ssol_hw", P, [=] { return check_ssol_hw(H->get(), eq); });
    } else if (suite == "integrand") {
        add_check(out, suite, "wrel1", P, [=] { return check_wrel1(H->get(), eq); });
        add_check(out, suite, "wrel2", P, [=] { return check_wrel2(H->get(), eq); });
        add_check(out, suite, "hw11", P, [=] { return check_hw11(N, m, eq); });
        add_check(out, suite, "FMhweq", P, [=] { return check_FMhweq(H->get(), eq); });
        add_check(out, suite, "FMhwcond", P, [=] { return check_FMhwcond(H->get(), eq); });
    } else if (suite == "difference") {
        add_check(out, suite, "DLformula", P, [=] { return check_DLformula(N, m, eq); });
        add_check(out, suite, "Q", P, [=] { return check_Q(N, m, eq); });
        add_check(out, suite, "Q_ell_zero", P, [=] { return check_Qell_zero(N, m, eq); });
        add_check(out, suite, "puttedD", P, [=] { return check_puttedD(N, m, eq); });
        add_check(out, suite, "mu_to_Q", P, [=] { return check_mu_to_Q(N, m, eq); });
        if (m <= 2) {
            EqConfig det;
            for (int r = 1; r <= 2; ++r)
                add_check(out, suite, "ratclaim1", "m=" + std::to_string(m) + " r=" + std::to_string(r),
                          [=] { return check_ratclaim1(m, r, det); });
            for (int d = 0; d <= 2; ++d)
                add_check(out, suite, "ratclaim2", "d=" + std::to_string(d) + " m=" + std::to_string(m),
                          [=] { return check_ratclaim2(d, m, det); });
        }
    } else if (suite == "rmatrix") {
        const std::string PN = "N=" + std::to_string(N);
        add(out, suite, "yang_baxter", PN, [N] {
            CaseResult c;
            c.subcases = 1;
            c.status = check_yang_baxter(N) ? "pass" : "fail";
            return c;
        });
        add(out, suite, "unitarity", PN, [N] {
            CaseResult c;
            c.subcases = 1;
            c.status = check_unitarity(N) ? "pass" : "fail";
            return c;
        });
    } else if (suite == "emt") {
        const std::string PN = "N=" + std::to_string(N);
        add(out, suite, "omegasum", PN, [N] {
            CaseResult c;
            c.subcases = 1;
            c.status = verify_omegasum(N) ? "pass" : "fail";
            return c;
        });
        for (int k = 0; k <= N - 2; ++k)
            add_check(out, suite, "skew1", PN + " k=" + std::to_string(k), [=] { return verify_skew_lemma(1, N, k); });
        add_check(out, suite, "skew2", PN, [=] { return verify_skew_lemma(2, N, 0); });
        add_check(out, suite, "skew3", PN, [=] { return verify_skew_lemma(3, N, 0); });
        if (m == 1) {
            for (int mu : {0, 1})
                add_check(out, suite, "m1_route", P + " mu=" + std::to_string(mu), [=] { return verify_m1_route(N, mu); });
        } else {
            for (int sign : {1, -1})
                add(out, suite, "rescond", P + (sign > 0 ? " sign=+" : " sign=-"), [=] {
                    auto r = verify_rescond(build_emt_witness(N, m, sign));
                    CheckResult all;
                    for (auto* c : {&r.cond1, &r.cond2, &r.cond3, &r.cond35}) all.merge(*c);
                    CaseResult c = from_check(all);
                    if (c.status == "pass" && r.delta_mask() == 0) {
                        c.status = "fail";
                        c.detail = "cond4 fails for both delta";
                    }
                    c.subcases += r.cond4[0].cases + r.cond4[1].cases;
                    c.detail = rescond_summary(r) + (c.detail.empty() ? "" : "; " + c.detail);
                    return c;
                });
            for (int mu : {0, 1})
                add_check(out, suite, "prefactor_reduction", P + " mu=" + std::to_string(mu),
                          [=] { return verify_prefactor_reduction(N, m, mu); });
        }
    } else if (suite == "numeric") {
        const std::string PN = "N=" + std::to_string(N);
        double tol = cfg.tol;
        add_numeric(out, "gamma_functional", "", 0, [](NumRows* r) { return check_gamma_functional(r); });
        add_numeric(out, "gamma2", "", 0, [](NumRows* r) { return check_gamma2(r); });
        add_numeric(out, "zetarel1", PN, 0, [N](NumRows* r) { return check_zetarel1(N, r); });
        add_numeric(out, "s0", PN, 0, [N](NumRows* r) { return check_s0(N, r); });
        add_numeric(out, "stir", P, 0, [=](NumRows* r) { return check_stir(N, m, r); });
        unsigned s = cfg.seed;
        add_numeric(out, "onetime", P, tol, [=](NumRows* r) {
            auto Pm = default_params(N, m, s);
            return verify_onetime(Pm, default_contour(Pm), sample_factors(Pm, 0, s + 7)[0], r);
        });
        add_numeric(out, "hw", P, tol, [=](NumRows* r) {
            auto Pm = default_params(N, m, s);
            return verify_hw_numeric(Pm, default_contour(Pm), sample_cycle(Pm, s + 5), r);
        });
        add_numeric(out, "smirnov", P, tol, [=](NumRows* r) {
            auto Pm = default_params(N, m, s);
            return verify_smirnov_numeric(Pm, default_contour(Pm), sample_factors(Pm, (N - 1) * m - 1, s + 13), r);
        });
        add_numeric(out, "zerocycle", P, tol, [=](NumRows* r) {
            auto Pm = default_params(N, m, s);
            return verify_zerocycle_numeric(Pm, default_contour(Pm), sample_factors(Pm, (N - 1) * m, s + 11), r);
        });
        add_numeric(out, "contour_invariance", P, tol, [=](NumRows* r) {
            auto Pm = default_params(N, m, s);
            return verify_contour_invariance(Pm, sample_cycle(Pm, s + 5), r);
        });
        if (N == 2 && m == 1)
            for (int mu : {0, 1}) {
                std::string PM = P + " mu=" + std::to_string(mu);
                add_numeric(out, "ax1", PM, 0, [mu](NumRows* r) { return check_ax1(mu, 0, r); });
                add_numeric(out, "res0", PM, 0, [mu](NumRows* r) { return check_res0(mu, 0, r); });
            }
    }
    return out;
}

std::vector<Case> select_cases(const SuiteConfig& cfg)
{
    std::vector<Case> out;
    std::set<std::string> seen;
    for (auto& s : cfg.suites)
        for (int N : cfg.Ns)
            for (int m : cfg.ms)
                for (auto& c : suite_cases(s, N, m, cfg))
                    if (seen.insert(c.suite + "|" + c.name + "|" + c.params).second) out.push_back(std::move(c));
    return out;
}

std::vector<CaseResult> run_cases(const std::vector<Case>& cases, const SuiteConfig& cfg, bool* abandoned)
{
    std::vector<CaseResult> res(cases.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> lost{false};
    auto worker = [&] {
        for (size_t i; (i = next++) < cases.size();) {
            const Case& c = cases[i];
            auto t0 = std::chrono::steady_clock::now();
            auto prom = std::make_shared<std::promise<CaseResult>>();
            auto fut = prom->get_future();
            std::thread([prom, run = c.run] {
                try {
                    prom->set_value(run());
                } catch (const std::exception& e) {
                    CaseResult r;
                    r.status = "error";
                    r.detail = e.what();
                    prom->set_value(std::move(r));
                }
            }).detach();
            CaseResult r;
            if (fut.wait_for(std::chrono::duration<double>(cfg.budget_sec)) == std::future_status::ready) {
                r = fut.get();
            } else {
                r.status = "timeout";
                r.detail = "exceeded " + std::to_string(cfg.budget_sec) + " s";
                lost = true;
            }
            r.runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            r.suite = c.suite, r.name = c.name, r.params = c.params;
            res[i] = std::move(r);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(1, cfg.threads); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (abandoned) *abandoned = lost;
    return res;
}

}  // namespace qkz
