#include "qkz/contour.hpp"

#include "qkz/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace qkz {

namespace {

constexpr double pi = std::numbers::pi;
const cplx I(0, 1);

std::string fmt(cplx z)
{
    std::ostringstream os;
    os.precision(12);
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

std::string fmt(double x)
{
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

// Record one comparison; returns whether |value - ref| <= tol * scale.
bool compare(CheckResult& res, NumRows* rows, const std::string& tag, cplx value, cplx ref, double tol,
             double scale = -1)
{
    double ae = std::abs(value - ref);
    double s = scale > 0 ? scale : std::max(std::abs(ref), 1e-300);
    double re = ae / s;
    if (rows) rows->push_back({tag, value, ref, ae, re});
    bool ok = std::isfinite(re) && re <= tol;
    res.expect(ok, tag + ": " + fmt(value) + " vs " + fmt(ref) + " rel " + fmt(re));
    return ok;
}

Signature lowered_sig(const Signature& s, int k)
{
    auto nu = s.nu;
    nu[size_t(k - 1)] -= 1;
    return Signature(s.N, s.n, nu);
}

std::vector<cplx> inv_B(const NumParams& P)
{
    std::vector<cplx> c;
    for (auto b : P.beta) c.push_back(std::exp(-2 * pi * I * b / P.p()));
    return c;
}

cplx log_X(cplx alpha, const NumParams& P)
{
    return 2 * pi * I * alpha / P.p();
}

int max_exp(const NumCycle& W, int a)
{
    int e = 0;
    for (auto& x : W.exps) e = std::max(e, x[size_t(a)]);
    return e;
}

}  // namespace

std::vector<cplx> generic_beta(int n, unsigned seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    std::vector<cplx> b;
    while (int(b.size()) < n) {
        double x = u(rng);
        bool ok = true;
        for (auto y : b) ok = ok && std::abs(x - y.real()) >= 0.2;
        if (ok) b.emplace_back(x, 0);
    }
    return b;
}

NumParams default_params(int N, int m, unsigned seed)
{
    NumParams P;
    P.N = N, P.m = m;
    P.beta = generic_beta(N * m, seed + unsigned(100 * N + m));
    return P;
}

std::pair<double, double> admissible_band(const NumParams& P)
{
    if (!(P.hbar.imag() < 0)) throw NumericError("contour needs Im hbar < 0");
    double lo = -1e300;
    for (auto b : P.beta) lo = std::max(lo, b.imag());
    double hi = 1e300;
    for (auto b : P.beta)
        for (int k = 0; k < 64; ++k) {
            double y = (b + P.hbar - double(k) * P.p()).imag();
            if (y > lo) {
                hi = std::min(hi, y);
                break;
            }
        }
    return {lo, hi};
}

ContourSpec default_contour(const NumParams& P)
{
    auto [lo, hi] = admissible_band(P);
    ContourSpec C;
    C.c0 = 0.5 * (lo + hi);
    return C;
}

std::vector<PoleEntry> pole_ledger(const NumParams& P, const ContourSpec& C)
{
    std::vector<PoleEntry> L;
    cplx p = P.p();
    std::vector<cplx> sing;
    for (auto b : P.beta)
        for (int k = -3; k <= 3; ++k) {
            sing.push_back(b + double(k) * p);
            sing.push_back(b + P.hbar - double(k) * p);
        }
    for (int j = 0; j < P.n(); ++j) {
        const cplx b = P.beta[size_t(j)];
        // below-family poles above the line: clockwise circle
        for (int k = 0;; ++k) {
            cplx at = b + double(k) * p;
            if (std::abs(at.imag() - C.c0) < C.min_dist) throw NumericError("contour: pole too close to line");
            if (at.imag() < C.c0) break;
            double r = 0.25;
            for (auto s : sing)
                if (std::abs(s - at) > 1e-12) r = std::min(r, 0.4 * std::abs(s - at));
            if (r < 1e-6) throw NumericError("contour: circle correction too small");
            L.push_back({j, k, at, r, -1});
        }
        // above-family poles below the line: analytic residue
        for (int k = 0;; ++k) {
            cplx at = b + P.hbar - double(k) * p;
            if (std::abs(at.imag() - C.c0) < C.min_dist) throw NumericError("contour: pole too close to line");
            if (at.imag() > C.c0) break;
            L.push_back({j, k, at, 0, 1});
        }
    }
    for (size_t i = 0; i < L.size(); ++i)
        for (size_t j = i + 1; j < L.size(); ++j)
            if (std::abs(L[i].at - L[j].at) < 1e-9) throw NumericError("contour: coincident ledger poles");
    return L;
}

cplx phi1(cplx alpha, const NumParams& P)
{
    cplx s = 0, p = P.p(), a = -P.hbar / p;
    for (auto b : P.beta) s += log_gamma_ratio((alpha - b) / p, a);
    return finite_or_throw(std::exp(s), "phi");
}

cplx phi1_residue(int j, int k, const NumParams& P)
{
    cplx p = P.p(), at = P.beta[size_t(j)] + P.hbar - double(k) * p;
    double f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    cplx r = p * (k % 2 ? -1.0 : 1.0) / f * rgamma(P.hbar / p - double(k));
    for (int i = 0; i < P.n(); ++i) {
        if (i == j) continue;
        cplx z = (at - P.beta[size_t(i)]) / p;
        r *= gamma_fn(z - P.hbar / p) * rgamma(z);
    }
    return finite_or_throw(r, "phi residue");
}

void NumCycle::add(cplx c, std::vector<int> e)
{
    if (int(e.size()) != ell) throw NumericError("cycle term of wrong arity");
    coef.push_back(c);
    exps.push_back(std::move(e));
}

NumCycle NumCycle::product(const std::vector<std::vector<cplx>>& factors)
{
    NumCycle W;
    W.ell = int(factors.size());
    std::vector<int> e(factors.size(), 0);
    std::function<void(size_t, cplx)> rec = [&](size_t a, cplx c) {
        if (a == factors.size()) {
            if (c != 0.0) W.add(c, e);
            return;
        }
        for (size_t k = 0; k < factors[a].size(); ++k) {
            e[a] = int(k);
            rec(a + 1, c * factors[a][k]);
        }
    };
    rec(0, 1);
    return W;
}

cplx cycle_value(const NumCycle& W, const std::vector<cplx>& alpha, const NumParams& P)
{
    auto c = inv_B(P);
    int n = P.n();
    cplx den = 1;
    std::vector<bool> flip(size_t(W.ell));
    std::vector<cplx> base(size_t(W.ell));
    for (int a = 0; a < W.ell; ++a) {
        cplx lx = log_X(alpha[size_t(a)], P);
        flip[size_t(a)] = lx.real() > 0;
        cplx x = std::exp(flip[size_t(a)] ? -lx : lx);
        base[size_t(a)] = x;
        for (auto cj : c) den *= flip[size_t(a)] ? x - cj : 1.0 - x * cj;
    }
    cplx s = 0;
    for (size_t t = 0; t < W.coef.size(); ++t) {
        cplx v = W.coef[t];
        for (int a = 0; a < W.ell; ++a) {
            int e = W.exps[t][size_t(a)];
            v *= std::pow(base[size_t(a)], flip[size_t(a)] ? n - e : e);
        }
        s += v;
    }
    return finite_or_throw(s / den, "cycle");
}

NumCycle to_numeric(const CPoly& Pp, int ell, const NumParams& P)
{
    NumCycle W;
    W.ell = ell;
    std::map<int, int> aid;
    std::map<int, cplx> bval;
    for (int a = 1; a <= ell; ++a) aid[var_A(a)] = a - 1;
    for (int j = 1; j <= P.n(); ++j) bval[var_B(j)] = std::exp(2 * pi * I * P.beta[size_t(j - 1)] / P.p());
    for (auto& [m, c] : Pp.terms()) {
        // zeta_{2N} -> e^{-i pi/N}: the conjugate of to_complex
        cplx v = conj(c).to_complex();
        std::vector<int> e(size_t(ell), 0);
        for (auto [var, k] : m) {
            if (aid.count(var)) e[size_t(aid[var])] = k;
            else if (bval.count(var)) v *= std::pow(bval[var], k);
            else throw NumericError("to_numeric: unexpected variable");
        }
        W.add(v, e);
    }
    return W;
}

InfLimits inf_limits(const std::vector<cplx>& coef, const NumParams& P)
{
    double dir = (2 * pi * I / P.p()).real();
    if (dir == 0) throw NumericError("inf_limits: |X| constant along the real axis");
    auto c = inv_B(P);
    int n = P.n();
    cplx at0 = coef.empty() ? 0.0 : coef[0];
    cplx top = 0;
    if (int(coef.size()) > n + 1)
        for (size_t k = size_t(n) + 1; k < coef.size(); ++k)
            if (coef[k] != 0.0) throw NumericError("inf_limits: degree exceeds n");
    if (int(coef.size()) > n) {
        top = coef[size_t(n)];
        for (auto cj : c) top /= -cj;
    }
    // dir < 0: X -> 0 as alpha -> +oo
    return dir < 0 ? InfLimits{top, at0} : InfLimits{at0, top};
}

QuadResult contour_integral(int ell, size_t ncomp, const Integrand& g, const NumParams& P, const ContourSpec& C)
{
    struct Node {
        cplx alpha, w, wc;  // fine and coarse weights (wc = 0: not a coarse node)
        double tail = 0;
    };
    std::vector<Node> nodes;
    double h = C.step;
    double tmax = std::asinh(std::asinh(C.xmax) / (pi / 2));
    int M = int(std::ceil(tmax / h));
    for (int i = -M; i <= M; ++i) {
        double t = i * h, u = (pi / 2) * std::sinh(t);
        double x = std::sinh(u), dx = (pi / 2) * std::cosh(t) * std::cosh(u);
        cplx al(x, C.c0);
        cplx w = h * dx * phi1(al, P);
        Node nd{al, w, i % 2 == 0 ? 2.0 * w : 0.0};
        if (std::abs(i) == M) nd.tail = std::abs(phi1(al, P) * x) / std::abs(w);
        nodes.push_back(nd);
    }
    for (auto& e : pole_ledger(P, C)) {
        if (e.radius == 0) {
            cplx w = C.residue_sign * e.sign * 2.0 * pi * I * phi1_residue(e.j, e.k, P);
            nodes.push_back({e.at, w, w});
            continue;
        }
        const int K = 64;
        for (int q = 0; q < K; ++q) {
            cplx z = e.radius * std::exp(I * (2 * pi * q / K)), al = e.at + z;
            cplx w = C.residue_sign * e.sign * (2 * pi / K) * I * z * phi1(al, P);
            nodes.push_back({al, w, q % 2 == 0 ? 2.0 * w : 0.0});
        }
    }
    size_t K = nodes.size();
    long total = 1;
    for (int a = 0; a < ell; ++a) total *= long(K);

    // Rows over the first variable, reduced in index order.
    struct Acc {
        std::vector<cplx> fine, coarse;
        double l1 = 0, tail = 0;
    };
    std::vector<Acc> rows(K, Acc{std::vector<cplx>(ncomp), std::vector<cplx>(ncomp), 0, 0});
    auto work = [&](size_t first) {
        Acc& acc = rows[first];
        std::vector<size_t> idx(size_t(ell), 0);
        idx[0] = first;
        std::vector<cplx> alpha(static_cast<size_t>(ell)), out(ncomp);
        long inner = total / long(K);
        for (long q = 0; q < inner; ++q) {
            long r = q;
            for (int a = ell - 1; a >= 1; --a) {
                idx[size_t(a)] = size_t(r % long(K));
                r /= long(K);
            }
            cplx w = 1, wc = 1;
            double tf = 0;
            for (int a = 0; a < ell; ++a) {
                const Node& nd = nodes[idx[size_t(a)]];
                alpha[size_t(a)] = nd.alpha;
                w *= nd.w;
                wc *= nd.wc;
                tf = std::max(tf, nd.tail);
            }
            std::fill(out.begin(), out.end(), cplx(0));
            g(alpha, out);
            for (size_t c = 0; c < ncomp; ++c) {
                cplx v = w * out[c];
                acc.fine[c] += v;
                acc.coarse[c] += wc * out[c];
                acc.l1 += std::abs(v);
                acc.tail += std::abs(v) * tf;
            }
        }
    };
    unsigned nt = std::max(1u, std::min(16u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(nt);
    for (unsigned t = 0; t < nt; ++t)
        pool.emplace_back([&, t] {
            try {
                for (size_t i = t; i < K; i += nt) work(i);
            } catch (...) {
                errs[t] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);

    QuadResult R;
    R.value.assign(ncomp, 0);
    std::vector<cplx> coarse(ncomp, 0);
    double l1 = 0;
    for (auto& a : rows) {
        for (size_t c = 0; c < ncomp; ++c) {
            R.value[c] += a.fine[c];
            coarse[c] += a.coarse[c];
        }
        l1 += a.l1;
        R.tail += a.tail;
    }
    for (size_t c = 0; c < ncomp; ++c) R.err = std::max(R.err, std::abs(R.value[c] - coarse[c]));
    R.evals = total;
    for (auto v : R.value) finite_or_throw(v, "contour integral");
    if (R.tail > C.tol * std::max(l1, 1e-300))
        throw NumericError("contour: tail estimate " + fmt(R.tail) + " exceeds tolerance (scale " + fmt(l1) + ")");
    return R;
}

QuadResult contour_eval(const HTable& H, const std::vector<IndexVector>& Js, const NumCycle& W, const NumParams& P,
                        const ContourSpec& C)
{
    cplx h = P.hbar;
    for (int a = 0; a < W.ell; ++a)
        if (max_exp(W, a) > P.n()) throw NumericError("contour_eval: cycle numerator exceeds degree n");
    auto g = [&](const std::vector<cplx>& al, std::vector<cplx>& out) {
        cplx wv = cycle_value(W, al, P);
        for (size_t i = 0; i < Js.size(); ++i) out[i] = w_J(H, Js[i], al, P.beta, h) * wv;
    };
    return contour_integral(H.ell(), Js.size(), g, P, C);
}

TensorVector<cplx> psi_numeric(const HTable& H, const NumCycle& W, const NumParams& P, const ContourSpec& C,
                               QuadResult* raw)
{
    auto Js = enumerate(Signature::singlet(P.N, P.m));
    auto R = contour_eval(H, Js, W, P, C);
    TensorVector<cplx> psi(P.N);
    for (size_t i = 0; i < Js.size(); ++i) psi.add(Js[i].entries(), R.value[i]);
    if (raw) *raw = R;
    return psi;
}

CheckResult check_gamma_functional(NumRows* rows)
{
    CheckResult res;
    compare(res, rows, "Gamma(1/2)", gamma_fn(0.5), std::sqrt(pi), 1e-13);
    std::mt19937_64 rng(20240601u);
    std::uniform_real_distribution<double> u(-5, 5);
    bool rec = true, refl = true, asym = true;
    for (int i = 0; i < 50; ++i) {
        cplx z(u(rng), u(rng));
        CheckResult r;
        rec &= compare(r, nullptr, "", gamma_fn(z + 1.0), z * gamma_fn(z), 1e-12);
        refl &= compare(r, nullptr, "", gamma_fn(z) * gamma_fn(1.0 - z), pi / std::sin(pi * z), 1e-12);
        cplx big = 80.0 * z / std::abs(z);
        if (big.real() < 0) big = -big;
        asym &= compare(r, nullptr, "", std::exp(log_gamma_ratio(big, 0.3 * z / 5.0)),
                        std::exp(log_gamma(big + 0.3 * z / 5.0) - log_gamma(big)), 1e-12);
    }
    res.expect(rec, "Gamma(z+1) = z Gamma(z) at 50 points");
    res.expect(refl, "reflection at 50 points");
    res.expect(asym, "asymptotic Gamma ratio at 50 points");
    bool thrown = false;
    try {
        log_gamma(-2.0);
    } catch (const NumericError&) {
        thrown = true;
    }
    res.expect(thrown, "pole of Gamma reported");
    return res;
}

CheckResult check_gamma2(NumRows* rows)
{
    CheckResult res;
    std::mt19937_64 rng(20240602u);
    std::uniform_real_distribution<double> re(0.3, 12), im(-6, 6);
    for (int i = 0; i < 20; ++i) {
        cplx x(re(rng), im(rng));
        compare(res, rows, "gamma2 x=" + fmt(x), std::exp(log_gamma2(x + 2 * pi) - log_gamma2(x)),
                std::exp(-log_gamma1(x, 2 * pi)), 1e-8);
    }
    return res;
}

CheckResult check_zetarel1(int N, NumRows* rows)
{
    CheckResult res;
    std::mt19937_64 rng(20240603u + unsigned(N));
    std::uniform_real_distribution<double> re(-3, 3), im(-0.8, 0.8);
    for (int i = 0; i < 10; ++i) {
        cplx b(re(rng), i < 5 ? 0.0 : im(rng));
        std::string tag = "N=" + std::to_string(N) + " beta=" + fmt(b);
        compare(res, rows, "zetarel1 shift " + tag, zeta_fn(b - 2 * pi * I, N), zeta_fn(-b, N), 1e-8);
        compare(res, rows, "zetarel1 S0 " + tag, zeta_fn(-b, N) / zeta_fn(b, N), s0_eval(b, N), 1e-8);
    }
    return res;
}

CheckResult check_s0(int N, NumRows* rows)
{
    CheckResult res;
    std::mt19937_64 rng(20240604u + unsigned(N));
    std::uniform_real_distribution<double> u(-3, 3);
    for (int i = 0; i < 10; ++i) {
        cplx b(u(rng), u(rng));
        compare(res, rows, "S0 unitarity N=" + std::to_string(N) + " beta=" + fmt(b), s0_eval(b, N) * s0_eval(-b, N),
                1.0, 1e-12);
    }
    compare(res, rows, "S0(0) limit N=" + std::to_string(N), s0_eval(1e-9, N), -1.0, 1e-7);
    // beta = i pi: beta / 2 pi i = 1/2
    double c = double(N - 1) / N;
    double ref = std::tgamma(c + 0.5) * std::tgamma(-0.5) / (std::tgamma(c - 0.5) * std::tgamma(0.5));
    if (N == 2) ref = 0;  // 1/Gamma(0)
    compare(res, rows, "S0(i pi) N=" + std::to_string(N), s0_eval(pi * I, N), ref, 1e-12, 1.0);
    return res;
}

CheckResult check_stir(int N, int m, NumRows* rows)
{
    CheckResult res;
    auto P = default_params(N, m);
    cplx a = -1.0 / double(N), sb = 0;
    for (auto b : P.beta) sb += b;
    for (double s : {1.0, -1.0}) {
        std::string tag = "stir N=" + std::to_string(N) + " m=" + std::to_string(m);
        // leading order; the first correction is m (N+1)/(2N) p/alpha
        cplx far = s * 200 * std::abs(P.p());
        compare(res, rows, tag + " alpha=" + fmt(far), phi1(far, P), std::pow(far / P.p(), -double(m)), 1e-2);
        cplx al = s * 50 * std::abs(P.p());
        cplx c1 = -a * sb + double(P.n()) * a * (a - 1.0) / 2.0 * P.p();
        compare(res, rows, tag + " first order alpha=" + fmt(al), phi1(al, P),
                std::pow(al / P.p(), -double(m)) * (1.0 + c1 / al), 1e-3);
    }
    return res;
}

cplx onetime_constant(const NumParams& P, int power)
{
    return std::pow(P.p(), double(power));
}

CheckResult verify_onetime(const NumParams& P, const ContourSpec& C, const std::vector<cplx>& coef, NumRows* rows)
{
    CheckResult res;
    auto lim = inf_limits(coef, P);
    // The end segments of C - (C + p) have length p, so the constant is
    // p^{m+1}; onetime_constant(m) keeps the printed p^m reachable.
    cplx rhs = onetime_constant(P, P.m + 1) * (lim.minus - lim.plus);
    NumCycle W = NumCycle::product({coef});
    auto Js = enumerate(Signature::singlet(P.N, P.m));
    cplx h = P.hbar, Nh = double(P.N) * h;
    // D L^{(0)} = [L0(a) Pi(a) - L0(a + p) Pi_h(a)] / Pi(a); the two top
    // coefficients of the numerator cancel identically since p = N hbar and
    // n = N |K_0|, and are dropped to avoid cancellation at large |alpha|.
    std::vector<UPoly<cplx>> num;
    UPoly<cplx> Pi = UPoly<cplx>::constant(1.0), Pih = Pi;
    for (auto b : P.beta) {
        Pi = Pi * UPoly<cplx>::linear(b);
        Pih = Pih * UPoly<cplx>::linear(b + h);
    }
    for (auto& J : Js) {
        auto L0 = UPoly<cplx>::constant(1.0);
        for (int k : J.K(0)) L0 = L0 * UPoly<cplx>::linear(P.beta[size_t(k - 1)] + Nh);
        auto q = L0 * Pi - L0.shift(P.p()) * Pih;
        if (int(J.K(0).size()) * P.N == P.n()) q.c.resize(q.c.size() - 2);
        num.push_back(q);
    }
    auto g = [&](const std::vector<cplx>& al, std::vector<cplx>& out) {
        cplx wv = cycle_value(W, al, P) / Pi.eval(al[0]);
        for (size_t i = 0; i < Js.size(); ++i) out[i] = num[i].eval(al[0]) * wv;
    };
    QuadResult R;
    try {
        R = contour_integral(1, Js.size(), g, P, C);
    } catch (const NumericError& e) {
        res.fail(std::string("onetime: ") + e.what());
        return res;
    }
    double scale = std::max(std::abs(rhs), 1e-300);
    for (auto v : R.value) scale = std::max(scale, std::abs(v));
    for (size_t i = 0; i < Js.size(); ++i)
        compare(res, rows, "onetime N=" + std::to_string(P.N) + " J=" + Js[i].str(), R.value[i], rhs, 1e-6, scale);
    return res;
}

CheckResult verify_hw_numeric(const NumParams& P, const ContourSpec& C, const NumCycle& W, NumRows* rows)
{
    CheckResult res;
    auto H = HTable::build(P.N, P.m);
    auto sig = Signature::singlet(P.N, P.m);
    auto Js = enumerate(sig);
    QuadResult R;
    try {
        R = contour_eval(H, Js, W, P, C);
    } catch (const NumericError& e) {
        res.fail(std::string("hw: ") + e.what());
        return res;
    }
    std::map<std::vector<int>, cplx> F;
    double mag = 0;
    for (size_t i = 0; i < Js.size(); ++i) {
        F[Js[i].entries()] = R.value[i];
        mag = std::max(mag, std::abs(R.value[i]));
    }
    for (int k = 1; k < P.N; ++k) {
        if (sig.nu_at(k) - 1 < sig.nu_at(k + 1)) continue;
        for (auto& Jp : enumerate(lowered_sig(sig, k))) {
            cplx s = 0;
            for (int a = 1; a <= sig.n; ++a)
                if (Jp[a] == k - 1) s += F.at(Jp.plus_e(a).entries());
            compare(res, rows, "hw k=" + std::to_string(k) + " J'=" + Jp.str(), s, 0.0, 1e-6, std::max(mag, 1e-300));
        }
    }
    return res;
}

CheckResult verify_smirnov_numeric(const NumParams& P, const ContourSpec& C,
                                   const std::vector<std::vector<cplx>>& factors, NumRows* rows)
{
    CheckResult res;
    int N = P.N, m = P.m, ell = (N - 1) * m;
    if (int(factors.size()) != ell) throw NumericError("smirnov: need one factor per alpha");
    for (int a = 0; a + 1 < ell; ++a) {
        auto L = inf_limits(factors[size_t(a)], P);
        if (std::abs(L.minus) + std::abs(L.plus) > 1e-13) {
            res.fail("smirnov: P_" + std::to_string(a + 1) + " does not vanish at infinity; formula not applicable");
            return res;
        }
    }
    auto H = HTable::build(N, m);
    auto Js = enumerate(Signature::singlet(N, m));
    cplx h = P.hbar;
    auto B = [&](int j) { return P.beta[size_t(j - 1)]; };
    TensorVector<cplx> lhs(N), rhs(N);
    try {
        lhs = psi_numeric(H, NumCycle::product(factors), P, C);
        // (l-1)-fold side
        std::vector<std::vector<cplx>> head(factors.begin(), factors.end() - 1);
        NumCycle Wh = NumCycle::product(head);
        std::vector<UPoly<cplx>> Q;
        std::vector<std::vector<UPoly<cplx>>> QJ;
        for (auto& J : Js) {
            std::vector<UPoly<cplx>> q;
            for (int k = 1; k < ell; ++k) q.push_back(Q_poly(J, k, P.beta, h));
            QJ.push_back(q);
        }
        std::vector<cplx> I_J(Js.size(), 1.0);
        if (ell > 1) {
            auto g = [&](const std::vector<cplx>& al, std::vector<cplx>& out) {
                cplx wv = cycle_value(Wh, al, P);
                size_t s = al.size();
                for (size_t i = 0; i < Js.size(); ++i) {
                    cplx d = 0;
                    for_each_perm(int(s), [&](const std::vector<int>& p, int sg) {
                        cplx t = double(sg);
                        for (size_t a = 0; a < s; ++a) t *= QJ[i][size_t(p[a])].eval(al[a]);
                        d += t;
                    });
                    out[i] = d * wv;
                }
            };
            I_J = contour_integral(ell - 1, Js.size(), g, P, C).value;
        }
        auto L = inf_limits(factors.back(), P);
        long sigma = long(N) * m * (m + 1) / 2 + long(m) * m;
        cplx pref = (sigma % 2 ? -1.0 : 1.0) * (L.minus - L.plus);
        for (size_t i = 0; i < Js.size(); ++i) {
            const auto& J = Js[i];
            cplx c = pref * I_J[i];
            for (int r = 0; r < N; ++r)
                for (int s = r + 1; s < N; ++s)
                    for (int a : J.K(r))
                        for (int b : J.K(s)) c /= B(a) - B(b);
            rhs += omega_at(N, J.entries(), P.beta, h).scaled(c);
        }
    } catch (const NumericError& e) {
        res.fail(std::string("smirnov: ") + e.what());
        return res;
    }
    // The stated steps produce -(-1)^sigma p^{m+1} hbar^{-l} times the display
    // normalization (check_mu_to_Q with the corrected one-time constant).
    long sigma = long(N) * m * (m + 1) / 2 + long(m) * m;
    cplx kappa = (sigma % 2 ? 1.0 : -1.0) * onetime_constant(P, m + 1) * std::pow(h, -double(ell));
    double norm = 0;
    for (auto& [k, v] : lhs.comps()) norm = std::max(norm, std::abs(v));
    std::set<std::vector<int>> keys;
    for (auto& [k, v] : lhs.comps()) keys.insert(k);
    for (auto& [k, v] : rhs.comps()) keys.insert(k);
    auto at = [](const TensorVector<cplx>& t, const std::vector<int>& k) {
        auto it = t.comps().find(k);
        return it == t.comps().end() ? cplx(0) : it->second;
    };
    for (auto& k : keys) {
        std::ostringstream os;
        for (int x : k) os << x;
        compare(res, rows, "smirnov N=" + std::to_string(N) + " v_" + os.str(), at(lhs, k), kappa * at(rhs, k), 1e-6,
                std::max(norm, 1e-300));
    }
    return res;
}

CheckResult verify_zerocycle_numeric(const NumParams& P, const ContourSpec& C,
                                     const std::vector<std::vector<cplx>>& factors, NumRows* rows)
{
    CheckResult res;
    for (auto& f : factors) {
        auto L = inf_limits(f, P);
        if (std::abs(L.minus) + std::abs(L.plus) > 1e-13) {
            res.fail("zerocycle: a factor does not vanish at infinity");
            return res;
        }
    }
    auto H = HTable::build(P.N, P.m);
    QuadResult R;
    TensorVector<cplx> psi(P.N);
    try {
        psi = psi_numeric(H, NumCycle::product(factors), P, C, &R);
    } catch (const NumericError& e) {
        res.fail(std::string("zerocycle: ") + e.what());
        return res;
    }
    // scale: the same integrals with the first factor replaced by 1
    auto f1 = factors;
    f1[0] = {1.0};
    QuadResult R1;
    psi_numeric(H, NumCycle::product(f1), P, C, &R1);
    double scale = 0;
    for (auto v : R1.value) scale = std::max(scale, std::abs(v));
    for (auto& [k, v] : psi.comps()) {
        std::ostringstream os;
        for (int x : k) os << x;
        compare(res, rows, "zerocycle N=" + std::to_string(P.N) + " v_" + os.str(), v, 0.0, 1e-8, scale);
    }
    if (psi.is_zero()) res.ok();
    return res;
}

CheckResult verify_contour_invariance(const NumParams& P, const NumCycle& W, NumRows* rows)
{
    CheckResult res;
    auto [lo, hi] = admissible_band(P);
    auto H = HTable::build(P.N, P.m);
    auto Js = enumerate(Signature::singlet(P.N, P.m));
    ContourSpec C1, C2;
    C1.c0 = lo + 0.3 * (hi - lo);
    C2.c0 = lo + 0.7 * (hi - lo);
    auto R1 = contour_eval(H, Js, W, P, C1), R2 = contour_eval(H, Js, W, P, C2);
    double mag = 0;
    for (auto v : R1.value) mag = std::max(mag, std::abs(v));
    for (size_t i = 0; i < Js.size(); ++i)
        compare(res, rows, "contour height J=" + Js[i].str(), R2.value[i], R1.value[i], 1e-8, mag);
    ContourSpec C3 = C1;
    C3.step = C1.step / 2;
    auto R3 = contour_eval(H, Js, W, P, C3);
    double d = 0;
    for (size_t i = 0; i < Js.size(); ++i) d = std::max(d, std::abs(R3.value[i] - R1.value[i]));
    res.expect(d <= std::max(R1.err, 1e-12 * mag), "step halving changes result by " + fmt(d) + ", estimate " + fmt(R1.err));
    return res;
}

std::vector<std::vector<cplx>> sample_factors(const NumParams& P, int vanishing, unsigned seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1, 1);
    int ell = (P.N - 1) * P.m, n = P.n();
    std::vector<std::vector<cplx>> f(size_t(ell), std::vector<cplx>(size_t(n + 1)));
    for (int a = 0; a < ell; ++a) {
        for (auto& c : f[size_t(a)]) c = cplx(u(rng), u(rng));
        if (a < vanishing) f[size_t(a)].front() = f[size_t(a)].back() = 0;
    }
    return f;
}

NumCycle sample_cycle(const NumParams& P, unsigned seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1, 1);
    std::uniform_int_distribution<int> e(0, P.n());
    NumCycle W;
    W.ell = (P.N - 1) * P.m;
    for (int t = 0; t < 6; ++t) {
        std::vector<int> x(size_t(W.ell));
        for (auto& v : x) v = e(rng);
        W.add(cplx(u(rng), u(rng)), x);
    }
    return W;
}

NumParams form_factor_params(int N, int m, const std::vector<cplx>& beta)
{
    NumParams P;
    P.N = N, P.m = m;
    P.hbar = cplx(0, -2 * pi / N);
    P.beta = beta;
    return P;
}

TensorVector<cplx> assemble_form_factor(const HTable& H, const CPoly& P, const NumParams& Pm, const ContourSpec& C)
{
    int n = Pm.n();
    cplx sum = 0, pre = 1;
    for (auto b : Pm.beta) sum += b;
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) pre *= zeta_fn(Pm.beta[size_t(j)] - Pm.beta[size_t(k)], Pm.N);
    pre *= std::exp(double((Pm.N - 1) * n) / (2.0 * Pm.N) * sum);
    auto psi = psi_numeric(H, to_numeric(P, H.ell(), Pm), Pm, C);
    return psi.scaled(finite_or_throw(pre, "form factor prefactor"));
}

CheckResult check_ax1(int mu, int nu, NumRows* rows)
{
    CheckResult res;
    const int N = 2, m = 1;
    auto H = HTable::build(N, m);
    auto d = build_emt(N, m, mu, nu);
    for (auto [b1, b2] : std::vector<std::pair<double, double>>{{0.37, -0.81}, {-0.2, 1.1}, {1.3, 0.45}}) {
        auto P12 = form_factor_params(N, m, {b1, b2}), P21 = form_factor_params(N, m, {b2, b1});
        auto f12 = assemble_form_factor(H, d.P_munu, P12, default_contour(P12));
        auto f21 = assemble_form_factor(H, d.P_munu, P21, default_contour(P21));
        cplx beta = b1 - b2;
        auto rhs = f12.apply_R(1, 2, beta, P12.hbar).scaled(s0_eval(beta, N)).apply_P(1, 2);
        double mag = 0;
        for (auto& [k, v] : f21.comps()) mag = std::max(mag, std::abs(v));
        std::set<std::vector<int>> keys;
        for (auto& [k, v] : f21.comps()) keys.insert(k);
        for (auto& [k, v] : rhs.comps()) keys.insert(k);
        for (auto& k : keys) {
            std::string J;
            for (int e : k) J += std::to_string(e);
            compare(res, rows, "ax1 mu=" + std::to_string(mu) + " b=" + fmt(b1) + "," + fmt(b2) + " J=" + J, f21.at(k),
                    rhs.at(k), 1e-8, mag);
        }
    }
    return res;
}

CheckResult check_res0(int mu, int nu, NumRows* rows)
{
    CheckResult res;
    const int N = 2, m = 1, K = 32;
    const double rho = 0.05, b1 = 0.3;
    auto H = HTable::build(N, m);
    auto d = build_emt(N, m, mu, nu);
    ContourSpec C;
    C.c0 = pi / 2;
    cplx center = b1 + cplx(0, pi);  // beta_1 - hbar
    TensorVector<cplx> circ(N), bare(N);
    double scale = 0;
    for (int q = 0; q < K; ++q) {
        cplx z = rho * std::exp(I * (2 * pi * q / K));
        auto Pm = form_factor_params(N, m, {b1, center + z});
        auto f = assemble_form_factor(H, d.P_munu, Pm, C);
        for (auto& [k, v] : f.comps()) scale = std::max(scale, std::abs(v) * 2 * pi * rho);
        cplx pref = 0;
        for (auto c : to_numeric(d.prefactor, 1, Pm).coef) pref += c;
        circ += f.scaled((2 * pi / K) * I * z);
        bare += f.scaled((2 * pi / K) * I * z / pref);
    }
    // 2 pi i res = contour integral of f
    auto maxabs = [](const TensorVector<cplx>& v) {
        double mx = 0;
        for (auto& [k, c] : v.comps()) mx = std::max(mx, std::abs(c));
        return mx;
    };
    double mx = maxabs(circ), mb = maxabs(bare);
    if (rows) rows->push_back({"res0 mu=" + std::to_string(mu) + " nu=" + std::to_string(nu), mx, 0, mx, mx / scale});
    res.expect(mx <= 1e-4 * scale, "res0 residue " + fmt(mx) + " exceeds 1e-4 of scale " + fmt(scale));
    res.expect(mb > 1e-2, "no pole without the prefactor, residue " + fmt(mb));
    res.detail += "res0 N=2 m=1: |2 pi i res| = " + fmt(mx) + ", scale " + fmt(scale) + ", without prefactor " + fmt(mb) + "\n";
    return res;
}

}  // namespace qkz
