#include "qkz/smirnov.hpp"

#include "qkz/identity.hpp"
#include "qkz/weights.hpp"

#include <type_traits>

namespace qkz {

namespace {

template <class P>
using scalar_of = std::decay_t<decltype(std::declval<P>().h)>;

template <class F>
void expect_holds(CheckResult& res, const std::string& tag, F&& f, const std::vector<int>& sizes, EqConfig cfg,
                  unsigned salt)
{
    cfg.seed += salt;
    std::string why;
    bool ok = false;
    try {
        ok = holds(f, sizes, cfg, &why);
    } catch (const AlgebraError& e) {
        why = e.what();
    }
    res.expect(ok, tag + ": " + why);
}

Signature lowered(const Signature& s, int k)
{
    auto nu = s.nu;
    nu[size_t(k - 1)] -= 1;
    return Signature(s.N, s.n, nu);
}

bool valid_lowering(const Signature& s, int k)
{
    return s.nu_at(k) - 1 >= s.nu_at(k + 1);
}

template <class T>
T det(std::vector<std::vector<T>> a)
{
    int n = int(a.size());
    T d(0);
    for_each_perm(n, [&](const std::vector<int>& p, int s) {
        T t(1);
        for (int i = 0; i < n; ++i) t *= a[size_t(i)][size_t(p[size_t(i)])];
        if (s > 0) d += t;
        else d -= t;
    });
    return d;
}

}  // namespace

EqConfig auto_eq(int N, int m, const EqConfig& base)
{
    EqConfig c = base;
    c.mode = (N - 1) * m <= 2 && N * m <= 4 ? EqMode::Deterministic : EqMode::Probabilistic;
    return c;
}

CheckResult check_anotherformula(const HTable& H, const EqConfig& cfg)
{
    CheckResult res;
    int N = H.N(), m = H.m(), ell = H.ell();
    if (N < 3) {
        res.ok();
        return res;
    }
    auto comps = enumerate(Signature::singlet(N - 1, m));
    expect_holds(
        res, "anotherformula",
        [&](const auto& p) {
            using T = scalar_of<decltype(p)>;
            const auto& a = p.lev[0];
            TensorVector<T> lhs(N - 1), rhs(N - 1);
            for (auto& e : comps) {
                lhs.add(e.entries(), H.H_eval(e.entries(), a, p.h));
                T c(1);
                for (int i = 0; i < ell; ++i)
                    for (int j = 0; j < ell; ++j)
                        if (e.entries()[size_t(i)] < e.entries()[size_t(j)]) c = c / (a[size_t(i)] - a[size_t(j)]);
                rhs += omega_at(N - 1, e.entries(), a, p.h).scaled(c);
            }
            return std::pair{lhs, rhs};
        },
        {ell}, cfg, 1);
    return res;
}

CheckResult check_ssol_hw(const HTable& H, const EqConfig& cfg)
{
    CheckResult res;
    int N = H.N(), ell = H.ell();
    if (N < 3) {
        res.ok();
        return res;
    }
    for (int k = 1; k <= N - 2; ++k)
        expect_holds(
            res, "ssol_hw k=" + std::to_string(k),
            [&](const auto& p) {
                using T = scalar_of<decltype(p)>;
                TensorVector<T> v(N - 1);
                for (auto& [e, g] : H.G()) v.add(e, H.H_eval(e, p.lev[0], p.h));
                return std::pair{v.apply_E(k), TensorVector<T>(N - 1)};
            },
            {ell}, cfg, unsigned(k));
    return res;
}

CheckResult check_hw_cancel_lemma(int r, const EqConfig& cfg)
{
    CheckResult res;
    expect_holds(
        res, "hw_cancel r=" + std::to_string(r),
        [&](const auto& p) {
            using T = scalar_of<decltype(p)>;
            const auto &x = p.lev[0], &y = p.lev[1];
            T sum(0);
            for (int s = 0; s <= r; ++s) {
                T t(1);
                for (int j = 0; j <= r; ++j) {
                    if (j == s) continue;
                    t = t / (x[size_t(j)] - x[size_t(s)]);
                    for (auto& yt : y) t = t / (x[size_t(j)] - yt);
                }
                for (auto& yt : y) t = t * (yt - x[size_t(s)] - p.h) / (yt - x[size_t(s)]);
                sum += t;
            }
            return std::pair{sum, T(0)};
        },
        {r + 1, r - 1}, cfg, unsigned(r));
    return res;
}

CheckResult check_omega_braid(int N, int m, const EqConfig& cfg)
{
    CheckResult res;
    auto sig = Signature::singlet(N, m);
    unsigned salt = 0;
    for (auto& e : enumerate(sig)) {
        size_t d = 0;
        for (size_t j = 0; j + 1 < e.entries().size(); ++j)
            if (e.entries()[j] > e.entries()[j + 1]) ++d;
        for (size_t pick = 1; pick < d; ++pick)
            expect_holds(
                res, "omega braid " + e.str(),
                [&](const auto& p) {
                    return std::pair{omega_at(N, e.entries(), p.lev[0], p.h, 0),
                                     omega_at(N, e.entries(), p.lev[0], p.h, pick)};
                },
                {sig.n}, cfg, ++salt);
        if (d < 2) res.ok();
    }
    return res;
}

CheckResult check_triangular(int N, int m, const EqConfig& cfg)
{
    CheckResult res;
    auto sig = Signature::singlet(N, m);
    unsigned salt = 0;
    for (auto& e : enumerate(sig))
        expect_holds(
            res, "triangular " + e.str(),
            [&](const auto& p) {
                using T = scalar_of<decltype(p)>;
                const auto& b = p.lev[0];
                auto w = omega_at(N, e.entries(), b, p.h);
                TensorVector<T> upper(N);
                for (auto& [k, c] : w.comps()) {
                    IndexVector kv(N, k);
                    if (!(kv == e) && dominated(kv, e)) continue;
                    upper.add(k, c);
                }
                T lead(1);
                const auto& x = e.entries();
                for (size_t a = 0; a < x.size(); ++a)
                    for (size_t c = a + 1; c < x.size(); ++c)
                        if (x[a] > x[c]) lead = lead * (b[a] - b[c]) / (b[a] - b[c] - p.h);
                return std::pair{upper, TensorVector<T>::basis(N, x, lead)};
            },
            {sig.n}, cfg, ++salt);
    return res;
}

CheckResult check_omegahweq(int N, int m, const EqConfig& cfg)
{
    CheckResult res;
    auto sig = Signature::singlet(N, m);
    unsigned salt = 0;
    for (auto& e : enumerate(sig))
        for (int k = 1; k < N; ++k)
            expect_holds(
                res, "omegahweq " + e.str() + " k=" + std::to_string(k),
                [&](const auto& p) {
                    using T = scalar_of<decltype(p)>;
                    const auto& b = p.lev[0];
                    const auto& x = e.entries();
                    auto lhs = omega_at(N, x, b, p.h).apply_E(k);
                    TensorVector<T> rhs(N);
                    for (size_t a = 0; a < x.size(); ++a) {
                        if (x[a] != k) continue;
                        T c(1);
                        for (size_t j = 0; j < x.size(); ++j)
                            if (j != a && x[j] == k) c = c * (b[j] - b[a] - p.h) / (b[j] - b[a]);
                        auto y = x;
                        y[a] -= 1;
                        rhs += omega_at(N, y, b, p.h).scaled(c);
                    }
                    return std::pair{lhs, rhs};
                },
                {sig.n}, cfg, ++salt);
    return res;
}

CheckResult check_basechange(const HTable& H, const EqConfig& cfg)
{
    CheckResult res;
    int N = H.N(), m = H.m(), ell = H.ell();
    auto sig = Signature::singlet(N, m);
    auto Js = enumerate(sig);
    expect_holds(
        res, "basechange",
        [&](const auto& p) {
            using T = scalar_of<decltype(p)>;
            const auto &b = p.lev[0], &a = p.lev[1];
            TensorVector<T> lhs(N), rhs(N);
            for (auto& J : Js) {
                lhs.add(J.entries(), w_J(H, J, a, b, p.h));
                T c = wtilde_J(J, a, b, p.h) * basechange_factor(J, b, p.h);
                rhs += omega_at(N, J.entries(), b, p.h).scaled(c);
            }
            return std::pair{lhs, rhs.scaled(sign_t<T>(long(ell) * (ell - 1) / 2))};
        },
        {sig.n, ell}, cfg, 11);
    return res;
}

CheckResult check_coeffprove2(const HTable& H, const EqConfig& cfg)
{
    CheckResult res;
    int N = H.N(), m = H.m(), ell = H.ell();
    auto sig = Signature::singlet(N, m);
    auto J = eps_max(sig);
    expect_holds(
        res, "coeffprove2",
        [&](const auto& p) {
            using T = scalar_of<decltype(p)>;
            const auto &b = p.lev[0], &a = p.lev[1];
            T c = sign_t<T>(long(ell) * (ell - 1) / 2);
            for (int r = 1; r < N; ++r) {
                const auto& K = J.K(r);
                for (size_t i = 0; i < K.size(); ++i)
                    for (size_t j = i + 1; j < K.size(); ++j) {
                        const T &ba = b[size_t(K[i] - 1)], &bb = b[size_t(K[j] - 1)];
                        c = c * (bb - ba - p.h) * (ba - bb - p.h) / (ba - bb);
                    }
            }
            return std::pair{w_J(H, J, a, b, p.h), c * wtilde_J(J, a, b, p.h)};
        },
        {sig.n, ell}, cfg, 12);
    return res;
}

CheckResult check_wrel1(const HTable& H, const EqConfig& cfg)
{
    CheckResult res;
    int N = H.N(), m = H.m(), ell = H.ell();
    auto sig = Signature::singlet(N, m);
    unsigned salt = 0;
    for (auto& J : enumerate(sig))
        for (int k = 1; k < sig.n; ++k) {
            auto Js = J.swapped(k);
            expect_holds(
                res, "wrel1 " + J.str() + " k=" + std::to_string(k),
                [&](const auto& p) {
                    using T = scalar_of<decltype(p)>;
                    const auto &b = p.lev[0], &a = p.lev[1];
                    auto bs = b;
                    std::swap(bs[size_t(k - 1)], bs[size_t(k)]);
                    T x = b[size_t(k - 1)] - b[size_t(k)];
                    T lhs = w_J(H, Js, a, bs, p.h);
                    T rhs = (x * w_J(H, J, a, b, p.h) + p.h * w_J(H, Js, a, b, p.h)) / (x + p.h);
                    return std::pair{lhs, rhs};
                },
                {sig.n, ell}, cfg, ++salt);
        }
    return res;
}

CheckResult check_wrel2(const HTable& H, const EqConfig& cfg)
{
    CheckResult res;
    int N = H.N(), m = H.m(), ell = H.ell();
    auto sig = Signature::singlet(N, m);
    int n = sig.n;
    unsigned salt = 0;
    for (auto& J : enumerate(sig)) {
        auto e = J.entries();
        std::vector<int> re{e.back()};
        re.insert(re.end(), e.begin(), e.end() - 1);
        IndexVector R(N, re);
        expect_holds(
            res, "wrel2 " + J.str(),
            [&](const auto& pt) {
                using T = scalar_of<decltype(pt)>;
                const auto &b = pt.lev[0], &a = pt.lev[1];
                T p = T(N) * pt.h;
                std::vector<T> br{b[size_t(n - 1)] + p};
                br.insert(br.end(), b.begin(), b.end() - 1);
                auto twisted = [&](const std::vector<T>& x) {
                    T v = w_term(H, R, x, br, pt.h);
                    for (auto& xa : x) v = v * (xa - b[size_t(n - 1)] - p) / (xa - b[size_t(n - 1)] - pt.h - p);
                    return v;
                };
                if (e.back() == 0) return std::pair{twisted(a), w_term(H, J, a, b, pt.h)};
                auto as = a;
                as[0] = a[0] + p;
                T lhs = twisted(as);
                for (auto& bj : b) lhs = lhs * (a[0] - bj - pt.h) / (a[0] - bj);
                std::vector<T> rot(a.begin() + 1, a.end());
                rot.push_back(a[0]);
                return std::pair{lhs, sign_t<T>(ell - 1) * w_term(H, J, rot, b, pt.h)};
            },
            {n, ell}, cfg, ++salt);
    }
    return res;
}

CheckResult check_hw11(int N, int m, const EqConfig& cfg)
{
    CheckResult res;
    auto sig = Signature::singlet(N, m);
    std::vector<int> sizes{sig.n};
    for (int k = 1; k < N; ++k) sizes.push_back(sig.nu_at(k));
    unsigned salt = 0;
    for (int k = 1; k < N; ++k) {
        if (!valid_lowering(sig, k)) continue;
        for (auto& Jp : enumerate(lowered(sig, k))) {
            expect_holds(
                res, "hw11 k=" + std::to_string(k) + " " + Jp.str(),
                [&](const auto& pt) {
                    using T = scalar_of<decltype(pt)>;
                    const T& h = pt.h;
                    T lhs(0);
                    for (int j = 1; j <= sig.n; ++j)
                        if (Jp[j] == k - 1) lhs += wN_J(Jp.plus_e(j), pt.lev, h);
                    lhs *= h;
                    T rhs = skew_levels(pt.lev, 1, [&](const std::vector<std::vector<T>>& c) {
                        T v(1);
                        for (int i = 1; i < N; ++i)
                            if (i != k && i != k + 1) v *= g_K(c[size_t(i)], c[size_t(i - 1)], Jp.M(i), h);
                        const auto& mid = c[size_t(k)];
                        const auto& low = c[size_t(k - 1)];
                        std::vector<T> rest(mid.begin() + 1, mid.end());
                        v *= g_K(rest, low, Jp.M(k), h);
                        std::vector<T> up;
                        if (k + 1 < N) {
                            up = c[size_t(k + 1)];
                            v *= g_K(up, rest, Jp.M(k + 1), h);
                        }
                        const T& a1 = mid[0];
                        T t1(1), t2(1);
                        for (auto& x : rest) t1 *= a1 - x - h;
                        for (auto& g : up) t1 = t1 * (g - a1 - h) / (g - a1);
                        for (auto& y : low) t2 = t2 * (a1 - y - h) / (a1 - y);
                        for (auto& x : rest) t2 *= a1 - x + h;
                        return v * (t1 - t2);
                    });
                    return std::pair{lhs, rhs};
                },
                sizes, cfg, ++salt);
        }
    }
    return res;
}

CheckResult check_FMhweq(const HTable& H, const EqConfig& cfg)
{
    CheckResult res;
    int N = H.N(), m = H.m(), ell = H.ell();
    auto sig = Signature::singlet(N, m);
    unsigned salt = 0;
    for (auto& Jp : enumerate(lowered(sig, 1))) {
        Letters e{0};
        for (int x : Jp.bar_entries()) e.push_back(x);
        expect_holds(
            res, "FMhweq " + Jp.str(),
            [&](const auto& pt) {
                using T = scalar_of<decltype(pt)>;
                const T& h = pt.h;
                const auto &b = pt.lev[0], &a = pt.lev[1];
                T lhs(0);
                for (int j = 1; j <= sig.n; ++j)
                    if (Jp[j] == 0) lhs += w_J(H, Jp.plus_e(j), a, b, h);
                lhs *= h;
                T rhs = skew_eval(a, [&](const std::vector<T>& x) {
                    std::vector<T> rest(x.begin() + 1, x.end());
                    T v = g_K(rest, b, Jp.M(1), h);
                    T t1 = H.H_eval(e, x, h), t2(1);
                    for (auto& y : rest) t1 *= x[0] - y - h;
                    auto xs = x;
                    xs[0] = x[0] + T(N) * h;
                    t2 = H.H_eval(e, xs, h);
                    for (auto& y : b) t2 = t2 * (x[0] - y - h) / (x[0] - y);
                    for (auto& y : rest) t2 *= x[0] - y + T(N - 1) * h;
                    return v * (t1 - t2);
                });
                return std::pair{lhs, rhs};
            },
            {sig.n, ell}, cfg, ++salt);
    }
    return res;
}

CheckResult check_FMhwcond(const HTable& H, const EqConfig& cfg)
{
    CheckResult res;
    int N = H.N(), m = H.m(), ell = H.ell();
    auto sig = Signature::singlet(N, m);
    unsigned salt = 0;
    for (int k = 2; k < N; ++k)
        for (auto& Jp : enumerate(lowered(sig, k)))
            expect_holds(
                res, "FMhwcond k=" + std::to_string(k) + " " + Jp.str(),
                [&](const auto& pt) {
                    using T = scalar_of<decltype(pt)>;
                    T s(0);
                    for (int j = 1; j <= sig.n; ++j)
                        if (Jp[j] == k - 1) s += w_J(H, Jp.plus_e(j), pt.lev[1], pt.lev[0], pt.h);
                    return std::pair{s, T(0)};
                },
                {sig.n, ell}, cfg, ++salt);
    if (N == 2) res.ok();
    return res;
}

namespace {

template <class T>
T L0_at(const IndexVector& J, const T& x, const std::vector<T>& b, const T& h)
{
    T v(1);
    for (int k : J.K(0)) v *= x - b[size_t(k - 1)] - T(J.N()) * h;
    return v;
}

template <class T>
T DL0(const IndexVector& J, const T& x, const std::vector<T>& b, const T& h)
{
    return apply_D([&](const T& y) { return L0_at(J, y, b, h); }, x, b, h, J.N());
}

}  // namespace

CheckResult check_DLformula(int N, int m, const EqConfig& cfg)
{
    CheckResult res;
    auto sig = Signature::singlet(N, m);
    unsigned salt = 0;
    for (auto& J : enumerate(sig))
        expect_holds(
            res, "DLformula " + J.str(),
            [&](const auto& pt) {
                using T = scalar_of<decltype(pt)>;
                const auto& b = pt.lev[0];
                const T &x = pt.lev[1][0], &h = pt.h;
                T rhs(0);
                for (int r = 1; r < N; ++r)
                    for (int k : J.K(r)) {
                        const T& bk = b[size_t(k - 1)];
                        T c(1);
                        for (int j : J.K(0)) c *= bk - b[size_t(j - 1)] - T(r) * h;
                        for (int j : J.K(r))
                            if (j != k) c = c * (bk - b[size_t(j - 1)] - h) / (bk - b[size_t(j - 1)]);
                        rhs += c * mu(J, k, x, b, h);
                    }
                return std::pair{DL0(J, x, b, h), h * rhs};
            },
            {sig.n, 1}, cfg, ++salt);
    return res;
}

CheckResult check_Q(int N, int m, const EqConfig& cfg)
{
    CheckResult res;
    auto sig = Signature::singlet(N, m);
    int ell = (N - 1) * m;
    unsigned salt = 0;
    for (auto& J : enumerate(sig))
        for (int a = 1; a <= sig.n; ++a) {
            if (J[a] == 0) continue;
            expect_holds(
                res, "Q " + J.str() + " a=" + std::to_string(a),
                [&](const auto& pt) {
                    using T = scalar_of<decltype(pt)>;
                    const auto& b = pt.lev[0];
                    const T &x = pt.lev[1][0], &h = pt.h;
                    T Nh = T(N) * h;
                    auto Pi = [&](const T& y) {
                        T v(1);
                        for (int j = 1; j <= sig.n; ++j)
                            if (j != a) v *= y - b[size_t(j - 1)] - Nh;
                        return v;
                    };
                    T lhs = apply_D(Pi, x, b, h, N);
                    T ba = b[size_t(a - 1)] + Nh, pw(1);
                    for (int k = 1; k <= ell - 1; ++k) {
                        lhs -= pw * Q_poly(J, k, b, h).eval(x);
                        pw *= ba;
                    }
                    lhs = lhs / h;
                    T rhs(0);
                    for (int c = 1; c <= sig.n; ++c)
                        if (J[c] >= J[a]) {
                            T q = Q_coeff(J, a, c, b, h);
                            if (!scalar_is_zero(q)) rhs += q * mu(J, c, x, b, h);
                        }
                    return std::pair{lhs, rhs};
                },
                {sig.n, 1}, cfg, ++salt);
        }
    return res;
}

CheckResult check_Qell_zero(int N, int m, const EqConfig& cfg)
{
    CheckResult res;
    auto sig = Signature::singlet(N, m);
    int ell = (N - 1) * m;
    unsigned salt = 0;
    for (auto& J : enumerate(sig))
        expect_holds(
            res, "Qell " + J.str(),
            [&](const auto& pt) {
                using T = scalar_of<decltype(pt)>;
                return std::pair{Q_poly(J, ell, pt.lev[0], pt.h).eval(pt.lev[1][0]), T(0)};
            },
            {sig.n, 1}, cfg, ++salt);
    return res;
}

CheckResult check_ratclaim1(int m, int r, const EqConfig& cfg)
{
    CheckResult res;
    expect_holds(
        res, "ratclaim1 m=" + std::to_string(m) + " r=" + std::to_string(r),
        [&](const auto& pt) {
            using T = scalar_of<decltype(pt)>;
            const auto& y = pt.lev[0];
            const T &x = pt.lev[1][0], &h = pt.h;
            auto I = [&](int s) {
                std::vector<int> v;
                for (int i = 0; i < m; ++i) v.push_back(s * m + i);
                return v;
            };
            T lhs(0);
            for (int s = 1; s <= r; ++s) {
                T pre(1);
                for (int j : I(s)) pre *= x - y[size_t(j)] - h;
                for (int t = s + 1; t <= r; ++t)
                    for (int j : I(t)) pre = pre * (x - y[size_t(j)] - h) / (x - y[size_t(j)]);
                T inner(0);
                for (int k : I(s)) {
                    const T& yk = y[size_t(k)];
                    T t(1);
                    for (int j : I(0)) t *= yk - y[size_t(j)] - T(s) * h;
                    t = t / ((x - yk - h) * (x - yk));
                    for (int j : I(s))
                        if (j != k) t = t / (yk - y[size_t(j)]);
                    inner += t;
                }
                lhs += h * pre * inner;
            }
            T last(1);
            for (int t = 0; t <= r; ++t)
                for (int j : I(t)) last *= x - y[size_t(j)] - h;
            for (int t = 1; t <= r; ++t)
                for (int j : I(t)) last = last / (x - y[size_t(j)]);
            lhs += last;
            T rhs(1);
            for (int j : I(0)) rhs *= x - y[size_t(j)] - T(r + 1) * h;
            return std::pair{lhs, rhs};
        },
        {(r + 1) * m, 1}, cfg, unsigned(10 * m + r));
    return res;
}

CheckResult check_ratclaim2(int d, int m, const EqConfig& cfg)
{
    CheckResult res;
    expect_holds(
        res, "ratclaim2 d=" + std::to_string(d) + " m=" + std::to_string(m),
        [&](const auto& pt) {
            using T = scalar_of<decltype(pt)>;
            const auto& y = pt.lev[0];
            const T &x = pt.lev[1][0], &h = pt.h;
            auto grp = [&](int j) { return j / m; };
            int n = (d + 1) * m;
            const int a = 0;
            const T& ya = y[size_t(a)];
            // prod_{t<s}(y_a - y_j - h) prod_{t>s}(y_a - y_j)
            auto mixed = [&](int s) {
                T v(1);
                for (int j = 0; j < n; ++j) {
                    if (grp(j) < s) v *= ya - y[size_t(j)] - h;
                    else if (grp(j) > s) v *= ya - y[size_t(j)];
                }
                return v;
            };
            T lhs(0);
            for (int s = 0; s <= d; ++s) {
                T t = mixed(s);
                for (int j = 0; j < n; ++j)
                    if (grp(j) == s) t *= x - y[size_t(j)] - T(d + 1 - s) * h;
                t = t / ((x - ya - T(d - s) * h) * (x - ya - T(d + 1 - s) * h));
                lhs += t;
            }
            T first = T(1) / (x - ya);
            for (int j = 0; j < n; ++j) {
                if (j == a) continue;
                if (grp(j) == 0) first *= x - y[size_t(j)] - h;
                else first = first * (ya - y[size_t(j)]) * (x - y[size_t(j)] - h) / (x - y[size_t(j)]);
            }
            T rhs = first;
            for (int q = 1; q <= d; ++q)
                for (int k = q * m; k < (q + 1) * m; ++k) {
                    const T& yk = y[size_t(k)];
                    T t = T(1) / (x - yk);
                    for (int j = q * m; j < (q + 1) * m; ++j)
                        if (j != k) t = t * (x - y[size_t(j)] - h) / (yk - y[size_t(j)]);
                    for (int j = 0; j < n; ++j)
                        if (grp(j) > q) t = t * (x - y[size_t(j)] - h) / (x - y[size_t(j)]);
                    T inner(0);
                    for (int s = 0; s < q; ++s) {
                        T u = mixed(s);
                        for (int j = s * m; j < (s + 1) * m; ++j) u *= yk - y[size_t(j)] - T(q - s) * h;
                        u = u / ((yk - ya - T(q - s - 1) * h) * (yk - ya - T(q - s) * h));
                        inner += u;
                    }
                    rhs += h * t * inner;
                }
            return std::pair{lhs, rhs};
        },
        {(d + 1) * m, 1}, cfg, unsigned(10 * d + m));
    return res;
}

CheckResult check_puttedD(int N, int m, const EqConfig& cfg)
{
    CheckResult res;
    auto sig = Signature::singlet(N, m);
    int ell = (N - 1) * m;
    unsigned salt = 0;
    for (auto& J : enumerate(sig))
        expect_holds(
            res, "puttedD " + J.str(),
            [&](const auto& pt) {
                using T = scalar_of<decltype(pt)>;
                const auto &b = pt.lev[0], &a = pt.lev[1];
                const T& h = pt.h;
                auto ord = mu_order(J);
                int k1m = J.K(1).back();
                const T& bk = b[size_t(k1m - 1)];
                T pref = T(1) / h;
                for (int j : J.K(0)) pref = pref / (bk - b[size_t(j - 1)] - h);
                for (int j : J.K(1))
                    if (j != k1m) pref = pref * (bk - b[size_t(j - 1)]) / (bk - b[size_t(j - 1)] - h);
                T rhs = skew_eval(a, [&](const std::vector<T>& x) {
                    T v = DL0(J, x[size_t(ell - 1)], b, h);
                    for (int i = 0; i + 1 < ell; ++i) v *= mu(J, ord[size_t(i)], x[size_t(i)], b, h);
                    return v;
                });
                return std::pair{wtilde_J(J, a, b, h), pref * rhs};
            },
            {sig.n, ell}, cfg, ++salt);
    return res;
}

CheckResult check_mu_to_Q(int N, int m, const EqConfig& cfg)
{
    CheckResult res;
    auto sig = Signature::singlet(N, m);
    int ell = (N - 1) * m;
    auto Js = enumerate(sig);
    // assembled / stated prefactor of omega_J
    auto ratio = [&](const IndexVector& J, const auto& pt) {
        using T = scalar_of<decltype(pt)>;
        const auto& b = pt.lev[0];
        const T& h = pt.h;
        auto B = [&](int j) -> const T& { return b[size_t(j - 1)]; };
        auto ord = mu_order(J);
        ord.pop_back();
        int k1m = J.K(1).back();
        T A = sign_t<T>(long(ell) * (ell - 1) / 2) * basechange_factor(J, b, h) / h;
        for (int j : J.K(0)) A = A / (B(k1m) - B(j) - h);
        for (int j : J.K(1))
            if (j != k1m) A = A * (B(k1m) - B(j)) / (B(k1m) - B(j) - h);
        int s = int(ord.size());
        std::vector<std::vector<T>> V{size_t(s), std::vector<T>(size_t(s), T(0))};
        auto C = V;
        for (int i = 0; i < s; ++i) {
            T pw(1);
            for (int k = 0; k < s; ++k) {
                V[size_t(i)][size_t(k)] = pw;
                pw *= B(ord[size_t(i)]) + T(N) * h;
            }
            for (int k = 0; k < s; ++k) C[size_t(i)][size_t(k)] = Q_coeff(J, ord[size_t(i)], ord[size_t(k)], b, h);
        }
        A = A * det(V) / det(C);
        for (int i = 0; i < s; ++i) A = A / (-h);
        T stated = sign_t<T>(long(N) * m * (m + 1) / 2 + long(m) * m);
        for (int r = 0; r < N; ++r)
            for (int t = r + 1; t < N; ++t)
                for (int x : J.K(r))
                    for (int y : J.K(t)) stated = stated / (B(x) - B(y));
        return A / stated;
    };
    unsigned salt = 0;
    for (auto& J : Js)
        expect_holds(
            res, "mu_to_Q " + J.str(),
            [&](const auto& pt) {
                using T = scalar_of<decltype(pt)>;
                T k = sign_t<T>(1 + long(N) * m * (m + 1) / 2 + long(m) * m);
                for (int i = 0; i < ell; ++i) k = k / pt.h;
                return std::pair{ratio(J, pt), k};
            },
            {sig.n}, cfg, ++salt);
    if (ell < 2) return res;
    // det[mu_{b_i}(alpha_j)] = hbar^{1-l} det(C)^{-1} det[(D Pi_{b_i})(alpha_j) - sum_k V_ik Q^(k)(alpha_j)]
    for (auto& J : Js)
        expect_holds(
            res, "mu_to_Q det " + J.str(),
            [&](const auto& pt) {
                using T = scalar_of<decltype(pt)>;
                const auto &b = pt.lev[0], &a = pt.lev[1];
                const T& h = pt.h;
                T Nh = T(N) * h;
                auto ord = mu_order(J);
                ord.pop_back();
                size_t s = ord.size();
                std::vector<UPoly<T>> Q;
                for (int k = 1; k <= ell - 1; ++k) Q.push_back(Q_poly(J, k, b, h));
                std::vector<std::vector<T>> M{s, std::vector<T>(s, T(0))};
                auto C = M, R = M;
                for (size_t i = 0; i < s; ++i) {
                    int ai = ord[i];
                    for (size_t k = 0; k < s; ++k) C[i][k] = Q_coeff(J, ai, ord[k], b, h);
                    for (size_t j = 0; j < s; ++j) {
                        M[i][j] = mu(J, ai, a[j], b, h);
                        auto Pi = [&](const T& y) {
                            T v(1);
                            for (int q = 1; q <= sig.n; ++q)
                                if (q != ai) v *= y - b[size_t(q - 1)] - Nh;
                            return v;
                        };
                        T v = apply_D(Pi, a[j], b, h, N), pw(1);
                        for (auto& q : Q) {
                            v -= pw * q.eval(a[j]);
                            pw *= b[size_t(ai - 1)] + Nh;
                        }
                        R[i][j] = v;
                    }
                }
                T rhs = det(R) / det(C);
                for (size_t i = 0; i < s; ++i) rhs = rhs / h;
                return std::pair{det(M), rhs};
            },
            {sig.n, ell - 1}, cfg, ++salt);
    return res;
}

}  // namespace qkz
