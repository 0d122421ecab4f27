#pragma once

// Weight functions, Smirnov's basis and the difference-operator families,
// written once over a generic scalar T (QRat, Rat or std::complex<double>).

#include "qkz/hfun.hpp"
#include "qkz/index.hpp"
#include "qkz/tensor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace qkz {

template <class F>
void for_each_perm(int n, F&& f)
{
    std::vector<int> p(size_t(std::max(n, 0)));
    std::iota(p.begin(), p.end(), 0);
    do {
        int s = 1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (p[i] > p[j]) s = -s;
        f(p, s);
    } while (std::next_permutation(p.begin(), p.end()));
}

template <class T>
std::vector<T> permuted(const std::vector<T>& x, const std::vector<int>& p)
{
    std::vector<T> r;
    r.reserve(p.size());
    for (int i : p) r.push_back(x[size_t(i)]);
    return r;
}

// Skew over one variable group: sum_sigma sgn(sigma) f(x_sigma).
template <class T, class F>
T skew_eval(const std::vector<T>& x, F&& f)
{
    T sum(0);
    for_each_perm(int(x.size()), [&](const std::vector<int>& p, int s) {
        T t = f(permuted(x, p));
        if (s > 0) sum += t;
        else sum -= t;
    });
    return sum;
}

// Skew over every group lev[from..]: term receives the permuted groups.
template <class T, class F>
T skew_levels(const std::vector<std::vector<T>>& lev, int from, F&& term)
{
    T sum(0);
    std::vector<std::vector<T>> cur(lev);
    std::function<void(size_t, int)> rec = [&](size_t k, int sign) {
        if (k == lev.size()) {
            T t = term(cur);
            if (sign > 0) sum += t;
            else sum -= t;
            return;
        }
        for_each_perm(int(lev[k].size()), [&](const std::vector<int>& p, int s) {
            cur[k] = permuted(lev[k], p);
            rec(k + 1, sign * s);
        });
        cur[k] = lev[k];
    };
    rec(size_t(from), 1);
    return sum;
}

template <class T>
T sign_t(long e)
{
    return (e % 2 == 0) ? T(1) : T(-1);
}

// 1/(t - z_k) prod_{j<k} (t - z_j - h)/(t - z_j), k 1-based.
template <class T>
T site_factor(const T& t, const std::vector<T>& z, int k, const T& h)
{
    T v = T(1) / (t - z[size_t(k - 1)]);
    for (int j = 0; j < k - 1; ++j) v = v * (t - z[size_t(j)] - h) / (t - z[size_t(j)]);
    return v;
}

template <class T>
T g_K(const std::vector<T>& t, const std::vector<T>& z, const std::vector<int>& K, const T& h)
{
    T v(1);
    for (size_t a = 0; a < t.size(); ++a) v *= site_factor(t[a], z, K[a], h);
    for (size_t a = 0; a < t.size(); ++a)
        for (size_t b = a + 1; b < t.size(); ++b) v *= t[a] - t[b] - h;
    return v;
}

// g_{M_1^J}(alpha|beta) H_{Jbar}(alpha) before skew-symmetrization.
template <class T>
T w_term(const HTable& H, const IndexVector& J, const std::vector<T>& alpha, const std::vector<T>& beta, const T& h)
{
    const auto& M = J.M(1);
    T v = H.G_eval(J.bar_entries(), alpha, h);
    if (scalar_is_zero(v)) return v;
    for (size_t a = 0; a < alpha.size(); ++a) v *= site_factor(alpha[a], beta, M[a], h);
    return v;
}

template <class T>
T w_J(const HTable& H, const IndexVector& J, const std::vector<T>& alpha, const std::vector<T>& beta, const T& h)
{
    return skew_eval(alpha, [&](const std::vector<T>& a) { return w_term(H, J, a, beta, h); });
}

// Nested weight function w_J^{(N)}; lev[0] = beta, lev[k] = gamma_{k,*}.
template <class T>
T wN_J(const IndexVector& J, const std::vector<std::vector<T>>& lev, const T& h)
{
    return skew_levels(lev, 1, [&](const std::vector<std::vector<T>>& c) {
        T v(1);
        for (size_t k = 1; k < c.size(); ++k) v *= g_K(c[k], c[k - 1], J.M(int(k)), h);
        return v;
    });
}

template <class T>
T mu(const IndexVector& J, int a, const T& x, const std::vector<T>& beta, const T& h)
{
    int r = J[a];
    T v = T(1) / (x - beta[size_t(a - 1)]);
    for (int k = 1; k <= J.n(); ++k) {
        if (k == a) continue;
        const T& bk = beta[size_t(k - 1)];
        if (J[k] == r) v = v * (x - bk - h) / (beta[size_t(a - 1)] - bk - h);
        else if (J[k] > r) v = v * (x - bk - h) / (x - bk);
    }
    return v;
}

// Sites in the order the alphas are attached in wtilde: K_{N-1}, ..., K_1.
inline std::vector<int> mu_order(const IndexVector& J)
{
    std::vector<int> b;
    for (int r = J.N() - 1; r >= 1; --r)
        for (int k : J.K(r)) b.push_back(k);
    return b;
}

template <class T>
T wtilde_J(const IndexVector& J, const std::vector<T>& alpha, const std::vector<T>& beta, const T& h)
{
    auto b = mu_order(J);
    return skew_eval(alpha, [&](const std::vector<T>& a) {
        T v(1);
        for (size_t i = 0; i < a.size(); ++i) v *= mu(J, b[i], a[i], beta, h);
        return v;
    });
}

// Scalar prefactor of wtilde_J omega_J in the change of basis.
template <class T>
T basechange_factor(const IndexVector& J, const std::vector<T>& beta, const T& h)
{
    T v(1);
    auto B = [&](int j) -> const T& { return beta[size_t(j - 1)]; };
    for (int r = 1; r < J.N(); ++r) {
        const auto& K = J.K(r);
        for (size_t i = 0; i < K.size(); ++i)
            for (size_t j = i + 1; j < K.size(); ++j) {
                int a = K[i], b = K[j];
                v = v * (B(b) - B(a) - h) * (B(a) - B(b) - h) / (B(a) - B(b));
            }
    }
    for (int s = 1; s < J.N(); ++s)
        for (int r = 0; r < s; ++r)
            for (int a : J.K(s))
                for (int b : J.K(r)) v = v * (B(a) - B(b) - h) / (B(a) - B(b));
    return v;
}

// Smirnov's basis vector omega_eps(x), obtained from v_{sorted eps} by the
// exchange relation. pick selects which descent is unwound first.
template <class T>
TensorVector<T> omega_at(int N, const std::vector<int>& eps, const std::vector<T>& x, const T& h, size_t pick = 0)
{
    std::vector<size_t> d;
    for (size_t j = 0; j + 1 < eps.size(); ++j)
        if (eps[j] > eps[j + 1]) d.push_back(j);
    if (d.empty()) return TensorVector<T>::basis(N, eps);
    size_t j = d[std::min(pick, d.size() - 1)];
    auto e2 = eps;
    std::swap(e2[j], e2[j + 1]);
    auto x2 = x;
    std::swap(x2[j], x2[j + 1]);
    int i = int(j) + 1;
    return omega_at(N, e2, x2, h).apply_R(i, i + 1, x[j + 1] - x[j], h).apply_P(i, i + 1);
}

// (Df)(x) = f(x) - f(x + N h) prod_j (x - beta_j - h)/(x - beta_j).
template <class T, class F>
T apply_D(F&& f, const T& x, const std::vector<T>& beta, const T& h, int N)
{
    T s = f(x + T(N) * h);
    for (auto& b : beta) s = s * (x - b - h) / (x - b);
    return f(x) - s;
}

// Dense univariate polynomial in alpha over T, lowest degree first.
template <class T>
struct UPoly {
    std::vector<T> c;

    static UPoly constant(const T& v) { return UPoly{{v}}; }
    static UPoly linear(const T& root)  // alpha - root
    {
        return UPoly{{-root, T(1)}};
    }
    int deg() const
    {
        for (int i = int(c.size()) - 1; i >= 0; --i)
            if (!scalar_is_zero(c[size_t(i)])) return i;
        return -1;
    }
    bool is_zero() const { return deg() < 0; }
    friend UPoly operator*(const UPoly& a, const UPoly& b)
    {
        if (a.c.empty() || b.c.empty()) return UPoly{};
        UPoly r{std::vector<T>(a.c.size() + b.c.size() - 1, T(0))};
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        return r;
    }
    friend UPoly operator+(const UPoly& a, const UPoly& b)
    {
        UPoly r{std::vector<T>(std::max(a.c.size(), b.c.size()), T(0))};
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
        return r;
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b)
    {
        UPoly r{std::vector<T>(std::max(a.c.size(), b.c.size()), T(0))};
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
        return r;
    }
    // p(alpha + s)
    UPoly shift(const T& s) const
    {
        UPoly r{std::vector<T>(c.size(), T(0))};
        for (size_t i = 0; i < c.size(); ++i) {
            T pw(1);
            for (size_t j = i + 1; j-- > 0;) {
                r.c[j] += T(long(binomial(int(i), int(j)))) * c[i] * pw;
                pw *= s;
            }
        }
        return r;
    }
    T eval(const T& x) const
    {
        T v(0);
        for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
        return v;
    }
};

// [p(alpha) / (alpha + s)^k]_+
template <class T>
UPoly<T> polynomial_part(const UPoly<T>& p, const T& s, int k)
{
    UPoly<T> q = p.shift(-s);
    UPoly<T> r;
    for (size_t i = size_t(k); i < q.c.size(); ++i) r.c.push_back(q.c[i]);
    if (r.c.empty()) return UPoly<T>::constant(T(0));
    return r.shift(s);
}

template <class T>
UPoly<T> T_hbar(const UPoly<T>& p, const T& h)
{
    return p - p.shift(h);
}

// L_J^{(r)}(alpha + s) = prod_{j in K_r} (alpha + s - beta_j - N h).
template <class T>
UPoly<T> L_poly(const IndexVector& J, int r, const std::vector<T>& beta, const T& h, const T& s)
{
    UPoly<T> p = UPoly<T>::constant(T(1));
    for (int j : J.K(r)) p = p * UPoly<T>::linear(beta[size_t(j - 1)] + T(J.N()) * h - s);
    return p;
}

template <class T>
UPoly<T> Q_poly(const IndexVector& J, int k, const std::vector<T>& beta, const T& h)
{
    int N = J.N();
    UPoly<T> Qk = UPoly<T>::constant(T(0));
    for (int r = 0; r < N; ++r) {
        UPoly<T> U = UPoly<T>::constant(T(1));
        for (int s = 0; s < r; ++s) U = U * L_poly(J, s, beta, h, T(r - 1) * h);
        for (int s = r + 1; s < N; ++s) U = U * L_poly(J, s, beta, h, T(r) * h);
        Qk = Qk + L_poly(J, r, beta, h, T(r) * h) * T_hbar(polynomial_part(U, T(r) * h, k), h);
    }
    return Qk;
}

// Coefficient of mu^{(b)} in the expansion of the (Q) left side for the
// site a in K_r, r > 0; zero when b does not occur.
template <class T>
T Q_coeff(const IndexVector& J, int a, int b, const std::vector<T>& beta, const T& h)
{
    auto B = [&](int j) -> const T& { return beta[size_t(j - 1)]; };
    int N = J.N(), r = J[a];
    T v(1);
    if (b == a) {
        for (int j = 1; j <= J.n(); ++j) {
            if (j == a) continue;
            if (J[j] <= r) v *= B(a) - B(j) - h;
            else v *= B(a) - B(j);
        }
        return v;
    }
    int u = J[b] - r;
    if (u < 1 || r + u > N - 1) return T(0);
    for (int j : J.K(r + u))
        if (j != b) v = v * (B(b) - B(j) - h) / (B(b) - B(j));
    T sum(0);
    for (int s = 0; s < u; ++s) {
        T t(1);
        for (int j : J.K(r + s)) t *= B(b) - B(j) - T(u - s) * h;
        for (int j = 1; j <= J.n(); ++j) {
            if (J[j] < r + s) t *= B(a) - B(j) - h;
            else if (J[j] > r + s) t *= B(a) - B(j);
        }
        t = t / ((B(b) - B(a) - T(u - s - 1) * h) * (B(b) - B(a) - T(u - s) * h));
        sum += t;
    }
    return h * v * sum;
}

}  // namespace qkz
