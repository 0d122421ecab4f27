#include "qkz/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace qkz {

namespace {

constexpr double pi = std::numbers::pi;
const cplx I(0, 1);

// B_2 .. B_24
constexpr std::array<double, 12> bern{1.0 / 6,        -1.0 / 30,           1.0 / 42,         -1.0 / 30,
                                      5.0 / 66,       -691.0 / 2730,       7.0 / 6,          -3617.0 / 510,
                                      43867.0 / 798,  -174611.0 / 330,     854513.0 / 138,   -236364091.0 / 2730};

constexpr std::array<double, 14> lanczos{
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,     -0.491913816097620199,
    .339946499848118887e-4,  .465236289270485756e-4,  -.983744753048795646e-4, .158088703224912494e-3,
    -.210264441724104883e-3, .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};

bool near_pole(cplx z)
{
    if (z.real() > 0.5) return false;
    double r = std::round(z.real());
    return std::abs(z - r) < 1e-14 * std::max(1.0, std::abs(r));
}

cplx lanczos_log(cplx z)
{
    cplx y = z, t = z + 5.24218750000000000;
    t = (z + 0.5) * std::log(t) - t;
    cplx ser = 0.999999999999997092;
    for (double c : lanczos) ser += c / (y += 1.0);
    return t + std::log(2.5066282746310005 * ser / z);
}

double factorial(int k)
{
    double f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

double bernoulli(int k)
{
    if (k == 0) return 1;
    if (k == 1) return -0.5;
    if (k % 2) return 0;
    return bern[size_t(k / 2 - 1)];
}

cplx bernoulli_poly(int k, cplx x)
{
    cplx s = 0, xp = 1;
    double binom = 1;
    for (int j = k; j >= 0; --j) {
        // term C(k, j) B_j x^{k-j}
        s += binom * bernoulli(j) * xp;
        xp *= x;
        binom = binom * j / (k - j + 1);
    }
    return s;
}

// Forward-mode derivative in s.
struct Dual {
    cplx v, d;
};
Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.d + b.d}; }
Dual operator-(Dual a, Dual b) { return {a.v - b.v, a.d - b.d}; }
Dual operator*(Dual a, Dual b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
Dual operator*(cplx c, Dual a) { return {c * a.v, c * a.d}; }
Dual operator/(Dual a, Dual b) { return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)}; }
// x^{-s} for constant x
Dual pow_neg(cplx x, Dual s)
{
    cplx L = std::log(x), e = std::exp(-s.v * L);
    return {e, -L * e * s.d};
}

}  // namespace

cplx finite_or_throw(cplx z, const char* what)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw NumericError(std::string(what) + ": non-finite value");
    return z;
}

cplx log_gamma(cplx z)
{
    if (near_pole(z)) throw NumericError("log_gamma: pole of Gamma");
    if (z.real() >= 0.5) return finite_or_throw(lanczos_log(z), "log_gamma");
    // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
    return finite_or_throw(std::log(pi / std::sin(pi * z)) - lanczos_log(1.0 - z), "log_gamma");
}

cplx gamma_fn(cplx z)
{
    return finite_or_throw(std::exp(log_gamma(z)), "gamma");
}

cplx rgamma(cplx z)
{
    if (near_pole(z)) return 0;
    return std::exp(-log_gamma(z));
}

cplx log_gamma_ratio(cplx z, cplx a)
{
    if (std::abs(z) < 60 || std::abs(a) > 4 || (z.real() < 0 && std::abs(z.imag()) < 60))
        return log_gamma(z + a) - log_gamma(z);
    cplx s = a * std::log(z), zi = 1.0 / z, zk = zi;
    for (int k = 1; k <= 12; ++k) {
        double sg = k % 2 ? 1 : -1;
        s += sg * (bernoulli_poly(k + 1, a) - bernoulli(k + 1)) / double(k * (k + 1)) * zk;
        zk *= zi;
    }
    return finite_or_throw(s, "log_gamma_ratio");
}

std::pair<cplx, cplx> hurwitz_zeta_ds(cplx s0, cplx a)
{
    Dual s{s0, 1};
    int K = 30 + int(std::ceil(std::abs(a)));
    Dual sum{0, 0};
    for (int k = 0; k < K; ++k) {
        cplx x = double(k) + a;
        if (std::abs(x) == 0) throw NumericError("hurwitz_zeta: a is a non-positive integer");
        sum = sum + pow_neg(x, s);
    }
    cplx x = double(K) + a;
    Dual one{1, 0};
    sum = sum + pow_neg(x, s - one) / (s - one);
    sum = sum + 0.5 * pow_neg(x, s);
    // B_{2j}/(2j)! s(s+1)..(s+2j-2) x^{-s-2j+1}
    Dual rising = s;
    Dual last{0, 0};
    for (int j = 1; j <= int(bern.size()); ++j) {
        Dual shift{double(2 * j - 1), 0};
        last = (bern[size_t(j - 1)] / factorial(2 * j)) * (rising * pow_neg(x, s + shift));
        sum = sum + last;
        rising = rising * (s + Dual{double(2 * j - 1), 0}) * (s + Dual{double(2 * j), 0});
    }
    double scale = std::max({std::abs(sum.v), std::abs(sum.d), 1.0});
    if (std::abs(last.v) + std::abs(last.d) > 1e-14 * scale)
        throw NumericError("hurwitz_zeta: Euler-Maclaurin did not converge");
    return {finite_or_throw(sum.v, "hurwitz_zeta"), finite_or_throw(sum.d, "hurwitz_zeta")};
}

cplx hurwitz_zeta(cplx s, cplx a)
{
    return hurwitz_zeta_ds(s, a).first;
}

cplx log_gamma1(cplx x, double w)
{
    return (x / w - 0.5) * std::log(w) - 0.5 * std::log(2 * pi) + log_gamma(x / w);
}

cplx log_gamma2(cplx x)
{
    cplx u = x / (2 * pi);
    auto [z1, d1] = hurwitz_zeta_ds(-1.0, u);
    auto [z0, d0] = hurwitz_zeta_ds(0.0, u);
    cplx Z = z1 + (1.0 - u) * z0, dZ = d1 + (1.0 - u) * d0;
    return dZ - std::log(2 * pi) * Z;
}

cplx zeta_fn(cplx beta, int N)
{
    auto pole = [](cplx x) {
        double k = std::round(-x.real() / (2 * pi));
        return k >= 0 && std::abs(x + 2 * pi * k) < 1e-12;
    };
    cplx n1 = -I * beta + 2.0 * (2 * N - 1) * pi / N, n2 = I * beta + 2.0 * (N - 1) * pi / N;
    cplx d1 = -I * beta + 2 * pi, d2 = I * beta;
    if (pole(n1) || pole(n2)) throw NumericError("zeta_fn: pole");
    if (pole(d1) || pole(d2)) return 0;
    return finite_or_throw(std::exp(log_gamma2(n1) + log_gamma2(n2) - log_gamma2(d1) - log_gamma2(d2)), "zeta_fn");
}

cplx s0_eval(cplx beta, int N)
{
    cplx x = beta / (2 * pi * I), c = double(N - 1) / N;
    cplx den = rgamma(c - x) * rgamma(x);
    if (near_pole(c + x) || near_pole(-x)) {
        if (den == 0.0) throw NumericError("s0_eval: 0/0 at a pole");
        throw NumericError("s0_eval: pole");
    }
    return finite_or_throw(gamma_fn(c + x) * gamma_fn(-x) * den, "s0_eval");
}

}  // namespace qkz
