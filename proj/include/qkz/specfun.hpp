#pragma once

#include <complex>
#include <stdexcept>
#include <utility>

namespace qkz {

using cplx = std::complex<double>;

// Poles, NaN/overflow and non-convergence in the numeric layer.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Throws NumericError unless z is finite.
cplx finite_or_throw(cplx z, const char* what);

// exp(log_gamma(z)) = Gamma(z). Lanczos for Re z >= 1/2, reflection below;
// the imaginary part is the continuous branch on Re z >= 1/2 and is only
// meaningful mod 2 pi otherwise.
cplx log_gamma(cplx z);
cplx gamma_fn(cplx z);
cplx rgamma(cplx z);  // 1/Gamma, zero at the poles
// log Gamma(z + a) - log Gamma(z), stable for large |z|.
cplx log_gamma_ratio(cplx z, cplx a);

// Hurwitz zeta and its s-derivative by Euler-Maclaurin, principal powers.
cplx hurwitz_zeta(cplx s, cplx a);
std::pair<cplx, cplx> hurwitz_zeta_ds(cplx s, cplx a);

// Gamma_1(x | w) = w^{x/w - 1/2} Gamma(x/w) / sqrt(2 pi).
cplx log_gamma1(cplx x, double w);
// log Gamma_2(x | 2 pi, 2 pi) = d/ds zeta_2(s, x) at s = 0, the normalization
// in which Gamma_2(x + 2 pi) / Gamma_2(x) = 1 / Gamma_1(x | 2 pi).
cplx log_gamma2(cplx x);

// zeta(beta) built from four Gamma_2 values; zero when a denominator
// Gamma_2 sits on a pole.
cplx zeta_fn(cplx beta, int N);
cplx s0_eval(cplx beta, int N);

}  // namespace qkz
