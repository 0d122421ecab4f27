#pragma once

#include "qkz/check.hpp"
#include "qkz/cycles.hpp"
#include "qkz/hfun.hpp"
#include "qkz/index.hpp"
#include "qkz/specfun.hpp"
#include "qkz/tensor.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qkz {

// Numeric parameters; p = N hbar.
struct NumParams {
    int N = 2, m = 1;
    cplx hbar{0, -0.7};
    std::vector<cplx> beta;  // size N m
    int n() const { return int(beta.size()); }
    cplx p() const { return double(N) * hbar; }
};

// Seeded generic real rapidities in [-1.5, 1.5], pairwise at least 0.2 apart.
std::vector<cplx> generic_beta(int n, unsigned seed);
NumParams default_params(int N, int m, unsigned seed = 20240601u);

// Base line Im alpha = c0 plus a ledger of corrections: analytic residues at
// the poles beta_j + hbar - p k below the line, clockwise circles around the
// poles beta_j + p k above it.
struct ContourSpec {
    double c0 = 0;
    double step = 1.0 / 64;  // tanh-sinh step; the estimate compares with 2 step
    double xmax = 1e12;      // truncation of the sinh-sinh map
    double min_dist = 0.05;
    double residue_sign = 1;  // ledger orientation, +1 is the validated one
    double tol = 1e-9;        // tail bound must stay below tol
};

// Admissible band of base-line heights (lo, hi) for the given rapidities.
std::pair<double, double> admissible_band(const NumParams& P);
ContourSpec default_contour(const NumParams& P);

struct PoleEntry {
    int j = 0, k = 0;
    cplx at;
    double radius = 0;  // 0: analytic residue of phi
    double sign = 1;
};
std::vector<PoleEntry> pole_ledger(const NumParams& P, const ContourSpec& C);

// phi(alpha | beta) for one alpha.
cplx phi1(cplx alpha, const NumParams& P);
// Residue of phi1 at beta_j + hbar - p k.
cplx phi1_residue(int j, int k, const NumParams& P);

// A deformed cycle numerator P(X_1..X_l), X_a = e^{2 pi i alpha_a / p}.
struct NumCycle {
    int ell = 1;
    std::vector<cplx> coef;
    std::vector<std::vector<int>> exps;
    void add(cplx c, std::vector<int> e);
    static NumCycle product(const std::vector<std::vector<cplx>>& factors);  // prod_a sum_k c_ak X_a^k
};
// W = P / prod_{a,j} (1 - X_a / B_j), evaluated without overflow.
cplx cycle_value(const NumCycle& W, const std::vector<cplx>& alpha, const NumParams& P);
// Numerator from an exact cycle: A_a -> X_a, B_j -> e^{2 pi i beta_j / p},
// zeta_{2N} -> e^{-i pi / N}.
NumCycle to_numeric(const CPoly& P, int ell, const NumParams& Pm);

// Limits of P(X) / prod_j (1 - X / B_j) as alpha -> +-infinity along the real
// axis, for a univariate numerator (coefficients lowest first).
struct InfLimits {
    cplx minus, plus;
};
InfLimits inf_limits(const std::vector<cplx>& coef, const NumParams& P);

struct QuadResult {
    std::vector<cplx> value;
    double err = 0;   // step-halving difference, max over components
    double tail = 0;  // truncation bound, max over components
    long evals = 0;
};

// int_C^l phi(alpha) g(alpha) dalpha for a vector-valued integrand g; throws
// NumericError when the tail bound exceeds C.tol times the result scale.
using Integrand = std::function<void(const std::vector<cplx>& alpha, std::vector<cplx>& out)>;
QuadResult contour_integral(int ell, size_t ncomp, const Integrand& g, const NumParams& P, const ContourSpec& C);

// F_J[W] for every J of the singlet signature, in enumerate() order.
QuadResult contour_eval(const HTable& H, const std::vector<IndexVector>& Js, const NumCycle& W, const NumParams& P,
                        const ContourSpec& C);

// psi_W = sum_J F_J[W] v_J.
TensorVector<cplx> psi_numeric(const HTable& H, const NumCycle& W, const NumParams& P, const ContourSpec& C,
                               QuadResult* raw = nullptr);

// Numeric checks. Each fills a CheckResult whose detail lists value,
// reference and errors; rows is appended with CSV-ready records.
struct NumRow {
    std::string check;
    cplx value, reference;
    double abs_err = 0, rel_err = 0;
};
using NumRows = std::vector<NumRow>;

CheckResult check_gamma_functional(NumRows* rows = nullptr);
CheckResult check_gamma2(NumRows* rows = nullptr);
CheckResult check_zetarel1(int N, NumRows* rows = nullptr);
CheckResult check_s0(int N, NumRows* rows = nullptr);
CheckResult check_stir(int N, int m, NumRows* rows = nullptr);

// int_C phi (D L_J^{(0)}) P / prod (1 - X/B_j) = p^{m+1} (P^{-oo} - P^{+oo}).
cplx onetime_constant(const NumParams& P, int power);
CheckResult verify_onetime(const NumParams& P, const ContourSpec& C, const std::vector<cplx>& coef,
                           NumRows* rows = nullptr);
// (FMhwcond) sums for every k and every lowered J'.
CheckResult verify_hw_numeric(const NumParams& P, const ContourSpec& C, const NumCycle& W, NumRows* rows = nullptr);
// psi_W against the one-fewer-integral formula. Product cycles only; the
// first l-1 factors must vanish at +-infinity.
CheckResult verify_smirnov_numeric(const NumParams& P, const ContourSpec& C,
                                   const std::vector<std::vector<cplx>>& factors, NumRows* rows = nullptr);
CheckResult verify_zerocycle_numeric(const NumParams& P, const ContourSpec& C,
                                     const std::vector<std::vector<cplx>>& factors, NumRows* rows = nullptr);
// The same integral on two admissible base lines.
CheckResult verify_contour_invariance(const NumParams& P, const NumCycle& W, NumRows* rows = nullptr);

// Form factor e^{(N-1)n/(2N) sum beta} prod_{j<j'} zeta(beta_j - beta_j') psi_W
// at hbar = -2 pi i / N, with W built from the exact cycle P.
NumParams form_factor_params(int N, int m, const std::vector<cplx>& beta);
TensorVector<cplx> assemble_form_factor(const HTable& H, const CPoly& P, const NumParams& Pm, const ContourSpec& C);
// Exchange of beta_1, beta_2 in the N = 2, m = 1 EMT form factor against
// P_12 S_0 R at the swapped point.
CheckResult check_ax1(int mu, int nu, NumRows* rows = nullptr);
// Shrinking-circle residue of the N = 2, m = 1 EMT form factor at
// beta_2 = beta_1 - hbar; the prefactor kills it.
CheckResult check_res0(int mu, int nu, NumRows* rows = nullptr);

// Default cases of the numeric suite; seeds fixed.
// Random numerators of degree n; the first `vanishing` factors vanish at +-infinity.
std::vector<std::vector<cplx>> sample_factors(const NumParams& P, int vanishing, unsigned seed);
NumCycle sample_cycle(const NumParams& P, unsigned seed);

}  // namespace qkz
