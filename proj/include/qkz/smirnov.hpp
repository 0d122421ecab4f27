#pragma once

#include "qkz/check.hpp"
#include "qkz/hfun.hpp"
#include "qkz/ratfunc.hpp"

#include <string>

namespace qkz {

// Deterministic for small cases, probabilistic exact evaluation otherwise.
EqConfig auto_eq(int N, int m, const EqConfig& base);

// Level-one cross checks against Smirnov's basis of the sl_{N-1} module.
CheckResult check_anotherformula(const HTable& H, const EqConfig& cfg);
CheckResult check_ssol_hw(const HTable& H, const EqConfig& cfg);
CheckResult check_hw_cancel_lemma(int r, const EqConfig& cfg);

// omega table on the singlet signature of (N, m).
CheckResult check_omega_braid(int N, int m, const EqConfig& cfg);
CheckResult check_triangular(int N, int m, const EqConfig& cfg);
CheckResult check_omegahweq(int N, int m, const EqConfig& cfg);
CheckResult check_basechange(const HTable& H, const EqConfig& cfg);
CheckResult check_coeffprove2(const HTable& H, const EqConfig& cfg);

// Integrand identities; H is the level-one table of the same (N, m).
CheckResult check_wrel1(const HTable& H, const EqConfig& cfg);
CheckResult check_wrel2(const HTable& H, const EqConfig& cfg);
CheckResult check_hw11(int N, int m, const EqConfig& cfg);
CheckResult check_FMhweq(const HTable& H, const EqConfig& cfg);
CheckResult check_FMhwcond(const HTable& H, const EqConfig& cfg);

// Difference-operator families.
CheckResult check_DLformula(int N, int m, const EqConfig& cfg);
CheckResult check_Q(int N, int m, const EqConfig& cfg);
CheckResult check_Qell_zero(int N, int m, const EqConfig& cfg);
CheckResult check_ratclaim1(int m, int r, const EqConfig& cfg);
CheckResult check_ratclaim2(int d, int m, const EqConfig& cfg);
CheckResult check_puttedD(int N, int m, const EqConfig& cfg);
// Prefactor bookkeeping of the mu -> Q replacement: assembled over stated
// prefactor of omega_J is the same constant for every J, namely
// -(-1)^{N m(m+1)/2 + m^2} hbar^{-l} times the one-time integration constant.
CheckResult check_mu_to_Q(int N, int m, const EqConfig& cfg);

}  // namespace qkz
