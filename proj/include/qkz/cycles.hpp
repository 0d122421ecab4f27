#pragma once

#include "qkz/check.hpp"
#include "qkz/ratfunc.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qkz {

// Deformed cycles live in Q(zeta_{2N})[A_a^{+-1}, B_j^{+-1}] with
// A_a = e^{-alpha_a}, B_j = e^{-beta_j}, omega = e^{hbar} = zeta^2 and
// zeta = e^{hbar/2}. A shift beta -> beta - k hbar/2 is B -> zeta^k B.
Cyc zeta2N(int N, long k = 1);
Cyc omega_pow(int N, long k);

// Galois conjugation zeta -> zeta^{-1}.
Cyc conj(const Cyc& c);
CPoly conj(const CPoly& p);

CPoly Avar(int a);
CPoly Bvar(int j);
std::vector<int> A_vars(int r);  // ids of A_1..A_r
// x^e for a monomial x, e of either sign.
CPoly mono_pow(const CPoly& x, long e);

// q-binomial [k, j] with q = omega^{-1}.
Cyc qbinom(int N, int k, int j);

// P_k(A_1..A_N | B) and the primed family; entries of A and B may be any
// monomials (substituted values included).
CPoly P_k(int N, int k, const std::vector<CPoly>& A, const CPoly& B);
CPoly Pprime_k(int N, int k, const std::vector<CPoly>& A, const CPoly& B);

// P1 ~ P2 iff Skew(P1 - P2) = 0, skew over the given variables.
bool skew_equiv(const CPoly& P1, const CPoly& P2, const std::vector<int>& vars);
// r with Skew(P) = r Skew(Q), r free of the skew variables, if it exists and
// can be read off as a single term.
std::optional<CPoly> skew_ratio(const CPoly& P, const CPoly& Q, const std::vector<int>& vars);

struct EMTData {
    int N = 0, m = 0, n = 0, ell = 0, mu = 0, nu = 0;
    std::vector<int> wexp;  // wexp[a-2] for a = 2..ell
    // c_m = omega^{cm_omega} prod_{j<=m} d_j^{-1}; the d_j stay formal and are
    // left out of every polynomial below.
    long cm_omega = 0;
    CPoly w;         // w(A_2..A_ell)
    CPoly prefactor;  // sum_j B_j^{-1} - (-1)^mu sum_j B_j
    CPoly P_munu;
    CPoly Pplus, Pminus;          // c_m w^+, the P^- cycle
    CPoly Pplus_mu, Pminus_mu;    // prefactor times P^{+-}
};

int emt_w_exponent(int N, int a);
long emt_cm_omega(int N, int m);
EMTData build_emt(int N, int m, int mu, int nu);
// The P_{m-1} targets of the recurrence for sign +1 (P^+) and -1 (P^-).
// The printed P^- target carries omega^{(N-1)(N-2)(m-1)/2} too many; the
// recurrence closes with emt_target.
CPoly emt_target(int N, int m, int sign);
CPoly emt_target_printed(int N, int m, int sign);

struct RescondWitness {
    int N = 0, m = 0, sign = 1;
    int n = 0, ell = 0;
    CPoly Pm, Pm1, Pm1_printed;
    // Index k = 1..N-1; slot 0 unused. For m = 1 only k <= N-2 is built.
    std::vector<CPoly> P, Phat;
};

RescondWitness build_emt_witness(int N, int m, int sign);

struct RescondReport {
    CheckResult cond1, cond2, cond3, cond35;
    std::array<CheckResult, 2> cond4;  // delta = 0, 1
    bool cond2_equal = true;   // (cond2) holds with = in place of ~
    bool cond35_equal = true;
    std::string note;
    bool pass() const;         // every condition, (cond4) for some delta
    int delta_mask() const;    // bit d set iff (cond4) holds for delta = d
};

// For m = 1 the conditions (cond3.5) and (cond4) are not part of the claim
// and are left empty in the report.
RescondReport verify_rescond(const RescondWitness& wit);

// sum_{j=0}^{N-1} (omega^j B)^{+-1} = 0.
bool verify_omegasum(int N);

// Rapidity bookkeeping along the residue chain: images of B_{n-N+1}..B_n
// after (cond2)/(cond3) for k = 1..N-2 and the final (cond3.5) point, all as
// zeta powers times B_{n-N+1}.
std::vector<CPoly> chain_rapidities(int N, int m);

// m = 1: cond1..cond3 for P^{+-}, and the EMT prefactor of P^{+-}_mu vanishing
// at the end of the residue chain by (omegasum). For m > 1 the same
// prefactor reduces to the one of n - N sites.
CheckResult verify_m1_route(int N, int mu);
CheckResult verify_prefactor_reduction(int N, int m, int mu);

// verify_skew_lemma(1|2|3, N, k): skew relation 1 with its primed and inverse
// variants, relation 2 on sampled constraint triples, relation 3 with its
// variants. k is used by relation 1 only.
CheckResult verify_skew_lemma(int which, int N, int k);

// P^{+-infinity}: with A_a = t the constant term of the t -> 0 and t -> oo
// expansions of P / prod_j (1 - A_a / B_j).
struct InfinityLimits {
    CPoly minus, plus;  // t -> 0, t -> oo
};
InfinityLimits infinity_limits(const CPoly& P, int a, int n);
// Both limits vanish in every A_a, the hypothesis under which psi_W = 0.
bool is_zero_cycle(const CPoly& P, int ell, int n);

}  // namespace qkz
