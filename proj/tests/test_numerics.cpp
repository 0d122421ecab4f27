#include "doctest.h"

#include "qkz/contour.hpp"

#include <cmath>

using namespace qkz;

namespace {
void check_all(const CheckResult& r)
{
    INFO(r.detail);
    CHECK(r.pass);
    CHECK(r.cases > 0);
}

double max_rel(const NumRows& rows)
{
    double mx = 0;
    for (auto& r : rows) mx = std::max(mx, r.rel_err);
    return mx;
}
}  // namespace

TEST_CASE("special functions")
{
    check_all(check_gamma_functional());
    check_all(check_gamma2());
    for (int N : {2, 3, 4}) {
        CAPTURE(N);
        check_all(check_zetarel1(N));
        check_all(check_s0(N));
    }
    CHECK(std::abs(gamma_fn(5.0) - 24.0) < 1e-12);
    CHECK(rgamma(-3.0) == cplx(0));
    CHECK_THROWS_AS(gamma_fn(-2.0), NumericError);
    CHECK(std::abs(s0_eval(cplx(0, M_PI), 2)) < 1e-15);
}

TEST_CASE("phi asymptotics")
{
    for (int N : {2, 3})
        for (int m : {1, 2}) {
            CAPTURE(N);
            CAPTURE(m);
            check_all(check_stir(N, m));
        }
}

TEST_CASE("pole ledger")
{
    auto P = default_params(2, 1);
    auto [lo, hi] = admissible_band(P);
    CHECK(lo < hi);
    auto L = pole_ledger(P, default_contour(P));
    for (auto& e : L) {
        CHECK(e.radius == 0);
        CHECK(e.at.imag() < default_contour(P).c0);
    }
    ContourSpec C;
    C.c0 = P.beta[0].imag() + 0.01;
    CHECK_THROWS_AS(pole_ledger(P, C), NumericError);
}

TEST_CASE("one-time integration")
{
    for (int N : {2, 3}) {
        CAPTURE(N);
        auto P = default_params(N, 1);
        auto C = default_contour(P);
        auto coef = sample_factors(P, 0, 7)[0];
        NumRows rows;
        check_all(verify_onetime(P, C, coef, &rows));
        CHECK(max_rel(rows) < 1e-10);
        ContourSpec flipped = C;
        flipped.residue_sign = -1;
        CHECK_FALSE(verify_onetime(P, flipped, coef).pass);
        CHECK(std::abs(std::abs(onetime_constant(P, 2) / onetime_constant(P, 1)) - std::abs(P.p())) < 1e-14);
    }
}

TEST_CASE("highest-weight condition")
{
    for (auto [N, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
        CAPTURE(N);
        CAPTURE(m);
        auto P = default_params(N, m);
        auto C = default_contour(P);
        check_all(verify_hw_numeric(P, C, sample_cycle(P, 5)));
    }
    auto P = default_params(2, 1);
    NumCycle bad = sample_cycle(P, 5);
    bad.add(1.0, {P.n() + 1});
    auto r = verify_hw_numeric(P, default_contour(P), bad);
    CHECK_FALSE(r.pass);
    CHECK(r.detail.find("exceeds degree") != std::string::npos);
    ContourSpec C = default_contour(P);
    C.residue_sign = 0;
    CHECK_FALSE(verify_hw_numeric(P, C, sample_cycle(P, 5)).pass);
}

TEST_CASE("one-fewer-integral formula")
{
    for (auto [N, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
        CAPTURE(N);
        CAPTURE(m);
        auto P = default_params(N, m);
        int ell = (N - 1) * m;
        NumRows rows;
        check_all(verify_smirnov_numeric(P, default_contour(P), sample_factors(P, ell - 1, 13), &rows));
        CHECK(max_rel(rows) < 1e-8);
    }
    auto P = default_params(3, 1);
    auto r = verify_smirnov_numeric(P, default_contour(P), sample_factors(P, 0, 13));
    CHECK_FALSE(r.pass);
}

TEST_CASE("zero cycles integrate to zero")
{
    for (int N : {2, 3}) {
        CAPTURE(N);
        auto P = default_params(N, 1);
        check_all(verify_zerocycle_numeric(P, default_contour(P), sample_factors(P, 9, 11)));
    }
}

TEST_CASE("contour freedom")
{
    for (int N : {2, 3}) {
        CAPTURE(N);
        auto P = default_params(N, 1);
        check_all(verify_contour_invariance(P, sample_cycle(P, 5)));
    }
    // a rapidity above the line is handled by a circle
    NumParams P;
    P.beta = {0.2, cplx(0.5, 0.4)};
    auto H = HTable::build(2, 1);
    auto Js = enumerate(Signature::singlet(2, 1));
    auto W = sample_cycle(P, 3);
    ContourSpec above, below;
    above.c0 = 0.55;
    below.c0 = 0.2;
    auto L = pole_ledger(P, below);
    CHECK(std::count_if(L.begin(), L.end(), [](const PoleEntry& e) { return e.radius > 0; }) == 1);
    auto R1 = contour_eval(H, Js, W, P, above), R2 = contour_eval(H, Js, W, P, below);
    for (size_t i = 0; i < Js.size(); ++i) CHECK(std::abs(R1.value[i] - R2.value[i]) < 1e-9 * std::abs(R1.value[i]));
}

TEST_CASE("EMT form factor at N = 2, m = 1")
{
    auto H = HTable::build(2, 1);
    for (int mu : {0, 1}) {
        CAPTURE(mu);
        auto d = build_emt(2, 1, mu, 0);
        auto Pm = form_factor_params(2, 1, {0.4, -0.9});
        auto f = assemble_form_factor(H, d.P_munu, Pm, default_contour(Pm));
        CHECK_FALSE(f.is_zero());
        for (auto& [k, v] : f.comps()) CHECK(std::isfinite(std::abs(v)));
        check_all(check_ax1(mu, 0));
        check_all(check_res0(mu, 0));
    }
    CHECK(std::isfinite(std::abs(zeta_fn(0.0, 2))));
}
