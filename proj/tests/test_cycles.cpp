#include "doctest.h"

#include "qkz/cycles.hpp"

#include <random>

using namespace qkz;

namespace {
void check_all(const CheckResult& r)
{
    INFO(r.detail);
    CHECK(r.pass);
    CHECK(r.cases > 0);
}

CPoly mono(std::initializer_list<std::pair<int, int>> Ae, int Be = 0, int j = 1)
{
    CPoly x = mono_pow(Bvar(j), Be);
    for (auto [a, e] : Ae) x *= mono_pow(Avar(a), e);
    return x;
}
}  // namespace

TEST_CASE("q-binomials")
{
    for (int N = 2; N <= 6; ++N) {
        CHECK(qbinom(N, N - 1, 0) == Cyc(1));
        if (N > 2) CHECK(qbinom(N, 2, 1) == Cyc(1) + omega_pow(N, -1));
        for (int k = 1; k < N; ++k)
            for (int j = 1; j < k; ++j) {
                CAPTURE(N);
                CAPTURE(k);
                CAPTURE(j);
                CHECK(qbinom(N, k, j) == qbinom(N, k - 1, j - 1) + omega_pow(N, -j) * qbinom(N, k - 1, j));
            }
    }
    CHECK(zeta2N(3, 2) == omega_pow(3, 1));
    CHECK(conj(zeta2N(4)) * zeta2N(4) == Cyc(1));
}

TEST_CASE("EMT cycle data")
{
    auto d = build_emt(3, 2, 0, 0);
    CHECK(d.ell == 4);
    CHECK(d.wexp == std::vector<int>{2, 4, 5});
    CHECK(d.w == mono({{2, 2}, {3, 4}, {4, 5}}));

    auto e = build_emt(2, 1, 0, 0);
    CHECK(e.w == CPoly(1));
    CHECK(e.cm_omega == 0);
    CHECK(e.P_munu == e.prefactor * (mono({{1, 2}}) + CPoly(1)));
    auto e1 = build_emt(2, 1, 1, 1);
    CHECK(e1.P_munu == e1.prefactor * (CPoly(1) - mono({{1, 2}})));
    CHECK(e1.prefactor == mono({}, -1, 1) + mono({}, -1, 2) + Bvar(1) + Bvar(2));

    // w^+ - w is a zero cycle once the A_1^N term has degree below n
    for (int m = 1; m <= 3; ++m) {
        auto f = build_emt(2, m, 0, 0);
        CAPTURE(m);
        CHECK(is_zero_cycle(f.Pplus - f.w, f.ell, f.n) == (m > 1));
        CHECK_FALSE(is_zero_cycle(f.Pplus, f.ell, f.n));
    }
    auto L = infinity_limits(mono({{1, 2}}), 1, 2);
    CHECK(L.minus.is_zero());
    CHECK(L.plus == Bvar(1) * Bvar(2));
}

TEST_CASE("skew equivalence")
{
    auto v = A_vars(2);
    CPoly P = mono({{1, 2}, {2, 1}}, -1);
    CHECK(skew_equiv(P, -mono({{1, 1}, {2, 2}}, -1), v));
    CHECK(skew_equiv(Avar(1) * Avar(2) + Avar(1) * Avar(1) + Avar(2) * Avar(2), CPoly(), v));
    CHECK_FALSE(skew_equiv(Avar(1), CPoly(), v));

    // reflexive, symmetric and transitive on sampled triples
    auto v3 = A_vars(3);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> c(-9, 9), e(0, 3);
    auto rnd = [&] {
        CPoly x;
        for (int t = 0; t < 5; ++t) x += CPoly(Cyc(c(rng))) * mono({{1, e(rng)}, {2, e(rng)}, {3, e(rng)}}, e(rng) - 1);
        return x;
    };
    auto sym = [&] {
        CPoly x = rnd(), s;
        for (auto& p : std::vector<std::vector<int>>{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}, {2, 1, 3}, {1, 3, 2}, {3, 2, 1}})
            s += x.rename({{var_A(1), var_A(p[0])}, {var_A(2), var_A(p[1])}, {var_A(3), var_A(p[2])}});
        return s;
    };
    for (int t = 0; t < 4; ++t) {
        CPoly a = rnd(), b = a + sym(), d = b + sym();
        CHECK(skew_equiv(a, a, v3));
        CHECK(skew_equiv(a, b, v3));
        CHECK(skew_equiv(b, a, v3));
        CHECK(skew_equiv(b, d, v3));
        CHECK(skew_equiv(a, d, v3));
        CHECK_FALSE(skew_equiv(a, a + Avar(1) * Avar(2).pow(2), v3));
    }

    auto r = skew_ratio(Bvar(1) * Avar(1), Avar(1) - Avar(2), v);
    REQUIRE(r);
    CHECK(*r == Bvar(1).scaled(Cyc(Q(1, 2))));
}

TEST_CASE("skew lemmas")
{
    for (int N = 2; N <= 4; ++N) {
        CAPTURE(N);
        for (int k = 0; k <= N - 2; ++k) {
            CAPTURE(k);
            check_all(verify_skew_lemma(1, N, k));
        }
        check_all(verify_skew_lemma(2, N, 0));
        check_all(verify_skew_lemma(3, N, 0));
    }
    // the primed prefactor as printed, prod_{j=0}^{N-k-1}, breaks skew1 at N = 3
    int N = 3;
    auto A = std::vector<CPoly>{Avar(1), Avar(2), Avar(3)};
    CPoly B = Bvar(1), Bi = mono({}, -1);
    auto printed = [&](int k, const CPoly& b) {
        CPoly f(1);
        for (int j = 0; j <= N - k - 1; ++j) f *= CPoly(1) - CPoly(omega_pow(N, j)) * mono_pow(b, -1) * Avar(1);
        return f * P_k(N, k, {CPoly(1), Avar(2), Avar(3)}, b);
    };
    CPoly f1 = (CPoly(1) - Bi * Avar(1)) * (CPoly(1) - Bi * Avar(2));
    CPoly om(omega_pow(N, 1));
    CHECK_FALSE(skew_equiv(printed(0, om * B), f1 * printed(1, B), A_vars(3)));
    CHECK(skew_equiv(Pprime_k(N, 0, A, om * B), f1 * Pprime_k(N, 1, A, B), A_vars(3)));
}

TEST_CASE("omegasum and the residue chain")
{
    for (int N : {2, 3, 4, 5}) CHECK(verify_omegasum(N));
    auto img = chain_rapidities(3, 1);
    REQUIRE(img.size() == 3);
    CHECK(img[0] == Bvar(1));
    CHECK(img[1] == CPoly(omega_pow(3, 1)) * Bvar(1));
    CHECK(img[2] == CPoly(omega_pow(3, 2)) * Bvar(1));
    for (int N : {2, 3, 4})
        for (int m : {1, 2})
            for (int mu : {0, 1}) check_all(verify_prefactor_reduction(N, m, mu));
}

TEST_CASE("recurrence conditions for the EMT witnesses")
{
    for (auto [N, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {4, 2}})
        for (int sign : {1, -1}) {
            CAPTURE(N);
            CAPTURE(m);
            CAPTURE(sign);
            auto w = build_emt_witness(N, m, sign);
            CHECK(w.P.size() == size_t(N));
            auto r = verify_rescond(w);
            check_all(r.cond1);
            if (N > 2) {
                check_all(r.cond2);
                check_all(r.cond3);
            }
            check_all(r.cond35);
            check_all(r.cond4[0]);
            CHECK(r.pass());
            CHECK(r.delta_mask() == (N == 2 ? 3 : 1));
            CHECK(r.cond2_equal == (N == 2));
            CHECK(r.cond35_equal == (N == 2 && m == 2));
        }
    auto r = verify_rescond(build_emt_witness(3, 2, -1));
    CHECK(r.note.find("delta=0: fails") != std::string::npos);
    CHECK(r.note.find("delta=1: fails") != std::string::npos);
}

TEST_CASE("m = 1 route")
{
    for (int N : {2, 3, 4, 5})
        for (int mu : {0, 1}) {
            CAPTURE(N);
            CAPTURE(mu);
            check_all(verify_m1_route(N, mu));
        }
    auto w = build_emt_witness(3, 1, 1);
    CPoly B = Bvar(2), Bi = mono({}, -1, 2);
    CPoly f = (CPoly(1) - CPoly(omega_pow(3, 1)) * Bi * Avar(1)) * (CPoly(1) - CPoly(omega_pow(3, 2)) * Bi * Avar(1));
    CHECK(w.Phat[1] == f * Avar(2).pow(2).scaled(omega_pow(3, emt_cm_omega(3, 1))));
}
