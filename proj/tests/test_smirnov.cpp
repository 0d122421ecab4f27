#include "doctest.h"

#include "qkz/identity.hpp"
#include "qkz/smirnov.hpp"
#include "qkz/weights.hpp"

using namespace qkz;

namespace {
QRat V(const std::string& s) { return parse_qrat(s); }
bool req(const QRat& a, const QRat& b) { return (a - b).is_zero(); }

void check_all(const CheckResult& r)
{
    INFO(r.detail);
    CHECK(r.pass);
    CHECK(r.cases > 0);
}

std::vector<QRat> betas(int n)
{
    std::vector<QRat> b;
    for (int j = 1; j <= n; ++j) b.push_back(qvar(var_beta(j)));
    return b;
}

const std::vector<std::pair<int, int>> kCases{{2, 1}, {2, 2}, {3, 1}, {3, 2}};
}  // namespace

TEST_CASE("omega examples")
{
    auto b = betas(2);
    QRat h = qvar(var_hbar());
    auto w01 = omega_at<QRat>(2, {0, 1}, b, h);
    CHECK(tensor_equal<QRat>(w01, TensorVector<QRat>::basis(2, {0, 1}), req));
    auto w10 = omega_at<QRat>(2, {1, 0}, b, h);
    CHECK(req(w10.at({1, 0}), V("(b2-b1)/(b2-b1+h)")));
    CHECK(req(w10.at({0, 1}), V("h/(b2-b1+h)")));
    CHECK(req(w10.at({1, 0}), V("(b1-b2)/(b1-b2-h)")));
    CHECK(omega_at<QRat>(2, {0, 0}, b, h).apply_E(1).is_zero());
}

TEST_CASE("mu and w examples")
{
    auto b = betas(2);
    QRat h = qvar(var_hbar()), x = qvar(var_alpha(1));
    IndexVector J01(2, {0, 1}), J10(2, {1, 0});
    CHECK(req(mu(J01, 2, x, b, h), V("1/(a1-b2)")));
    CHECK(req(mu(J10, 1, x, b, h), V("1/(a1-b1)")));
    auto b3 = betas(3);
    CHECK(req(mu(IndexVector(3, {0, 1, 2}), 3, x, b3, h), V("1/(a1-b3)")));

    auto H = HTable::build(2, 1);
    CHECK(req(w_J(H, J01, std::vector<QRat>{x}, b, h), V("(a1-b1-h)/((a1-b1)*(a1-b2))")));
}

TEST_CASE("w_J has only simple poles")
{
    for (auto [N, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 1}}) {
        auto H = HTable::build(N, m);
        auto p = symbolic_point({N * m, H.ell()});
        for (auto& J : enumerate(Signature::singlet(N, m))) {
            QRat w = w_J(H, J, p.alpha(), p.beta(), p.h);
            for (auto& [L, k] : w.den()) CHECK(k == 1);
        }
    }
}

TEST_CASE("D and polynomial part")
{
    auto b = betas(2);
    QRat h = qvar(var_hbar()), x = qvar(var_alpha(1));
    QRat d1 = apply_D([](const QRat&) { return QRat(1); }, x, b, h, 2);
    CHECK(req(d1, V("1-(a1-b1-h)*(a1-b2-h)/((a1-b1)*(a1-b2))")));
    QRat d = apply_D([&](const QRat& y) { return y - b[0] - h - h; }, x, b, h, 2);
    CHECK(req(d, V("h*(b2-b1-h)/(a1-b2)")));

    using U = UPoly<Rat>;
    U p{{Rat(1), Rat(0), Rat(1)}};
    U q = polynomial_part(p, Rat(0), 1);
    CHECK(q.deg() == 1);
    CHECK(q.eval(Rat(7)) == Rat(7));
    CHECK(polynomial_part(p, Rat(0), 3).is_zero());
    CHECK(T_hbar(U::linear(Rat(2)), Rat(5)).eval(Rat(0)) == Rat(-5));
}

TEST_CASE("omega suite")
{
    for (auto [N, m] : kCases) {
        CAPTURE(N);
        CAPTURE(m);
        auto cfg = auto_eq(N, m, EqConfig{});
        auto H = HTable::build(N, m);
        check_all(check_omega_braid(N, m, cfg));
        check_all(check_triangular(N, m, cfg));
        check_all(check_omegahweq(N, m, cfg));
        check_all(check_basechange(H, cfg));
        check_all(check_coeffprove2(H, cfg));
    }
}

TEST_CASE("integrand identities")
{
    for (auto [N, m] : kCases) {
        CAPTURE(N);
        CAPTURE(m);
        auto cfg = auto_eq(N, m, EqConfig{});
        auto H = HTable::build(N, m);
        check_all(check_wrel1(H, cfg));
        check_all(check_wrel2(H, cfg));
        check_all(check_hw11(N, m, cfg));
        check_all(check_FMhweq(H, cfg));
        check_all(check_FMhwcond(H, cfg));
    }
}

TEST_CASE("difference operator families")
{
    for (auto [N, m] : kCases) {
        CAPTURE(N);
        CAPTURE(m);
        auto cfg = auto_eq(N, m, EqConfig{});
        check_all(check_DLformula(N, m, cfg));
        check_all(check_Q(N, m, cfg));
        check_all(check_Qell_zero(N, m, cfg));
        check_all(check_puttedD(N, m, cfg));
        check_all(check_mu_to_Q(N, m, cfg));
    }
}

TEST_CASE("rational lemmas")
{
    EqConfig det;
    for (int m = 1; m <= 2; ++m)
        for (int r = 1; r <= 2; ++r) {
            CAPTURE(m);
            CAPTURE(r);
            check_all(check_ratclaim1(m, r, det));
        }
    for (int d = 0; d <= 2; ++d)
        for (int m = 1; m <= 2; ++m) {
            CAPTURE(d);
            CAPTURE(m);
            check_all(check_ratclaim2(d, m, det));
        }
}

TEST_CASE("probabilistic mode agrees with symbolic mode on small cases")
{
    EqConfig prob;
    prob.mode = EqMode::Probabilistic;
    auto H = HTable::build(3, 1);
    check_all(check_basechange(H, prob));
    check_all(check_hw11(3, 1, prob));
    check_all(check_Q(3, 1, prob));
}

TEST_CASE("a wrong identity is rejected in both modes")
{
    for (auto mode : {EqMode::Deterministic, EqMode::Probabilistic}) {
        EqConfig cfg;
        cfg.mode = mode;
        CHECK_FALSE(holds(
            [](const auto& p) {
                auto one = p.h / p.h;
                return std::pair{(p.alpha()[0] - p.beta()[0]) * one, p.alpha()[0] * one};
            },
            {1, 1}, cfg));
    }
}
