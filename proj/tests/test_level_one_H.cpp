#include "doctest.h"

#include "qkz/hfun.hpp"
#include "qkz/smirnov.hpp"

using namespace qkz;

namespace {
QRat V(const std::string& s) { return parse_qrat(s); }
bool req(const QRat& a, const QRat& b) { return (a - b).is_zero(); }

void check_all(const CheckResult& r)
{
    INFO(r.detail);
    CHECK(r.pass);
}
}  // namespace

TEST_CASE("exchange_solve examples")
{
    CHECK(req(exchange_solve(V("1/(a1-a2-h)"), 1), V("1/(a2-a1+h)")));
    CHECK(req(exchange_solve(QRat(1), 1), QRat(1)));
}

TEST_CASE("small tables")
{
    auto t2 = HTable::build(2, 2);
    for (auto& [e, h] : t2.H()) CHECK(req(h, QRat(1)));

    auto t = HTable::build(3, 1);
    CHECK(req(t.H({0, 1}), V("1/(a1-a2-h)")));
    CHECK(req(t.H({1, 0}), V("1/(a2-a1+h)")));
    CHECK(req(QRat(t.G({0, 1})), QRat(1)));
    CHECK(req(QRat(t.G({1, 0})), QRat(-1)));
    CHECK(t.path_independent());
}

TEST_CASE("(rel2) by hand at N=3, m=1")
{
    auto t = HTable::build(3, 1);
    QRat lhs = t.H_at({0, 1}, {QPoly::var(var_alpha(1)), QPoly::var(var_alpha(2)) - QPoly::var(var_hbar()).scaled(Q(3))});
    CHECK(req(lhs, V("1/(a1-a2+2*h)")));
    CHECK(verify_shift(t).pass);
}

TEST_CASE("construction suite")
{
    for (auto [N, m] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 1}}) {
        CAPTURE(N);
        CAPTURE(m);
        auto t = HTable::build(N, m);
        CHECK(t.path_independent());
        check_all(verify_rel1(t));
        check_all(verify_shift(t));
        check_all(verify_Hpol(t));
        check_all(verify_extcoeff(t));
        check_all(verify_seed(t));
    }
}

TEST_CASE("G identity suite")
{
    for (auto [N, m] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {4, 1}}) {
        auto t = HTable::build(N, m);
        for (auto& name : G_identity_names()) {
            CAPTURE(N);
            CAPTURE(m);
            CAPTURE(name);
            check_all(verify_G_identity(name, t));
        }
    }
}

TEST_CASE("another formula and highest weight")
{
    for (auto [N, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 1}}) {
        CAPTURE(N);
        CAPTURE(m);
        auto t = HTable::build(N, m);
        auto cfg = auto_eq(N, m, EqConfig{});
        check_all(check_anotherformula(t, cfg));
        check_all(check_ssol_hw(t, cfg));
    }
    EqConfig det;
    for (int r = 1; r <= 3; ++r) check_all(check_hw_cancel_lemma(r, det));
}
