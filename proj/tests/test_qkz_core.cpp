#include "doctest.h"

#include "qkz/tensor.hpp"

using namespace qkz;

namespace {
QRat V(const std::string& s) { return parse_qrat(s); }
bool req(const QRat& a, const QRat& b) { return (a - b).is_zero(); }
}  // namespace

TEST_CASE("R-matrix on basis pairs")
{
    QRat b = V("b1-b2"), h = V("h");
    auto v00 = TensorVector<QRat>::basis(3, {0, 0});
    CHECK(tensor_equal<QRat>(v00.apply_R(1, 2, b, h), v00, req));
    auto v01 = TensorVector<QRat>::basis(3, {0, 1});
    auto r0 = v01.apply_R(1, 2, QRat(0), h);
    CHECK(tensor_equal<QRat>(r0, v01.apply_P(1, 2), req));
    auto r = v01.apply_R(1, 2, b, h);
    CHECK(req(r.at({0, 1}), b / (b + h)));
    CHECK(req(r.at({1, 0}), h / (b + h)));
    CHECK_THROWS_AS(v01.apply_R(1, 2, -h, h), AlgebraError);
}

TEST_CASE("K operator factor lists")
{
    std::vector<QRat> beta{V("b1")};
    CHECK(build_K(1, beta, V("3*h")).factors.empty());
    std::vector<QRat> b2{V("b1"), V("b2")};
    auto K = build_K(1, b2, V("2*h"));
    REQUIRE(K.factors.size() == 1);
    CHECK(K.factors[0].i == 1);
    CHECK(K.factors[0].j == 2);
    CHECK(req(K.factors[0].arg, V("b1-b2")));
    std::vector<QRat> b3{V("b1"), V("b2"), V("b3")};
    auto K2 = build_K(2, b3, V("p"));
    REQUIRE(K2.factors.size() == 2);
    CHECK(req(K2.factors[0].arg, V("b2-b1+p")));
    CHECK(req(K2.factors[1].arg, V("b2-b3")));
}

TEST_CASE("raising operators")
{
    auto v10 = TensorVector<QRat>::basis(2, {1, 0});
    CHECK(tensor_equal<QRat>(v10.apply_E(1), TensorVector<QRat>::basis(2, {0, 0}), req));
    CHECK(TensorVector<QRat>::basis(2, {0, 0}).apply_E(1).is_zero());
    auto v12 = TensorVector<QRat>::basis(3, {1, 2});
    CHECK(tensor_equal<QRat>(v12.apply_E(2), TensorVector<QRat>::basis(3, {1, 1}), req));
}

TEST_CASE("Yang-Baxter, unitarity and E-commutation for N <= 4")
{
    for (int N = 2; N <= 4; ++N) {
        CAPTURE(N);
        CHECK(check_yang_baxter(N));
        CHECK(check_unitarity(N));
        CHECK(check_E_commutes_R(N));
    }
}
