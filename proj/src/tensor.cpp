#include "qkz/tensor.hpp"

namespace qkz {

std::vector<std::vector<int>> all_basis(int N, int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, 0);
    for (;;) {
        out.push_back(cur);
        int i = n - 1;
        while (i >= 0 && cur[i] == N - 1) cur[i--] = 0;
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

static bool rat_eq(const QRat& a, const QRat& b) { return (a - b).is_zero(); }

bool check_yang_baxter(int N)
{
    QRat b1 = qvar(var_beta(1)), b2 = qvar(var_beta(2)), b3 = qvar(var_beta(3)), h = qvar(var_hbar());
    using Op = SiteOp<QRat>;
    OpChain<QRat> lhs{{{Op::R, 1, 2, b1 - b2}, {Op::R, 1, 3, b1 - b3}, {Op::R, 2, 3, b2 - b3}}};
    OpChain<QRat> rhs{{{Op::R, 2, 3, b2 - b3}, {Op::R, 1, 3, b1 - b3}, {Op::R, 1, 2, b1 - b2}}};
    for (auto& e : all_basis(N, 3)) {
        auto v = TensorVector<QRat>::basis(N, e);
        if (!tensor_equal<QRat>(lhs.apply(v, h), rhs.apply(v, h), rat_eq)) return false;
    }
    return true;
}

bool check_unitarity(int N)
{
    QRat b = qvar(var_beta(1)) - qvar(var_beta(2)), h = qvar(var_hbar());
    using Op = SiteOp<QRat>;
    OpChain<QRat> direct{{{Op::R, 2, 1, -b}, {Op::R, 1, 2, b}}};
    OpChain<QRat> conj{{{Op::R, 1, 2, b}, {Op::P, 1, 2, QRat()}, {Op::R, 1, 2, -b}, {Op::P, 1, 2, QRat()}}};
    for (auto& e : all_basis(N, 2)) {
        auto v = TensorVector<QRat>::basis(N, e);
        if (!tensor_equal<QRat>(direct.apply(v, h), v, rat_eq)) return false;
        if (!tensor_equal<QRat>(conj.apply(v, h), v, rat_eq)) return false;
    }
    return true;
}

bool check_E_commutes_R(int N)
{
    QRat b = qvar(var_beta(1)) - qvar(var_beta(2)), h = qvar(var_hbar());
    for (int k = 1; k < N; ++k)
        for (auto& e : all_basis(N, 3)) {
            auto v = TensorVector<QRat>::basis(N, e);
            auto x = v.apply_R(1, 3, b, h).apply_E(k);
            auto y = v.apply_E(k).apply_R(1, 3, b, h);
            if (!tensor_equal<QRat>(x, y, rat_eq)) return false;
        }
    return true;
}

}  // namespace qkz
